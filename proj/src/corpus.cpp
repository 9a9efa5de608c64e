#include "monli/corpus.hpp"

#include <istream>
#include <unordered_set>

#include <json.hpp>

#include "monli/error.hpp"

namespace monli {

namespace {

using nlohmann::json;

Rule parse_rule(const std::string& s) {
  if (s == "fa") return Rule::fa;
  if (s == "ba") return Rule::ba;
  if (s == "fc") return Rule::fc;
  if (s == "bc") return Rule::bc;
  if (s == "unary") return Rule::unary;
  if (s == "lex-raise") return Rule::lex_raise;
  throw Error("unknown rule \"" + s + "\"");
}

NodePtr parse_node(const json& j) {
  if (!j.is_object()) throw Error("derivation node must be an object");
  CategoryPtr cat = Category::parse(j.at("cat").get<std::string>());

  if (j.contains("children")) {
    Rule rule = parse_rule(j.at("rule").get<std::string>());
    std::vector<NodePtr> children;
    for (const auto& c : j.at("children")) children.push_back(parse_node(c));
    return DerivationNode::make_internal(rule, std::move(cat), std::move(children));
  }

  Leaf leaf;
  leaf.token = j.at("token").get<std::string>();
  leaf.lemma = j.at("lemma").get<std::string>();
  std::string pos = j.at("pos").get<std::string>();
  if (pos.size() != 1 || std::string("nvarx").find(pos[0]) == std::string::npos)
    throw Error("leaf \"" + leaf.token + "\": pos must be one of n v a r x");
  leaf.pos = pos[0];
  leaf.semtag = j.at("semtag").get<std::string>();
  if (j.contains("sense") && !j.at("sense").is_null()) {
    std::string sense = j.at("sense").get<std::string>();
    // identifier looks like lemma.p.NN; its pos letter must agree with the leaf
    auto second_dot = sense.rfind('.');
    auto first_dot = second_dot == std::string::npos ? std::string::npos
                                                     : sense.rfind('.', second_dot - 1);
    if (first_dot == std::string::npos || second_dot - first_dot != 2)
      throw Error("leaf \"" + leaf.token + "\": malformed sense id \"" + sense + "\"");
    if (sense[first_dot + 1] != leaf.pos)
      throw Error("leaf \"" + leaf.token + "\": sense \"" + sense +
                  "\" does not match pos '" + std::string(1, leaf.pos) + "'");
    leaf.sense = std::move(sense);
  }
  leaf.cat = std::move(cat);
  return DerivationNode::make_leaf(std::move(leaf));
}

}  // namespace

std::vector<Sentence> read_corpus(std::istream& in, const std::string& name) {
  std::vector<Sentence> out;
  std::unordered_set<std::string> ids;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = name + " line " + std::to_string(lineno);
    try {
      json j = json::parse(line);
      Sentence s;
      s.id = j.at("id").get<std::string>();
      std::string tier = j.at("tier").get<std::string>();
      if (tier == "gold") s.tier = Tier::gold;
      else if (tier == "silver") s.tier = Tier::silver;
      else throw Error("tier must be \"gold\" or \"silver\"");
      s.root = parse_node(j.at("root"));
      validate(*s.root);
      if (!ids.insert(s.id).second) throw Error("duplicate sentence id \"" + s.id + "\"");
      out.push_back(std::move(s));
    } catch (const json::exception& e) {
      throw Error(where + ": " + e.what());
    } catch (const Error& e) {
      throw Error(where + ": " + e.what());
    }
  }
  return out;
}

bool is_coordinator(const Leaf& leaf) {
  std::string lemma = lower_ascii(leaf.lemma);
  return (leaf.semtag == "AND" && lemma == "and") || (leaf.semtag == "DIS" && lemma == "or");
}

std::vector<Sentence> select_sentences(std::span<const Sentence> corpus,
                                       const OperatorLexicon& lexicon) {
  std::vector<Sentence> out;
  for (const Sentence& s : corpus) {
    auto leaves = leaves_of(*s.root);
    if (leaves.size() <= 5) continue;
    bool has_trigger = false;
    for (const DerivationNode* leaf : leaves) {
      const Leaf& l = leaf->leaf();
      if (lexicon.find(l.lemma, l.semtag) || is_coordinator(l)) {
        has_trigger = true;
        break;
      }
    }
    if (has_trigger) out.push_back(s);
  }
  return out;
}

}  // namespace monli
