#include "monli/taxonomy.hpp"

#include <algorithm>
#include <deque>
#include <istream>

#include <json.hpp>

#include "monli/error.hpp"
#include "monli/polarity.hpp"

namespace monli {

namespace {

using nlohmann::json;

// "kid.n.01" -> {"kid", 'n', 1}
struct SenseId {
  std::string lemma;
  char pos;
  int number;
};

SenseId split_sense_id(const std::string& sense) {
  auto second = sense.rfind('.');
  auto first = second == std::string::npos ? std::string::npos : sense.rfind('.', second - 1);
  if (first == std::string::npos || first == 0 || second - first != 2 || second + 1 >= sense.size())
    throw Error("malformed sense id \"" + sense + "\"");
  char pos = sense[first + 1];
  if (std::string("nvar").find(pos) == std::string::npos)
    throw Error("sense id \"" + sense + "\" has bad pos letter");
  int number = 0;
  for (std::size_t i = second + 1; i < sense.size(); ++i) {
    if (!isdigit(static_cast<unsigned char>(sense[i])))
      throw Error("sense id \"" + sense + "\" has a non-numeric sense number");
    number = number * 10 + (sense[i] - '0');
  }
  return {sense.substr(0, first), pos, number};
}

std::string lemma_key(const std::string& lemma, char pos) {
  return lower_ascii(lemma) + "." + std::string(1, pos);
}

}  // namespace

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::equal: return "equal";
    case Relation::broader: return "broader";
    case Relation::narrower: return "narrower";
    case Relation::incomparable: return "incomparable";
  }
  return "?";
}

Taxonomy Taxonomy::load(std::istream& in, const std::string& name) {
  Taxonomy tax;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = name + " line " + std::to_string(lineno);
    SenseEntry e;
    try {
      json j = json::parse(line);
      e.sense = j.at("sense").get<std::string>();
      e.lemma = j.at("lemma").get<std::string>();
      std::string pos = j.at("pos").get<std::string>();
      if (pos.size() != 1) throw Error("pos must be a single letter");
      e.pos = pos[0];
      for (const auto& g : j.at("gloss")) e.gloss.push_back(g.get<std::string>());
      for (const auto& h : j.at("hypernyms")) e.hypernyms.push_back(h.get<std::string>());
    } catch (const json::exception& ex) {
      throw Error(where + ": " + ex.what());
    }
    SenseId id = split_sense_id(e.sense);
    if (id.pos != e.pos)
      throw Error(where + ": sense \"" + e.sense + "\" does not match pos");
    if (e.lemma.empty()) throw Error(where + ": empty lemma");
    if (tax.by_id_.count(e.sense))
      throw Error(where + ": duplicate sense \"" + e.sense + "\"");
    std::size_t index = tax.entries_.size();
    tax.by_id_.emplace(e.sense, index);
    tax.by_lemma_[lemma_key(e.lemma, e.pos)].push_back(index);
    std::string id_key = lemma_key(id.lemma, e.pos);
    if (id_key != lemma_key(e.lemma, e.pos)) tax.by_lemma_[id_key].push_back(index);
    tax.entries_.push_back(std::move(e));
  }

  // resolve hypernym ids, build the hyponym index, reject cycles
  for (std::size_t i = 0; i < tax.entries_.size(); ++i) {
    for (const std::string& h : tax.entries_[i].hypernyms) {
      auto it = tax.by_id_.find(h);
      if (it == tax.by_id_.end())
        throw Error(name + ": sense \"" + tax.entries_[i].sense +
                    "\" names unknown hypernym \"" + h + "\"");
      tax.hyponyms_[it->second].push_back(i);
    }
  }
  // Kahn's algorithm: every node must be drained or there is a cycle
  std::vector<int> out_degree(tax.entries_.size(), 0);
  for (std::size_t i = 0; i < tax.entries_.size(); ++i)
    out_degree[i] = static_cast<int>(tax.entries_[i].hypernyms.size());
  std::deque<std::size_t> roots;
  for (std::size_t i = 0; i < tax.entries_.size(); ++i)
    if (out_degree[i] == 0) roots.push_back(i);
  std::size_t drained = 0;
  while (!roots.empty()) {
    std::size_t top = roots.front();
    roots.pop_front();
    ++drained;
    auto it = tax.hyponyms_.find(top);
    if (it == tax.hyponyms_.end()) continue;
    for (std::size_t child : it->second)
      if (--out_degree[child] == 0) roots.push_back(child);
  }
  if (drained != tax.entries_.size()) throw Error(name + ": hypernym graph has a cycle");
  return tax;
}

const SenseEntry& Taxonomy::entry(const std::string& sense) const {
  auto it = by_id_.find(sense);
  if (it == by_id_.end()) throw Error("unknown sense \"" + sense + "\"");
  return entries_[it->second];
}

Relation Taxonomy::compare(const std::string& a, const std::string& b) const {
  if (!by_id_.count(a)) throw Error("unknown sense \"" + a + "\"");
  if (!by_id_.count(b)) throw Error("unknown sense \"" + b + "\"");
  if (a == b) return Relation::equal;

  auto reaches_up = [this](const std::string& from, const std::string& to) {
    std::deque<const std::string*> queue{&from};
    std::set<std::string> seen{from};
    while (!queue.empty()) {
      const SenseEntry& e = entry(*queue.front());
      queue.pop_front();
      for (const std::string& h : e.hypernyms) {
        if (h == to) return true;
        if (seen.insert(h).second) queue.push_back(&h);
      }
    }
    return false;
  };

  if (reaches_up(b, a)) return Relation::broader;
  if (reaches_up(a, b)) return Relation::narrower;
  return Relation::incomparable;
}

std::vector<RankedSense> Taxonomy::replacements_for(const std::string& sense, bool broaden,
                                                    int max_depth) const {
  auto it = by_id_.find(sense);
  if (it == by_id_.end()) throw Error("unknown sense \"" + sense + "\"");
  if (max_depth < 0) throw Error("max_depth must be non-negative");

  std::unordered_map<std::size_t, int> depth_of;
  std::deque<std::pair<std::size_t, int>> queue{{it->second, 0}};
  while (!queue.empty()) {
    auto [index, depth] = queue.front();
    queue.pop_front();
    if (depth >= max_depth) continue;
    std::vector<std::size_t> next;
    if (broaden) {
      for (const std::string& h : entries_[index].hypernyms) next.push_back(by_id_.at(h));
    } else if (auto hit = hyponyms_.find(index); hit != hyponyms_.end()) {
      next = hit->second;
    }
    for (std::size_t n : next) {
      auto found = depth_of.find(n);
      if (found != depth_of.end() && found->second <= depth + 1) continue;
      depth_of[n] = depth + 1;
      queue.emplace_back(n, depth + 1);
    }
  }

  std::vector<RankedSense> out;
  for (const auto& [index, depth] : depth_of) out.push_back({entries_[index].sense, depth});
  std::sort(out.begin(), out.end(), [](const RankedSense& a, const RankedSense& b) {
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.sense < b.sense;
  });
  return out;
}

std::vector<std::string> Taxonomy::senses_for(const std::string& lemma, char pos) const {
  auto it = by_lemma_.find(lemma_key(lemma, pos));
  if (it == by_lemma_.end()) return {};
  std::vector<std::string> out;
  for (std::size_t index : it->second) out.push_back(entries_[index].sense);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::string> lesk(const std::string& lemma, char pos,
                                const std::vector<std::string>& context,
                                const Taxonomy& taxonomy,
                                const std::set<std::string>& stop_tokens) {
  std::vector<std::string> candidates = taxonomy.senses_for(lemma, pos);
  if (candidates.empty()) return std::nullopt;

  std::set<std::string> context_set;
  std::string self = lower_ascii(lemma);
  for (const std::string& t : context) {
    std::string w = lower_ascii(t);
    if (w == self || stop_tokens.count(w)) continue;
    context_set.insert(std::move(w));
  }

  std::string best;
  int best_overlap = -1;
  int best_number = 0;
  for (const std::string& sense : candidates) {
    const SenseEntry& e = taxonomy.entry(sense);
    std::set<std::string> gloss_set;
    for (const std::string& g : e.gloss) {
      std::string w = lower_ascii(g);
      if (!stop_tokens.count(w)) gloss_set.insert(std::move(w));
    }
    int overlap = 0;
    for (const std::string& w : gloss_set) overlap += context_set.count(w) ? 1 : 0;
    int number = split_sense_id(sense).number;
    if (overlap > best_overlap || (overlap == best_overlap && number < best_number)) {
      best = sense;
      best_overlap = overlap;
      best_number = number;
    }
  }
  return best;
}

std::set<std::string> load_stop_tokens(std::istream& in) {
  std::set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) out.insert(lower_ascii(line));
  }
  return out;
}

}  // namespace monli
