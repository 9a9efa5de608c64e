#include "monli/polarity.hpp"

#include <cctype>
#include <istream>
#include <set>

#include <json.hpp>

#include "monli/error.hpp"

namespace monli {

const char* polarity_name(Polarity p) {
  switch (p) {
    case Polarity::up: return "up";
    case Polarity::down: return "down";
    case Polarity::flat: return "flat";
  }
  return "?";
}

Polarity compose(Polarity outer, Polarity inner) {
  if (outer == Polarity::flat || inner == Polarity::flat) return Polarity::flat;
  if (outer == Polarity::up) return inner;
  // outer down flips the inner direction
  return inner == Polarity::up ? Polarity::down : Polarity::up;
}

std::string lower_ascii(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

namespace {

const std::set<std::string>& operator_semtags() {
  static const std::set<std::string> tags = {"AND", "DIS", "NEG", "DEF", "QUV", "IMP"};
  return tags;
}

Polarity parse_polarity(const std::string& s, const std::string& where) {
  if (s == "up") return Polarity::up;
  if (s == "down") return Polarity::down;
  if (s == "flat") return Polarity::flat;
  throw Error(where + ": bad polarity \"" + s + "\"");
}

OperatorKind kind_for(const std::string& semtag, int arity) {
  if (arity == 1) return OperatorKind::vp_negator;
  return semtag == "IMP" ? OperatorKind::conditional : OperatorKind::determiner;
}

std::string key_of(const std::string& lemma, const std::string& semtag) {
  return lower_ascii(lemma) + "\x1f" + semtag;
}

}  // namespace

OperatorLexicon OperatorLexicon::load(std::istream& in, const std::string& name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(name + ": " + e.what());
  }
  if (!doc.is_array()) throw Error(name + ": expected a JSON array");

  OperatorLexicon lex;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& entry = doc[i];
    const std::string where = name + " entry " + std::to_string(i);
    if (!entry.is_object()) throw Error(where + ": expected an object");
    MonotonicityProfile p;
    try {
      p.lemma = lower_ascii(entry.at("lemma").get<std::string>());
      p.semtag = entry.at("semtag").get<std::string>();
      int arity = entry.at("arity").get<int>();
      for (const auto& a : entry.at("args")) {
        p.args.push_back(parse_polarity(a.get<std::string>(), where));
      }
      if (arity != p.arity())
        throw Error(where + ": arity " + std::to_string(arity) + " does not match " +
                    std::to_string(p.arity()) + " argument polarities");
    } catch (const nlohmann::json::exception& e) {
      throw Error(where + ": " + e.what());
    }
    if (p.lemma.empty()) throw Error(where + ": empty lemma");
    if (p.args.empty() || p.arity() > 2) throw Error(where + ": arity must be 1 or 2");
    if (!operator_semtags().count(p.semtag))
      throw Error(where + ": semtag \"" + p.semtag + "\" is not an operator tag");
    p.kind = kind_for(p.semtag, p.arity());
    lex.add(std::move(p));
  }
  return lex;
}

void OperatorLexicon::add(MonotonicityProfile profile) {
  std::string key = key_of(profile.lemma, profile.semtag);
  if (index_.count(key))
    throw Error("operator lexicon: duplicate entry for (" + profile.lemma + ", " +
                profile.semtag + ")");
  index_.emplace(std::move(key), profiles_.size());
  profiles_.push_back(std::move(profile));
}

const MonotonicityProfile* OperatorLexicon::find(const std::string& lemma,
                                                 const std::string& semtag) const {
  auto it = index_.find(key_of(lemma, semtag));
  return it == index_.end() ? nullptr : &profiles_[it->second];
}

}  // namespace monli
