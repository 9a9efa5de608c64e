#pragma once

// Tree builders and small fixtures shared by the unit tests. The builders
// mirror the corpus format: every construction step picks the category the
// combinatory rule demands, so malformed fixtures fail validate() loudly.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "monli/corpus.hpp"
#include "monli/derivation.hpp"
#include "monli/error.hpp"
#include "monli/polarity.hpp"
#include "monli/taxonomy.hpp"

namespace helpers {

using namespace monli;

// Runs f, returning the Error message it throws ("" when it does not).
template <typename F>
std::string error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

inline NodePtr lf(std::string token, std::string lemma, char pos, std::string semtag,
                  const char* cat, std::optional<std::string> sense = std::nullopt) {
  Leaf l;
  l.token = std::move(token);
  l.lemma = std::move(lemma);
  l.pos = pos;
  l.semtag = std::move(semtag);
  l.sense = std::move(sense);
  l.cat = Category::parse(cat);
  return DerivationNode::make_leaf(std::move(l));
}

inline NodePtr fa(NodePtr functor, NodePtr argument) {
  CategoryPtr cat = functor->category()->result();
  return DerivationNode::make_internal(Rule::fa, cat, {std::move(functor), std::move(argument)});
}

inline NodePtr ba(NodePtr argument, NodePtr functor) {
  CategoryPtr cat = functor->category()->result();
  return DerivationNode::make_internal(Rule::ba, cat, {std::move(argument), std::move(functor)});
}

inline NodePtr un(const char* cat, NodePtr child) {
  return DerivationNode::make_internal(Rule::unary, Category::parse(cat), {std::move(child)});
}

inline NodePtr noun(std::string token, std::optional<std::string> sense = std::nullopt) {
  std::string lemma = token;
  return lf(std::move(token), std::move(lemma), 'n', "CON", "N", std::move(sense));
}

inline NodePtr det(std::string token, std::string semtag, NodePtr n) {
  std::string lemma = lower_ascii(token);
  return fa(lf(std::move(token), std::move(lemma), 'x', std::move(semtag), "NP/N"),
            std::move(n));
}

inline NodePtr the(NodePtr n, std::string token = "the") {
  return fa(lf(std::move(token), "the", 'x', "DEF", "NP/N"), std::move(n));
}

inline NodePtr name(std::string token) {
  std::string lemma = token;
  return lf(std::move(token), std::move(lemma), 'n', "PER", "NP");
}

inline NodePtr iv(std::string token, std::optional<std::string> sense = std::nullopt) {
  std::string lemma = token;
  return lf(std::move(token), std::move(lemma), 'v', "EXG", "S\\NP", std::move(sense));
}

inline NodePtr tv(std::string token, std::optional<std::string> sense = std::nullopt) {
  std::string lemma = token;
  return lf(std::move(token), std::move(lemma), 'v', "EXG", "(S\\NP)/NP", std::move(sense));
}

inline NodePtr aux(std::string token, std::string semtag) {
  std::string lemma = token;
  return lf(std::move(token), std::move(lemma), 'x', std::move(semtag), "(S\\NP)/(S\\NP)");
}

inline NodePtr adj(std::string token, std::optional<std::string> sense = std::nullopt) {
  std::string lemma = token;
  return lf(std::move(token), std::move(lemma), 'a', "IST", "N/N", std::move(sense));
}

inline NodePtr adv_pre(std::string token) {
  std::string lemma = token;
  return lf(std::move(token), std::move(lemma), 'r', "REL", "(S\\NP)/(S\\NP)");
}

inline NodePtr pp_vp(std::string prep, NodePtr np) {
  std::string lemma = prep;
  return fa(lf(std::move(prep), std::move(lemma), 'x', "REL", "((S\\NP)\\(S\\NP))/NP"),
            std::move(np));
}

inline NodePtr coord_vp(std::string word, std::string semtag, NodePtr left, NodePtr right) {
  std::string lemma = word;
  NodePtr c = lf(std::move(word), std::move(lemma), 'x', std::move(semtag),
                 "((S\\NP)\\(S\\NP))/(S\\NP)");
  return ba(std::move(left), fa(std::move(c), std::move(right)));
}

inline NodePtr coord_n(std::string word, std::string semtag, NodePtr left, NodePtr right) {
  std::string lemma = word;
  NodePtr c = lf(std::move(word), std::move(lemma), 'x', std::move(semtag), "(N\\N)/N");
  return ba(std::move(left), fa(std::move(c), std::move(right)));
}

inline NodePtr cond(std::string token, NodePtr s1, NodePtr s2) {
  std::string lemma = lower_ascii(token);
  NodePtr c = lf(std::move(token), std::move(lemma), 'x', "IMP", "(S/S)/S");
  return fa(fa(std::move(c), std::move(s1)), std::move(s2));
}

inline NodePtr theres(NodePtr np, std::string token = "There's") {
  return fa(lf(std::move(token), "there's", 'x', "EXS", "S/NP"), std::move(np));
}

inline Sentence sent(std::string id, NodePtr root, Tier tier = Tier::gold) {
  Sentence s;
  s.id = std::move(id);
  s.tier = tier;
  s.root = std::move(root);
  return s;
}

inline MonotonicityProfile profile(std::string lemma, std::string semtag,
                                   std::vector<Polarity> args) {
  MonotonicityProfile p;
  p.lemma = std::move(lemma);
  p.semtag = std::move(semtag);
  p.kind = args.size() == 1 ? OperatorKind::vp_negator
           : p.semtag == "IMP" ? OperatorKind::conditional
                               : OperatorKind::determiner;
  p.args = std::move(args);
  return p;
}

inline OperatorLexicon test_lexicon() {
  OperatorLexicon lex;
  lex.add(profile("all", "AND", {Polarity::down, Polarity::up}));
  lex.add(profile("every", "AND", {Polarity::down, Polarity::up}));
  lex.add(profile("some", "DIS", {Polarity::up, Polarity::up}));
  lex.add(profile("a", "DIS", {Polarity::up, Polarity::up}));
  lex.add(profile("no", "NEG", {Polarity::down, Polarity::down}));
  lex.add(profile("not", "NEG", {Polarity::down}));
  lex.add(profile("both", "DEF", {Polarity::flat, Polarity::up}));
  lex.add(profile("many", "QUV", {Polarity::flat, Polarity::up}));
  lex.add(profile("at most ten", "QUV", {Polarity::down, Polarity::down}));
  lex.add(profile("if", "IMP", {Polarity::down, Polarity::up}));
  return lex;
}

inline Taxonomy test_taxonomy() {
  std::istringstream in(R"({"sense":"person.n.01","lemma":"people","pos":"n","gloss":["a","human","being"],"hypernyms":[]}
{"sense":"boy.n.01","lemma":"boys","pos":"n","gloss":["a","young","male","person"],"hypernyms":["person.n.01"]}
{"sense":"schoolboy.n.01","lemma":"schoolboys","pos":"n","gloss":["a","boy","attending","school"],"hypernyms":["boy.n.01"]}
{"sense":"kid.n.01","lemma":"kids","pos":"n","gloss":["a","young","person"],"hypernyms":["person.n.01"]}
{"sense":"foster_child.n.01","lemma":"foster_children","pos":"n","gloss":["a","child","in","foster","care"],"hypernyms":["kid.n.01"]}
{"sense":"animal.n.01","lemma":"animals","pos":"n","gloss":["a","living","creature"],"hypernyms":[]}
{"sense":"dog.n.01","lemma":"dogs","pos":"n","gloss":["a","domestic","animal","that","barks"],"hypernyms":["animal.n.01"]}
{"sense":"puppy.n.01","lemma":"puppies","pos":"n","gloss":["a","young","dog"],"hypernyms":["dog.n.01"]}
{"sense":"area.n.01","lemma":"area","pos":"n","gloss":["an","extent","of","space"],"hypernyms":[]}
{"sense":"garden.n.01","lemma":"garden","pos":"n","gloss":["an","area","with","plants"],"hypernyms":["area.n.01"]}
{"sense":"surface.n.01","lemma":"surface","pos":"n","gloss":["an","outside","layer"],"hypernyms":[]}
{"sense":"floor.n.01","lemma":"floor","pos":"n","gloss":["the","surface","walked","on"],"hypernyms":["surface.n.01"]}
{"sense":"move.v.01","lemma":"moving","pos":"v","gloss":["changing","position"],"hypernyms":[]}
{"sense":"dance.v.01","lemma":"dancing","pos":"v","gloss":["moving","in","rhythm"],"hypernyms":["move.v.01"]}
{"sense":"rock.n.01","lemma":"rocks","pos":"n","gloss":["hard","mineral","lumps"],"hypernyms":[]}
{"sense":"slope.n.01","lemma":"slope","pos":"n","gloss":["an","inclined","surface"],"hypernyms":[]}
{"sense":"institution.n.01","lemma":"institution","pos":"n","gloss":["an","organization"],"hypernyms":[]}
{"sense":"bank.n.01","lemma":"bank","pos":"n","gloss":["sloping","land","beside","a","river"],"hypernyms":["slope.n.01"]}
{"sense":"bank.n.02","lemma":"bank","pos":"n","gloss":["an","institution","that","lends","money"],"hypernyms":["institution.n.01"]}
)");
  return Taxonomy::load(in, "test taxonomy");
}

// Fixtures matching the documented walkthroughs.

inline Sentence p_boys_some() {
  return sent("p-boys-some",
              ba(det("Some", "DIS", noun("boys", "boy.n.01")),
                 ba(fa(aux("are", "NOW"), fa(adv_pre("happily"), iv("dancing", "dance.v.01"))),
                    pp_vp("in", the(noun("garden", "garden.n.01"))))));
}

inline Sentence p_boys_no() {
  return sent("p-boys-no",
              ba(det("No", "NEG", noun("boys", "boy.n.01")),
                 ba(fa(aux("are", "NOW"), fa(adv_pre("happily"), iv("dancing", "dance.v.01"))),
                    pp_vp("in", the(noun("garden", "garden.n.01"))))));
}

inline Sentence g_dance_floor() {
  return sent("g-dance-floor",
              ba(det("All", "AND", noun("kids", "kid.n.01")),
                 ba(fa(aux("were", "PST"), iv("dancing", "dance.v.01")),
                    pp_vp("on", the(noun("floor", "floor.n.01"))))));
}

inline Sentence p_party() {
  return sent("p-party",
              cond("If",
                   ba(det("no", "NEG", noun("boys", "boy.n.01")),
                      fa(aux("are", "NOW"),
                         lf("dancing,", "dancing", 'v', "EXG", "S\\NP", "dance.v.01"))),
                   ba(the(noun("party")),
                      fa(aux("might", "POS"), fa(aux("be", "NOW"), iv("canceled"))))));
}

// Silver sentence whose "bank" leaf needs sense disambiguation in context.
inline Sentence s_bank() {
  return sent("s-bank",
              ba(det("A", "DIS", noun("bank")),
                 ba(fa(aux("was", "PST"), iv("flooded")),
                    pp_vp("by", the(noun("river"))))),
              Tier::silver);
}

// Finds the unique leaf with the given token; fails the test otherwise.
inline const DerivationNode* leaf_with(const Sentence& s, const std::string& token) {
  const DerivationNode* found = nullptr;
  for (const DerivationNode* l : leaves_of(*s.root)) {
    if (l->leaf().token == token) {
      if (found) return nullptr;
      found = l;
    }
  }
  return found;
}

}  // namespace helpers
