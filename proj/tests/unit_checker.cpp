#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "monli/checker.hpp"
#include "monli/error.hpp"

using namespace monli;
using namespace helpers;

namespace {

const std::set<std::string>& stops() {
  static const std::set<std::string> s{"a", "an", "the", "was", "were", "by"};
  return s;
}

PredExpr P(const char* name) { return PredExpr::atom(name); }

LogicalForm Q(Quant q, PredExpr r, PredExpr b, int n = 0) {
  return LogicalForm::quantified(q, std::move(r), std::move(b), n);
}

CheckResult check(const LogicalForm& p, const LogicalForm& h, CheckOptions options = {}) {
  return check_entailment(p, h, test_taxonomy(), options);
}

PredExpr atoms(const std::string& prefix, int n) {
  std::vector<PredExpr> parts;
  for (int i = 0; i < n; ++i) parts.push_back(P((prefix + std::to_string(i)).c_str()));
  return PredExpr::intersect(std::move(parts));
}

}  // namespace

TEST_CASE("taxonomy subsets make broadening under some entailed") {
  CheckResult r = check(Q(Quant::some, P("dog.n.01"), P("dance.v.01")),
                        Q(Quant::some, P("animal.n.01"), P("dance.v.01")));
  CHECK(r.entailed);
  CHECK(!r.countermodel.has_value());
}

TEST_CASE("the reverse direction yields the minimal countermodel") {
  LogicalForm premise = Q(Quant::some, P("animal.n.01"), P("dance.v.01"));
  LogicalForm hypothesis = Q(Quant::some, P("dog.n.01"), P("dance.v.01"));
  CheckResult r = check(premise, hypothesis);
  CHECK(!r.entailed);
  REQUIRE(r.countermodel.has_value());
  const Model& m = *r.countermodel;

  // it is a genuine countermodel that respects dog <= animal
  CHECK(eval(premise, m));
  CHECK(!eval(hypothesis, m));
  CHECK((m.extensions.at("dog.n.01") & ~m.extensions.at("animal.n.01")) == 0u);

  // and the minimal one: smallest domain, then smallest assignment
  CHECK(m.domain_size == 1);
  REQUIRE(m.extensions.size() == 3);
  CHECK(m.extensions.at("animal.n.01") == 0b1u);
  CHECK(m.extensions.at("dance.v.01") == 0b1u);
  CHECK(m.extensions.at("dog.n.01") == 0b0u);
}

TEST_CASE("all and no narrow their restrictors") {
  CHECK(check(Q(Quant::all, P("animal.n.01"), P("dance.v.01")),
              Q(Quant::all, P("dog.n.01"), P("dance.v.01")))
            .entailed);
  CHECK(check(Q(Quant::no, P("animal.n.01"), P("dance.v.01")),
              Q(Quant::no, P("dog.n.01"), P("dance.v.01")))
            .entailed);

  CheckResult r = check(Q(Quant::all, P("dog.n.01"), P("dance.v.01")),
                        Q(Quant::all, P("animal.n.01"), P("dance.v.01")));
  CHECK(!r.entailed);
  REQUIRE(r.countermodel.has_value());
  CHECK(r.countermodel->domain_size == 1);
}

TEST_CASE("negated some and no are equivalent") {
  LogicalForm a = LogicalForm::negation(Q(Quant::some, P("dog.n.01"), P("dance.v.01")));
  LogicalForm b = Q(Quant::no, P("dog.n.01"), P("dance.v.01"));
  CHECK(check(a, b).entailed);
  CHECK(check(b, a).entailed);
}

TEST_CASE("at_most bounds separate only once the domain can exceed them") {
  LogicalForm tight = Q(Quant::at_most, P("dog.n.01"), P("dance.v.01"), 2);
  LogicalForm loose = Q(Quant::at_most, P("dog.n.01"), P("dance.v.01"), 3);
  CheckOptions options;
  options.max_domain_size = 4;
  CHECK(check(tight, loose, options).entailed);

  CheckResult r = check(loose, tight, options);
  CHECK(!r.entailed);
  REQUIRE(r.countermodel.has_value());
  CHECK(r.countermodel->domain_size == 4);  // caps coincide on smaller domains
  CHECK(eval(loose, *r.countermodel));
  CHECK(!eval(tight, *r.countermodel));
}

TEST_CASE("serial and parallel searches return the same countermodel") {
  LogicalForm premise = Q(Quant::some, P("animal.n.01"), P("dance.v.01"));
  LogicalForm hypothesis = Q(Quant::some, P("dog.n.01"), P("dance.v.01"));
  CheckOptions serial;
  serial.parallel = false;
  CheckResult a = check(premise, hypothesis);
  CheckResult b = check(premise, hypothesis, serial);
  CHECK(a.entailed == b.entailed);
  REQUIRE(a.countermodel.has_value());
  REQUIRE(b.countermodel.has_value());
  CHECK(a.countermodel->domain_size == b.countermodel->domain_size);
  CHECK(a.countermodel->extensions == b.countermodel->extensions);
}

TEST_CASE("the enumeration budget is enforced per domain size") {
  LogicalForm nine = Q(Quant::all, atoms("q", 4), atoms("r", 5));
  CheckOptions two;
  two.max_domain_size = 2;  // 9 predicates * 2 = 18 bits, within budget
  CHECK(check(nine, nine, two).entailed);

  CheckOptions three;
  three.max_domain_size = 3;  // 27 bits
  std::string what = error_of([&] { check(nine, nine, three); });
  CHECK(what.find("the enumeration budget is 24") != std::string::npos);
  CHECK(what.find("27") != std::string::npos);
}

TEST_CASE("more than 32 predicates cannot be enumerated") {
  LogicalForm big = Q(Quant::some, atoms("q", 33), PredExpr::top());
  CHECK(error_of([&] { check(big, big); }).find("exceeds the limit of 32") !=
        std::string::npos);
}

TEST_CASE("domain size bounds are validated") {
  LogicalForm f = Q(Quant::some, P("dog.n.01"), P("dance.v.01"));
  for (int bad : {0, 9, -1}) {
    CheckOptions options;
    options.max_domain_size = bad;
    CHECK(error_of([&] { check(f, f, options); }) ==
          "domain size must be between 1 and 8");
  }
}

TEST_CASE("verify_pairs confirms every generated label") {
  GenOutput gen = generate(p_boys_some(), test_lexicon(), test_taxonomy(), stops(), {});
  REQUIRE(gen.pairs.size() == 12);

  VerifyReport report = verify_pairs(gen.pairs, test_lexicon(), test_taxonomy(), {});
  CHECK(report.total == 12);
  CHECK(report.matched == 12);
  CHECK(report.verifiable == 12);
  CHECK(report.agreed == 12);
  CHECK(report.disagreements.empty());
  CHECK(report.unverifiable.empty());
  REQUIRE(report.by_section.count("up") == 1);
  CHECK(report.by_section.at("up").checked == 12);
  CHECK(report.by_section.at("up").agreed == 12);

  SUBCASE("a flipped entailment is caught without a countermodel") {
    std::vector<GeneratedPair> pairs = gen.pairs;
    REQUIRE(pairs[0].pair.label == Label::entailment);
    pairs[0].pair.label = Label::neutral;
    VerifyReport r = verify_pairs(pairs, test_lexicon(), test_taxonomy(), {});
    CHECK(r.agreed == 11);
    REQUIRE(r.disagreements.size() == 1);
    const Disagreement& d = r.disagreements[0];
    CHECK(d.pair_id == pairs[0].pair.pair_id);
    CHECK(d.stored == Label::neutral);
    CHECK(d.oracle == Label::entailment);
    CHECK(!d.countermodel.has_value());
    CHECK(r.by_section.at("up").checked == 12);
    CHECK(r.by_section.at("up").agreed == 11);
  }

  SUBCASE("a flipped neutral is caught with a countermodel") {
    std::vector<GeneratedPair> pairs = gen.pairs;
    REQUIRE(pairs[1].pair.label == Label::neutral);
    pairs[1].pair.label = Label::entailment;
    VerifyReport r = verify_pairs(pairs, test_lexicon(), test_taxonomy(), {});
    REQUIRE(r.disagreements.size() == 1);
    CHECK(r.disagreements[0].oracle == Label::neutral);
    CHECK(r.disagreements[0].countermodel.has_value());
  }

  SUBCASE("serial verification produces the identical report") {
    CheckOptions serial;
    serial.parallel = false;
    VerifyReport r = verify_pairs(gen.pairs, test_lexicon(), test_taxonomy(), serial);
    CHECK(r.verifiable == report.verifiable);
    CHECK(r.agreed == report.agreed);
    CHECK(r.disagreements.size() == report.disagreements.size());
  }
}

TEST_CASE("pairs built around non-crisp operators are unverifiable") {
  Sentence s = sent("t-many",
                    ba(det("Many", "QUV", lf("dogs", "dogs", 'n', "CON", "N", "dog.n.01")),
                       fa(aux("are", "NOW"), iv("dancing", "dance.v.01"))));
  GenOutput gen = generate(s, test_lexicon(), test_taxonomy(), stops(), {});
  REQUIRE(gen.pairs.size() == 6);

  VerifyReport report = verify_pairs(gen.pairs, test_lexicon(), test_taxonomy(), {});
  CHECK(report.verifiable == 0);
  CHECK(report.agreed == 0);
  CHECK(report.by_section.empty());
  REQUIRE(report.unverifiable.size() == 1);
  CHECK(report.unverifiable.at("operator \"many\" outside the crisp fragment") == 6);
}

TEST_CASE("verify_dataset regenerates rows from their sources") {
  std::vector<Sentence> corpus;
  corpus.push_back(p_boys_some());
  GenOutput gen = generate(corpus[0], test_lexicon(), test_taxonomy(), stops(), {});

  std::vector<InferencePair> rows;
  for (const GeneratedPair& gp : gen.pairs) rows.push_back(gp.pair);

  VerifyReport report =
      verify_dataset(rows, corpus, test_lexicon(), test_taxonomy(), stops(), {}, {});
  CHECK(report.total == 12);
  CHECK(report.matched == 12);
  CHECK(report.verifiable == 12);
  CHECK(report.agreed == 12);
  CHECK(report.unmatched_ids.empty());

  SUBCASE("rows with altered surfaces do not match") {
    rows[3].premise = "Some boys were happily dancing in the garden";
    VerifyReport r =
        verify_dataset(rows, corpus, test_lexicon(), test_taxonomy(), stops(), {}, {});
    CHECK(r.matched == 11);
    REQUIRE(r.unmatched_ids.size() == 1);
    CHECK(r.unmatched_ids[0] == rows[3].pair_id);
  }

  SUBCASE("rows with unknown sources do not match") {
    rows[0].source_id = "nowhere";
    VerifyReport r =
        verify_dataset(rows, corpus, test_lexicon(), test_taxonomy(), stops(), {}, {});
    CHECK(r.matched == 11);
    REQUIRE(r.unmatched_ids.size() == 1);
    CHECK(r.unmatched_ids[0] == rows[0].pair_id);
  }

  SUBCASE("the stored label from the row is what gets checked") {
    rows[0].label = Label::neutral;
    VerifyReport r =
        verify_dataset(rows, corpus, test_lexicon(), test_taxonomy(), stops(), {}, {});
    CHECK(r.matched == 12);
    REQUIRE(r.disagreements.size() == 1);
    CHECK(r.disagreements[0].pair_id == rows[0].pair_id);
    CHECK(r.disagreements[0].stored == Label::neutral);
    CHECK(r.disagreements[0].oracle == Label::entailment);
  }
}
