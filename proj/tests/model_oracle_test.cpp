#include <gtest/gtest.h>

#include "defrdf/closure.hpp"
#include "defrdf/model.hpp"
#include "defrdf/text_format.hpp"
#include "support/generators.hpp"
#include "support/interpretations.hpp"

using namespace defrdf;
using model::canonical_interpretation;
using model::check_conditions;
using model::Interpretation;
using model::satisfies;

namespace {

// Δ_R = {a, b, c} plus the vocabulary, every term its own denotation, and
// all extensions empty: a model of the empty graph.
Interpretation blank() {
  Interpretation i;
  for (const char* n : {"a", "b", "c"}) {
    i.resources.insert(iri(n));
    i.denote[iri(n)] = iri(n);
  }
  for (Vocab v : kVocabulary) {
    Term t = Term::vocab(v);
    i.resources.insert(t);
    i.properties.insert(t);
    i.prop_ext[t];
    i.denote[t] = t;
  }
  return i;
}

}  // namespace

TEST(Satisfies, CanonicalExamples) {
  EXPECT_TRUE(satisfies(canonical_interpretation({t("a", "sc", "b")}),
                        t("a", "sc", "b")));
  EXPECT_TRUE(satisfies(
      canonical_interpretation({t("a", "sc", "b"), t("b", "sc", "c")}),
      t("a", "sc", "c")));
  EXPECT_FALSE(satisfies(canonical_interpretation({t("a", "sc", "b")}),
                         t("b", "sc", "a")));
}

TEST(Satisfies, UnknownTermsAreUnsatisfied) {
  auto i = canonical_interpretation({t("a", "botc", "a")});
  EXPECT_FALSE(satisfies(i, t("a", "botc", "zz")));
  EXPECT_FALSE(satisfies(i, t("a", "nope", "a")));
}

TEST(CheckConditions, CanonicalModelOfPenguin) {
  TripleSet g{t("p", "sc", "b"), t("b", "sc", "f"), t("p", "sc", "e"),
              t("e", "botc", "f")};
  auto i = canonical_interpretation(g);
  EXPECT_TRUE(check_conditions(i, g).empty());
  EXPECT_TRUE(i.vocab_extension(Vocab::botc).count({iri("p"), iri("p")}));
}

TEST(CheckConditions, SymmetryViolation) {
  auto i = blank();
  for (const char* n : {"a", "b"}) {
    i.classes.insert(iri(n));
    i.class_ext[iri(n)];
  }
  i.prop_ext[iri("botc")] = {{iri("a"), iri("b")}};
  auto report = check_conditions(i, {});
  ASSERT_EQ(report.violations.size(), 1u) << report.to_string();
  EXPECT_EQ(report.violations[0].condition, "Symmetry");
  EXPECT_EQ(report.violations[0].item, 1);
}

TEST(CheckConditions, SubpropertyTransitivityViolation) {
  auto i = blank();
  for (const char* n : {"a", "b", "c"}) {
    i.properties.insert(iri(n));
    i.prop_ext[iri(n)];
  }
  i.prop_ext[iri("sp")] = {{iri("a"), iri("b")}, {iri("b"), iri("c")}};
  auto report = check_conditions(i, {});
  ASSERT_EQ(report.violations.size(), 1u) << report.to_string();
  EXPECT_EQ(report.violations[0].label(), "Subproperty (1)");
}

TEST(CheckConditions, EachConditionIsReachable) {
  auto i = blank();
  i.classes = {iri("a"), iri("b")};
  i.class_ext = {{iri("a"), {iri("c")}}, {iri("b"), {}}};
  i.prop_ext[iri("sc")] = {{iri("a"), iri("b")}};
  auto report = check_conditions(i, {t("a", "sc", "c")});
  EXPECT_EQ(report.count("Simple"), 1u);
  EXPECT_EQ(report.count("Subclass"), 1u);   // ext(a) not within ext(b)
  EXPECT_EQ(report.count("Typing I"), 1u);   // c in a without a type pair

  auto j = blank();
  j.denote.erase(Term::vocab(Vocab::range));
  j.properties.insert(iri("a"));
  j.prop_ext[iri("a")];
  j.prop_ext[iri("botp")] = {{iri("a"), iri("a")}};
  auto r2 = check_conditions(j, {});
  EXPECT_EQ(r2.count("Typing II"), 1u);
  // (a, a) in botp requires (a, x) for each of the eight properties.
  EXPECT_EQ(r2.count("p-Exhaustive"), 7u) << r2.to_string();
}

TEST(CheckConditions, RejectsEmptyDomain) {
  EXPECT_THROW(check_conditions(Interpretation{}, {}), std::invalid_argument);
}

TEST(Canonical, Domains) {
  auto empty = canonical_interpretation({});
  std::set<Term> vocab;
  for (Vocab v : kVocabulary) vocab.insert(Term::vocab(v));
  EXPECT_EQ(empty.resources, vocab);
  EXPECT_EQ(empty.properties, vocab);
  EXPECT_TRUE(empty.classes.empty());

  auto dom = canonical_interpretation({t("p", "dom", "c")});
  EXPECT_TRUE(dom.properties.count(iri("p")));
  EXPECT_TRUE(dom.classes.count(iri("c")));
  EXPECT_FALSE(dom.classes.count(iri("p")));

  auto lits = canonical_interpretation(
      {strict_triple(lit("x"), iri("q"), iri("y"))});
  EXPECT_EQ(lits.literal_values, std::set<Term>{lit("x")});
  EXPECT_EQ(lits.denote.at(lit("x")), lit("x"));
}

TEST(Canonical, RandomGraphsAreModelsAndMatchDerivability) {
  support::Rng rng(99);
  for (int n = 0; n < 300; ++n) {
    TripleSet g = support::random_strict_graph(rng);
    auto i = canonical_interpretation(g);
    auto report = check_conditions(i, g);
    ASSERT_TRUE(report.empty()) << serialize_triples(g) << report.to_string();
    Closure cl(g);
    for (const auto& c : support::strict_candidates(universe(g)))
      ASSERT_EQ(satisfies(i, c), cl.derives(c)) << format_triple(c);
  }
}

// Every rule preserves truth in small models satisfying all conditions. The
// exhaustive rules are instantiated with B ranging over Δ_C (resp. Δ_P).
TEST(Soundness, RulesHoldInRandomModels) {
  support::Rng rng(4242);
  const auto& names = support::model_names();
  std::size_t instances = 0;
  for (int n = 0; n < 120; ++n) {
    auto i = support::random_model(rng, 0.05 + 0.05 * (n % 4));
    ASSERT_TRUE(check_conditions(i, {}).empty())
        << check_conditions(i, {}).to_string();
    auto holds = [&](const Triple& x) { return satisfies(i, x); };
    auto check = [&](std::initializer_list<Triple> premises,
                     const Triple& conclusion, const char* rule) {
      for (const auto& p : premises)
        if (!holds(p)) return;
      ++instances;
      EXPECT_TRUE(holds(conclusion)) << "rule " << rule << " fails for "
                                     << format_triple(conclusion);
    };
    for (const auto& A : names)
      for (const auto& B : names)
        for (const auto& C : names)
          for (const auto& D : names) {
            check({t(A, "sp", B), t(B, "sp", C)}, t(A, "sp", C), "2a");
            check({t(A, "sp", B), t(C, A, D)}, t(C, B, D), "2b");
            check({t(A, "sc", B), t(B, "sc", C)}, t(A, "sc", C), "3a");
            check({t(A, "sc", B), t(C, "type", A)}, t(C, "type", B), "3b");
            check({t(A, "dom", B), t(C, A, D)}, t(C, "type", B), "4a");
            check({t(A, "range", B), t(C, A, D)}, t(D, "type", B), "4b");
            check({t(A, "botc", B)}, t(B, "botc", A), "5a");
            check({t(A, "botc", B), t(C, "sc", A)}, t(C, "botc", B), "5b");
            if (i.classes.count(iri(B)))
              check({t(A, "botc", A)}, t(A, "botc", B), "5c");
            check({t(A, "botp", B)}, t(B, "botp", A), "6a");
            check({t(A, "botp", B), t(C, "sp", A)}, t(C, "botp", B), "6b");
            if (i.properties.count(iri(B)))
              check({t(A, "botp", A)}, t(A, "botp", B), "6c");
            check({t(A, "dom", C), t(B, "dom", D), t(C, "botc", D)},
                  t(A, "botp", B), "7a");
            check({t(A, "range", C), t(B, "range", D), t(C, "botc", D)},
                  t(A, "botp", B), "7b");
          }
  }
  EXPECT_GT(instances, 1000u);
}
