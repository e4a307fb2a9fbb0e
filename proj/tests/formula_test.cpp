#include "cf/dsl.hpp"
#include "cf/error.hpp"
#include "cf/formula.hpp"
#include "cf/quaternion_maps.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace cf;

namespace {

FiniteGroup q8() { return standard_group(StandardKind::q8()); }
FiniteGroup klein() { return standard_group(StandardKind::klein()); }

// Labels in role order x, y, a, b.
RoleAssignment assign(const FiniteGroup &g, std::array<std::string, 4> labels,
                      Distinctness policy = Distinctness::required) {
  return RoleAssignment::from_labels(g, labels, policy);
}

std::map<std::string, std::string> labelled(const PartialMap &partial) {
  std::map<std::string, std::string> out;
  for (auto [from, to] : partial.pairs())
    out[partial.group().label(from)] = partial.group().label(to);
  return out;
}

template <typename Fn> ErrorCode error_of(Fn fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

bool contains(const std::vector<GroupMap> &maps, const GroupMap &map) {
  return std::find(maps.begin(), maps.end(), map) != maps.end();
}

} // namespace

TEST(Variants, BuiltinsAreConsistent) {
  EXPECT_EQ(to_string(classic_variant().rhs()), "F_x(b):F_a^-1(y)");
  EXPECT_EQ(to_string(dual_variant().rhs()), "F_y(x):F_a^-1(b)");
  EXPECT_EQ(to_string(mosko_variant().rhs()), "F_x(b):F_y(a)");
  EXPECT_EQ(builtin_variant("dual"), dual_variant());
  EXPECT_EQ(error_of([] { builtin_variant("unknown"); }), ErrorCode::UnknownKind);
}

TEST(Variants, MakeRejectsInconsistentRule) {
  const FormulaSide lhs{{{Role::x}, {Role::a}}, {{Role::y}, {Role::b}}};
  EXPECT_EQ(error_of([&] { CFVariant::make("bad", lhs, lhs, classic_variant().rule()); }),
            ErrorCode::InconsistentRule);
}

TEST(EvaluateRoleTerm, Examples) {
  const FiniteGroup g = q8();
  const auto classic = assign(g, {"1", "j", "i", "k"});
  EXPECT_EQ(g.label(evaluate_role_term(classic, {Role::a, true})), "-i");
  EXPECT_EQ(evaluate_role_term(classic, {Role::x}), classic.value(Role::x));
  const FiniteGroup k = klein();
  EXPECT_EQ(k.label(evaluate_role_term(assign(k, {"1", "j", "i", "k"}), {Role::a, true})),
            "i");
}

TEST(RoleAssignmentTest, DistinctnessPolicy) {
  EXPECT_EQ(error_of([] { assign(q8(), {"1", "1", "i", "k"}); }),
            ErrorCode::NonDistinctAssignment);
  EXPECT_NO_THROW(assign(q8(), {"1", "1", "i", "k"}, Distinctness::relaxed));
  EXPECT_EQ(error_of([] { RoleAssignment::make(q8(), {0, 1, 2, 8}); }),
            ErrorCode::IndexOutOfRange);
  EXPECT_EQ(error_of([] { assign(q8(), {"1", "j", "i", "m"}); }), ErrorCode::UnknownLabel);
}

TEST(InducedPartialMap, ClassicOnQ8) {
  const auto partial = induced_partial_map(assign(q8(), {"1", "j", "i", "k"}),
                                           classic_variant());
  const std::map<std::string, std::string> expected{
      {"1", "1"}, {"i", "k"}, {"j", "-i"}, {"k", "j"}};
  EXPECT_EQ(labelled(partial), expected);
}

TEST(InducedPartialMap, MoskoSwapsCharacters) {
  for (const auto &labels : {std::array<std::string, 4>{"1", "j", "i", "k"},
                             std::array<std::string, 4>{"-k", "i", "-1", "j"}}) {
    const auto a = assign(q8(), labels);
    const auto partial = induced_partial_map(a, mosko_variant());
    EXPECT_EQ(partial.pairs().at(a.value(Role::a)), a.value(Role::b));
    EXPECT_EQ(partial.pairs().at(a.value(Role::b)), a.value(Role::a));
    EXPECT_EQ(partial.pairs().at(a.value(Role::x)), a.value(Role::x));
    EXPECT_EQ(partial.pairs().at(a.value(Role::y)), a.value(Role::y));
  }
}

TEST(InducedPartialMap, DualOnQ8) {
  const auto partial =
      induced_partial_map(assign(q8(), {"i", "j", "k", "1"}), dual_variant());
  const std::map<std::string, std::string> expected{
      {"i", "j"}, {"j", "-k"}, {"k", "i"}, {"1", "1"}};
  EXPECT_EQ(labelled(partial), expected);
}

TEST(InducedPartialMap, ConflictingPairs) {
  // a = b = i: a -> b sends i to i, b -> y sends i to j.
  const auto a = assign(q8(), {"1", "j", "i", "i"}, Distinctness::relaxed);
  EXPECT_EQ(error_of([&] { induced_partial_map(a, classic_variant()); }),
            ErrorCode::ConflictingPairs);
  EXPECT_EQ(error_of([&] { realizations(a, classic_variant(), true); }),
            ErrorCode::ConflictingPairs);
}

TEST(Realizations, ClassicContainsLambdaOnlyWithAnti) {
  const auto a = assign(q8(), {"1", "j", "i", "k"});
  const auto with_anti = realizations(a, classic_variant(), true);
  EXPECT_TRUE(contains(with_anti, q8_lambda()));
  const auto automorphisms_only = realizations(a, classic_variant(), false);
  EXPECT_FALSE(contains(automorphisms_only, q8_lambda()));
  EXPECT_TRUE(automorphisms_only.empty());
  const auto partial = induced_partial_map(a, classic_variant());
  for (const auto &m : with_anti)
    EXPECT_TRUE(partial.agrees_with(m));
}

TEST(Realizations, DualContainsSigma) {
  const auto found = realizations(assign(q8(), {"i", "j", "k", "1"}), dual_variant(), true);
  EXPECT_TRUE(contains(found, q8_sigma()));
}

TEST(Realizations, TrivialGroupRelaxed) {
  const FiniteGroup t = catalog_group("trivial");
  const auto found = realizations(RoleAssignment::make(t, {0, 0, 0, 0}, Distinctness::relaxed),
                                  classic_variant(), true);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0], identity_map(t));
}

TEST(EnumerateAssignments, Q8ClassicPinnedX) {
  const FiniteGroup g = q8();
  const auto results = enumerate_assignments(g, classic_variant(), true,
                                             RolePins{}.pin(Role::x, g.element("1")));
  const auto target = assign(g, {"1", "j", "i", "k"});
  auto it = std::find_if(results.begin(), results.end(),
                         [&](const auto &r) { return r.assignment == target; });
  ASSERT_NE(it, results.end());
  EXPECT_GE(it->realization_count, 1u);
  for (const auto &r : results)
    EXPECT_EQ(r.assignment.value(Role::x), g.element("1"));
}

TEST(EnumerateAssignments, TrivialGroupNeedsFourElements) {
  EXPECT_TRUE(enumerate_assignments(catalog_group("trivial"), classic_variant(), true).empty());
}

TEST(EnumerateAssignments, KleinMoskoPinned) {
  const FiniteGroup k = klein();
  const auto results = enumerate_assignments(
      k, mosko_variant(), false,
      RolePins{}.pin(Role::x, k.element("1")).pin(Role::y, k.element("j")));
  const auto target = assign(k, {"1", "j", "i", "k"});
  auto it = std::find_if(results.begin(), results.end(),
                         [&](const auto &r) { return r.assignment == target; });
  ASSERT_NE(it, results.end());
  // The swap of i and k fixing 1 and j, checked against the raw table.
  const std::vector<Element> swap{0, 3, 2, 1};
  const auto table = oracle::table_of(k);
  for (Element g = 0; g < 4; ++g)
    for (Element h = 0; h < 4; ++h)
      ASSERT_EQ(swap[table[g][h]], table[swap[g]][swap[h]]);
  const auto found = realizations(target, mosko_variant(), false);
  EXPECT_TRUE(contains(found, classify_map(k, k, swap)));
  EXPECT_EQ(it->realization_count, found.size());
}

TEST(EnumerateAssignments, Errors) {
  const FiniteGroup g = q8();
  EXPECT_EQ(error_of([&] {
              enumerate_assignments(g, classic_variant(), true,
                                    RolePins{}.pin(Role::x, 0).pin(Role::b, 0));
            }),
            ErrorCode::UnsatisfiableConstraint);
  EXPECT_EQ(error_of([&] {
              enumerate_assignments(g, classic_variant(), true, RolePins{}.pin(Role::a, 8));
            }),
            ErrorCode::IndexOutOfRange);
  EXPECT_EQ(error_of([] { enumerate_assignments(catalog_group("c20"), classic_variant(), true); }),
            ErrorCode::GroupTooLarge);
  // Relaxed pins may coincide.
  EXPECT_NO_THROW(enumerate_assignments(g, classic_variant(), true,
                                        RolePins{}.pin(Role::x, 0).pin(Role::b, 0),
                                        Distinctness::relaxed));
}

TEST(EnumerateAssignments, MatchesPerAssignmentSearch) {
  struct Case {
    FiniteGroup group;
    Distinctness policy;
  };
  for (const auto &[group, policy] :
       {Case{q8(), Distinctness::required}, Case{klein(), Distinctness::required},
        Case{klein(), Distinctness::relaxed}, Case{catalog_group("c5"), Distinctness::relaxed}}) {
    const std::size_t n = group.order();
    for (const auto &variant : builtin_variants())
      for (bool anti : {false, true}) {
        std::vector<std::pair<std::array<Element, 4>, std::size_t>> expected;
        for (Element x = 0; x < n; ++x)
          for (Element y = 0; y < n; ++y)
            for (Element a = 0; a < n; ++a)
              for (Element b = 0; b < n; ++b) {
                std::array<Element, 4> values{x, y, a, b};
                std::optional<RoleAssignment> ra;
                try {
                  ra = RoleAssignment::make(group, values, policy);
                  const auto found = realizations(*ra, variant, anti);
                  if (!found.empty())
                    expected.emplace_back(values, found.size());
                } catch (const Error &) {
                  // non-distinct or conflicting: not realizable
                }
              }
        std::vector<std::pair<std::array<Element, 4>, std::size_t>> actual;
        for (const auto &r : enumerate_assignments(group, variant, anti, {}, policy))
          actual.emplace_back(r.assignment.values(), r.realization_count);
        EXPECT_EQ(actual, expected) << group.name() << " " << variant.name() << " " << anti;
      }
  }
}

TEST(IterateChain, ClassicSymbolic) {
  const Chain chain = iterate_chain(classic_variant(), 2);
  ASSERT_EQ(chain.steps.size(), 3u);
  EXPECT_EQ(to_string(chain.steps[0].side), "F_x(a):F_y(b)");
  EXPECT_EQ(to_string(chain.steps[1].side), "F_x(b):F_a^-1(y)");
  EXPECT_EQ(to_string(chain.steps[2].side), "F_x(y):F_b^-1(a^-1)");
  EXPECT_EQ(chain.symbolic_period, 6u);
  EXPECT_FALSE(chain.steps[1].tuple.has_value());
}

TEST(IterateChain, SymbolicStepsMatchStringSubstitution) {
  const oracle::StringRule rule{{'x', "x"}, {'a', "b"}, {'b', "y"}, {'y', "a^-1"}};
  std::array<std::string, 4> terms{"x", "a", "y", "b"};
  const Chain chain = iterate_chain(classic_variant(), 12);
  for (std::size_t k = 0; k <= 12; ++k) {
    const std::string expected =
        "F_" + terms[0] + "(" + terms[1] + "):F_" + terms[2] + "(" + terms[3] + ")";
    EXPECT_EQ(to_string(chain.steps[k].side), expected) << k;
    if (k == 3)
      EXPECT_EQ(expected, "F_x(a^-1):F_y^-1(b^-1)");
    if (k == 6)
      EXPECT_EQ(expected, "F_x(a):F_y(b)");
    for (auto &t : terms)
      t = oracle::substitute(rule, t);
  }
}

TEST(IterateChain, Periods) {
  EXPECT_EQ(iterate_chain(mosko_variant(), 1).symbolic_period, 2u);
  EXPECT_EQ(iterate_chain(dual_variant(), 1).symbolic_period, 6u);
  EXPECT_EQ(iterate_chain(parse_formula("F_x(a):F_y(b) => F_x(a):F_y(b)"), 1).symbolic_period,
            1u);
  // b -> a collapses two roles; the substitution never returns.
  EXPECT_FALSE(iterate_chain(parse_formula("F_x(a):F_y(b) => F_x(a):F_y(a)"), 1)
                   .symbolic_period.has_value());
}

TEST(IterateChain, KleinElementPeriodIsThree) {
  const FiniteGroup k = klein();
  const Chain chain = iterate_chain(classic_variant(), 6, assign(k, {"1", "j", "i", "k"}));
  EXPECT_EQ(chain.element_period, 3u);
  ASSERT_TRUE(chain.steps[3].tuple.has_value());
  EXPECT_EQ(*chain.steps[3].tuple, *chain.steps[0].tuple);
  EXPECT_NE(*chain.steps[1].tuple, *chain.steps[0].tuple);
}

TEST(IterateChain, Q8ElementPeriodIsSix) {
  const FiniteGroup g = q8();
  const auto a = assign(g, {"1", "j", "i", "k"});
  const Chain chain = iterate_chain(classic_variant(), 6, a);
  // Step 3 evaluates to (x, a^-1, y^-1, b^-1), which differs from step 0 in q8.
  const auto table = oracle::table_of(g);
  auto inv = [&](Element e) {
    for (Element h = 0; h < 8; ++h)
      if (table[e][h] == 0)
        return h;
    return Element{99};
  };
  const std::array<Element, 4> step3{a.value(Role::x), inv(a.value(Role::a)),
                                     inv(a.value(Role::y)), inv(a.value(Role::b))};
  EXPECT_EQ(*chain.steps[3].tuple, step3);
  EXPECT_NE(step3, *chain.steps[0].tuple);
  EXPECT_EQ(chain.element_period, 6u);
}

TEST(FractionRule, Examples) {
  const FiniteGroup c4 = catalog_group("c4");
  EXPECT_TRUE(verify_fraction_rule(assign(c4, {"g", "g^3", "g^2", "1"})));
  const FiniteGroup c6 = catalog_group("c6");
  EXPECT_TRUE(verify_fraction_rule(RoleAssignment::make(c6, {0, 0, 0, 0}, Distinctness::relaxed)));
  EXPECT_EQ(error_of([] { verify_fraction_rule(assign(q8(), {"1", "j", "i", "k"})); }),
            ErrorCode::NonCommutativeGroup);
}

TEST(MoskoDegeneration, Examples) {
  EXPECT_TRUE(mosko_degeneration_check(standard_group(StandardKind::elementary_abelian_2(3))));
  EXPECT_TRUE(mosko_degeneration_check(catalog_group("trivial")));
  EXPECT_FALSE(mosko_degeneration_check(q8()));
  for (const auto &g : catalog())
    EXPECT_EQ(mosko_degeneration_check(g), structure_flags(g).exponent_two) << g.name();
}
