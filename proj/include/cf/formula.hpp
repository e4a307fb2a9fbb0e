#pragma once

#include "cf/group.hpp"
#include "cf/morphism.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cf {

/// The four formula roles: functions x, y and characters a, b.
enum class Role : std::uint8_t { x, y, a, b };

inline constexpr std::array<Role, 4> kRoles{Role::x, Role::y, Role::a, Role::b};

constexpr std::size_t index(Role role) { return static_cast<std::size_t>(role); }
char role_letter(Role role);
std::optional<Role> role_from_letter(char letter);

struct RoleTerm {
  Role role = Role::x;
  bool inverted = false;

  RoleTerm inverse() const { return {role, !inverted}; }
  friend bool operator==(RoleTerm, RoleTerm) = default;
};

/// "a" or "a^-1".
std::string to_string(RoleTerm term);

/// F_function(argument).
struct Application {
  RoleTerm function;
  RoleTerm argument;
  friend bool operator==(const Application &, const Application &) = default;
};

/// F_f1(a1) : F_f2(a2).
struct FormulaSide {
  Application first;
  Application second;

  /// f1, a1, f2, a2.
  std::array<RoleTerm, 4> terms() const;
  friend bool operator==(const FormulaSide &, const FormulaSide &) = default;
};

/// "F_x(a):F_y(b)".
std::string to_string(const FormulaSide &side);

/// rule[index(r)] is the term role r is rewritten to.
using RoleRule = std::array<RoleTerm, 4>;

RoleRule identity_rule();
/// Substitutes through the rule; inversion marks compose, so a double
/// inversion cancels.
RoleTerm rewrite(const RoleRule &rule, RoleTerm term);
FormulaSide rewrite(const RoleRule &rule, const FormulaSide &side);
/// Applying the result equals applying `inner` and then `outer`.
RoleRule compose_rules(const RoleRule &outer, const RoleRule &inner);
/// Least p >= 1 with rule^p = identity, nullopt when the rule never returns
/// to the identity (it is not a permutation of the signed roles).
std::optional<std::size_t> rule_period(const RoleRule &rule);

/// A formula schema lhs => rhs together with the role substitution that
/// turns one into the other.
class CFVariant {
public:
  /// Throws InconsistentRule unless rhs == rewrite(rule, lhs).
  static CFVariant make(std::string name, FormulaSide lhs, FormulaSide rhs,
                        RoleRule rule);

  const std::string &name() const { return name_; }
  const FormulaSide &lhs() const { return lhs_; }
  const FormulaSide &rhs() const { return rhs_; }
  const RoleRule &rule() const { return rule_; }

  friend bool operator==(const CFVariant &, const CFVariant &) = default;

private:
  CFVariant(std::string name, FormulaSide lhs, FormulaSide rhs, RoleRule rule)
      : name_(std::move(name)), lhs_(lhs), rhs_(rhs), rule_(rule) {}

  std::string name_;
  FormulaSide lhs_;
  FormulaSide rhs_;
  RoleRule rule_;
};

/// F_x(a):F_y(b) => F_x(b):F_a^-1(y); x->x, a->b, b->y, y->a^-1.
CFVariant classic_variant();
/// F_x(a):F_y(b) => F_y(x):F_a^-1(b); x->y, a->x, y->a^-1, b->b.
CFVariant dual_variant();
/// F_x(a):F_y(b) => F_x(b):F_y(a); a<->b.
CFVariant mosko_variant();

std::vector<CFVariant> builtin_variants();
/// Throws UnknownKind.
CFVariant builtin_variant(std::string_view name);

enum class Distinctness { required, relaxed };

/// Values for the four roles in one group.
class RoleAssignment {
public:
  /// Throws IndexOutOfRange, and NonDistinctAssignment when two roles share
  /// a value under Distinctness::required.
  static RoleAssignment make(FiniteGroup group, std::array<Element, 4> values,
                             Distinctness policy = Distinctness::required);
  /// Values by label, in role order x, y, a, b. Throws UnknownLabel too.
  static RoleAssignment from_labels(FiniteGroup group,
                                    const std::array<std::string, 4> &labels,
                                    Distinctness policy = Distinctness::required);

  const FiniteGroup &group() const { return group_; }
  Element value(Role role) const { return values_[index(role)]; }
  const std::array<Element, 4> &values() const { return values_; }
  Distinctness policy() const { return policy_; }

  friend bool operator==(const RoleAssignment &lhs, const RoleAssignment &rhs) {
    return lhs.values_ == rhs.values_ && lhs.group_.same_structure(rhs.group_);
  }

private:
  RoleAssignment(FiniteGroup group, std::array<Element, 4> values,
                 Distinctness policy)
      : group_(std::move(group)), values_(values), policy_(policy) {}

  FiniteGroup group_;
  std::array<Element, 4> values_;
  Distinctness policy_;
};

/// A functional set of (from -> to) pairs on a subset of a group.
class PartialMap {
public:
  explicit PartialMap(FiniteGroup group) : group_(std::move(group)) {}

  /// Throws ConflictingPairs if `from` is already sent elsewhere,
  /// IndexOutOfRange for invalid indices.
  void add(Element from, Element to);

  const FiniteGroup &group() const { return group_; }
  const std::map<Element, Element> &pairs() const { return pairs_; }
  /// True when `map` restricted to the domain reproduces every pair.
  bool agrees_with(const GroupMap &map) const;

  friend bool operator==(const PartialMap &lhs, const PartialMap &rhs) {
    return lhs.pairs_ == rhs.pairs_ && lhs.group_.same_structure(rhs.group_);
  }

private:
  FiniteGroup group_;
  std::map<Element, Element> pairs_;
};

Element evaluate_role_term(const RoleAssignment &assignment, RoleTerm term);

/// The pairs values[r] -> value of rule[r]. Throws ConflictingPairs.
PartialMap induced_partial_map(const RoleAssignment &assignment,
                               const CFVariant &variant);

/// Symmetries (automorphisms, plus anti-automorphisms when allow_anti) that
/// extend the induced partial map, sorted by image sequence. Throws
/// ConflictingPairs, GroupTooLarge.
std::vector<GroupMap> realizations(const RoleAssignment &assignment,
                                   const CFVariant &variant, bool allow_anti);

/// Optional per-role element pins for enumerate_assignments.
struct RolePins {
  std::array<std::optional<Element>, 4> values;

  RolePins &pin(Role role, Element g) {
    values[index(role)] = g;
    return *this;
  }
};

struct AssignmentRealizations {
  RoleAssignment assignment;
  std::size_t realization_count = 0;
};

/// Every assignment honouring the pins and distinctness policy that has at
/// least one realization, in lexicographic order of (x, y, a, b) values.
/// Throws GroupTooLarge, IndexOutOfRange, UnsatisfiableConstraint.
std::vector<AssignmentRealizations>
enumerate_assignments(const FiniteGroup &group, const CFVariant &variant,
                      bool allow_anti, const RolePins &pins = {},
                      Distinctness policy = Distinctness::required);

struct ChainStep {
  std::size_t step = 0;
  FormulaSide side;
  /// The side's four terms evaluated under the assignment, if one was given.
  std::optional<std::array<Element, 4>> tuple;
};

struct Chain {
  /// steps[k] is the left side rewritten k times; steps[0] is the left side.
  std::vector<ChainStep> steps;
  std::optional<std::size_t> symbolic_period;
  /// Least p >= 1 after which every role takes its original value again.
  std::optional<std::size_t> element_period;
};

Chain iterate_chain(const CFVariant &variant, std::size_t steps,
                    const std::optional<RoleAssignment> &assignment = std::nullopt);

/// Checks (x a^-1)(y b^-1)^-1 = (x y^-1)(b^-1 a)^-1 under the assignment.
/// Throws NonCommutativeGroup.
bool verify_fraction_rule(const RoleAssignment &assignment);

/// True iff a^-1 and a always evaluate alike, i.e. the group has exponent 2.
bool mosko_degeneration_check(const FiniteGroup &group);

} // namespace cf
