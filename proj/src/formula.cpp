#include "cf/formula.hpp"

#include "cf/error.hpp"

#include <algorithm>

namespace cf {

namespace {

constexpr std::size_t kPeriodSearchLimit = 2520;

bool rule_is_identity(const RoleRule &rule) { return rule == identity_rule(); }

} // namespace

char role_letter(Role role) {
  static constexpr char letters[] = {'x', 'y', 'a', 'b'};
  return letters[index(role)];
}

std::optional<Role> role_from_letter(char letter) {
  for (Role role : kRoles)
    if (role_letter(role) == letter)
      return role;
  return std::nullopt;
}

std::string to_string(RoleTerm term) {
  std::string text(1, role_letter(term.role));
  if (term.inverted)
    text += "^-1";
  return text;
}

std::array<RoleTerm, 4> FormulaSide::terms() const {
  return {first.function, first.argument, second.function, second.argument};
}

std::string to_string(const FormulaSide &side) {
  auto app = [](const Application &a) {
    return "F_" + to_string(a.function) + "(" + to_string(a.argument) + ")";
  };
  return app(side.first) + ":" + app(side.second);
}

RoleRule identity_rule() {
  return {RoleTerm{Role::x}, RoleTerm{Role::y}, RoleTerm{Role::a},
          RoleTerm{Role::b}};
}

RoleTerm rewrite(const RoleRule &rule, RoleTerm term) {
  RoleTerm image = rule[index(term.role)];
  return term.inverted ? image.inverse() : image;
}

FormulaSide rewrite(const RoleRule &rule, const FormulaSide &side) {
  auto app = [&](const Application &a) {
    return Application{rewrite(rule, a.function), rewrite(rule, a.argument)};
  };
  return {app(side.first), app(side.second)};
}

RoleRule compose_rules(const RoleRule &outer, const RoleRule &inner) {
  RoleRule result;
  for (Role role : kRoles)
    result[index(role)] = rewrite(outer, inner[index(role)]);
  return result;
}

std::optional<std::size_t> rule_period(const RoleRule &rule) {
  RoleRule power = rule;
  for (std::size_t p = 1; p <= kPeriodSearchLimit; ++p) {
    if (rule_is_identity(power))
      return p;
    power = compose_rules(rule, power);
  }
  return std::nullopt;
}

CFVariant CFVariant::make(std::string name, FormulaSide lhs, FormulaSide rhs,
                          RoleRule rule) {
  if (rewrite(rule, lhs) != rhs)
    throw Error(ErrorCode::InconsistentRule,
                "rewriting " + to_string(lhs) + " gives " +
                    to_string(rewrite(rule, lhs)) + ", not " + to_string(rhs));
  return CFVariant(std::move(name), lhs, rhs, rule);
}

namespace {

constexpr RoleTerm kX{Role::x}, kY{Role::y}, kA{Role::a}, kB{Role::b};

FormulaSide standard_lhs() { return {{kX, kA}, {kY, kB}}; }

} // namespace

CFVariant classic_variant() {
  RoleRule rule{};
  rule[index(Role::x)] = kX;
  rule[index(Role::a)] = kB;
  rule[index(Role::b)] = kY;
  rule[index(Role::y)] = kA.inverse();
  return CFVariant::make("classic", standard_lhs(), {{kX, kB}, {kA.inverse(), kY}},
                         rule);
}

CFVariant dual_variant() {
  RoleRule rule{};
  rule[index(Role::x)] = kY;
  rule[index(Role::a)] = kX;
  rule[index(Role::y)] = kA.inverse();
  rule[index(Role::b)] = kB;
  return CFVariant::make("dual", standard_lhs(), {{kY, kX}, {kA.inverse(), kB}},
                         rule);
}

CFVariant mosko_variant() {
  RoleRule rule = identity_rule();
  rule[index(Role::a)] = kB;
  rule[index(Role::b)] = kA;
  return CFVariant::make("mosko", standard_lhs(), {{kX, kB}, {kY, kA}}, rule);
}

std::vector<CFVariant> builtin_variants() {
  return {classic_variant(), dual_variant(), mosko_variant()};
}

CFVariant builtin_variant(std::string_view name) {
  for (auto &variant : builtin_variants())
    if (variant.name() == name)
      return variant;
  throw Error(ErrorCode::UnknownKind, "unknown variant '" + std::string(name) + "'");
}

RoleAssignment RoleAssignment::make(FiniteGroup group, std::array<Element, 4> values,
                                    Distinctness policy) {
  for (Role role : kRoles)
    if (!group.contains(values[index(role)]))
      throw Error(ErrorCode::IndexOutOfRange,
                  std::string("role ") + role_letter(role) + " assigned index " +
                      std::to_string(values[index(role)]) +
                      " outside group of order " + std::to_string(group.order()),
                  {values[index(role)]});
  if (policy == Distinctness::required)
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t s = r + 1; s < 4; ++s)
        if (values[r] == values[s])
          throw Error(ErrorCode::NonDistinctAssignment,
                      std::string("roles ") + role_letter(kRoles[r]) + " and " +
                          role_letter(kRoles[s]) + " share element '" +
                          group.label(values[r]) + "'",
                      {values[r]});
  return RoleAssignment(std::move(group), values, policy);
}

RoleAssignment RoleAssignment::from_labels(FiniteGroup group,
                                           const std::array<std::string, 4> &labels,
                                           Distinctness policy) {
  std::array<Element, 4> values{};
  for (std::size_t r = 0; r < 4; ++r)
    values[r] = group.element(labels[r]);
  return make(std::move(group), values, policy);
}

void PartialMap::add(Element from, Element to) {
  if (!group_.contains(from) || !group_.contains(to))
    throw Error(ErrorCode::IndexOutOfRange,
                "pair " + std::to_string(from) + " -> " + std::to_string(to) +
                    " outside group of order " + std::to_string(group_.order()),
                {from, to});
  auto [it, inserted] = pairs_.emplace(from, to);
  if (!inserted && it->second != to)
    throw Error(ErrorCode::ConflictingPairs,
                "element '" + group_.label(from) + "' sent to both '" +
                    group_.label(it->second) + "' and '" + group_.label(to) + "'",
                {from, it->second, to});
}

bool PartialMap::agrees_with(const GroupMap &map) const {
  if (!map.source().same_structure(group_))
    return false;
  return std::all_of(pairs_.begin(), pairs_.end(),
                     [&](const auto &pair) { return map(pair.first) == pair.second; });
}

Element evaluate_role_term(const RoleAssignment &assignment, RoleTerm term) {
  const Element value = assignment.value(term.role);
  return term.inverted ? assignment.group().inv(value) : value;
}

PartialMap induced_partial_map(const RoleAssignment &assignment,
                               const CFVariant &variant) {
  PartialMap partial(assignment.group());
  for (Role role : kRoles)
    partial.add(assignment.value(role),
                evaluate_role_term(assignment, variant.rule()[index(role)]));
  return partial;
}

std::vector<GroupMap> realizations(const RoleAssignment &assignment,
                                   const CFVariant &variant, bool allow_anti) {
  const PartialMap partial = induced_partial_map(assignment, variant);
  std::vector<GroupMap> result;
  for (auto &map : enumerate_symmetries(assignment.group(), allow_anti))
    if (partial.agrees_with(map))
      result.push_back(std::move(map));
  return result;
}

std::vector<AssignmentRealizations>
enumerate_assignments(const FiniteGroup &group, const CFVariant &variant,
                      bool allow_anti, const RolePins &pins, Distinctness policy) {
  const std::size_t n = group.order();
  for (Role role : kRoles)
    if (auto pinned = pins.values[index(role)]; pinned && !group.contains(*pinned))
      throw Error(ErrorCode::IndexOutOfRange,
                  std::string("pin for role ") + role_letter(role) +
                      " is index " + std::to_string(*pinned) +
                      ", group order is " + std::to_string(n),
                  {*pinned});
  if (policy == Distinctness::required)
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t s = r + 1; s < 4; ++s)
        if (pins.values[r] && pins.values[r] == pins.values[s])
          throw Error(ErrorCode::UnsatisfiableConstraint,
                      std::string("roles ") + role_letter(kRoles[r]) + " and " +
                          role_letter(kRoles[s]) +
                          " are pinned to the same element but distinct values "
                          "are required",
                      {*pins.values[r]});

  const std::vector<GroupMap> symmetries = enumerate_symmetries(group, allow_anti);
  const RoleRule &rule = variant.rule();

  // The constraint map(v_r) = value(rule[r]) becomes checkable once both r
  // and the role it references are assigned; roles are assigned in order.
  std::array<std::vector<std::size_t>, 4> checkable_at;
  for (std::size_t r = 0; r < 4; ++r)
    checkable_at[std::max(r, index(rule[r].role))].push_back(r);

  // Flat counter over all n^4 tuples; index = ((x * n + y) * n + a) * n + b.
  std::vector<std::size_t> counts(n * n * n * n, 0);
  std::array<Element, 4> values{};

  for (const GroupMap &map : symmetries) {
    auto holds = [&](std::size_t r) {
      const RoleTerm target = rule[r];
      const Element v = values[index(target.role)];
      return map(values[r]) == (target.inverted ? group.inv(v) : v);
    };
    auto assign = [&](auto &self, std::size_t depth) -> void {
      if (depth == 4) {
        ++counts[((values[0] * n + values[1]) * n + values[2]) * n + values[3]];
        return;
      }
      for (Element g = 0; g < n; ++g) {
        if (pins.values[depth] && *pins.values[depth] != g)
          continue;
        if (policy == Distinctness::required &&
            std::find(values.begin(), values.begin() + depth, g) !=
                values.begin() + depth)
          continue;
        values[depth] = g;
        if (std::all_of(checkable_at[depth].begin(), checkable_at[depth].end(),
                        holds))
          self(self, depth + 1);
      }
    };
    assign(assign, 0);
  }

  std::vector<AssignmentRealizations> result;
  for (std::size_t code = 0; code < counts.size(); ++code) {
    if (counts[code] == 0)
      continue;
    std::array<Element, 4> tuple{};
    std::size_t rest = code;
    for (std::size_t r = 4; r-- > 0;) {
      tuple[r] = rest % n;
      rest /= n;
    }
    result.push_back({RoleAssignment::make(group, tuple, policy), counts[code]});
  }
  return result;
}

Chain iterate_chain(const CFVariant &variant, std::size_t steps,
                    const std::optional<RoleAssignment> &assignment) {
  Chain chain;
  chain.symbolic_period = rule_period(variant.rule());

  auto evaluate_side = [&](const FormulaSide &side) {
    std::array<Element, 4> tuple{};
    const auto terms = side.terms();
    for (std::size_t t = 0; t < 4; ++t)
      tuple[t] = evaluate_role_term(*assignment, terms[t]);
    return tuple;
  };

  RoleRule power = identity_rule();
  for (std::size_t k = 0; k <= steps; ++k) {
    ChainStep step{k, rewrite(power, variant.lhs()), std::nullopt};
    if (assignment)
      step.tuple = evaluate_side(step.side);
    chain.steps.push_back(step);
    power = compose_rules(variant.rule(), power);
  }

  if (assignment) {
    const std::size_t limit = chain.symbolic_period.value_or(kPeriodSearchLimit);
    RoleRule p_power = variant.rule();
    for (std::size_t p = 1; p <= limit; ++p) {
      bool returned = true;
      for (Role role : kRoles)
        returned = returned && evaluate_role_term(*assignment, p_power[index(role)]) ==
                                   assignment->value(role);
      if (returned) {
        chain.element_period = p;
        break;
      }
      p_power = compose_rules(variant.rule(), p_power);
    }
  }
  return chain;
}

bool verify_fraction_rule(const RoleAssignment &assignment) {
  const FiniteGroup &group = assignment.group();
  if (!structure_flags(group).commutative)
    throw Error(ErrorCode::NonCommutativeGroup,
                "the fraction reading needs a commutative group, '" + group.name() +
                    "' is not");
  const Element x = assignment.value(Role::x);
  const Element y = assignment.value(Role::y);
  const Element a = assignment.value(Role::a);
  const Element b = assignment.value(Role::b);
  auto ratio = [&](Element num, Element den) { return group.mul(num, group.inv(den)); };

  // (x/a) / (y/b) against (x/y) / (b^-1 / a^-1).
  const Element lhs = ratio(ratio(x, a), ratio(y, b));
  const Element rhs = ratio(ratio(x, y), ratio(group.inv(b), group.inv(a)));
  return lhs == rhs;
}

bool mosko_degeneration_check(const FiniteGroup &group) {
  for (Element g = 0; g < group.order(); ++g) {
    const auto assignment =
        RoleAssignment::make(group, {g, g, g, g}, Distinctness::relaxed);
    if (evaluate_role_term(assignment, {Role::a, true}) !=
        evaluate_role_term(assignment, {Role::a, false}))
      return false;
  }
  return true;
}

} // namespace cf
