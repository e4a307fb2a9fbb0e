#include "cf/group.hpp"

#include "cf/error.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>
#include <sstream>

namespace cf {

namespace {

std::string describe(const std::vector<std::string> &labels, Element g) {
  return "'" + labels[g] + "' (#" + std::to_string(g) + ")";
}

using Table = std::vector<std::vector<Element>>;

FiniteGroup from_product(std::string name, std::vector<std::string> labels,
                         auto product) {
  const std::size_t n = labels.size();
  Table table(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      table[a][b] = product(a, b);
  return build_group(std::move(name), std::move(labels), table, 0);
}

// Q8 elements are encoded as 2*unit + negative, unit in {1, i, j, k}.
FiniteGroup make_q8() {
  // unit_product[u][v] = {sign flip, unit} for u*v with u, v in {1,i,j,k}.
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4>
      unit_product{{
          {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
          {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
          {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
          {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
      }};
  std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return from_product("q8", std::move(labels), [](Element a, Element b) {
    auto [flip, unit] = unit_product[a / 2][b / 2];
    const int negative = static_cast<int>(a % 2) ^ static_cast<int>(b % 2) ^ flip;
    return static_cast<Element>(2 * unit + negative);
  });
}

FiniteGroup make_cyclic(int n) {
  if (n < 1)
    throw Error(ErrorCode::UnknownKind,
                "cyclic group needs n >= 1, got " + std::to_string(n));
  if (static_cast<std::size_t>(n) > kMaxGroupOrder)
    throw Error(ErrorCode::GroupTooLarge,
                "cyclic(" + std::to_string(n) + ") exceeds order " +
                    std::to_string(kMaxGroupOrder));
  std::vector<std::string> labels;
  for (int e = 0; e < n; ++e)
    labels.push_back(e == 0 ? "1" : e == 1 ? "g" : "g^" + std::to_string(e));
  const auto order = static_cast<Element>(n);
  return from_product("c" + std::to_string(n), std::move(labels),
                      [order](Element a, Element b) { return (a + b) % order; });
}

FiniteGroup make_elementary_abelian_2(int k) {
  if (k < 0)
    throw Error(ErrorCode::UnknownKind,
                "elementary abelian 2-group needs k >= 0, got " +
                    std::to_string(k));
  if (k > 6)
    throw Error(ErrorCode::GroupTooLarge,
                "ea2-" + std::to_string(k) + " exceeds order " +
                    std::to_string(kMaxGroupOrder));
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> labels;
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::string label;
    for (int bit = 0; bit < k; ++bit)
      if (mask & (std::size_t{1} << bit))
        label.push_back(static_cast<char>('a' + bit));
    labels.push_back(label.empty() ? "1" : label);
  }
  return from_product("ea2-" + std::to_string(k), std::move(labels),
                      [](Element a, Element b) { return a ^ b; });
}

std::optional<int> parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    return std::nullopt;
  return value;
}

} // namespace

const std::string &FiniteGroup::label(Element g) const {
  if (g >= order())
    throw Error(ErrorCode::IndexOutOfRange,
                "element index " + std::to_string(g) + " not in group '" +
                    name() + "' of order " + std::to_string(order()),
                {g});
  return data_->labels[g];
}

std::optional<Element> FiniteGroup::find(std::string_view label) const {
  const auto &labels = data_->labels;
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end())
    return std::nullopt;
  return static_cast<Element>(it - labels.begin());
}

Element FiniteGroup::element(std::string_view label) const {
  if (auto g = find(label))
    return *g;
  throw Error(ErrorCode::UnknownLabel,
              "no element '" + std::string(label) + "' in group '" + name() + "'");
}

bool FiniteGroup::same_structure(const FiniteGroup &other) const {
  if (data_ == other.data_)
    return true;
  return data_->labels == other.data_->labels &&
         data_->table == other.data_->table &&
         data_->identity == other.data_->identity;
}

bool operator==(const FiniteGroup &lhs, const FiniteGroup &rhs) {
  return lhs.data_ == rhs.data_ ||
         (lhs.name() == rhs.name() && lhs.same_structure(rhs));
}

FiniteGroup build_group(std::string name, std::vector<std::string> labels,
                        const std::vector<std::vector<Element>> &table,
                        Element identity) {
  const std::size_t n = labels.size();
  if (n == 0)
    throw Error(ErrorCode::TableShape, "a group needs at least one element");
  if (n > kMaxGroupOrder)
    throw Error(ErrorCode::GroupTooLarge,
                "order " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxGroupOrder));
  if (table.size() != n)
    throw Error(ErrorCode::TableShape,
                "table has " + std::to_string(table.size()) + " rows, expected " +
                    std::to_string(n));
  for (std::size_t r = 0; r < n; ++r)
    if (table[r].size() != n)
      throw Error(ErrorCode::TableShape,
                  "table row " + std::to_string(r) + " has " +
                      std::to_string(table[r].size()) + " entries, expected " +
                      std::to_string(n),
                  {r});

  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s)
      if (labels[r] == labels[s])
        throw Error(ErrorCode::DuplicateLabel,
                    "label '" + labels[r] + "' used by elements #" +
                        std::to_string(r) + " and #" + std::to_string(s),
                    {r, s});

  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (table[r][c] >= n)
        throw Error(ErrorCode::ClosureViolation,
                    "product " + describe(labels, r) + " * " + describe(labels, c) +
                        " is index " + std::to_string(table[r][c]) +
                        ", outside [0, " + std::to_string(n) + ")",
                    {r, c});

  auto acts_as_identity = [&](Element e) {
    for (Element g = 0; g < n; ++g)
      if (table[e][g] != g || table[g][e] != g)
        return false;
    return true;
  };
  if (identity >= n || !acts_as_identity(identity)) {
    for (Element e = 0; e < n; ++e)
      if (acts_as_identity(e)) {
        std::string claimed = identity < n ? describe(labels, identity)
                                           : "#" + std::to_string(identity);
        throw Error(ErrorCode::WrongIdentity,
                    "declared identity " + claimed + " is not neutral; " +
                        describe(labels, e) + " is",
                    {identity, e});
      }
    throw Error(ErrorCode::NoIdentity, "no element of the table is neutral",
                {identity});
  }

  std::vector<Element> inverses(n);
  for (Element g = 0; g < n; ++g) {
    bool found = false;
    for (Element h = 0; h < n && !found; ++h)
      if (table[g][h] == identity && table[h][g] == identity) {
        inverses[g] = h;
        found = true;
      }
    if (!found)
      throw Error(ErrorCode::MissingInverse,
                  "element " + describe(labels, g) + " has no two-sided inverse",
                  {g});
  }

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(ErrorCode::NonAssociative,
                      "(x*y)*z != x*(y*z) for (x, y, z) = (" + labels[a] + ", " +
                          labels[b] + ", " + labels[c] + ")",
                      {a, b, c});

  auto data = std::make_shared<FiniteGroup::Data>();
  data->name = std::move(name);
  data->labels = std::move(labels);
  data->table.reserve(n * n);
  for (const auto &row : table)
    data->table.insert(data->table.end(), row.begin(), row.end());
  data->inverses = std::move(inverses);
  data->identity = identity;
  return FiniteGroup(std::move(data));
}

FiniteGroup standard_group(StandardKind kind) {
  using Family = StandardKind::Family;
  switch (kind.family) {
  case Family::sign:
    return from_product("sign", {"1", "-1"},
                        [](Element a, Element b) { return a ^ b; });
  case Family::klein:
    // Bitmask encoding: i = 01, j = 10, k = 11.
    return from_product("klein", {"1", "i", "j", "k"},
                        [](Element a, Element b) { return a ^ b; });
  case Family::q8:
    return make_q8();
  case Family::cyclic:
    return make_cyclic(kind.param);
  case Family::elementary_abelian_2:
    return make_elementary_abelian_2(kind.param);
  }
  throw Error(ErrorCode::UnknownKind, "unknown standard group family");
}

FiniteGroup catalog_group(std::string_view name) {
  if (name == "sign")
    return standard_group(StandardKind::sign());
  if (name == "klein")
    return standard_group(StandardKind::klein());
  if (name == "q8")
    return standard_group(StandardKind::q8());
  if (name == "trivial")
    return standard_group(StandardKind::cyclic(1));
  if (name.starts_with("ea2-")) {
    if (auto k = parse_int(name.substr(4)); k && *k >= 0 && *k <= 6)
      return standard_group(StandardKind::elementary_abelian_2(*k));
  } else if (name.starts_with("c")) {
    if (auto n = parse_int(name.substr(1)); n && *n >= 1 && *n <= 64)
      return standard_group(StandardKind::cyclic(*n));
  }
  throw Error(ErrorCode::UnknownKind, "unknown group '" + std::string(name) + "'");
}

std::vector<FiniteGroup> catalog() {
  std::vector<FiniteGroup> groups{catalog_group("trivial"), catalog_group("sign"),
                                  catalog_group("klein"), catalog_group("q8")};
  for (int n = 1; n <= 16; ++n)
    groups.push_back(standard_group(StandardKind::cyclic(n)));
  for (int k = 0; k <= 4; ++k)
    groups.push_back(standard_group(StandardKind::elementary_abelian_2(k)));
  return groups;
}

Element inverse_of(const FiniteGroup &group, Element g) {
  if (!group.contains(g))
    throw Error(ErrorCode::IndexOutOfRange,
                "element index " + std::to_string(g) + " not in group of order " +
                    std::to_string(group.order()),
                {g});
  return group.inv(g);
}

std::size_t element_order(const FiniteGroup &group, Element g) {
  if (!group.contains(g))
    throw Error(ErrorCode::IndexOutOfRange,
                "element index " + std::to_string(g) + " not in group of order " +
                    std::to_string(group.order()),
                {g});
  std::size_t m = 1;
  for (Element acc = g; acc != group.identity(); acc = group.mul(acc, g))
    ++m;
  return m;
}

Element power(const FiniteGroup &group, Element g, std::size_t exponent) {
  Element acc = group.identity();
  for (std::size_t i = 0; i < exponent; ++i)
    acc = group.mul(acc, g);
  return acc;
}

StructureFlags structure_flags(const FiniteGroup &group) {
  StructureFlags flags{true, true, group.order()};
  for (Element a = 0; a < group.order(); ++a) {
    if (group.mul(a, a) != group.identity())
      flags.exponent_two = false;
    for (Element b = a + 1; b < group.order(); ++b)
      if (group.mul(a, b) != group.mul(b, a))
        flags.commutative = false;
  }
  return flags;
}

ElementSubset::ElementSubset(FiniteGroup group, std::vector<Element> members)
    : group_(std::move(group)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= group_.order())
    throw Error(ErrorCode::IndexOutOfRange,
                "subset member " + std::to_string(members_.back()) +
                    " not in group of order " + std::to_string(group_.order()),
                {members_.back()});
}

bool ElementSubset::contains(Element g) const {
  return std::binary_search(members_.begin(), members_.end(), g);
}

ElementSubset generated_subgroup(const FiniteGroup &group,
                                 std::span<const Element> generators) {
  for (Element g : generators)
    inverse_of(group, g); // range check
  std::vector<bool> seen(group.order(), false);
  std::vector<Element> members{group.identity()};
  seen[group.identity()] = true;
  // In a finite group closure under right multiplication by the generators
  // already yields the subgroup.
  for (std::size_t next = 0; next < members.size(); ++next)
    for (Element g : generators) {
      Element product = group.mul(members[next], g);
      if (!seen[product]) {
        seen[product] = true;
        members.push_back(product);
      }
    }
  return ElementSubset(group, std::move(members));
}

ElementSubset center(const FiniteGroup &group) {
  std::vector<Element> members;
  for (Element z = 0; z < group.order(); ++z) {
    bool central = true;
    for (Element g = 0; g < group.order() && central; ++g)
      central = group.mul(z, g) == group.mul(g, z);
    if (central)
      members.push_back(z);
  }
  return ElementSubset(group, std::move(members));
}

FractionTransform FractionTransform::compose(FractionTransform outer,
                                             FractionTransform inner) {
  // Negation and reciprocal commute: -(1/x) = 1/(-x).
  return {outer.negate != inner.negate, outer.reciprocal != inner.reciprocal};
}

double FractionTransform::apply(double x) const {
  double result = reciprocal ? 1.0 / x : x;
  return negate ? -result : result;
}

std::string FractionTransform::to_string() const {
  std::string body = reciprocal ? "1/x" : "x";
  return negate ? "-" + body : body;
}

FractionTransformationGroup fraction_transformation_group() {
  const std::vector<FractionTransform> action{
      {false, false}, {true, false}, {false, true}, {true, true}};
  std::vector<std::string> labels;
  for (const auto &t : action)
    labels.push_back(t.to_string());

  auto index_of = [&](FractionTransform t) {
    return static_cast<Element>(std::find(action.begin(), action.end(), t) -
                                action.begin());
  };
  FiniteGroup group = from_product(
      "fractions", std::move(labels), [&](Element outer, Element inner) {
        return index_of(FractionTransform::compose(action[outer], action[inner]));
      });
  return {std::move(group), action};
}

} // namespace cf
