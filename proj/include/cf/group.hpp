#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cf {

/// Dense element index into a FiniteGroup, 0 <= g < order().
using Element = std::size_t;

inline constexpr std::size_t kMaxGroupOrder = 64;

/// A finite group stored as a validated multiplication table.
///
/// Instances are immutable and only obtainable through build_group (and the
/// constructors layered on it), so every FiniteGroup satisfies the group
/// axioms. Copies share the underlying table.
class FiniteGroup {
public:
  const std::string &name() const { return data_->name; }
  std::size_t order() const { return data_->labels.size(); }
  Element identity() const { return data_->identity; }

  const std::string &label(Element g) const;
  const std::vector<std::string> &labels() const { return data_->labels; }

  std::optional<Element> find(std::string_view label) const;
  /// Throws UnknownLabel.
  Element element(std::string_view label) const;

  Element mul(Element a, Element b) const {
    return data_->table[a * order() + b];
  }
  Element inv(Element g) const { return data_->inverses[g]; }

  bool contains(Element g) const { return g < order(); }

  /// Same table, same labels, same identity. The name is ignored.
  bool same_structure(const FiniteGroup &other) const;

  friend bool operator==(const FiniteGroup &lhs, const FiniteGroup &rhs);

private:
  struct Data {
    std::string name;
    std::vector<std::string> labels;
    std::vector<Element> table; // row-major, order() * order()
    std::vector<Element> inverses;
    Element identity = 0;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;

  friend FiniteGroup build_group(std::string name,
                                 std::vector<std::string> labels,
                                 const std::vector<std::vector<Element>> &table,
                                 Element identity);
};

/// Validates and constructs a group. Checks, in order: table shape, label
/// uniqueness, closure, identity, inverses, associativity (direct triple
/// loop). Failures throw cf::Error whose witness names the offending indices.
FiniteGroup build_group(std::string name, std::vector<std::string> labels,
                        const std::vector<std::vector<Element>> &table,
                        Element identity);

struct StandardKind {
  enum class Family { sign, klein, q8, cyclic, elementary_abelian_2 };

  Family family;
  int param = 0;

  static StandardKind sign() { return {Family::sign}; }
  static StandardKind klein() { return {Family::klein}; }
  static StandardKind q8() { return {Family::q8}; }
  static StandardKind cyclic(int n) { return {Family::cyclic, n}; }
  static StandardKind elementary_abelian_2(int k) {
    return {Family::elementary_abelian_2, k};
  }
};

/// Canonical constructions, identity always at index 0.
///   sign:  1, -1
///   klein: 1, i, j, k
///   q8:    1, -1, i, -i, j, -j, k, -k
///   cyclic(n): 1, g, g^2, ..., g^(n-1)
///   elementary_abelian_2(k): bitmask-indexed; labels spell the set
///     generators among a, b, c, ... ("1", "a", "b", "ab", ...)
FiniteGroup standard_group(StandardKind kind);

/// Resolves catalog names: sign, klein, q8, trivial, c<n>, ea2-<k>.
/// Throws UnknownKind.
FiniteGroup catalog_group(std::string_view name);

/// Every group in the built-in catalog (trivial, sign, klein, q8, c1..c16,
/// ea2-0..ea2-4), in that order.
std::vector<FiniteGroup> catalog();

/// Throws IndexOutOfRange.
Element inverse_of(const FiniteGroup &group, Element g);

/// Least m >= 1 with g^m = identity. Throws IndexOutOfRange.
std::size_t element_order(const FiniteGroup &group, Element g);

Element power(const FiniteGroup &group, Element g, std::size_t exponent);

struct StructureFlags {
  bool commutative = false;
  bool exponent_two = false;
  std::size_t order = 0;
};

StructureFlags structure_flags(const FiniteGroup &group);

/// A subset of a group's elements, kept sorted and unique.
class ElementSubset {
public:
  ElementSubset(FiniteGroup group, std::vector<Element> members);

  const FiniteGroup &group() const { return group_; }
  const std::vector<Element> &members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Element g) const;

private:
  FiniteGroup group_;
  std::vector<Element> members_;
};

ElementSubset generated_subgroup(const FiniteGroup &group,
                                 std::span<const Element> generators);

ElementSubset center(const FiniteGroup &group);

/// One of the formal substitutions x -> x, -x, 1/x, -1/x.
struct FractionTransform {
  bool negate = false;
  bool reciprocal = false;

  /// (outer after inner)(x) = outer(inner(x)).
  static FractionTransform compose(FractionTransform outer,
                                   FractionTransform inner);

  double apply(double x) const;
  std::string to_string() const;

  friend bool operator==(FractionTransform, FractionTransform) = default;
};

struct FractionTransformationGroup {
  FiniteGroup group;
  /// action[g] is the transformation realized by element g.
  std::vector<FractionTransform> action;
};

/// The four fraction transformations under composition, labelled
/// "x", "-x", "1/x", "-1/x" in that order.
FractionTransformationGroup fraction_transformation_group();

} // namespace cf
