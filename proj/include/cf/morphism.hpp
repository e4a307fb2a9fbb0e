#pragma once

#include "cf/group.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace cf {

enum class MapKind { homomorphism, anti_homomorphism, both, neither };

/// "hom", "anti", "both", "neither".
std::string_view to_string(MapKind kind);
std::optional<MapKind> parse_map_kind(std::string_view text);

/// A map between two finite groups together with its classification.
/// Only classify_map (and operations built on it) produce GroupMaps, so
/// kind() and bijective() always describe images() exactly.
class GroupMap {
public:
  const FiniteGroup &source() const { return source_; }
  const FiniteGroup &target() const { return target_; }
  const std::vector<Element> &images() const { return images_; }
  MapKind kind() const { return kind_; }
  bool bijective() const { return bijective_; }

  Element operator()(Element g) const { return images_[g]; }

  bool is_homomorphism() const {
    return kind_ == MapKind::homomorphism || kind_ == MapKind::both;
  }
  bool is_anti_homomorphism() const {
    return kind_ == MapKind::anti_homomorphism || kind_ == MapKind::both;
  }
  bool is_endomap() const { return source_.same_structure(target_); }
  bool is_automorphism() const {
    return bijective_ && is_endomap() && is_homomorphism();
  }
  bool is_anti_automorphism() const {
    return bijective_ && is_endomap() && is_anti_homomorphism();
  }

  /// Maps are equal when they have the same images between structurally
  /// equal groups.
  friend bool operator==(const GroupMap &lhs, const GroupMap &rhs);

private:
  GroupMap(FiniteGroup source, FiniteGroup target, std::vector<Element> images,
           MapKind kind, bool bijective)
      : source_(std::move(source)), target_(std::move(target)),
        images_(std::move(images)), kind_(kind), bijective_(bijective) {}

  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Element> images_;
  MapKind kind_;
  bool bijective_;

  friend GroupMap classify_map(const FiniteGroup &, const FiniteGroup &,
                               std::vector<Element>);
};

/// Lexicographic by image sequence.
bool image_order_less(const GroupMap &lhs, const GroupMap &rhs);

/// Classifies a map by checking both multiplication laws on every pair.
/// Throws LengthMismatch, IndexOutOfRange.
GroupMap classify_map(const FiniteGroup &source, const FiniteGroup &target,
                      std::vector<Element> images);

/// Builds a map from (source label -> target label) pairs covering every
/// source element. Throws UnknownLabel, LengthMismatch.
GroupMap map_from_labels(const FiniteGroup &source, const FiniteGroup &target,
                         const std::vector<std::string> &image_labels);

GroupMap identity_map(const FiniteGroup &group);

/// (outer o inner)(g) = outer(inner(g)). Throws SourceTargetMismatch.
GroupMap compose_maps(const GroupMap &outer, const GroupMap &inner);

/// The kind that composition must produce, or nullopt when either input is
/// of kind neither. A "both" input behaves as either law.
std::optional<MapKind> composed_kind(MapKind outer, MapKind inner);

/// Throws NotBijective.
GroupMap invert_map(const GroupMap &map);

/// g -> g^-1.
GroupMap inversion_map(const FiniteGroup &group);

/// g -> h g h^-1. Throws IndexOutOfRange.
GroupMap conjugation_map(const FiniteGroup &group, Element h);

/// Least m >= 1 with map^m = id. Throws NotBijective, SourceTargetMismatch.
std::size_t map_order(const GroupMap &map);

inline constexpr std::size_t kMaxSymmetryOrder = 16;

enum class SearchStrategy {
  automatic, ///< scan for order <= 8, backtracking above
  scan,      ///< every identity-fixing bijection
  backtrack, ///< generator images with incremental consistency pruning
};

/// All automorphisms of `group`, sorted by image sequence.
/// Throws GroupTooLarge when order exceeds kMaxSymmetryOrder.
std::vector<GroupMap> enumerate_automorphisms(
    const FiniteGroup &group, SearchStrategy strategy = SearchStrategy::automatic);

/// Automorphisms, plus anti-automorphisms when include_anti (obtained as
/// a o inversion). Sorted by image sequence; maps of kind both appear once.
/// Throws GroupTooLarge.
std::vector<GroupMap> enumerate_symmetries(const FiniteGroup &group,
                                           bool include_anti);

/// Result of classifying every identity-fixing bijection independently
/// against both laws.
struct SymmetryCensus {
  std::size_t candidates = 0;
  std::vector<GroupMap> automorphisms;
  std::vector<GroupMap> anti_automorphisms;
};

/// Exhaustive; (order - 1)! candidates. Throws GroupTooLarge above order 10.
SymmetryCensus scan_identity_fixing_bijections(const FiniteGroup &group);

/// The automorphisms and anti-automorphisms of a group under composition.
class SymmetryGroup {
public:
  const FiniteGroup &base() const { return base_; }
  const std::vector<GroupMap> &maps() const { return maps_; }
  /// Element r labels maps()[r]; entry (r, c) is maps[r] o maps[c].
  const FiniteGroup &as_group() const { return as_group_; }

  std::optional<Element> index_of(const GroupMap &map) const;
  /// The homomorphisms among maps(), as a subset of as_group().
  ElementSubset automorphism_subgroup() const;

private:
  SymmetryGroup(FiniteGroup base, std::vector<GroupMap> maps,
                FiniteGroup as_group)
      : base_(std::move(base)), maps_(std::move(maps)),
        as_group_(std::move(as_group)) {}

  FiniteGroup base_;
  std::vector<GroupMap> maps_;
  FiniteGroup as_group_;

  friend SymmetryGroup symmetry_group(const FiniteGroup &group);
};

/// Throws GroupTooLarge.
SymmetryGroup symmetry_group(const FiniteGroup &group);

/// Conjugations by each element, deduplicated, in order of first occurrence.
std::vector<GroupMap> inner_automorphisms(const FiniteGroup &group);

/// Throws NotAutomorphism.
bool is_outer(const GroupMap &map);

/// Some isomorphism source -> target, or nullopt. Exhaustive backtracking.
std::optional<GroupMap> find_isomorphism(const FiniteGroup &source,
                                         const FiniteGroup &target);

} // namespace cf
