#include "cf/morphism.hpp"

#include "cf/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace cf {

namespace {

constexpr Element kUnset = static_cast<Element>(-1);
constexpr std::size_t kMaxScanOrder = 10;

void require_symmetry_size(const FiniteGroup &group) {
  if (group.order() > kMaxSymmetryOrder)
    throw Error(ErrorCode::GroupTooLarge,
                "symmetry enumeration supports order <= " +
                    std::to_string(kMaxSymmetryOrder) + ", group '" +
                    group.name() + "' has order " + std::to_string(group.order()));
}

bool is_permutation_of_range(const std::vector<Element> &images, std::size_t n) {
  if (images.size() != n)
    return false;
  std::vector<bool> hit(n, false);
  for (Element h : images) {
    if (h >= n || hit[h])
      return false;
    hit[h] = true;
  }
  return true;
}

// Greedy: add the smallest element not yet generated.
std::vector<Element> generating_set(const FiniteGroup &group) {
  std::vector<Element> gens;
  ElementSubset generated = generated_subgroup(group, gens);
  for (Element g = 0; g < group.order(); ++g)
    if (!generated.contains(g)) {
      gens.push_back(g);
      generated = generated_subgroup(group, gens);
    }
  return gens;
}

// Enumerates injective homomorphisms source -> target that are onto (equal
// orders), by choosing generator images one at a time and closing the
// partial map after each choice. `visit` returns false to stop.
void search_isomorphisms(const FiniteGroup &source, const FiniteGroup &target,
                         const std::function<bool(std::vector<Element>)> &visit) {
  if (source.order() != target.order())
    return;
  const std::size_t n = source.order();
  const std::vector<Element> gens = generating_set(source);

  std::vector<std::size_t> target_orders(n);
  for (Element h = 0; h < n; ++h)
    target_orders[h] = element_order(target, h);

  struct State {
    std::vector<Element> image;
    std::vector<bool> used;
  };

  // Closes `state` under right multiplication by gens[0..assigned).
  auto close = [&](State &state, std::size_t assigned) {
    std::vector<Element> known;
    for (Element g = 0; g < n; ++g)
      if (state.image[g] != kUnset)
        known.push_back(g);
    for (std::size_t next = 0; next < known.size(); ++next) {
      const Element u = known[next];
      for (std::size_t j = 0; j < assigned; ++j) {
        const Element v = source.mul(u, gens[j]);
        const Element expected = target.mul(state.image[u], state.image[gens[j]]);
        if (state.image[v] == kUnset) {
          if (state.used[expected])
            return false;
          state.image[v] = expected;
          state.used[expected] = true;
          known.push_back(v);
        } else if (state.image[v] != expected) {
          return false;
        }
      }
    }
    return true;
  };

  bool keep_going = true;
  std::function<void(const State &, std::size_t)> extend =
      [&](const State &state, std::size_t depth) {
        if (!keep_going)
          return;
        if (depth == gens.size()) {
          keep_going = visit(state.image);
          return;
        }
        const Element g = gens[depth];
        if (state.image[g] != kUnset) {
          // Already forced by earlier generators (cannot happen with the
          // greedy generating set, kept for safety of the closure logic).
          extend(state, depth + 1);
          return;
        }
        const std::size_t wanted = element_order(source, g);
        for (Element h = 0; h < n && keep_going; ++h) {
          if (state.used[h] || target_orders[h] != wanted)
            continue;
          State child = state;
          child.image[g] = h;
          child.used[h] = true;
          if (close(child, depth + 1))
            extend(child, depth + 1);
        }
      };

  State root{std::vector<Element>(n, kUnset), std::vector<bool>(n, false)};
  root.image[source.identity()] = target.identity();
  root.used[target.identity()] = true;
  extend(root, 0);
}

struct LawCheck {
  bool hom = true;
  bool anti = true;
};

LawCheck check_laws(const FiniteGroup &source, const FiniteGroup &target,
                    const std::vector<Element> &images, bool stop_early) {
  LawCheck laws;
  const std::size_t n = source.order();
  for (Element g = 0; g < n; ++g)
    for (Element h = 0; h < n; ++h) {
      const Element lhs = images[source.mul(g, h)];
      if (laws.hom && lhs != target.mul(images[g], images[h]))
        laws.hom = false;
      if (laws.anti && lhs != target.mul(images[h], images[g]))
        laws.anti = false;
      if (stop_early && !laws.hom && !laws.anti)
        return laws;
    }
  return laws;
}

MapKind kind_from(LawCheck laws) {
  if (laws.hom && laws.anti)
    return MapKind::both;
  if (laws.hom)
    return MapKind::homomorphism;
  if (laws.anti)
    return MapKind::anti_homomorphism;
  return MapKind::neither;
}

void sort_maps(std::vector<GroupMap> &maps) {
  std::sort(maps.begin(), maps.end(), image_order_less);
}

std::string map_label(const GroupMap &map) {
  std::string label(to_string(map.kind()));
  label += ':';
  for (Element g = 0; g < map.images().size(); ++g) {
    if (g > 0)
      label += ',';
    label += map.target().label(map(g));
  }
  return label;
}

} // namespace

std::string_view to_string(MapKind kind) {
  switch (kind) {
  case MapKind::homomorphism: return "hom";
  case MapKind::anti_homomorphism: return "anti";
  case MapKind::both: return "both";
  case MapKind::neither: return "neither";
  }
  return "neither";
}

std::optional<MapKind> parse_map_kind(std::string_view text) {
  for (MapKind kind : {MapKind::homomorphism, MapKind::anti_homomorphism,
                       MapKind::both, MapKind::neither})
    if (to_string(kind) == text)
      return kind;
  return std::nullopt;
}

bool operator==(const GroupMap &lhs, const GroupMap &rhs) {
  return lhs.images_ == rhs.images_ && lhs.source_.same_structure(rhs.source_) &&
         lhs.target_.same_structure(rhs.target_);
}

bool image_order_less(const GroupMap &lhs, const GroupMap &rhs) {
  return lhs.images() < rhs.images();
}

GroupMap classify_map(const FiniteGroup &source, const FiniteGroup &target,
                      std::vector<Element> images) {
  if (images.size() != source.order())
    throw Error(ErrorCode::LengthMismatch,
                "map has " + std::to_string(images.size()) +
                    " images, source '" + source.name() + "' has order " +
                    std::to_string(source.order()));
  for (Element g = 0; g < images.size(); ++g)
    if (!target.contains(images[g]))
      throw Error(ErrorCode::IndexOutOfRange,
                  "image of element #" + std::to_string(g) + " is " +
                      std::to_string(images[g]) + ", target '" + target.name() +
                      "' has order " + std::to_string(target.order()),
                  {g, images[g]});

  const MapKind kind = kind_from(check_laws(source, target, images, false));
  const bool bijective = is_permutation_of_range(images, target.order());
  return GroupMap(source, target, std::move(images), kind, bijective);
}

GroupMap map_from_labels(const FiniteGroup &source, const FiniteGroup &target,
                         const std::vector<std::string> &image_labels) {
  if (image_labels.size() != source.order())
    throw Error(ErrorCode::LengthMismatch,
                "expected " + std::to_string(source.order()) + " images, got " +
                    std::to_string(image_labels.size()));
  std::vector<Element> images;
  images.reserve(image_labels.size());
  for (const auto &label : image_labels)
    images.push_back(target.element(label));
  return classify_map(source, target, std::move(images));
}

GroupMap identity_map(const FiniteGroup &group) {
  std::vector<Element> images(group.order());
  std::iota(images.begin(), images.end(), Element{0});
  return classify_map(group, group, std::move(images));
}

std::optional<MapKind> composed_kind(MapKind outer, MapKind inner) {
  if (outer == MapKind::neither || inner == MapKind::neither)
    return std::nullopt;
  if (outer == MapKind::both)
    return inner;
  if (inner == MapKind::both)
    return outer;
  return outer == inner ? MapKind::homomorphism : MapKind::anti_homomorphism;
}

GroupMap compose_maps(const GroupMap &outer, const GroupMap &inner) {
  if (!inner.target().same_structure(outer.source()))
    throw Error(ErrorCode::SourceTargetMismatch,
                "cannot compose: inner map lands in '" + inner.target().name() +
                    "' but outer map starts from '" + outer.source().name() + "'");
  std::vector<Element> images(inner.images().size());
  for (Element g = 0; g < images.size(); ++g)
    images[g] = outer(inner(g));
  GroupMap result = classify_map(inner.source(), outer.target(), std::move(images));

  // The kind algebra is a lower bound: the composite may satisfy more laws
  // (e.g. land in a commutative image), never fewer.
  if (auto expected = composed_kind(outer.kind(), inner.kind())) {
    const bool ok = *expected == MapKind::homomorphism
                        ? result.is_homomorphism()
                    : *expected == MapKind::anti_homomorphism
                        ? result.is_anti_homomorphism()
                        : result.kind() == MapKind::both;
    if (!ok)
      throw Error(ErrorCode::Internal, "composition violated the kind algebra");
  }
  return result;
}

GroupMap invert_map(const GroupMap &map) {
  if (!map.bijective())
    throw Error(ErrorCode::NotBijective,
                "map from '" + map.source().name() + "' to '" +
                    map.target().name() + "' is not bijective");
  std::vector<Element> images(map.images().size());
  for (Element g = 0; g < images.size(); ++g)
    images[map(g)] = g;
  return classify_map(map.target(), map.source(), std::move(images));
}

GroupMap inversion_map(const FiniteGroup &group) {
  std::vector<Element> images(group.order());
  for (Element g = 0; g < images.size(); ++g)
    images[g] = group.inv(g);
  return classify_map(group, group, std::move(images));
}

GroupMap conjugation_map(const FiniteGroup &group, Element h) {
  const Element h_inv = inverse_of(group, h);
  std::vector<Element> images(group.order());
  for (Element g = 0; g < images.size(); ++g)
    images[g] = group.mul(group.mul(h, g), h_inv);
  return classify_map(group, group, std::move(images));
}

std::size_t map_order(const GroupMap &map) {
  if (!map.is_endomap())
    throw Error(ErrorCode::SourceTargetMismatch,
                "map order needs a self-map, got '" + map.source().name() +
                    "' -> '" + map.target().name() + "'");
  if (!map.bijective())
    throw Error(ErrorCode::NotBijective, "map order needs a bijection");
  const GroupMap id = identity_map(map.source());
  std::size_t m = 1;
  for (GroupMap power = map; !(power == id); power = compose_maps(map, power))
    ++m;
  return m;
}

std::vector<GroupMap> enumerate_automorphisms(const FiniteGroup &group,
                                              SearchStrategy strategy) {
  require_symmetry_size(group);
  if (strategy == SearchStrategy::automatic)
    strategy = group.order() <= 8 ? SearchStrategy::scan : SearchStrategy::backtrack;

  std::vector<GroupMap> maps;
  if (strategy == SearchStrategy::scan) {
    maps = scan_identity_fixing_bijections(group).automorphisms;
  } else {
    search_isomorphisms(group, group, [&](std::vector<Element> images) {
      GroupMap map = classify_map(group, group, std::move(images));
      if (!map.is_automorphism())
        throw Error(ErrorCode::Internal, "backtracking produced a non-automorphism");
      maps.push_back(std::move(map));
      return true;
    });
  }
  sort_maps(maps);
  return maps;
}

std::vector<GroupMap> enumerate_symmetries(const FiniteGroup &group,
                                           bool include_anti) {
  std::vector<GroupMap> maps = enumerate_automorphisms(group);
  if (!include_anti || structure_flags(group).commutative)
    return maps;

  const GroupMap inversion = inversion_map(group);
  const std::size_t automorphism_count = maps.size();
  for (std::size_t i = 0; i < automorphism_count; ++i)
    maps.push_back(compose_maps(maps[i], inversion));
  sort_maps(maps);
  return maps;
}

SymmetryCensus scan_identity_fixing_bijections(const FiniteGroup &group) {
  if (group.order() > kMaxScanOrder)
    throw Error(ErrorCode::GroupTooLarge,
                "exhaustive bijection scan supports order <= " +
                    std::to_string(kMaxScanOrder));
  SymmetryCensus census;
  const std::size_t n = group.order();
  const Element e = group.identity();

  std::vector<Element> others;
  for (Element g = 0; g < n; ++g)
    if (g != e)
      others.push_back(g);

  std::vector<Element> images(n);
  do {
    ++census.candidates;
    images[e] = e;
    for (std::size_t pos = 0, g = 0; g < n; ++g)
      if (g != e)
        images[g] = others[pos++];
    const LawCheck laws = check_laws(group, group, images, true);
    if (laws.hom || laws.anti) {
      GroupMap map = classify_map(group, group, images);
      if (laws.hom)
        census.automorphisms.push_back(map);
      if (laws.anti)
        census.anti_automorphisms.push_back(map);
    }
  } while (std::next_permutation(others.begin(), others.end()));

  sort_maps(census.automorphisms);
  sort_maps(census.anti_automorphisms);
  return census;
}

std::optional<Element> SymmetryGroup::index_of(const GroupMap &map) const {
  auto it = std::find(maps_.begin(), maps_.end(), map);
  if (it == maps_.end())
    return std::nullopt;
  return static_cast<Element>(it - maps_.begin());
}

ElementSubset SymmetryGroup::automorphism_subgroup() const {
  std::vector<Element> members;
  for (Element r = 0; r < maps_.size(); ++r)
    if (maps_[r].is_homomorphism())
      members.push_back(r);
  return ElementSubset(as_group_, std::move(members));
}

SymmetryGroup symmetry_group(const FiniteGroup &group) {
  std::vector<GroupMap> maps = enumerate_symmetries(group, true);

  std::map<std::vector<Element>, Element> position;
  for (Element r = 0; r < maps.size(); ++r)
    position.emplace(maps[r].images(), r);

  const std::size_t m = maps.size();
  std::vector<std::vector<Element>> table(m, std::vector<Element>(m));
  for (Element r = 0; r < m; ++r)
    for (Element c = 0; c < m; ++c) {
      auto it = position.find(compose_maps(maps[r], maps[c]).images());
      if (it == position.end())
        throw Error(ErrorCode::Internal, "symmetries not closed under composition");
      table[r][c] = it->second;
    }

  std::vector<std::string> labels;
  for (const auto &map : maps)
    labels.push_back(map_label(map));
  const Element identity = position.at(identity_map(group).images());

  FiniteGroup as_group =
      build_group("sym(" + group.name() + ")", std::move(labels), table, identity);
  return SymmetryGroup(group, std::move(maps), std::move(as_group));
}

std::vector<GroupMap> inner_automorphisms(const FiniteGroup &group) {
  std::vector<GroupMap> maps;
  for (Element h = 0; h < group.order(); ++h) {
    GroupMap conj = conjugation_map(group, h);
    if (std::find(maps.begin(), maps.end(), conj) == maps.end())
      maps.push_back(std::move(conj));
  }
  return maps;
}

bool is_outer(const GroupMap &map) {
  if (!map.is_automorphism())
    throw Error(ErrorCode::NotAutomorphism,
                "map of kind " + std::string(to_string(map.kind())) +
                    (map.bijective() ? "" : " (not bijective)") +
                    " is not an automorphism");
  const auto inner = inner_automorphisms(map.source());
  return std::find(inner.begin(), inner.end(), map) == inner.end();
}

std::optional<GroupMap> find_isomorphism(const FiniteGroup &source,
                                         const FiniteGroup &target) {
  std::optional<GroupMap> found;
  search_isomorphisms(source, target, [&](std::vector<Element> images) {
    found = classify_map(source, target, std::move(images));
    return false;
  });
  return found;
}

} // namespace cf
