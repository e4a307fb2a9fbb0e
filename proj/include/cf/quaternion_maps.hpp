#pragma once

#include "cf/morphism.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cf {

/// Self-map of the standard q8 group fixed by the images of i, j and k and
/// extended by f(1) = 1, f(-1) = -1, f(-g) = -f(g). Labels use the q8
/// spelling ("i", "-k", ...).
GroupMap q8_signed_extension(std::string_view image_i, std::string_view image_j,
                             std::string_view image_k);

/// i -> k, j -> -i, k -> j.
GroupMap q8_lambda();
/// i -> j, j -> -k, k -> i.
GroupMap q8_sigma();
/// i -> j -> k -> i.
GroupMap q8_tau();

/// Resolves "lambda", "sigma", "tau" (q8 only), "inv" and "id" (any group).
/// Throws UnknownKind.
GroupMap named_map(const FiniteGroup &group, std::string_view name);

std::vector<std::string> named_map_names();

} // namespace cf
