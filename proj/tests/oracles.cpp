#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

Table table_of(const cf::FiniteGroup &group) {
  Table table(group.order(), std::vector<std::size_t>(group.order()));
  for (std::size_t r = 0; r < group.order(); ++r)
    for (std::size_t c = 0; c < group.order(); ++c)
      table[r][c] = group.mul(r, c);
  return table;
}

namespace {

using Quat = std::array<int, 4>;

Quat hamilton(const Quat &p, const Quat &q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

Quat quat_of(const std::string &label) {
  const bool negative = label.starts_with('-');
  const std::string unit = negative ? label.substr(1) : label;
  Quat q{};
  if (unit == "1") q[0] = 1;
  else if (unit == "i") q[1] = 1;
  else if (unit == "j") q[2] = 1;
  else if (unit == "k") q[3] = 1;
  else throw std::invalid_argument("not a quaternion unit: " + label);
  if (negative)
    for (int &c : q)
      c = -c;
  return q;
}

std::string label_of(const Quat &q) {
  static const char *units[] = {"1", "i", "j", "k"};
  for (int c = 0; c < 4; ++c)
    if (q[c] != 0)
      return (q[c] < 0 ? "-" : "") + std::string(units[c]);
  throw std::logic_error("zero quaternion");
}

bool is_hom(const Table &src, const Table &dst, const std::vector<std::size_t> &f,
            bool reversed) {
  for (std::size_t g = 0; g < src.size(); ++g)
    for (std::size_t h = 0; h < src.size(); ++h) {
      const std::size_t rhs = reversed ? dst[f[h]][f[g]] : dst[f[g]][f[h]];
      if (f[src[g][h]] != rhs)
        return false;
    }
  return true;
}

} // namespace

std::string quaternion_product(const std::string &lhs, const std::string &rhs) {
  return label_of(hamilton(quat_of(lhs), quat_of(rhs)));
}

bool satisfies_group_axioms(const Table &table, std::size_t identity) {
  const std::size_t n = table.size();
  for (const auto &row : table)
    if (row.size() != n || std::any_of(row.begin(), row.end(),
                                       [n](std::size_t v) { return v >= n; }))
      return false;
  for (std::size_t g = 0; g < n; ++g)
    if (table[identity][g] != g || table[g][identity] != g)
      return false;
  for (std::size_t g = 0; g < n; ++g) {
    bool has_inverse = false;
    for (std::size_t h = 0; h < n; ++h)
      has_inverse |= table[g][h] == identity && table[h][g] == identity;
    if (!has_inverse)
      return false;
  }
  return !associativity_witness(table).has_value();
}

std::optional<std::array<std::size_t, 3>> associativity_witness(const Table &table) {
  const std::size_t n = table.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          return std::array<std::size_t, 3>{a, b, c};
  return std::nullopt;
}

BruteForceCensus brute_force_symmetries(const Table &table, std::size_t identity) {
  BruteForceCensus census;
  std::vector<std::size_t> f(table.size());
  std::iota(f.begin(), f.end(), std::size_t{0});
  do {
    if (f[identity] != identity)
      continue;
    ++census.candidates;
    if (is_hom(table, table, f, false))
      census.homs.push_back(f);
    if (is_hom(table, table, f, true))
      census.antis.push_back(f);
  } while (std::next_permutation(f.begin(), f.end()));
  return census;
}

std::optional<std::vector<std::size_t>> brute_force_isomorphism(const Table &lhs,
                                                                const Table &rhs) {
  if (lhs.size() != rhs.size())
    return std::nullopt;
  std::vector<std::size_t> f(lhs.size());
  std::iota(f.begin(), f.end(), std::size_t{0});
  do {
    if (is_hom(lhs, rhs, f, false))
      return f;
  } while (std::next_permutation(f.begin(), f.end()));
  return std::nullopt;
}

std::string substitute(const StringRule &rule, const std::string &term) {
  const bool inverted = term.size() > 1;
  std::string image = rule.at(term[0]);
  if (!inverted)
    return image;
  // Inverting an inverted term cancels the mark.
  return image.size() > 1 ? image.substr(0, 1) : image + "^-1";
}

} // namespace oracle
