#pragma once

// Named Cartan matrices and orientation helpers.

#include <cctype>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "clustercox/cartan.hpp"
#include "clustercox/errors.hpp"
#include "clustercox/quiver.hpp"

namespace clustercox {

struct NamedCartan {
  std::string name;
  CartanMatrix cartan;
};

/// "A3", "B2", "E6", "F4", "G2", "rank2:a,b" (Cartan [[2,-a],[-b,2]]),
/// "affine-A1" (= rank2:2,2) and "affine-A2" (the triangle).
inline CartanMatrix builtin_cartan(const std::string& name) {
  if (name.rfind("rank2:", 0) == 0) {
    const std::string body = name.substr(6);
    const auto comma = body.find(',');
    detail::require(comma != std::string::npos, "rank2 builtin needs the form rank2:a,b");
    std::int64_t x = 0, y = 0;
    try {
      x = std::stoll(body.substr(0, comma));
      y = std::stoll(body.substr(comma + 1));
    } catch (const std::exception&) {
      throw StructuralError("rank2 builtin needs integer entries: " + name);
    }
    return CartanMatrix{{2, -x}, {-y, 2}};
  }
  if (name == "affine-A1") return CartanMatrix{{2, -2}, {-2, 2}};
  if (name == "affine-A2") return CartanMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
  detail::require(name.size() >= 2 && std::isalpha(static_cast<unsigned char>(name[0])),
                  "unknown builtin type '" + name + "'");
  std::size_t rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoul(name.substr(1), &used);
    detail::require(used == name.size() - 1, "unknown builtin type '" + name + "'");
  } catch (const std::logic_error&) {
    throw StructuralError("unknown builtin type '" + name + "'");
  }
  return cartan_of_type(static_cast<char>(std::toupper(static_cast<unsigned char>(name[0]))), rank);
}

/// Irreducible finite types of rank <= max_rank from the catalog.
inline std::vector<NamedCartan> irreducible_finite_types(std::size_t max_rank) {
  std::vector<NamedCartan> out;
  auto push = [&](char f, std::size_t r) {
    out.push_back({std::string(1, f) + std::to_string(r), cartan_of_type(f, r)});
  };
  for (std::size_t r = 1; r <= max_rank; ++r) {
    push('A', r);
    if (r >= 2) push('B', r);
    if (r >= 3) push('C', r);
    if (r >= 4) push('D', r);
    if (r == 2) push('G', 2);
    if (r == 4) push('F', 4);
    if (r >= 6 && r <= 8) push('E', r);
  }
  return out;
}

/// Block-diagonal sum.
inline CartanMatrix direct_sum(const CartanMatrix& x, const CartanMatrix& y) {
  SquareMatrix m(x.size() + y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) m(i, j) = x(i, j);
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) m(x.size() + i, x.size() + j) = y(i, j);
  return CartanMatrix(std::move(m));
}

/// Every finite type of rank <= max_rank, irreducible ones first, then the
/// reducible ones up to max_rank 3 (A1+A1, A1+A2, A1+B2, A1+G2, A1+A1+A1).
inline std::vector<NamedCartan> finite_types(std::size_t max_rank) {
  auto out = irreducible_finite_types(max_rank);
  const CartanMatrix a1 = cartan_of_type('A', 1);
  if (max_rank >= 2) out.push_back({"A1+A1", direct_sum(a1, a1)});
  if (max_rank >= 3) {
    out.push_back({"A1+A2", direct_sum(a1, cartan_of_type('A', 2))});
    out.push_back({"A1+B2", direct_sum(a1, cartan_of_type('B', 2))});
    out.push_back({"A1+G2", direct_sum(a1, cartan_of_type('G', 2))});
    out.push_back({"A1+A1+A1", direct_sum(a1, direct_sum(a1, a1))});
  }
  return out;
}

/// All orientations of the Coxeter graph without oriented cycles, in a fixed
/// order (edge (i, j), i < j, bit set = arrow j -> i).
inline std::vector<ValuedQuiver> acyclic_orientations(const CartanMatrix& a) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a(i, j) != 0) edges.emplace_back(i, j);
  detail::require(edges.size() < 20, "too many edges to list every orientation");
  std::vector<ValuedQuiver> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << edges.size()); ++mask) {
    std::vector<Arrow> arrows;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [i, j] = edges[e];
      if (mask >> e & 1) {
        arrows.emplace_back(j, i);
      } else {
        arrows.emplace_back(i, j);
      }
    }
    ValuedQuiver q(a, arrows);
    if (admissible_sink_sequence(q)) out.push_back(std::move(q));
  }
  return out;
}

}  // namespace clustercox
