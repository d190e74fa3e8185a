#pragma once

// Valued quivers: a Cartan matrix together with an orientation of every edge
// of its Coxeter graph. The dictionary to exchange matrices is
//   b_ij = |a_ij| if i -> j,  a_ij if j -> i,  0 otherwise.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "clustercox/cartan.hpp"
#include "clustercox/errors.hpp"

namespace clustercox {

using Arrow = std::pair<std::size_t, std::size_t>;  // (from, to), 0-based

class ValuedQuiver {
 public:
  /// Every edge {i, j} with a_ij != 0 must appear exactly once in `arrows`.
  ValuedQuiver(CartanMatrix cartan, const std::vector<Arrow>& arrows)
      : cartan_(std::move(cartan)), dir_(cartan_.size()) {
    const std::size_t n = cartan_.size();
    for (auto [from, to] : arrows) {
      detail::require(from < n && to < n, "arrow endpoint out of range");
      detail::require(from != to, "loops are not allowed");
      detail::require(cartan_(from, to) != 0, "arrow is not an edge of the Coxeter graph");
      detail::require(dir_(from, to) == 0, "edge oriented more than once");
      dir_(from, to) = 1;
      dir_(to, from) = -1;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        detail::require(i == j || cartan_(i, j) == 0 || dir_(i, j) != 0,
                        "every edge of the Coxeter graph needs an orientation");
  }

  const CartanMatrix& cartan() const noexcept { return cartan_; }
  std::size_t size() const noexcept { return cartan_.size(); }

  bool has_arrow(std::size_t from, std::size_t to) const { return dir_(from, to) > 0; }

  /// Arrows sorted by (from, to).
  std::vector<Arrow> arrows() const {
    std::vector<Arrow> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (dir_(i, j) > 0) out.emplace_back(i, j);
    return out;
  }

  /// Edge valuation (|a_ij|, |a_ji|) of the edge i - j.
  std::pair<std::int64_t, std::int64_t> valuation(std::size_t i, std::size_t j) const {
    return {-cartan_(i, j), -cartan_(j, i)};
  }

  friend bool operator==(const ValuedQuiver& x, const ValuedQuiver& y) {
    return x.cartan_ == y.cartan_ && x.dir_ == y.dir_;
  }

 private:
  CartanMatrix cartan_;
  SquareMatrix dir_;  // +1 at (i, j) iff i -> j
};

/// Arrow i -> j whenever b_ij > 0.
inline ValuedQuiver quiver_of_pair(const ExchangeMatrix& b) {
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b(i, j) > 0) arrows.emplace_back(i, j);
  return ValuedQuiver(cartan_counterpart(b), arrows);
}

inline ExchangeMatrix matrix_of_orientation(const ValuedQuiver& q) {
  const CartanMatrix& a = q.cartan();
  SquareMatrix b(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (i == j || a(i, j) == 0) continue;
      b(i, j) = q.has_arrow(i, j) ? -a(i, j) : a(i, j);
    }
  return ExchangeMatrix(std::move(b), a.symmetrizer());
}

/// Vertices with no outgoing arrow.
inline std::vector<std::size_t> sinks(const ValuedQuiver& q) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < q.size(); ++k) {
    bool sink = true;
    for (std::size_t j = 0; j < q.size() && sink; ++j) sink = !q.has_arrow(k, j);
    if (sink) out.push_back(k);
  }
  return out;
}

/// Vertices with no incoming arrow.
inline std::vector<std::size_t> sources(const ValuedQuiver& q) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < q.size(); ++k) {
    bool source = true;
    for (std::size_t j = 0; j < q.size() && source; ++j) source = !q.has_arrow(j, k);
    if (source) out.push_back(k);
  }
  return out;
}

inline bool is_sink(const ValuedQuiver& q, std::size_t k) {
  for (std::size_t j = 0; j < q.size(); ++j)
    if (q.has_arrow(k, j)) return false;
  return true;
}

inline bool is_source(const ValuedQuiver& q, std::size_t k) {
  for (std::size_t j = 0; j < q.size(); ++j)
    if (q.has_arrow(j, k)) return false;
  return true;
}

/// s_k: reverses every arrow incident to k.
inline ValuedQuiver reflect_orientation(const ValuedQuiver& q, std::size_t k) {
  detail::require(k < q.size(), "vertex out of range");
  std::vector<Arrow> arrows;
  for (auto [from, to] : q.arrows()) {
    if (from == k || to == k) {
      arrows.emplace_back(to, from);
    } else {
      arrows.emplace_back(from, to);
    }
  }
  return ValuedQuiver(q.cartan(), arrows);
}

/// k_1, ..., k_n with k_t a sink of s_{k_{t-1}} ... s_{k_1} Q, always taking
/// the smallest available sink. nullopt iff Q has an oriented cycle.
inline std::optional<std::vector<std::size_t>> admissible_sink_sequence(const ValuedQuiver& q) {
  std::vector<std::size_t> seq;
  std::vector<bool> used(q.size(), false);
  ValuedQuiver cur = q;
  for (std::size_t step = 0; step < q.size(); ++step) {
    std::optional<std::size_t> pick;
    for (std::size_t k = 0; k < q.size() && !pick; ++k)
      if (!used[k] && is_sink(cur, k)) pick = k;
    if (!pick) return std::nullopt;
    used[*pick] = true;
    seq.push_back(*pick);
    cur = reflect_orientation(cur, *pick);
  }
  detail::ensure(cur == q, "reflecting along an admissible sequence must restore the quiver");
  return seq;
}

/// Whether some chain b_{i1 i2}, ..., b_{it i1} is entirely positive.
inline bool has_positive_cycle(const ExchangeMatrix& b) {
  const std::size_t n = b.size();
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (state[s]) continue;
    stack.emplace_back(s, 0);
    state[s] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == n) {
        state[v] = 2;
        stack.pop_back();
        continue;
      }
      const std::size_t w = next++;
      if (b(v, w) <= 0) continue;
      if (state[w] == 1) return true;
      if (state[w] == 0) {
        state[w] = 1;
        stack.emplace_back(w, 0);
      }
    }
  }
  return false;
}

/// Every edge oriented from the larger index to the smaller one, so the
/// highest index of each path is a source (A3 gives 3 -> 2 -> 1).
inline ValuedQuiver default_orientation(const CartanMatrix& a) {
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a(i, j) != 0) arrows.emplace_back(i, j);
  return ValuedQuiver(a, arrows);
}

/// Two-colouring of the Coxeter graph; in each component the colour class of
/// the smallest vertex is `plus`. nullopt when some component has an odd
/// cycle.
struct Bipartition {
  std::vector<std::size_t> plus;
  std::vector<std::size_t> minus;
};

inline std::optional<Bipartition> bipartition(const CartanMatrix& a) {
  const std::size_t n = a.size();
  std::vector<int> colour(n, -1);
  for (const auto& comp : connected_components(a.matrix())) {
    std::vector<std::size_t> stack{comp.front()};
    colour[comp.front()] = 0;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w) {
        if (w == v || a(v, w) == 0) continue;
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition out;
  for (std::size_t v = 0; v < n; ++v) (colour[v] == 0 ? out.plus : out.minus).push_back(v);
  return out;
}

/// The orientation in which every vertex of `plus` is a sink (dual = false)
/// or a source (dual = true).
inline std::optional<ValuedQuiver> bipartite_orientation(const CartanMatrix& a, bool dual = false) {
  auto parts = bipartition(a);
  if (!parts) return std::nullopt;
  std::vector<bool> in_plus(a.size(), false);
  for (std::size_t v : parts->plus) in_plus[v] = true;
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i == j || a(i, j) == 0 || in_plus[i]) continue;
      // i in minus, j in plus: minus -> plus makes plus the sinks
      if (dual) {
        arrows.emplace_back(j, i);
      } else {
        arrows.emplace_back(i, j);
      }
    }
  return ValuedQuiver(a, arrows);
}

}  // namespace clustercox
