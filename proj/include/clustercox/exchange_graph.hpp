#pragma once

// Breadth-first exploration of the exchange graph. Seeds are identified by
// the sorted tuple of their cluster variables (the matrix is ignored).

#include <algorithm>
#include <cstddef>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "clustercox/laurent.hpp"
#include "clustercox/seed.hpp"

namespace clustercox {

struct ExploreLimits {
  std::size_t max_depth = 64;
  std::size_t max_vars = 100000;
  std::size_t max_seeds = 1000000;
  std::size_t max_terms = 20000000;  // summed over all stored variables
  unsigned threads = 1;
};

/// The variables found so far (discovery order, keyed by canonical string)
/// and the clusters as index tuples in seed position order.
class ClusterVariableSet {
 public:
  explicit ClusterVariableSet(std::size_t rank) : rank_(rank) {}

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<LaurentPoly>& variables() const noexcept { return vars_; }
  const std::vector<std::string>& keys() const noexcept { return keys_; }
  const std::vector<std::vector<std::size_t>>& clusters() const noexcept { return clusters_; }
  std::size_t total_terms() const noexcept { return total_terms_; }

  std::optional<std::size_t> find(const std::string& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> find(const LaurentPoly& f) const { return find(canonical_string(f)); }
  bool contains(const LaurentPoly& f) const { return find(f).has_value(); }

  /// Index of the variable, inserting it if new.
  std::size_t intern(const LaurentPoly& f, std::string key) {
    auto [it, inserted] = index_.try_emplace(std::move(key), vars_.size());
    if (inserted) {
      vars_.push_back(f);
      keys_.push_back(it->first);
      total_terms_ += f.size();
    }
    return it->second;
  }
  std::size_t intern(const LaurentPoly& f) { return intern(f, canonical_string(f)); }

  /// Records a cluster; false if the same unordered cluster is known.
  bool add_cluster(std::vector<std::size_t> positional) {
    std::vector<std::size_t> key = positional;
    std::sort(key.begin(), key.end());
    if (!cluster_keys_.insert(std::move(key)).second) return false;
    clusters_.push_back(std::move(positional));
    return true;
  }
  bool has_cluster(std::vector<std::size_t> indices) const {
    std::sort(indices.begin(), indices.end());
    return cluster_keys_.count(indices) > 0;
  }

  /// Set of canonical strings, for set comparisons.
  std::set<std::string> key_set() const { return {keys_.begin(), keys_.end()}; }

  /// Each cluster as a sorted tuple of canonical strings.
  std::set<std::vector<std::string>> cluster_key_set() const {
    std::set<std::vector<std::string>> out;
    for (const auto& c : clusters_) {
      std::vector<std::string> k;
      for (std::size_t i : c) k.push_back(keys_[i]);
      std::sort(k.begin(), k.end());
      out.insert(std::move(k));
    }
    return out;
  }

 private:
  std::size_t rank_;
  std::vector<LaurentPoly> vars_;
  std::vector<std::string> keys_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> clusters_;
  std::set<std::vector<std::size_t>> cluster_keys_;
  std::size_t total_terms_ = 0;
};

class ExchangeGraphExplorer {
 public:
  explicit ExchangeGraphExplorer(const ExchangeMatrix& b, ExploreLimits limits = {})
      : limits_(limits), set_(b.size()) {
    Seed s = initial_seed(b);
    std::vector<std::size_t> idx;
    for (const auto& x : s.cluster) idx.push_back(set_.intern(x));
    set_.add_cluster(idx);
    seeds_.push_back(Node{std::move(s), std::move(idx), b.size()});
    frontier_.push_back(0);
  }

  /// Expands one BFS level. Returns false once nothing is left to expand,
  /// the depth limit is reached, or a budget trips.
  bool step() {
    if (frontier_.empty() || exceeded_) return false;
    if (depth_ >= limits_.max_depth) {
      trip("max_depth");
      return false;
    }
    struct Candidate {
      std::size_t parent;
      std::size_t k;
      Seed seed;
      std::string key;
    };
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (std::size_t f : frontier_)
      for (std::size_t k = 0; k < set_.rank(); ++k)
        if (k != seeds_[f].from) jobs.emplace_back(f, k);

    auto work = [&](std::size_t lo, std::size_t hi) {
      std::vector<Candidate> out;
      out.reserve(hi - lo);
      for (std::size_t t = lo; t < hi; ++t) {
        auto [f, k] = jobs[t];
        Seed next = mutate(seeds_[f].seed, k);
        std::string key = canonical_string(next.cluster[k]);
        out.push_back(Candidate{f, k, std::move(next), std::move(key)});
      }
      return out;
    };
    std::vector<Candidate> candidates;
    const unsigned threads = std::max(1u, limits_.threads);
    if (threads == 1 || jobs.size() < 2 * threads) {
      candidates = work(0, jobs.size());
    } else {
      std::vector<std::future<std::vector<Candidate>>> parts;
      const std::size_t chunk = (jobs.size() + threads - 1) / threads;
      for (std::size_t lo = 0; lo < jobs.size(); lo += chunk)
        parts.push_back(std::async(std::launch::async, work, lo, std::min(jobs.size(), lo + chunk)));
      for (auto& p : parts)
        for (auto& c : p.get()) candidates.push_back(std::move(c));
    }

    std::vector<std::size_t> next_frontier;
    for (auto& c : candidates) {
      std::vector<std::size_t> idx = seeds_[c.parent].indices;
      const bool new_var = !set_.find(c.key).has_value();
      if (new_var && set_.variables().size() >= limits_.max_vars) {
        trip("max_vars");
        break;
      }
      if (new_var && set_.total_terms() + c.seed.cluster[c.k].size() > limits_.max_terms) {
        trip("max_terms");
        break;
      }
      idx[c.k] = set_.intern(c.seed.cluster[c.k], std::move(c.key));
      if (!set_.add_cluster(idx)) continue;
      if (seeds_.size() >= limits_.max_seeds) {
        trip("max_seeds");
        break;
      }
      seeds_.push_back(Node{std::move(c.seed), std::move(idx), c.k});
      next_frontier.push_back(seeds_.size() - 1);
    }
    frontier_ = std::move(next_frontier);
    ++depth_;
    return !exceeded_ && !frontier_.empty();
  }

  /// Steps until completion or a limit.
  void run() {
    while (step()) {
    }
  }

  bool complete() const noexcept { return frontier_.empty() && !exceeded_; }
  bool budget_exceeded() const noexcept { return exceeded_; }
  const std::string& budget_reason() const noexcept { return reason_; }
  std::size_t depth() const noexcept { return depth_; }
  const ClusterVariableSet& result() const noexcept { return set_; }

  std::vector<Seed> seeds() const {
    std::vector<Seed> out;
    out.reserve(seeds_.size());
    for (const auto& n : seeds_) out.push_back(n.seed);
    return out;
  }

 private:
  struct Node {
    Seed seed;
    std::vector<std::size_t> indices;
    std::size_t from;  // direction that produced it; == rank for the root
  };

  void trip(const char* why) {
    exceeded_ = true;
    reason_ = why;
  }

  ExploreLimits limits_;
  ClusterVariableSet set_;
  std::vector<Node> seeds_;
  std::vector<std::size_t> frontier_;
  std::size_t depth_ = 0;
  bool exceeded_ = false;
  std::string reason_;
};

struct Enumeration {
  ClusterVariableSet set;
  bool complete = false;
  std::string budget_reason;  // empty when complete
  std::size_t depth = 0;
};

/// All cluster variables reachable from initial_seed(b). When a limit trips
/// the partial set is returned with complete = false.
inline Enumeration enumerate(const ExchangeMatrix& b, ExploreLimits limits = {}) {
  ExchangeGraphExplorer ex(b, limits);
  ex.run();
  return Enumeration{ex.result(), ex.complete(), ex.budget_reason(), ex.depth()};
}

}  // namespace clustercox
