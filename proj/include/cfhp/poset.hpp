#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "cfhp/perms.hpp"
#include "cfhp/poly.hpp"

namespace cfhp {

/* Chain = strictly increasing sequence of element indices. */
using Chain = std::vector<int>;

/*
 * Finite poset on elements 0..size-1 given by its Hasse diagram.
 * Construction validates acyclicity; the transitive closure and Moebius
 * rows are computed lazily behind a mutex, so const queries are safe to
 * share across threads.
 */
class FinitePoset {
 public:
  FinitePoset(int size, std::vector<std::pair<int, int>> covers);
  FinitePoset(int size, std::vector<std::pair<int, int>> covers,
              std::vector<int> ranks);
  FinitePoset(const FinitePoset& o);
  FinitePoset& operator=(const FinitePoset& o);

  int size() const { return m_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<std::vector<int>>& upper_covers() const { return up_; }
  const std::vector<std::vector<int>>& lower_covers() const { return down_; }

  bool has_ranks() const { return !rank_.empty(); }
  int rank(int e) const;

  bool leq(int a, int b) const;
  bool is_cover(int a, int b) const;
  int bottom() const;  // unique minimal element, or invalid_argument
  int top() const;

  long long mobius(int x, int y) const;

  /* sum over z in [x,y] of |mu(x,z)| v^(rank z - rank x); needs ranks */
  Poly interval_poincare(int x, int y, Variable v) const;

  /* All chains, the empty one included, in P minus its bottom. */
  std::vector<Chain> chains_avoiding_bottom() const;

  /* Maximal chains from bottom to top. */
  std::vector<Chain> maximal_chains() const;
  /* Maximal chains of the interval [x, y]. */
  std::vector<Chain> maximal_chains_between(int x, int y) const;

  /* sigma(k) = (k-th listed element) + 1, elements read as values 1..size. */
  std::vector<Permutation> linear_extensions() const;
  bool is_linear_extension(const Permutation& sigma) const;

  std::string to_dot(
      const std::vector<std::string>& vertex_labels = {},
      const std::map<std::pair<int, int>, std::string>& edge_labels = {}) const;
  nlohmann::json to_json() const;

 private:
  int m_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<int> rank_;
  std::vector<int> topo_;  // one fixed linear extension, for Moebius sums

  mutable std::mutex mu_;
  mutable bool closure_done_ = false;
  mutable std::size_t words_ = 0;
  mutable std::vector<std::uint64_t> leq_bits_;  // row e: all f with e <= f
  mutable std::vector<std::vector<long long>> mobius_rows_;

  void init(std::vector<std::pair<int, int>> covers);
  void ensure_closure_locked() const;
  const std::vector<long long>& mobius_row_locked(int x) const;
  bool leq_locked(int a, int b) const {
    return (leq_bits_[static_cast<std::size_t>(a) * words_ + b / 64] >>
            (b % 64)) & 1u;
  }
};

}  // namespace cfhp
