#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfhp/perms.hpp"
#include "cfhp/poset.hpp"

namespace cfhp {

/* Partition of {1..m}; blocks sorted internally and ordered by minimum. */
class SetPartition {
 public:
  explicit SetPartition(std::vector<std::vector<int>> blocks);
  static SetPartition singletons(int m);

  int ground_size() const { return m_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  std::string to_string() const;  // "1|23"

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.blocks_ == b.blocks_;
  }
  friend bool operator<(const SetPartition& a, const SetPartition& b) {
    return a.blocks_ < b.blocks_;
  }

 private:
  std::vector<std::vector<int>> blocks_;
  int m_;
};

/* Ordered set partition; block order is positional, blocks sorted inside. */
class SetComposition {
 public:
  explicit SetComposition(std::vector<std::vector<int>> blocks);
  static SetComposition singletons(const Permutation& w);  // w1|w2|...|wm

  int ground_size() const { return m_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  SetPartition forget() const;
  std::string to_string() const;  // "125|346"

  friend bool operator==(const SetComposition& a, const SetComposition& b) {
    return a.blocks_ == b.blocks_;
  }
  friend bool operator<(const SetComposition& a, const SetComposition& b) {
    return a.blocks_ < b.blocks_;
  }

 private:
  std::vector<std::vector<int>> blocks_;
  int m_;
};

/*
 * Pi_n: lattice of flats of the braid arrangement B_n, i.e. partitions of
 * {1..n+1} with rank (n+1) - #blocks.  Each cover carries the R-label
 * max(min B, min B') of the two blocks it merges.
 */
struct PartitionLattice {
  FinitePoset poset;
  std::vector<SetPartition> elements;
  std::map<std::string, int> index_of;
  std::map<std::pair<int, int>, int> edge_label;
};
PartitionLattice partition_lattice(int n);

/* Sigma_n: set compositions of {1..n+1} ordered by merging consecutive
 * blocks; the (n+1)! finest ones are the minimal elements. */
struct CompositionPoset {
  FinitePoset poset;
  std::vector<SetComposition> elements;
  std::map<std::string, int> index_of;
};
CompositionPoset composition_poset(int n);

/*
 * Bar deletion.  w in S_{n+1} starts as w1|w2|...|w(n+1); bar i sits between
 * positions i and i+1; sigma in Sym(n) gives the deletion order.  Step k
 * merges blocks B, B' adjacent at bar sigma(k) and records
 * lambda_k = max(min B, min B') signed + iff min B < min B'.
 */

/* Reusable bar-deletion engine over a fixed base word (union-find over
 * positions, tracking block minima); reset() rewinds to all bars intact. */
class BarMerger {
 public:
  explicit BarMerger(std::vector<int> word);
  void reset();
  int delete_bar(int b);  // 1-based bar; returns the signed label

 private:
  std::vector<int> word_, parent_, minval_;
};

std::vector<SetComposition> chain_from_pair(const Permutation& w,
                                            const Permutation& sigma);
SignedWord lambda(const Permutation& w, const Permutation& sigma);
int ino(const Permutation& w, const Permutation& sigma);
std::vector<int> ino_set(const Permutation& w, const Permutation& sigma);

/* Positions of the closest smaller entries around v, and the last deletion
 * ranks of the two bar ranges they bound; absent = infinite. */
struct BarPositions {
  std::optional<int> ell, r;
  std::optional<int> ell_sigma, r_sigma;
};
BarPositions last_bar_positions(const Permutation& w, const Permutation& sigma,
                                int v);

/* Underlying maximal chain of Pi_n plus the positive positions of lambda. */
struct FlatChain {
  std::vector<SetPartition> chain;
  std::vector<int> y_positions;
};
FlatChain pair_to_flat_chain(const Permutation& w, const Permutation& sigma);

}  // namespace cfhp
