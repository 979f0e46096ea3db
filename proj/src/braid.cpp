#include "cfhp/braid.hpp"

#include <algorithm>

namespace cfhp {

namespace {

std::string join_blocks(const std::vector<std::vector<int>>& blocks, int m) {
  std::string s;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) s += '|';
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i && m > 9) s += ',';
      s += std::to_string(blocks[b][i]);
    }
  }
  return s;
}

int check_blocks(std::vector<std::vector<int>>& blocks) {
  int m = 0;
  for (auto& blk : blocks) {
    if (blk.empty()) throw std::invalid_argument("empty block");
    std::sort(blk.begin(), blk.end());
    m += static_cast<int>(blk.size());
  }
  std::vector<char> seen(m + 1, 0);
  for (const auto& blk : blocks)
    for (int v : blk) {
      if (v < 1 || v > m || seen[v])
        throw std::invalid_argument("blocks do not partition {1..m}");
      seen[v] = 1;
    }
  return m;
}

}  // namespace

SetPartition::SetPartition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
  m_ = check_blocks(blocks_);
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
}

SetPartition SetPartition::singletons(int m) {
  std::vector<std::vector<int>> blocks(m);
  for (int v = 1; v <= m; ++v) blocks[v - 1] = {v};
  return SetPartition(std::move(blocks));
}

std::string SetPartition::to_string() const { return join_blocks(blocks_, m_); }

SetComposition::SetComposition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
  m_ = check_blocks(blocks_);
}

SetComposition SetComposition::singletons(const Permutation& w) {
  std::vector<std::vector<int>> blocks(w.size());
  for (int i = 1; i <= w.size(); ++i) blocks[i - 1] = {w(i)};
  return SetComposition(std::move(blocks));
}

SetPartition SetComposition::forget() const { return SetPartition(blocks_); }

std::string SetComposition::to_string() const {
  return join_blocks(blocks_, m_);
}

PartitionLattice partition_lattice(int n) {
  if (n < 1 || n > budgets::kPartitionLattice)
    throw BudgetError("partition_lattice", n, budgets::kPartitionLattice);
  int m = n + 1;

  PartitionLattice L{FinitePoset(0, {}), {}, {}, {}};

  /* all partitions of {1..m} via restricted growth strings */
  std::vector<int> rgs(m, 0);
  auto emit = [&] {
    int nb = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> blocks(nb);
    for (int v = 1; v <= m; ++v) blocks[rgs[v - 1]].push_back(v);
    SetPartition p(std::move(blocks));
    L.index_of.emplace(p.to_string(), static_cast<int>(L.elements.size()));
    L.elements.push_back(std::move(p));
  };
  auto gen = [&](auto&& self, int v, int maxused) -> void {
    if (v == m) {
      emit();
      return;
    }
    for (int b = 0; b <= maxused + 1; ++b) {
      rgs[v] = b;
      self(self, v + 1, std::max(maxused, b));
    }
  };
  gen(gen, 1, 0);  // rgs[0] = 0 fixed

  std::vector<std::pair<int, int>> covers;
  std::vector<int> ranks;
  ranks.reserve(L.elements.size());
  for (const auto& p : L.elements) ranks.push_back(m - p.num_blocks());

  for (std::size_t ei = 0; ei < L.elements.size(); ++ei) {
    const auto& blocks = L.elements[ei].blocks();
    int nb = static_cast<int>(blocks.size());
    for (int i = 0; i < nb; ++i)
      for (int j = i + 1; j < nb; ++j) {
        std::vector<std::vector<int>> merged;
        merged.reserve(nb - 1);
        for (int b = 0; b < nb; ++b) {
          if (b == j) continue;
          merged.push_back(blocks[b]);
          if (b == i)
            merged.back().insert(merged.back().end(), blocks[j].begin(),
                                 blocks[j].end());
        }
        SetPartition q(std::move(merged));
        int qi = L.index_of.at(q.to_string());
        covers.emplace_back(static_cast<int>(ei), qi);
        /* blocks are ordered by min, so min B_j is the larger minimum */
        L.edge_label[{static_cast<int>(ei), qi}] = blocks[j][0];
      }
  }
  L.poset = FinitePoset(static_cast<int>(L.elements.size()), std::move(covers),
                        std::move(ranks));
  return L;
}

CompositionPoset composition_poset(int n) {
  if (n < 1 || n > budgets::kCompositionPoset)
    throw BudgetError("composition_poset", n, budgets::kCompositionPoset);
  int m = n + 1;

  CompositionPoset S{FinitePoset(0, {}), {}, {}};

  /* all ordered set partitions: distribute {1..m} over an ordered list of
   * nonempty blocks, value by value */
  std::vector<std::vector<int>> blocks;
  auto gen = [&](auto&& self, int v) -> void {
    if (v > m) {
      if (!blocks.empty()) {
        SetComposition c(blocks);
        S.index_of.emplace(c.to_string(), static_cast<int>(S.elements.size()));
        S.elements.push_back(std::move(c));
      }
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(v);
      self(self, v + 1);
      blocks[b].pop_back();
    }
    for (std::size_t at = 0; at <= blocks.size(); ++at) {
      blocks.insert(blocks.begin() + at, {v});
      self(self, v + 1);
      blocks.erase(blocks.begin() + at);
    }
  };
  gen(gen, 1);

  std::vector<std::pair<int, int>> covers;
  std::vector<int> ranks;
  ranks.reserve(S.elements.size());
  for (const auto& c : S.elements) ranks.push_back(m - c.num_blocks());

  for (std::size_t ei = 0; ei < S.elements.size(); ++ei) {
    const auto& bl = S.elements[ei].blocks();
    for (std::size_t k = 0; k + 1 < bl.size(); ++k) {
      std::vector<std::vector<int>> merged;
      for (std::size_t b = 0; b < bl.size(); ++b) {
        if (b == k + 1) continue;
        merged.push_back(bl[b]);
        if (b == k)
          merged.back().insert(merged.back().end(), bl[k + 1].begin(),
                               bl[k + 1].end());
      }
      SetComposition q(std::move(merged));
      covers.emplace_back(static_cast<int>(ei),
                          S.index_of.at(q.to_string()));
    }
  }
  S.poset = FinitePoset(static_cast<int>(S.elements.size()), std::move(covers),
                        std::move(ranks));
  return S;
}

BarMerger::BarMerger(std::vector<int> word) : word_(std::move(word)) {
  if (word_.size() < 2) throw std::invalid_argument("word has no bars");
  parent_.resize(word_.size());
  minval_.resize(word_.size());
  reset();
}

void BarMerger::reset() {
  for (std::size_t p = 0; p < word_.size(); ++p) {
    parent_[p] = static_cast<int>(p);
    minval_[p] = word_[p];
  }
}

int BarMerger::delete_bar(int b) {
  if (b < 1 || b >= static_cast<int>(word_.size()))
    throw std::invalid_argument("bar index out of range");
  auto find = [&](int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  };
  int lroot = find(b - 1), rroot = find(b);
  int lo = minval_[lroot], hi = minval_[rroot];
  parent_[rroot] = lroot;
  minval_[lroot] = std::min(lo, hi);
  return lo < hi ? std::max(lo, hi) : -std::max(lo, hi);
}

namespace {

void check_pair(const Permutation& w, const Permutation& sigma) {
  if (sigma.size() != w.size() - 1)
    throw std::invalid_argument("sigma must permute the " +
                                std::to_string(w.size() - 1) + " bars of w");
}

}  // namespace

std::vector<SetComposition> chain_from_pair(const Permutation& w,
                                            const Permutation& sigma) {
  check_pair(w, sigma);
  int n = sigma.size();
  std::vector<SetComposition> chain;
  chain.reserve(n + 1);
  chain.push_back(SetComposition::singletons(w));

  /* blocks as position intervals; interval ending at bar b merges right */
  struct Seg {
    int hi;  // last 1-based position of the block
    std::vector<int> values;
  };
  std::vector<Seg> segs;
  for (int i = 1; i <= w.size(); ++i) segs.push_back({i, {w(i)}});
  for (int k = 1; k <= n; ++k) {
    int b = sigma(k);
    std::size_t j = 0;
    while (segs[j].hi != b) ++j;
    segs[j].hi = segs[j + 1].hi;
    segs[j].values.insert(segs[j].values.end(), segs[j + 1].values.begin(),
                          segs[j + 1].values.end());
    segs.erase(segs.begin() + j + 1);
    std::vector<std::vector<int>> blocks;
    for (const auto& s : segs) blocks.push_back(s.values);
    chain.push_back(SetComposition(std::move(blocks)));
  }
  return chain;
}

SignedWord lambda(const Permutation& w, const Permutation& sigma) {
  check_pair(w, sigma);
  int n = sigma.size();
  BarMerger merger(w.oneline());
  std::vector<int> lam(n);
  for (int k = 1; k <= n; ++k) lam[k - 1] = merger.delete_bar(sigma(k));
  return SignedWord(std::move(lam));
}

int ino(const Permutation& w, const Permutation& sigma) {
  check_pair(w, sigma);
  BarMerger merger(w.oneline());
  int count = 0;
  for (int k = 1; k <= sigma.size(); ++k)
    if (merger.delete_bar(sigma(k)) > 0) ++count;
  return count;
}

std::vector<int> ino_set(const Permutation& w, const Permutation& sigma) {
  std::vector<int> vals;
  SignedWord lam = lambda(w, sigma);
  for (int x : lam.entries())
    if (x > 0) vals.push_back(x);
  std::sort(vals.begin(), vals.end());
  return vals;
}

BarPositions last_bar_positions(const Permutation& w, const Permutation& sigma,
                                int v) {
  check_pair(w, sigma);
  if (v < 2 || v > w.size())
    throw std::invalid_argument("value must lie in {2.." +
                                std::to_string(w.size()) + "}");
  int n = sigma.size();
  int i = w.position_of(v);
  BarPositions bp;
  for (int j = i - 1; j >= 1; --j)
    if (w(j) < v) {
      bp.ell = j;
      break;
    }
  for (int j = i + 1; j <= w.size(); ++j)
    if (w(j) < v) {
      bp.r = j;
      break;
    }
  auto last_rank = [&](int lo, int hi) {
    for (int k = n; k >= 1; --k)
      if (sigma(k) >= lo && sigma(k) <= hi) return k;
    throw std::logic_error("bar range is empty");
  };
  if (bp.ell) bp.ell_sigma = last_rank(*bp.ell, i - 1);
  if (bp.r) bp.r_sigma = last_rank(i, *bp.r - 1);
  return bp;
}

FlatChain pair_to_flat_chain(const Permutation& w, const Permutation& sigma) {
  FlatChain fc;
  for (const auto& comp : chain_from_pair(w, sigma))
    fc.chain.push_back(comp.forget());
  const auto lam = lambda(w, sigma).entries();
  for (std::size_t k = 0; k < lam.size(); ++k)
    if (lam[k] > 0) fc.y_positions.push_back(static_cast<int>(k) + 1);
  return fc;
}

}  // namespace cfhp
