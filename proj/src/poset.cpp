#include "cfhp/poset.hpp"

#include <algorithm>
#include <queue>

namespace cfhp {

FinitePoset::FinitePoset(int size, std::vector<std::pair<int, int>> covers)
    : m_(size) {
  init(std::move(covers));
}

FinitePoset::FinitePoset(int size, std::vector<std::pair<int, int>> covers,
                         std::vector<int> ranks)
    : m_(size), rank_(std::move(ranks)) {
  if (static_cast<int>(rank_.size()) != m_)
    throw std::invalid_argument("rank vector size mismatch");
  init(std::move(covers));
  for (const auto& [a, b] : covers_)
    if (rank_[b] != rank_[a] + 1)
      throw std::invalid_argument("cover does not raise rank by one");
}

FinitePoset::FinitePoset(const FinitePoset& o)
    : m_(o.m_),
      covers_(o.covers_),
      up_(o.up_),
      down_(o.down_),
      rank_(o.rank_),
      topo_(o.topo_) {}

FinitePoset& FinitePoset::operator=(const FinitePoset& o) {
  if (this != &o) {
    m_ = o.m_;
    covers_ = o.covers_;
    up_ = o.up_;
    down_ = o.down_;
    rank_ = o.rank_;
    topo_ = o.topo_;
    std::lock_guard<std::mutex> lk(mu_);
    closure_done_ = false;
    leq_bits_.clear();
    mobius_rows_.clear();
  }
  return *this;
}

void FinitePoset::init(std::vector<std::pair<int, int>> covers) {
  if (m_ < 0) throw std::invalid_argument("negative poset size");
  covers_ = std::move(covers);
  up_.assign(m_, {});
  down_.assign(m_, {});
  for (const auto& [a, b] : covers_) {
    if (a < 0 || a >= m_ || b < 0 || b >= m_ || a == b)
      throw std::invalid_argument("cover endpoint out of range");
    up_[a].push_back(b);
    down_[b].push_back(a);
  }
  for (auto& v : up_) std::sort(v.begin(), v.end());
  for (auto& v : down_) std::sort(v.begin(), v.end());

  /* Kahn toposort; doubles as the acyclicity check. */
  std::vector<int> indeg(m_, 0);
  for (const auto& [a, b] : covers_) indeg[b]++;
  std::priority_queue<int, std::vector<int>, std::greater<int>> q;
  for (int e = 0; e < m_; ++e)
    if (indeg[e] == 0) q.push(e);
  topo_.clear();
  topo_.reserve(m_);
  while (!q.empty()) {
    int e = q.top();
    q.pop();
    topo_.push_back(e);
    for (int f : up_[e])
      if (--indeg[f] == 0) q.push(f);
  }
  if (static_cast<int>(topo_.size()) != m_)
    throw std::invalid_argument("cover relation has a cycle");

  /* build the closure now: it also rejects non-minimal Hasse edges, and
   * construction is the one place we can do that without surprising a
   * concurrent reader later */
  ensure_closure_locked();
}

int FinitePoset::rank(int e) const {
  if (rank_.empty()) throw std::invalid_argument("poset is unranked");
  return rank_.at(e);
}

void FinitePoset::ensure_closure_locked() const {
  if (closure_done_) return;
  words_ = static_cast<std::size_t>((m_ + 63) / 64);
  leq_bits_.assign(static_cast<std::size_t>(m_) * words_, 0);
  /* sweep a fixed linear extension in reverse: row(e) = {e} | rows of covers */
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    int e = *it;
    auto* row = &leq_bits_[static_cast<std::size_t>(e) * words_];
    row[e / 64] |= std::uint64_t(1) << (e % 64);
    for (int f : up_[e]) {
      const auto* src = &leq_bits_[static_cast<std::size_t>(f) * words_];
      for (std::size_t w = 0; w < words_; ++w) row[w] |= src[w];
    }
  }
  /* Hasse edges must be genuine covers: no z strictly between. */
  for (const auto& [a, b] : covers_)
    for (int z : up_[a])
      if (z != b && leq_locked(z, b))
        throw std::invalid_argument("edge " + std::to_string(a) + "->" +
                                    std::to_string(b) + " is not a cover");
  closure_done_ = true;
}

bool FinitePoset::leq(int a, int b) const {
  if (a < 0 || a >= m_ || b < 0 || b >= m_)
    throw std::invalid_argument("element out of range");
  std::lock_guard<std::mutex> lk(mu_);
  ensure_closure_locked();
  return leq_locked(a, b);
}

bool FinitePoset::is_cover(int a, int b) const {
  if (a < 0 || a >= m_ || b < 0 || b >= m_)
    throw std::invalid_argument("element out of range");
  return std::binary_search(up_[a].begin(), up_[a].end(), b);
}

int FinitePoset::bottom() const {
  int found = -1;
  for (int e = 0; e < m_; ++e)
    if (down_[e].empty()) {
      if (found >= 0) throw std::invalid_argument("poset has no unique bottom");
      found = e;
    }
  if (found < 0) throw std::invalid_argument("poset has no unique bottom");
  return found;
}

int FinitePoset::top() const {
  int found = -1;
  for (int e = 0; e < m_; ++e)
    if (up_[e].empty()) {
      if (found >= 0) throw std::invalid_argument("poset has no unique top");
      found = e;
    }
  if (found < 0) throw std::invalid_argument("poset has no unique top");
  return found;
}

const std::vector<long long>& FinitePoset::mobius_row_locked(int x) const {
  if (mobius_rows_.empty()) mobius_rows_.assign(m_, {});
  auto& row = mobius_rows_[x];
  if (!row.empty()) return row;
  ensure_closure_locked();
  row.assign(m_, 0);
  for (int z : topo_) {
    if (!leq_locked(x, z)) continue;
    if (z == x) {
      row[z] = 1;
      continue;
    }
    long long s = 0;
    for (int u : topo_) {
      if (u == z) break;
      if (leq_locked(x, u) && leq_locked(u, z)) s += row[u];
    }
    row[z] = -s;
  }
  return row;
}

long long FinitePoset::mobius(int x, int y) const {
  std::lock_guard<std::mutex> lk(mu_);
  ensure_closure_locked();
  if (x < 0 || x >= m_ || y < 0 || y >= m_ || !leq_locked(x, y))
    throw std::invalid_argument("mobius: x is not below y");
  return mobius_row_locked(x)[y];
}

Poly FinitePoset::interval_poincare(int x, int y, Variable v) const {
  if (rank_.empty()) throw std::invalid_argument("poset is unranked");
  std::lock_guard<std::mutex> lk(mu_);
  ensure_closure_locked();
  if (x < 0 || x >= m_ || y < 0 || y >= m_ || !leq_locked(x, y))
    throw std::invalid_argument("interval_poincare: x is not below y");
  const auto& row = mobius_row_locked(x);
  Poly p;
  for (int z = 0; z < m_; ++z)
    if (leq_locked(x, z) && leq_locked(z, y)) {
      long long mu = row[z];
      p.add_term(Monomial::power(v, rank_[z] - rank_[x]),
                 mu < 0 ? -Integer(mu) : Integer(mu));
    }
  return p;
}

std::vector<Chain> FinitePoset::chains_avoiding_bottom() const {
  int bot = bottom();
  {
    std::lock_guard<std::mutex> lk(mu_);
    ensure_closure_locked();
  }
  std::vector<Chain> out;
  out.push_back({});  // the empty chain
  Chain cur;
  /* extend by strictly larger elements; index order keeps it deterministic */
  auto dfs = [&](auto&& self, int last) -> void {
    for (int f = 0; f < m_; ++f) {
      if (f == bot || f == last || !leq_locked(last, f)) continue;
      cur.push_back(f);
      out.push_back(cur);
      self(self, f);
      cur.pop_back();
    }
  };
  for (int e = 0; e < m_; ++e) {
    if (e == bot) continue;
    cur.assign(1, e);
    out.push_back(cur);
    dfs(dfs, e);
  }
  return out;
}

std::vector<Chain> FinitePoset::maximal_chains() const {
  return maximal_chains_between(bottom(), top());
}

std::vector<Chain> FinitePoset::maximal_chains_between(int x, int y) const {
  if (!leq(x, y))
    throw std::invalid_argument("maximal_chains_between: x is not below y");
  std::vector<Chain> out;
  Chain cur{x};
  auto dfs = [&](auto&& self, int e) -> void {
    if (e == y) {
      out.push_back(cur);
      return;
    }
    for (int f : up_[e]) {
      if (!leq_locked(f, y)) continue;
      cur.push_back(f);
      self(self, f);
      cur.pop_back();
    }
  };
  dfs(dfs, x);
  return out;
}

std::vector<Permutation> FinitePoset::linear_extensions() const {
  if (m_ > budgets::kPermutationStream)
    throw BudgetError("linear_extensions", m_, budgets::kPermutationStream);
  std::vector<Permutation> out;
  std::vector<int> indeg(m_, 0), listed;
  for (const auto& [a, b] : covers_) indeg[b]++;
  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(listed.size()) == m_) {
      std::vector<int> oneline(listed.size());
      for (std::size_t k = 0; k < listed.size(); ++k)
        oneline[k] = listed[k] + 1;
      out.push_back(Permutation(std::move(oneline)));
      return;
    }
    for (int e = 0; e < m_; ++e) {
      if (indeg[e] != 0) continue;
      indeg[e] = -1;
      listed.push_back(e);
      for (int f : up_[e]) indeg[f]--;
      self(self);
      for (int f : up_[e]) indeg[f]++;
      listed.pop_back();
      indeg[e] = 0;
    }
  };
  dfs(dfs);
  return out;
}

bool FinitePoset::is_linear_extension(const Permutation& sigma) const {
  if (sigma.size() != m_) return false;
  for (const auto& [a, b] : covers_)
    if (sigma.position_of(a + 1) > sigma.position_of(b + 1)) return false;
  return true;
}

std::string FinitePoset::to_dot(
    const std::vector<std::string>& vertex_labels,
    const std::map<std::pair<int, int>, std::string>& edge_labels) const {
  std::string s = "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int e = 0; e < m_; ++e) {
    s += "  v" + std::to_string(e);
    if (e < static_cast<int>(vertex_labels.size()))
      s += " [label=\"" + vertex_labels[e] + "\"]";
    s += ";\n";
  }
  for (const auto& [a, b] : covers_) {
    s += "  v" + std::to_string(a) + " -> v" + std::to_string(b);
    auto it = edge_labels.find({a, b});
    if (it != edge_labels.end()) s += " [label=\"" + it->second + "\"]";
    s += ";\n";
  }
  s += "}\n";
  return s;
}

nlohmann::json FinitePoset::to_json() const {
  nlohmann::json j;
  j["size"] = m_;
  nlohmann::json cov = nlohmann::json::array();
  for (const auto& [a, b] : covers_) cov.push_back({a, b});
  j["covers"] = cov;
  if (!rank_.empty())
    j["rank"] = rank_;
  else
    j["rank"] = nullptr;
  return j;
}

}  // namespace cfhp
