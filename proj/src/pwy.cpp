#include "cfhp/pwy.hpp"

#include <algorithm>
#include <set>

namespace cfhp {

std::vector<std::vector<int>> admissible_label_sets(const Permutation& w) {
  int m = w.size();
  auto ltr = ltr_minima(w);
  auto rtl = rtl_minima(w);
  std::vector<int> required, free_vals;
  for (int v : rtl)
    if (v != 1) required.push_back(v);
  for (int v = 2; v <= m; ++v)
    if (!std::binary_search(ltr.begin(), ltr.end(), v) &&
        !std::binary_search(rtl.begin(), rtl.end(), v))
      free_vals.push_back(v);

  std::vector<std::vector<int>> out;
  int k = static_cast<int>(free_vals.size());
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> y = required;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) y.push_back(free_vals[i]);
    std::sort(y.begin(), y.end());
    out.push_back(std::move(y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PwyPoset build_pwy(const Permutation& w, const std::vector<int>& y) {
  int m = w.size();
  int n = m - 1;
  if (n < 1) throw std::invalid_argument("w must have at least one bar");

  std::vector<char> in_y(m + 1, 0);
  for (int v : y) {
    if (v < 2 || v > m)
      throw std::invalid_argument("Y value " + std::to_string(v) +
                                  " outside {2.." + std::to_string(m) + "}");
    in_y[v] = 1;
  }
  for (int v : ltr_minima(w))
    if (v >= 2 && in_y[v])
      throw std::invalid_argument("Y contains the left-to-right minimum " +
                                  std::to_string(v));
  for (int v : rtl_minima(w))
    if (v >= 2 && !in_y[v])
      throw std::invalid_argument("Y misses the right-to-left minimum " +
                                  std::to_string(v));

  /* segments of bar positions merged so far: bounds and current P-maximum */
  std::vector<int> parent(n + 1), lo(n + 1), hi(n + 1), maxelt(n + 1);
  for (int b = 1; b <= n; ++b) {
    parent[b] = b;
    lo[b] = hi[b] = maxelt[b] = b;
  }
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  /* the bar range must be exactly one segment: that is the connected,
   * unique-maximum premise of the construction */
  auto segment_max = [&](int from, int to) {
    int root = find(from);
    if (lo[root] != from || hi[root] != to)
      throw std::logic_error("bar range " + std::to_string(from) + ".." +
                             std::to_string(to) +
                             " is not a single built segment");
    return maxelt[root];
  };

  std::vector<std::pair<int, int>> covers;
  std::vector<int> lambda(n, 0);
  for (int v = m; v >= 2; --v) {
    int i = w.position_of(v);
    int ell = 0, r = 0;
    for (int j = i - 1; j >= 1; --j)
      if (w(j) < v) {
        ell = j;
        break;
      }
    for (int j = i + 1; j <= m; ++j)
      if (w(j) < v) {
        r = j;
        break;
      }
    if (ell == 0) {  // left-to-right minimum
      int b = segment_max(i, r - 1);
      lambda[b - 1] = -v;
    } else if (r == 0) {  // right-to-left minimum
      int a = segment_max(ell, i - 1);
      lambda[a - 1] = v;
    } else {
      int a = segment_max(ell, i - 1);
      int b = segment_max(i, r - 1);
      if (in_y[v]) {
        covers.emplace_back(a - 1, b - 1);
        lambda[a - 1] = v;
      } else {
        covers.emplace_back(b - 1, a - 1);
        lambda[b - 1] = -v;
      }
      int ra = find(ell), rb = find(i);
      parent[rb] = ra;
      lo[ra] = ell;
      hi[ra] = r - 1;
      maxelt[ra] = in_y[v] ? b : a;
    }
  }
  for (int b = 1; b <= n; ++b)
    if (lambda[b - 1] == 0)
      throw std::logic_error("position " + std::to_string(b) +
                             " never received a label");

  std::sort(covers.begin(), covers.end());
  PwyPoset p{w, y, FinitePoset(n, std::move(covers)), std::move(lambda)};
  std::sort(p.y.begin(), p.y.end());
  p.y.erase(std::unique(p.y.begin(), p.y.end()), p.y.end());
  return p;
}

bool lin_equals_fiber(const Permutation& w, const std::vector<int>& y) {
  PwyPoset p = build_pwy(w, y);
  std::set<std::vector<int>> lin;
  for (const auto& sigma : p.poset.linear_extensions())
    lin.insert(sigma.oneline());
  std::vector<int> sorted_y = p.y;
  std::set<std::vector<int>> fiber;
  for_each_permutation(w.size() - 1, [&](const std::vector<int>& s) {
    if (ino_set(w, Permutation(s)) == sorted_y) fiber.insert(s);
  });
  return lin == fiber;
}

SignedWord vertex_word(const PwyPoset& p, const Permutation& sigma) {
  if (!p.poset.is_linear_extension(sigma))
    throw std::invalid_argument("sigma is not a linear extension of P_{w,Y}");
  std::vector<int> word(sigma.size());
  for (int k = 1; k <= sigma.size(); ++k) word[k - 1] = p.lambda[sigma(k) - 1];
  return SignedWord(std::move(word));
}

std::string pwy_to_dot(const PwyPoset& p) {
  std::vector<std::string> labels;
  for (int b = 1; b <= p.poset.size(); ++b)
    labels.push_back(std::to_string(b) + ":" +
                     std::to_string(p.lambda[b - 1]));
  return p.poset.to_dot(labels);
}

nlohmann::json pwy_to_json(const PwyPoset& p) {
  nlohmann::json j;
  j["w"] = p.w.to_string();
  j["Y"] = p.y;
  nlohmann::json cov = nlohmann::json::array();
  for (const auto& [a, b] : p.poset.covers())
    cov.push_back({a + 1, b + 1});  // bar positions, lower < upper in P
  j["covers"] = cov;
  j["lambda"] = p.lambda;
  return j;
}

}  // namespace cfhp
