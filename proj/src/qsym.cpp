#include "cfhp/qsym.hpp"

#include <algorithm>
#include <set>

namespace cfhp {

namespace {
constexpr int kMaxDegree = 8;
constexpr int kMaxVars = 8;

void check_sizes(int n, int m) {
  if (n < 0 || n > kMaxDegree) throw BudgetError("qsym degree", n, kMaxDegree);
  if (m < 1 || m > kMaxVars) throw BudgetError("qsym variables", m, kMaxVars);
}
}  // namespace

TruncatedQSym::TruncatedQSym(int degree, int num_vars)
    : n_(degree), m_(num_vars) {
  check_sizes(degree, num_vars);
}

void TruncatedQSym::add_monomial(const std::vector<int>& exps,
                                 std::int64_t c) {
  if (static_cast<int>(exps.size()) != m_)
    throw std::invalid_argument("exponent vector length mismatch");
  int deg = 0;
  for (int e : exps) deg += e;
  if (deg != n_) throw std::invalid_argument("monomial degree mismatch");
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

TruncatedQSym& TruncatedQSym::operator+=(const TruncatedQSym& o) {
  if (o.n_ != n_ || o.m_ != m_)
    throw std::invalid_argument("adding qsym of different shape");
  for (const auto& [e, c] : o.coeffs_) add_monomial(e, c);
  return *this;
}

std::int64_t TruncatedQSym::evaluate_ones() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

std::string TruncatedQSym::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  /* reverse lexicographic on exponent vectors puts x1-heavy terms first */
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::int64_t a = c < 0 ? -c : c;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    std::string body;
    for (int i = 0; i < m_; ++i) {
      if (e[i] == 0) continue;
      body += "x" + std::to_string(i + 1);
      if (e[i] > 1) body += "^" + std::to_string(e[i]);
    }
    if (a != 1 || body.empty()) s += std::to_string(a);
    s += body;
  }
  return s;
}

TruncatedQSym fundamental_L(const std::vector<int>& s, int n, int m) {
  check_sizes(n, m);
  for (int k : s)
    if (k < 1 || k > n - 1)
      throw std::invalid_argument("descent position outside {1..n-1}");
  std::set<int> strict(s.begin(), s.end());
  TruncatedQSym out(n, m);
  std::vector<int> exps(m, 0);
  auto rec = [&](auto&& self, int k, int prev) -> void {
    if (k > n) {
      out.add_monomial(exps, 1);
      return;
    }
    int from = k == 1 ? 1 : (strict.count(k - 1) ? prev + 1 : prev);
    for (int i = from; i <= m; ++i) {
      exps[i - 1]++;
      self(self, k + 1, i);
      exps[i - 1]--;
    }
  };
  rec(rec, 1, 1);
  return out;
}

TruncatedQSym k_p_omega(const FinitePoset& p, const std::vector<int>& omega,
                        int m) {
  int n = p.size();
  check_sizes(n, m);
  if (static_cast<int>(omega.size()) != n)
    throw std::invalid_argument("omega size mismatch");

  TruncatedQSym out(n, m);
  std::vector<int> f(n, 0), exps(m, 0);
  /* assign in element order; all constraints involve a lower cover */
  auto rec = [&](auto&& self, int e) -> void {
    if (e == n) {
      out.add_monomial(exps, 1);
      return;
    }
    for (int val = 1; val <= m; ++val) {
      bool ok = true;
      for (int d : p.lower_covers()[e]) {
        if (d > e) continue;  // handled when d is assigned
        int lo = f[d];
        if (omega[d] > omega[e] ? val <= lo : val < lo) {
          ok = false;
          break;
        }
      }
      for (int u : p.upper_covers()[e]) {
        if (u > e) continue;
        int hiv = f[u];
        if (omega[e] > omega[u] ? val >= hiv : val > hiv) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      f[e] = val;
      exps[val - 1]++;
      self(self, e + 1);
      exps[val - 1]--;
    }
  };
  rec(rec, 0);
  return out;
}

TruncatedQSym k_via_fundamental(const FinitePoset& p,
                                const std::vector<int>& omega, int m) {
  int n = p.size();
  check_sizes(n, m);
  if (static_cast<int>(omega.size()) != n)
    throw std::invalid_argument("omega size mismatch");
  TruncatedQSym out(n, m);
  for (const auto& sigma : p.linear_extensions()) {
    std::vector<int> word(n);
    for (int k = 1; k <= n; ++k) word[k - 1] = omega[sigma(k) - 1];
    out += fundamental_L(descent_set(word), n, m);
  }
  return out;
}

namespace {
Poly dgf(const std::vector<Permutation>& a, const std::vector<int>* omega) {
  Poly out;
  for (const auto& sigma : a) {
    std::vector<int> word(sigma.size());
    for (int k = 1; k <= sigma.size(); ++k)
      word[k - 1] = omega ? (*omega)[sigma(k) - 1] : sigma(k);
    Monomial mono;
    for (int i : descent_set(word))
      mono = mono * Monomial::power(Variable::ti(i), 1);
    out.add_term(mono, 1);
  }
  return out;
}
}  // namespace

Poly descent_generating_function(const std::vector<Permutation>& a) {
  return dgf(a, nullptr);
}

Poly descent_generating_function(const std::vector<Permutation>& a,
                                 const std::vector<int>& omega) {
  for (const auto& sigma : a)
    if (static_cast<int>(omega.size()) != sigma.size())
      throw std::invalid_argument("omega size mismatch");
  return dgf(a, &omega);
}

}  // namespace cfhp
