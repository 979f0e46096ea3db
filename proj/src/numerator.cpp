#include "cfhp/numerator.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>

#include "cfhp/parallel.hpp"

namespace cfhp {

int default_jobs() {
  const char* env = std::getenv("CFHP_JOBS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end) return 1;
  if (v == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
  }
  return v < 1 ? 1 : static_cast<int>(std::min(v, 256L));
}

namespace {

/* counts[a][b] -> sum of counts y^a t^b */
Poly poly_from_counts(const std::vector<std::vector<long long>>& counts) {
  Poly p;
  for (std::size_t a = 0; a < counts.size(); ++a)
    for (std::size_t b = 0; b < counts[a].size(); ++b)
      if (counts[a][b])
        p.add_term(Monomial::power(Variable::y(), static_cast<int>(a)) *
                       Monomial::power(Variable::t(), static_cast<int>(b)),
                   counts[a][b]);
  return p;
}

std::vector<std::vector<int>> materialize_sym(int m) {
  std::vector<std::vector<int>> all;
  for_each_permutation(m, [&](const std::vector<int>& w) { all.push_back(w); });
  return all;
}

int count_descents(const std::vector<int>& word) {
  int d = 0;
  for (std::size_t i = 1; i < word.size(); ++i)
    if (word[i - 1] > word[i]) ++d;
  return d;
}

}  // namespace

Poly numerator_via_chains(int n) {
  if (n < 1 || n > budgets::kNumeratorChains)
    throw BudgetError("numerator_via_chains", n, budgets::kNumeratorChains);
  PartitionLattice L = partition_lattice(n);
  const FinitePoset& P = L.poset;
  int bot = P.bottom(), top = P.top();

  std::map<std::pair<int, int>, Poly> poin;
  auto interval = [&](int a, int b) -> const Poly& {
    auto it = poin.find({a, b});
    if (it == poin.end())
      it = poin.emplace(std::make_pair(a, b),
                        P.interval_poincare(a, b, Variable::y()))
               .first;
    return it->second;
  };
  std::vector<Poly> tail(n + 1);  // t^k (1-t)^(n-k)
  for (int k = 0; k <= n; ++k) tail[k] = pow_binomial(k, n - k);

  Poly total = interval(bot, top) * tail[0];  // the empty chain
  /* extend chains elementwise; `partial` carries the Poincare product of the
   * closed intervals below the last element */
  auto dfs = [&](auto&& self, int last, int depth, const Poly& partial) -> void {
    total += partial * interval(last, top) * tail[depth];
    for (int f = 0; f < P.size(); ++f) {
      if (f == bot || f == last || !P.leq(last, f)) continue;
      self(self, f, depth + 1, partial * interval(last, f));
    }
  };
  for (int e = 0; e < P.size(); ++e) {
    if (e == bot) continue;
    dfs(dfs, e, 1, interval(bot, e));
  }
  return total;
}

Poly numerator_via_rlabeling(int n) {
  if (n < 1 || n > budgets::kNumeratorRLabeling)
    throw BudgetError("numerator_via_rlabeling", n,
                      budgets::kNumeratorRLabeling);
  PartitionLattice L = partition_lattice(n);
  std::vector<std::vector<long long>> counts(
      n + 1, std::vector<long long>(std::max(n, 1), 0));
  std::vector<int> word(n);
  for (const Chain& M : L.poset.maximal_chains()) {
    for (int i = 0; i < n; ++i)
      word[i] = L.edge_label.at({M[i], M[i + 1]});
    for (int mask = 0; mask < (1 << n); ++mask) {
      int asc = 0;
      for (int i = 1; i < n; ++i) {
        int a = (mask >> (i - 1)) & 1 ? word[i - 1] : -word[i - 1];
        int b = (mask >> i) & 1 ? word[i] : -word[i];
        if (a < b) ++asc;
      }
      counts[__builtin_popcount(static_cast<unsigned>(mask))][asc]++;
    }
  }
  return poly_from_counts(counts);
}

Poly numerator_via_statistic(int n, int jobs) {
  if (n < 1 || n > budgets::kNumeratorStatistic)
    throw BudgetError("numerator_via_statistic", n,
                      budgets::kNumeratorStatistic);
  auto ws = materialize_sym(n + 1);
  using Counts = std::vector<std::vector<long long>>;
  auto chunks = map_chunks<Counts>(
      static_cast<long long>(ws.size()), jobs,
      [&](long long begin, long long end) {
        Counts counts(n + 1, std::vector<long long>(std::max(n, 1), 0));
        for (long long wi = begin; wi < end; ++wi) {
          BarMerger merger(ws[wi]);
          for_each_permutation(n, [&](const std::vector<int>& sigma) {
            merger.reset();
            int positives = 0;
            for (int b : sigma)
              if (merger.delete_bar(b) > 0) ++positives;
            counts[positives][count_descents(sigma)]++;
          });
        }
        return counts;
      });
  Counts total(n + 1, std::vector<long long>(std::max(n, 1), 0));
  for (const auto& c : chunks)
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b < std::max(n, 1); ++b) total[a][b] += c[a][b];
  return poly_from_counts(total);
}

nlohmann::json NumeratorReport::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["agree"] = agree;
  nlohmann::json ms = nlohmann::json::array();
  for (const auto& run : runs)
    ms.push_back({{"name", run.method}, {"poly", run.value.to_json()}});
  j["methods"] = ms;
  return j;
}

NumeratorReport numerator_report(int n,
                                 const std::vector<std::string>& methods,
                                 int jobs) {
  std::vector<std::string> names;
  for (const auto& m : methods) {
    if (m == "all") {
      names = {"chains", "rlabeling", "statistic"};
      break;
    }
    names.push_back(m);
  }
  if (names.empty()) throw std::invalid_argument("no method selected");

  NumeratorReport rep;
  rep.n = n;
  for (const auto& name : names) {
    auto t0 = std::chrono::steady_clock::now();
    Poly value;
    if (name == "chains")
      value = numerator_via_chains(n);
    else if (name == "rlabeling")
      value = numerator_via_rlabeling(n);
    else if (name == "statistic")
      value = numerator_via_statistic(n, jobs);
    else
      throw std::invalid_argument("unknown method: " + name);
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    rep.runs.push_back(MethodRun{name, std::move(value), secs});
  }
  rep.agree = true;
  for (const auto& run : rep.runs)
    if (run.value != rep.runs.front().value) rep.agree = false;
  return rep;
}

namespace {

Monomial refined_monomial(const std::vector<int>& lam,
                          const std::vector<int>& t_positions) {
  std::vector<int> values;
  for (int x : lam)
    if (x > 0) values.push_back(x);
  std::sort(values.begin(), values.end());
  Monomial m;
  for (int v : values) m = m * Monomial::power(Variable::yi(v), 1);
  for (int i : t_positions) m = m * Monomial::power(Variable::ti(i), 1);
  return m;
}

}  // namespace

RefinedSides refined_sides(const Permutation& w) {
  int n = w.size() - 1;
  if (n < 1 || n > budgets::kRefinedIdentity)
    throw BudgetError("refined_sides", n, budgets::kRefinedIdentity);
  RefinedSides sides;
  BarMerger merger(w.oneline());
  std::vector<int> lam(n);
  for_each_permutation(n, [&](const std::vector<int>& sigma) {
    merger.reset();
    for (int k = 0; k < n; ++k) lam[k] = merger.delete_bar(sigma[k]);
    sides.by_ascents.add_term(refined_monomial(lam, ascent_set(lam)), 1);
    sides.by_descents.add_term(refined_monomial(lam, descent_set(sigma)), 1);
  });
  return sides;
}

bool refined_identity_check(const Permutation& w) {
  RefinedSides sides = refined_sides(w);
  return sides.by_ascents == sides.by_descents;
}

bool local_identity_check(const Permutation& w) {
  int n = w.size() - 1;
  if (n < 1 || n > budgets::kLocalIdentity)
    throw BudgetError("local_identity_check", n, budgets::kLocalIdentity);
  std::vector<std::vector<long long>> lhs(
      n + 1, std::vector<long long>(std::max(n, 1), 0)),
      rhs(n + 1, std::vector<long long>(std::max(n, 1), 0));
  BarMerger merger(w.oneline());
  std::vector<int> lam(n);
  for_each_permutation(n, [&](const std::vector<int>& sigma) {
    merger.reset();
    int positives = 0;
    for (int k = 0; k < n; ++k) {
      lam[k] = merger.delete_bar(sigma[k]);
      if (lam[k] > 0) ++positives;
    }
    int ascents = 0;
    for (int k = 1; k < n; ++k)
      if (lam[k - 1] < lam[k]) ++ascents;
    lhs[positives][ascents]++;
    rhs[positives][count_descents(sigma)]++;
  });
  return lhs == rhs;
}

ClosedFormReport closed_form_checks(int n, int jobs) {
  ClosedFormReport rep;
  rep.n = n;
  Poly N = numerator_via_statistic(n, jobs);

  Integer factorial = 1;
  for (int k = 2; k <= n + 1; ++k) factorial *= k;
  rep.at_y_one = N.substitute({{Variable::y(), Poly::constant(1)}});
  rep.eulerian_scaled = Poly::constant(factorial) * eulerian_polynomial(n);
  rep.eulerian_ok = rep.at_y_one == rep.eulerian_scaled;

  rep.at_t_zero = N.substitute({{Variable::t(), Poly::constant(0)}});
  rep.poincare_product = Poly::constant(1);
  for (int k = 1; k <= n; ++k)
    rep.poincare_product *=
        Poly::constant(1) + Poly::constant(k) * Poly::variable(Variable::y());
  rep.poincare_ok = rep.at_t_zero == rep.poincare_product;
  return rep;
}

}  // namespace cfhp
