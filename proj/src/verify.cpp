#include "cfhp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "cfhp/braid.hpp"
#include "cfhp/numerator.hpp"
#include "cfhp/parallel.hpp"
#include "cfhp/pwy.hpp"
#include "cfhp/qsym.hpp"

namespace cfhp {

namespace {

const std::vector<std::pair<std::string, int>> kSuites = {
    {"threeway", budgets::kNumeratorChains},
    {"thm15", budgets::kLocalIdentity},
    {"thm16", budgets::kNumeratorRLabeling},
    {"closedform", budgets::kNumeratorStatistic},
    {"lemma22", budgets::kLemmaSweep},
    {"lemma23", budgets::kLemmaSweep},
    {"pwy", budgets::kPwySweep},
    {"bijection", budgets::kBijection},
    {"rlabeling", budgets::kRLabelingCheck},
    {"qsym", budgets::kQsymSweep},
};

std::vector<std::vector<int>> materialize_sym(int m) {
  std::vector<std::vector<int>> all;
  for_each_permutation(m, [&](const std::vector<int>& w) { all.push_back(w); });
  return all;
}

struct SweepOutcome {
  long long checks = 0;
  std::string first_failure;
  void fail(const std::string& what) {
    if (first_failure.empty()) first_failure = what;
  }
  void merge(const SweepOutcome& o) {
    checks += o.checks;
    if (first_failure.empty()) first_failure = o.first_failure;
  }
};

/* run `per` on every w in S_{n+1}, chunked over jobs workers */
SweepOutcome sweep_words(
    int n, int jobs,
    const std::function<void(const Permutation&, SweepOutcome&)>& per) {
  auto ws = materialize_sym(n + 1);
  auto chunks = map_chunks<SweepOutcome>(
      static_cast<long long>(ws.size()), jobs,
      [&](long long begin, long long end) {
        SweepOutcome out;
        for (long long i = begin; i < end; ++i) per(Permutation(ws[i]), out);
        return out;
      });
  SweepOutcome total;
  for (const auto& c : chunks) total.merge(c);
  return total;
}

SuiteResult suite_threeway(int n, int jobs) {
  SuiteResult res;
  NumeratorReport rep = numerator_report(n, {"all"}, jobs);
  res.passed = rep.agree;
  res.checks = static_cast<long long>(rep.runs.size()) - 1;
  if (rep.agree) {
    res.detail = "N = " + rep.value().to_string();
  } else {
    res.detail = "methods disagree:";
    for (const auto& run : rep.runs)
      res.detail += " " + run.method + " = " + run.value.to_string() + ";";
  }
  return res;
}

SuiteResult suite_thm15(int n, int jobs) {
  SuiteResult res;
  auto out = sweep_words(n, jobs, [](const Permutation& w, SweepOutcome& o) {
    o.checks++;
    if (!local_identity_check(w)) o.fail("w = " + w.to_string());
  });
  res.checks = out.checks;
  res.passed = out.first_failure.empty();
  res.detail = res.passed ? "all fibers match" : out.first_failure;
  return res;
}

SuiteResult suite_thm16(int n, int jobs) {
  SuiteResult res;
  auto ws = materialize_sym(n + 1);
  struct ChunkOut {
    SweepOutcome out;
    Poly sum;
  };
  auto chunks = map_chunks<ChunkOut>(
      static_cast<long long>(ws.size()), jobs,
      [&](long long begin, long long end) {
        ChunkOut c;
        for (long long i = begin; i < end; ++i) {
          Permutation w(ws[i]);
          RefinedSides sides = refined_sides(w);
          c.out.checks++;
          if (sides.by_ascents != sides.by_descents)
            c.out.fail("w = " + w.to_string());
          c.sum += sides.by_descents;
        }
        return c;
      });
  SweepOutcome out;
  Poly sum;
  for (const auto& c : chunks) {
    out.merge(c.out);
    sum += c.sum;
  }
  /* collapsing y_v -> y, t_i -> t must reproduce the numerator */
  std::map<Variable, Poly> collapse;
  for (int v = 2; v <= n + 1; ++v)
    collapse.emplace(Variable::yi(v), Poly::variable(Variable::y()));
  for (int i = 1; i <= std::max(n - 1, 1); ++i)
    collapse.emplace(Variable::ti(i), Poly::variable(Variable::t()));
  out.checks++;
  if (sum.substitute(collapse) != numerator_via_statistic(n, jobs))
    out.fail("collapsed refined sum differs from the numerator");
  res.checks = out.checks;
  res.passed = out.first_failure.empty();
  res.detail = res.passed ? "refined identity holds for all w"
                          : out.first_failure;
  return res;
}

SuiteResult suite_closedform(int n, int jobs) {
  SuiteResult res;
  ClosedFormReport rep = closed_form_checks(n, jobs);
  res.checks = 2;
  res.passed = rep.eulerian_ok && rep.poincare_ok;
  if (res.passed)
    res.detail = "N(1,t) = " + rep.at_y_one.to_string() +
                 "; N(y,0) = " + rep.at_t_zero.to_string();
  else if (!rep.eulerian_ok)
    res.detail = "N(1,t) = " + rep.at_y_one.to_string() + " but expected " +
                 rep.eulerian_scaled.to_string();
  else
    res.detail = "N(y,0) = " + rep.at_t_zero.to_string() + " but expected " +
                 rep.poincare_product.to_string();
  return res;
}

SuiteResult suite_lemma22(int n, int jobs) {
  SuiteResult res;
  unsigned expected = 0;
  for (int v = 2; v <= n + 1; ++v) expected |= 1u << v;
  auto out = sweep_words(n, jobs, [&](const Permutation& w, SweepOutcome& o) {
    BarMerger merger(w.oneline());
    for_each_permutation(n, [&](const std::vector<int>& sigma) {
      merger.reset();
      unsigned mask = 0;
      for (int b : sigma) mask |= 1u << std::abs(merger.delete_bar(b));
      o.checks++;
      if (mask != expected)
        o.fail("w = " + w.to_string() + ", sigma = " +
               Permutation(sigma).to_string());
    });
  });
  res.checks = out.checks;
  res.passed = out.first_failure.empty();
  res.detail = res.passed ? "every |lambda| is a permutation of {2..n+1}"
                          : out.first_failure;
  return res;
}

SuiteResult suite_lemma23(int n, int jobs) {
  SuiteResult res;
  auto out = sweep_words(n, jobs, [&](const Permutation& w, SweepOutcome& o) {
    for_each_permutation(n, [&](const std::vector<int>& s) {
      Permutation sigma(s);
      SignedWord lam = lambda(w, sigma);
      for (int v = 2; v <= n + 1; ++v) {
        BarPositions bp = last_bar_positions(w, sigma, v);
        o.checks++;
        int j;
        int want;
        if (bp.ell_sigma && bp.r_sigma) {
          if (*bp.ell_sigma == *bp.r_sigma) {
            o.fail("equal last-bar ranks at w = " + w.to_string());
            continue;
          }
          j = std::min(*bp.ell_sigma, *bp.r_sigma);
          want = *bp.ell_sigma < *bp.r_sigma ? v : -v;
        } else if (bp.ell_sigma) {
          j = *bp.ell_sigma;
          want = v;
        } else if (bp.r_sigma) {
          j = *bp.r_sigma;
          want = -v;
        } else {
          o.fail("both bar ranges empty for v = " + std::to_string(v));
          continue;
        }
        if (lam(j) != want)
          o.fail("w = " + w.to_string() + ", sigma = " + sigma.to_string() +
                 ", v = " + std::to_string(v));
      }
    });
  });
  res.checks = out.checks;
  res.passed = out.first_failure.empty();
  res.detail = res.passed ? "labels sit at the last bar positions"
                          : out.first_failure;
  return res;
}

SuiteResult suite_pwy(int n, int jobs) {
  SuiteResult res;
  auto out = sweep_words(n, jobs, [&](const Permutation& w, SweepOutcome& o) {
    auto ltr = ltr_minima(w);
    std::map<std::vector<int>, int> covered;
    for (const auto& y : admissible_label_sets(w)) {
      PwyPoset p = build_pwy(w, y);

      std::vector<int> positives;
      for (int x : p.lambda)
        if (x > 0) positives.push_back(x);
      std::sort(positives.begin(), positives.end());
      o.checks++;
      if (positives != p.y)
        o.fail("positive labels differ from Y at w = " + w.to_string());

      for (const auto& [a, b] : p.poset.covers()) {
        o.checks++;
        if ((a < b) != (p.lambda[a] > p.lambda[b]))
          o.fail("cover label order broken at w = " + w.to_string());
      }

      for (const auto& sigma : p.poset.linear_extensions()) {
        covered[sigma.oneline()]++;
        o.checks += 2;
        if (ino_set(w, sigma) != p.y)
          o.fail("Ino(w,sigma) != Y for w = " + w.to_string() +
                 ", sigma = " + sigma.to_string());
        if (vertex_word(p, sigma) != lambda(w, sigma))
          o.fail("vertex word != lambda for w = " + w.to_string() +
                 ", sigma = " + sigma.to_string());
      }

      o.checks++;
      if (!lin_equals_fiber(w, y))
        o.fail("Lin != fiber at w = " + w.to_string());
    }
    /* the linear extension sets partition Sym(n) */
    for_each_permutation(n, [&](const std::vector<int>& s) {
      o.checks++;
      auto it = covered.find(s);
      if (it == covered.end() || it->second != 1)
        o.fail("sigma = " + Permutation(s).to_string() +
               " covered != once for w = " + w.to_string());
      auto vals = ino_set(w, Permutation(s));
      o.checks++;
      for (int v : vals)
        if (std::binary_search(ltr.begin(), ltr.end(), v))
          o.fail("Ino meets a left-to-right minimum at w = " + w.to_string());
    });
  });
  res.checks = out.checks;
  res.passed = out.first_failure.empty();
  res.detail = res.passed ? "P_{w,Y} posets carve Sym(n) into fibers"
                          : out.first_failure;
  return res;
}

SuiteResult suite_bijection(int n, int /*jobs*/) {
  SuiteResult res;
  PartitionLattice L = partition_lattice(n);
  auto maxch = L.poset.maximal_chains();
  std::map<Chain, int> chain_index;
  for (std::size_t i = 0; i < maxch.size(); ++i)
    chain_index.emplace(maxch[i], static_cast<int>(i));

  std::vector<std::vector<int>> seen(maxch.size(),
                                     std::vector<int>(1 << n, 0));
  SweepOutcome out;
  for_each_permutation(n + 1, [&](const std::vector<int>& wv) {
    Permutation w(wv);
    for_each_permutation(n, [&](const std::vector<int>& sv) {
      Permutation sigma(sv);
      FlatChain fc = pair_to_flat_chain(w, sigma);
      Chain els;
      for (const auto& part : fc.chain)
        els.push_back(L.index_of.at(part.to_string()));
      auto it = chain_index.find(els);
      out.checks++;
      if (it == chain_index.end()) {
        out.fail("chain of (" + w.to_string() + ", " + sigma.to_string() +
                 ") is not maximal in the lattice");
        return;
      }
      int mask = 0;
      for (int pos : fc.y_positions) mask |= 1 << (pos - 1);
      seen[it->second][mask]++;

      SignedWord lam = lambda(w, sigma);
      out.checks += 2;
      if (static_cast<int>(fc.y_positions.size()) != ino(w, sigma))
        out.fail("|Y| != ino at (" + w.to_string() + ", " + sigma.to_string() +
                 ")");
      for (int i = 1; i <= n; ++i)
        if (L.edge_label.at({els[i - 1], els[i]}) != std::abs(lam(i)))
          out.fail("edge label != |lambda| at (" + w.to_string() + ", " +
                   sigma.to_string() + ")");
    });
  });
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (int mask = 0; mask < (1 << n); ++mask) {
      out.checks++;
      if (seen[i][mask] != 1)
        out.fail("(chain " + std::to_string(i) + ", Y mask " +
                 std::to_string(mask) + ") hit " +
                 std::to_string(seen[i][mask]) + " times");
    }
  res.checks = out.checks;
  res.passed = out.first_failure.empty();
  res.detail = res.passed
                   ? "pairs biject with (maximal chain, sign set) pairs"
                   : out.first_failure;
  return res;
}

SuiteResult suite_rlabeling(int n, int /*jobs*/) {
  SuiteResult res;
  PartitionLattice L = partition_lattice(n);
  SweepOutcome out;
  for (int x = 0; x < L.poset.size(); ++x)
    for (int y = 0; y < L.poset.size(); ++y) {
      if (!L.poset.leq(x, y)) continue;
      int rising = 0;
      for (const Chain& c : L.poset.maximal_chains_between(x, y)) {
        bool weakly_increasing = true;
        int prev = 0;
        for (std::size_t i = 0; i + 1 < c.size(); ++i) {
          int lab = L.edge_label.at({c[i], c[i + 1]});
          if (lab < prev) {
            weakly_increasing = false;
            break;
          }
          prev = lab;
        }
        if (weakly_increasing) ++rising;
      }
      out.checks++;
      if (rising != 1)
        out.fail("interval [" + L.elements[x].to_string() + ", " +
                 L.elements[y].to_string() + "] has " +
                 std::to_string(rising) + " rising chains");
    }
  res.checks = out.checks;
  res.passed = out.first_failure.empty();
  res.detail = res.passed ? "each interval has a unique rising maximal chain"
                          : out.first_failure;
  return res;
}

SuiteResult suite_qsym(int n, int jobs) {
  SuiteResult res;
  const int max_vars = 4;
  auto out = sweep_words(n, jobs, [&](const Permutation& w, SweepOutcome& o) {
    for (const auto& y : admissible_label_sets(w)) {
      PwyPoset p = build_pwy(w, y);
      for (int m = 1; m <= max_vars; ++m) {
        o.checks++;
        if (k_p_omega(p.poset, p.lambda, m) !=
            k_via_fundamental(p.poset, p.lambda, m))
          o.fail("K != sum of L at w = " + w.to_string() + ", Y size " +
                 std::to_string(y.size()) + ", m = " + std::to_string(m));
      }

      auto lin = p.poset.linear_extensions();
      /* order-preserving relabeling into {1..n} */
      std::vector<int> sorted_labels = p.lambda;
      std::sort(sorted_labels.begin(), sorted_labels.end());
      std::vector<int> ranks(n);
      for (int e = 0; e < n; ++e)
        ranks[e] = static_cast<int>(std::lower_bound(sorted_labels.begin(),
                                                     sorted_labels.end(),
                                                     p.lambda[e]) -
                                    sorted_labels.begin()) +
                   1;
      o.checks++;
      if (descent_generating_function(lin, p.lambda) !=
          descent_generating_function(lin, ranks))
        o.fail("rank relabeling changes descents at w = " + w.to_string());

      /* covers reverse the natural order, so -Lambda mirrors the identity */
      std::vector<int> negated(n);
      for (int e = 0; e < n; ++e) negated[e] = -p.lambda[e];
      o.checks++;
      if (descent_generating_function(lin) !=
          descent_generating_function(lin, negated))
        o.fail("negated labeling differs from identity at w = " +
               w.to_string());
    }
  });
  res.checks = out.checks;
  res.passed = out.first_failure.empty();
  res.detail = res.passed ? "partition generating functions agree"
                          : out.first_failure;
  return res;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, budget] : kSuites) v.push_back(name);
    return v;
  }();
  return names;
}

int verify_budget(const std::string& suite) {
  for (const auto& [name, budget] : kSuites)
    if (name == suite) return budget;
  throw std::invalid_argument("unknown suite: " + suite);
}

SuiteResult run_verify_suite(const std::string& suite, int n, int jobs) {
  int budget = verify_budget(suite);
  if (n < 1 || n > budget) throw BudgetError("suite " + suite, n, budget);

  auto t0 = std::chrono::steady_clock::now();
  SuiteResult res;
  if (suite == "threeway")
    res = suite_threeway(n, jobs);
  else if (suite == "thm15")
    res = suite_thm15(n, jobs);
  else if (suite == "thm16")
    res = suite_thm16(n, jobs);
  else if (suite == "closedform")
    res = suite_closedform(n, jobs);
  else if (suite == "lemma22")
    res = suite_lemma22(n, jobs);
  else if (suite == "lemma23")
    res = suite_lemma23(n, jobs);
  else if (suite == "pwy")
    res = suite_pwy(n, jobs);
  else if (suite == "bijection")
    res = suite_bijection(n, jobs);
  else if (suite == "rlabeling")
    res = suite_rlabeling(n, jobs);
  else
    res = suite_qsym(n, jobs);
  res.suite = suite;
  res.n = n;
  res.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return res;
}

}  // namespace cfhp
