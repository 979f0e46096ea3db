#pragma once

#include <string>
#include <vector>

namespace cfhp {

struct SuiteResult {
  std::string suite;
  int n = 0;
  bool passed = false;
  long long checks = 0;
  double seconds = 0.0;
  std::string detail;  // summary on pass, first offender on failure
};

/*
 * Exhaustive identity suites, each with a hard size budget:
 *   threeway    the three numerator methods agree               (n <= 5)
 *   thm15       per-w bivariate ascent/descent identity         (n <= 6)
 *   thm16       per-w refined identity + collapse to numerator  (n <= 5)
 *   closedform  N(1,t) = (n+1)! E_n(t), N(y,0) = prod (1+ky)    (n <= 6)
 *   lemma22     |lambda| is a permutation of {2..n+1}           (n <= 5)
 *   lemma23     last-bar positions locate the label of each v   (n <= 5)
 *   pwy         P_{w,Y}: labels, Lin = fiber, Sym(n) partition  (n <= 5)
 *   bijection   (w,sigma) <-> (maximal chain, Y) is a bijection (n <= 4)
 *   rlabeling   unique rising maximal chain in every interval   (n <= 4)
 *   qsym        K_{P,omega} = sum of L over Lin; relabelings    (n <= 4)
 */
const std::vector<std::string>& verify_suites();
int verify_budget(const std::string& suite);
SuiteResult run_verify_suite(const std::string& suite, int n, int jobs = 1);

}  // namespace cfhp
