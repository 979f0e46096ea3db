#pragma once

#include <string>
#include <vector>

#include "cfhp/braid.hpp"
#include "cfhp/poly.hpp"

namespace cfhp {

/*
 * Numerator N_{B_n}(y,t) of the coarse flag Hilbert-Poincare series of the
 * braid arrangement, by three independent routes:
 *
 *   chains     sum over chains C avoiding the bottom of Pi_n of
 *              Poin_C(y) t^#C (1-t)^(n-#C)
 *   rlabeling  sum over maximal chains M of Pi_n and sign sets Y of
 *              y^#Y t^asc(lambda(M,Y))
 *   statistic  sum over pairs (w, sigma) of y^ino(w,sigma) t^des(sigma)
 */
Poly numerator_via_chains(int n);
Poly numerator_via_rlabeling(int n);
Poly numerator_via_statistic(int n, int jobs = 1);

struct MethodRun {
  std::string method;
  Poly value;
  double seconds;
};

struct NumeratorReport {
  int n = 0;
  std::vector<MethodRun> runs;
  bool agree = false;
  const Poly& value() const { return runs.front().value; }
  nlohmann::json to_json() const;  // timings excluded; payload only
};

/* methods from {"chains","rlabeling","statistic"}; "all" = those three. */
NumeratorReport numerator_report(int n, const std::vector<std::string>& methods,
                                 int jobs = 1);

/*
 * Both sides of the refined identity for a fixed w: sum over sigma of
 * y^Ino(w,sigma) t^Asc(lambda(w,sigma)) versus y^Ino(w,sigma) t^Des(sigma),
 * with y indexed by label value and t by position.
 */
struct RefinedSides {
  Poly by_ascents, by_descents;
};
RefinedSides refined_sides(const Permutation& w);
bool refined_identity_check(const Permutation& w);

/* Bivariate per-w identity: sum over sigma of y^ino t^asc(lambda) equals
 * sum over sigma of y^ino t^des(sigma). */
bool local_identity_check(const Permutation& w);

struct ClosedFormReport {
  int n = 0;
  Poly at_y_one, eulerian_scaled;    // N(1,t) vs (n+1)! E_n(t)
  Poly at_t_zero, poincare_product;  // N(y,0) vs prod_k (1+ky)
  bool eulerian_ok = false, poincare_ok = false;
};
ClosedFormReport closed_form_checks(int n, int jobs = 1);

}  // namespace cfhp
