#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cfhp/poset.hpp"

namespace cfhp {

/*
 * Homogeneous degree-n polynomial in x_1..x_m with integer coefficients,
 * i.e. a quasisymmetric function truncated to m variables.  Keys are full
 * exponent vectors of length m.
 */
class TruncatedQSym {
 public:
  TruncatedQSym(int degree, int num_vars);

  int degree() const { return n_; }
  int num_vars() const { return m_; }
  const std::map<std::vector<int>, std::int64_t>& terms() const {
    return coeffs_;
  }

  void add_monomial(const std::vector<int>& exps, std::int64_t c);
  TruncatedQSym& operator+=(const TruncatedQSym& o);

  std::int64_t evaluate_ones() const;
  std::string to_string() const;  // "x1^2x2 + 2x1x3 + ..."

  friend bool operator==(const TruncatedQSym& a, const TruncatedQSym& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const TruncatedQSym& a, const TruncatedQSym& b) {
    return !(a == b);
  }

 private:
  int n_, m_;
  std::map<std::vector<int>, std::int64_t> coeffs_;
};

/*
 * Fundamental quasisymmetric function L_S in m variables: sum of
 * x_{i_1}...x_{i_n} over 1 <= i_1 <= ... <= i_n <= m with i_k < i_{k+1}
 * whenever k is in S; S inside {1..n-1}.
 */
TruncatedQSym fundamental_L(const std::vector<int>& s, int n, int m);

/*
 * Generating function of reverse (P,omega)-partitions with parts in {1..m}:
 * maps f with f(a) <= f(b) on covers a < b, strictly when
 * omega[a] > omega[b].  omega holds one injective label per element.
 */
TruncatedQSym k_p_omega(const FinitePoset& p, const std::vector<int>& omega,
                        int m);

/* Same function computed as sum over Lin(P) of L_{Des(omega word)}. */
TruncatedQSym k_via_fundamental(const FinitePoset& p,
                                const std::vector<int>& omega, int m);

/*
 * Sum over sigma in A of prod_{i in Des} t_i, where the descent set is
 * taken of sigma itself, or of the word omega(sigma(1)),...,omega(sigma(n))
 * when a relabeling is supplied (indexed by value: omega[v-1]).
 */
Poly descent_generating_function(const std::vector<Permutation>& a);
Poly descent_generating_function(const std::vector<Permutation>& a,
                                 const std::vector<int>& omega);

}  // namespace cfhp
