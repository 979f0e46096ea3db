#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cfhp/budgets.hpp"
#include "cfhp/poly.hpp"

namespace cfhp {

/* Permutation of {1..m} in one-line notation; positions and values 1-based. */
class Permutation {
 public:
  explicit Permutation(std::vector<int> oneline);
  static Permutation identity(int m);

  /* "215463" (compact, m <= 9) or "2,1,5,4,6,3". */
  static std::optional<Permutation> parse(std::string_view s);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }
  int position_of(int value) const { return inv_[value - 1]; }
  const std::vector<int>& oneline() const { return w_; }

  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.w_ == b.w_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.w_ < b.w_;
  }

 private:
  std::vector<int> w_;
  std::vector<int> inv_;
};

/* Word of nonzero integers, e.g. a signed label word lambda(w, sigma). */
class SignedWord {
 public:
  SignedWord() = default;
  explicit SignedWord(std::vector<int> entries);

  int size() const { return static_cast<int>(a_.size()); }
  int operator()(int i) const { return a_[i - 1]; }
  const std::vector<int>& entries() const { return a_; }

  std::string to_string() const;  // "(-2, 6, 5, -4, 3)"

  friend bool operator==(const SignedWord& a, const SignedWord& b) {
    return a.a_ == b.a_;
  }
  friend bool operator!=(const SignedWord& a, const SignedWord& b) {
    return !(a == b);
  }

 private:
  std::vector<int> a_;
};

/* Adjacent comparisons on plain words; positions i in {1..len-1}. */
std::vector<int> descent_set(const std::vector<int>& word);
std::vector<int> ascent_set(const std::vector<int>& word);

std::vector<int> descent_set(const Permutation& w);
std::vector<int> descent_set(const SignedWord& a);
std::vector<int> ascent_set(const SignedWord& a);
int des(const Permutation& w);
int asc(const SignedWord& a);

/* Values v = w_i that are strict minima of the prefix (resp. suffix). */
std::vector<int> ltr_minima(const Permutation& w);
std::vector<int> rtl_minima(const Permutation& w);

/* All of Sym(m) in lexicographic order. */
std::vector<Permutation> all_permutations(int m);

template <class F>
void for_each_permutation(int m, F&& f) {
  if (m < 0 || m > budgets::kPermutationStream)
    throw BudgetError("for_each_permutation", m, budgets::kPermutationStream);
  std::vector<int> w(m);
  std::iota(w.begin(), w.end(), 1);
  do {
    f(static_cast<const std::vector<int>&>(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

/* E_n(t) = sum over Sym(n) of t^des. */
Poly eulerian_polynomial(int n);

}  // namespace cfhp
