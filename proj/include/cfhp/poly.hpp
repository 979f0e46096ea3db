#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cfhp {

using Integer = boost::multiprecision::cpp_int;

/* Thrown when an operation would exceed its hard enumeration budget. */
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, int requested, int limit)
      : std::runtime_error(what + ": n=" + std::to_string(requested) +
                           " exceeds budget " + std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}
  int requested() const { return requested_; }
  int limit() const { return limit_; }

 private:
  int requested_;
  int limit_;
};

/*
 * One indeterminate.  Four kinds: the bivariate pair y, t and the refined
 * families y_i (indexed by label values) and t_i (indexed by positions).
 * Canonical order: y < t < y_1 < y_2 < ... < t_1 < t_2 < ...
 */
class Variable {
 public:
  enum class Kind : std::uint8_t { Y = 0, T = 1, Yi = 2, Ti = 3 };

  static Variable y() { return Variable(Kind::Y, 0); }
  static Variable t() { return Variable(Kind::T, 0); }
  static Variable yi(int index);
  static Variable ti(int index);

  Kind kind() const { return kind_; }
  int index() const { return index_; }

  std::string name() const;
  std::string latex() const;
  static std::optional<Variable> parse(std::string_view s);

  friend bool operator==(Variable a, Variable b) {
    return a.kind_ == b.kind_ && a.index_ == b.index_;
  }
  friend bool operator!=(Variable a, Variable b) { return !(a == b); }
  friend bool operator<(Variable a, Variable b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    return a.index_ < b.index_;
  }

 private:
  Variable(Kind k, int i) : kind_(k), index_(i) {}
  Kind kind_;
  int index_;
};

/* Product of variables with positive exponents, kept sorted by variable. */
class Monomial {
 public:
  Monomial() = default;  // the empty product, i.e. 1

  static Monomial power(Variable v, int e);

  const std::vector<std::pair<Variable, int>>& factors() const {
    return factors_;
  }
  bool is_one() const { return factors_.empty(); }
  int total_degree() const;
  int exponent(Variable v) const;

  Monomial operator*(const Monomial& o) const;

  /* Sub-monomial on y/y_i variables only, and on t/t_i variables only. */
  Monomial y_part() const;
  Monomial t_part() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }
  /* Any total order works as a map key; display order is display_less. */
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.factors_ < b.factors_;
  }

 private:
  std::vector<std::pair<Variable, int>> factors_;
};

/* Graded order used for serialization: total degree, then earlier variable
 * with higher exponent first. */
bool display_less(const Monomial& a, const Monomial& b);

/*
 * Sparse multivariate polynomial with exact integer coefficients.
 * Invariant: no zero coefficient is ever stored, so is_zero() and
 * structural equality are trivial.
 */
class Poly {
 public:
  Poly() = default;  // zero

  static Poly constant(Integer c);
  static Poly variable(Variable v);
  static Poly term(Monomial m, Integer c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const std::map<Monomial, Integer>& terms() const { return terms_; }
  Integer coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Integer& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(int e) const;

  /* Replace each bound variable by its image; unbound variables persist. */
  Poly substitute(const std::map<Variable, Poly>& bindings) const;

  Integer sum_coefficients() const;

  /* Terms grouped by t-part: "(1 + 3y + 2y^2) + (2 + 3y + y^2)*t". */
  std::string to_string() const;
  std::string to_latex() const;

  /* Array of {"coeff": "...", "exponents": {"y": 2, ...}} records. */
  nlohmann::json to_json() const;
  static Poly from_json(const nlohmann::json& j);

 private:
  std::map<Monomial, Integer> terms_;
};

/* t^k * (1 - t)^m, expanded. */
Poly pow_binomial(int k, int m);

}  // namespace cfhp
