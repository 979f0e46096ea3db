#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cfhp/perms.hpp"

using namespace cfhp;

TEST_CASE("permutation parsing") {
  auto w = Permutation::parse("215463");
  REQUIRE(w.has_value());
  CHECK(w->size() == 6);
  CHECK((*w)(1) == 2);
  CHECK((*w)(6) == 3);
  CHECK(w->position_of(6) == 5);
  CHECK(w->to_string() == "215463");

  auto v = Permutation::parse("2,1,5,4,6,3");
  REQUIRE(v.has_value());
  CHECK(*v == *w);

  auto big = Permutation::parse("10,2,3,4,5,6,7,8,9,1");
  REQUIRE(big.has_value());
  CHECK(big->size() == 10);
  CHECK(big->to_string() == "10,2,3,4,5,6,7,8,9,1");

  CHECK_FALSE(Permutation::parse("").has_value());
  CHECK_FALSE(Permutation::parse("2154").has_value());   // misses 3
  CHECK_FALSE(Permutation::parse("11").has_value());     // repeated
  CHECK_FALSE(Permutation::parse("120").has_value());    // zero digit
  CHECK_FALSE(Permutation::parse("1,").has_value());
  CHECK_FALSE(Permutation::parse("a,b").has_value());
  CHECK_FALSE(Permutation::parse("1,1,2").has_value());

  CHECK(Permutation::identity(4).to_string() == "1234");
  CHECK_THROWS_AS(Permutation({2, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("signed words") {
  SignedWord a({-2, 6, 5, -4, 3});
  CHECK(a.size() == 5);
  CHECK(a(1) == -2);
  CHECK(a(4) == -4);
  CHECK(a.to_string() == "(-2, 6, 5, -4, 3)");
  CHECK_THROWS_AS(SignedWord({1, 0, 2}), std::invalid_argument);
}

TEST_CASE("descents, ascents, minima") {
  Permutation w = *Permutation::parse("215463");
  CHECK(descent_set(w) == std::vector<int>{1, 3, 5});
  CHECK(des(w) == 3);

  SignedWord lam({-2, 6, 5, -4, 3});
  CHECK(descent_set(lam) == std::vector<int>{2, 3});
  CHECK(ascent_set(lam) == std::vector<int>{1, 4});
  CHECK(asc(lam) == 2);

  CHECK(ltr_minima(w) == std::vector<int>{1, 2});
  CHECK(rtl_minima(w) == std::vector<int>{1, 3});

  Permutation id = Permutation::identity(5);
  CHECK(descent_set(id).empty());
  CHECK(ltr_minima(id) == std::vector<int>{1});
  CHECK(rtl_minima(id) == std::vector<int>{1, 2, 3, 4, 5});

  // on any word, positions 1..len-1 split into ascents and descents
  // (entries of a permutation are distinct, so no ties)
  for (const Permutation& u : all_permutations(4)) {
    auto d = descent_set(u);
    auto a = ascent_set(u.oneline());
    CHECK(d.size() + a.size() == 3);
  }
}

TEST_CASE("permutation enumeration") {
  auto s3 = all_permutations(3);
  REQUIRE(s3.size() == 6);
  CHECK(std::is_sorted(s3.begin(), s3.end()));
  CHECK(s3.front() == Permutation::identity(3));
  CHECK(s3.back() == *Permutation::parse("321"));

  int count = 0;
  for_each_permutation(4, [&](const std::vector<int>&) { ++count; });
  CHECK(count == 24);

  CHECK_THROWS_AS(all_permutations(9), BudgetError);
  CHECK_THROWS_AS(all_permutations(0), BudgetError);
  CHECK_THROWS_AS(for_each_permutation(11, [](const std::vector<int>&) {}),
                  BudgetError);
}

TEST_CASE("eulerian polynomials") {
  Poly t = Poly::variable(Variable::t());
  Poly one = Poly::constant(1);
  CHECK(eulerian_polynomial(1) == one);
  CHECK(eulerian_polynomial(2) == one + t);
  CHECK(eulerian_polynomial(3) == one + Poly::constant(4) * t + t.pow(2));
  CHECK(eulerian_polynomial(4) ==
        one + Poly::constant(11) * t + Poly::constant(11) * t.pow(2) +
            t.pow(3));

  // recompute E_5 from scratch right here
  std::vector<int> w(5);
  std::iota(w.begin(), w.end(), 1);
  Poly expect;
  do {
    int d = 0;
    for (int i = 0; i + 1 < 5; ++i)
      if (w[i] > w[i + 1]) ++d;
    expect.add_term(Monomial::power(Variable::t(), d), 1);
  } while (std::next_permutation(w.begin(), w.end()));
  CHECK(eulerian_polynomial(5) == expect);
  CHECK(eulerian_polynomial(5).sum_coefficients() == 120);

  CHECK_THROWS_AS(eulerian_polynomial(9), BudgetError);
  CHECK_THROWS_AS(eulerian_polynomial(0), BudgetError);
}
