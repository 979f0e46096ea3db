#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "cfhp/numerator.hpp"
#include "cfhp/verify.hpp"

using namespace cfhp;

namespace {

Permutation P(const char* s) { return *Permutation::parse(s); }

Poly load_golden(int n) {
  const char* dir = std::getenv("CFHP_GOLDEN_DIR");
  std::string path = std::string(dir ? dir : "tests/golden") +
                     "/numerator_n" + std::to_string(n) + ".json";
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "cannot open " << path);
  nlohmann::json j;
  in >> j;
  return Poly::from_json(j);
}

}  // namespace

TEST_CASE("all three methods reproduce the frozen numerators") {
  for (int n = 1; n <= 3; ++n) {
    Poly expect = load_golden(n);
    CHECK(numerator_via_chains(n) == expect);
    CHECK(numerator_via_rlabeling(n) == expect);
    CHECK(numerator_via_statistic(n) == expect);
  }
  CHECK(load_golden(2).to_string() ==
        "(1 + 3y + 2y^2) + (2 + 3y + y^2)*t");
}

TEST_CASE("methods agree mutually at n = 4") {
  Poly a = numerator_via_chains(4);
  CHECK(a == numerator_via_rlabeling(4));
  CHECK(a == numerator_via_statistic(4, 2));
  // total mass is (n+1)! n! = 2880
  CHECK(a.sum_coefficients() == 2880);
}

TEST_CASE("numerator reports") {
  NumeratorReport rep = numerator_report(2, {"all"});
  REQUIRE(rep.runs.size() == 3);
  CHECK(rep.agree);
  CHECK(rep.runs[0].method == "chains");
  CHECK(rep.runs[1].method == "rlabeling");
  CHECK(rep.runs[2].method == "statistic");
  CHECK(rep.value() == load_golden(2));

  nlohmann::json j = rep.to_json();
  CHECK(j["n"] == 2);
  CHECK(j["agree"] == true);
  REQUIRE(j["methods"].size() == 3);
  CHECK(Poly::from_json(j["methods"][0]["poly"]) == rep.value());

  NumeratorReport single = numerator_report(3, {"rlabeling"});
  REQUIRE(single.runs.size() == 1);
  CHECK(single.agree);
  CHECK(single.value() == load_golden(3));

  CHECK_THROWS_AS(numerator_report(2, {"frobnicate"}), std::invalid_argument);
}

TEST_CASE("enumeration budgets hold") {
  CHECK_THROWS_AS(numerator_via_chains(6), BudgetError);
  CHECK_THROWS_AS(numerator_via_rlabeling(6), BudgetError);
  CHECK_THROWS_AS(numerator_via_statistic(7), BudgetError);
  CHECK_THROWS_AS(numerator_via_chains(0), BudgetError);
  try {
    numerator_via_chains(9);
    CHECK(false);
  } catch (const BudgetError& e) {
    CHECK(e.requested() == 9);
    CHECK(e.limit() == 5);
  }
}

TEST_CASE("closed forms") {
  for (int n = 1; n <= 4; ++n) {
    ClosedFormReport rep = closed_form_checks(n);
    CHECK(rep.eulerian_ok);
    CHECK(rep.poincare_ok);
    CHECK(rep.at_y_one == rep.eulerian_scaled);
    CHECK(rep.at_t_zero == rep.poincare_product);
  }
  ClosedFormReport r3 = closed_form_checks(3);
  CHECK(r3.at_y_one.to_string() == "24 + 96t + 24t^2");
  CHECK(r3.at_t_zero.to_string() == "1 + 6y + 11y^2 + 6y^3");
}

TEST_CASE("refined identity at fixed words") {
  RefinedSides s = refined_sides(P("213"));
  Poly expect = Poly::term(Monomial::power(Variable::yi(3), 1), 1) +
                Poly::term(Monomial::power(Variable::yi(3), 1) *
                               Monomial::power(Variable::ti(1), 1),
                           1);
  CHECK(s.by_ascents == expect);
  CHECK(s.by_descents == expect);

  for (const Permutation& w : all_permutations(4)) {
    CHECK(refined_identity_check(w));
    CHECK(local_identity_check(w));
  }
  // smallest case: one bar, lambda = (+-2)
  for (const Permutation& w : all_permutations(2)) {
    CHECK(refined_identity_check(w));
    CHECK(local_identity_check(w));
  }
}

TEST_CASE("verify suite dispatch") {
  const auto& names = verify_suites();
  CHECK(names.size() == 10);
  for (const auto& name : names) {
    SuiteResult res = run_verify_suite(name, 2);
    CHECK(res.passed);
    CHECK(res.suite == name);
    CHECK(res.checks > 0);
    CHECK_FALSE(res.detail.empty());
  }

  CHECK(verify_budget("thm15") == 6);
  CHECK(verify_budget("bijection") == 4);
  CHECK_THROWS_AS(verify_budget("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(run_verify_suite("threeway", 6), BudgetError);
  CHECK_THROWS_AS(run_verify_suite("threeway", 0), BudgetError);
}
