#include <doctest.h>

#include <algorithm>

#include "cfhp/braid.hpp"

using namespace cfhp;

namespace {

Permutation P(const char* s) { return *Permutation::parse(s); }

/* maximal chain count of the partition lattice on m points, independently:
 * each step merges one of C(b,2) block pairs, b = current block count */
long long maxchain_count(int m) {
  long long f = 1;
  for (int b = m; b >= 2; --b) f *= static_cast<long long>(b) * (b - 1) / 2;
  return f;
}

}  // namespace

TEST_CASE("set partitions and compositions") {
  SetPartition p({{3, 2}, {1}});
  CHECK(p.to_string() == "1|23");
  CHECK(p.num_blocks() == 2);
  CHECK(p.ground_size() == 3);
  CHECK(SetPartition::singletons(3).to_string() == "1|2|3");
  CHECK_THROWS_AS(SetPartition({{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition({{1}, {3}}), std::invalid_argument);

  SetComposition c({{5, 2, 1}, {3, 4, 6}});
  CHECK(c.to_string() == "125|346");
  CHECK(c.forget() == SetPartition({{1, 2, 5}, {3, 4, 6}}));
  CHECK(SetComposition::singletons(P("215463")).to_string() ==
        "2|1|5|4|6|3");
  // block order is positional, so these differ as compositions
  SetComposition c2({{3, 4, 6}, {5, 2, 1}});
  CHECK_FALSE(c == c2);
  CHECK(c.forget() == c2.forget());
}

TEST_CASE("partition lattice structure") {
  PartitionLattice pi2 = partition_lattice(2);
  CHECK(pi2.elements.size() == 5);  // Bell(3)
  CHECK(pi2.poset.maximal_chains().size() == 3);
  CHECK(pi2.poset.chains_avoiding_bottom().size() == 8);

  int bot = pi2.poset.bottom(), top = pi2.poset.top();
  CHECK(pi2.elements[bot].to_string() == "1|2|3");
  CHECK(pi2.elements[top].to_string() == "123");
  CHECK(pi2.poset.rank(bot) == 0);
  CHECK(pi2.poset.rank(top) == 2);
  CHECK(pi2.poset.mobius(bot, top) == 2);  // (-1)^2 2!

  // R-labels on all six covers
  auto lab = [&](const char* a, const char* b) {
    return pi2.edge_label.at(
        {pi2.index_of.at(a), pi2.index_of.at(b)});
  };
  CHECK(lab("1|2|3", "12|3") == 2);
  CHECK(lab("1|2|3", "13|2") == 3);
  CHECK(lab("1|2|3", "1|23") == 3);
  CHECK(lab("12|3", "123") == 3);
  CHECK(lab("13|2", "123") == 2);
  CHECK(lab("1|23", "123") == 2);

  Poly y = Poly::variable(Variable::y());
  CHECK(pi2.poset.interval_poincare(bot, top, Variable::y()) ==
        (Poly::constant(1) + y) * (Poly::constant(1) + Poly::constant(2) * y));

  PartitionLattice pi3 = partition_lattice(3);
  CHECK(pi3.elements.size() == 15);  // Bell(4)
  CHECK(pi3.poset.maximal_chains().size() == 18);
  CHECK(pi3.poset.mobius(pi3.poset.bottom(), pi3.poset.top()) == -6);

  PartitionLattice pi4 = partition_lattice(4);
  CHECK(pi4.elements.size() == 52);  // Bell(5)
  CHECK(static_cast<long long>(pi4.poset.maximal_chains().size()) ==
        maxchain_count(5));
  CHECK(maxchain_count(4) == 18);

  CHECK_THROWS_AS(partition_lattice(7), BudgetError);
  CHECK_THROWS_AS(partition_lattice(0), BudgetError);
}

TEST_CASE("composition poset structure") {
  CompositionPoset s2 = composition_poset(2);
  CHECK(s2.elements.size() == 13);  // ordered set partitions of 3 points
  // the 3! singleton compositions are the minimal elements
  int minimal = 0;
  for (int e = 0; e < s2.poset.size(); ++e)
    if (s2.poset.lower_covers()[e].empty()) ++minimal;
  CHECK(minimal == 6);
  CHECK(s2.poset.top() ==
        s2.index_of.at(SetComposition({{1, 2, 3}}).to_string()));

  CompositionPoset s3 = composition_poset(3);
  CHECK(s3.elements.size() == 75);

  CHECK_THROWS_AS(composition_poset(6), BudgetError);
}

TEST_CASE("bar deletion engine") {
  BarMerger merger({2, 1, 5, 4, 6, 3});
  CHECK(merger.delete_bar(1) == -2);
  CHECK(merger.delete_bar(4) == 6);
  CHECK(merger.delete_bar(2) == 5);
  CHECK(merger.delete_bar(5) == -4);
  CHECK(merger.delete_bar(3) == 3);
  merger.reset();
  CHECK(merger.delete_bar(1) == -2);
  CHECK(merger.delete_bar(4) == 6);

  // bars live strictly between positions, so 0 and the word length are out
  CHECK_THROWS_AS(merger.delete_bar(0), std::invalid_argument);
  CHECK_THROWS_AS(merger.delete_bar(6), std::invalid_argument);
  CHECK_THROWS_AS(merger.delete_bar(-1), std::invalid_argument);
}

TEST_CASE("bar deletion chain of the running example") {
  Permutation w = P("215463"), sigma = P("14253");
  auto chain = chain_from_pair(w, sigma);
  REQUIRE(chain.size() == 6);
  const char* expect[] = {"2|1|5|4|6|3", "12|5|4|6|3", "12|5|46|3",
                          "125|46|3",    "125|346",    "123456"};
  for (int i = 0; i < 6; ++i) CHECK(chain[i].to_string() == expect[i]);

  CHECK(lambda(w, sigma) == SignedWord({-2, 6, 5, -4, 3}));
  CHECK(ino(w, sigma) == 3);
  CHECK(ino_set(w, sigma) == std::vector<int>{3, 5, 6});

  FlatChain fc = pair_to_flat_chain(w, sigma);
  REQUIRE(fc.chain.size() == 6);
  for (int i = 0; i < 6; ++i)
    CHECK(fc.chain[i] == chain[i].forget());
  CHECK(fc.y_positions == std::vector<int>{2, 3, 5});

  // sigma must permute one fewer point than w
  CHECK_THROWS_AS(lambda(P("123"), P("123")), std::invalid_argument);
}

TEST_CASE("all signed label words for n = 2") {
  struct Row {
    const char* w;
    const char* sigma;
    std::vector<int> lam;
  };
  const Row rows[] = {
      {"123", "12", {2, 3}},    {"123", "21", {3, 2}},
      {"132", "12", {3, 2}},    {"132", "21", {-3, 2}},
      {"213", "12", {-2, 3}},   {"213", "21", {3, -2}},
      {"231", "12", {3, -2}},   {"231", "21", {-3, -2}},
      {"312", "12", {-3, 2}},   {"312", "21", {2, -3}},
      {"321", "12", {-3, -2}},  {"321", "21", {-2, -3}},
  };
  for (const Row& r : rows)
    CHECK(lambda(P(r.w), P(r.sigma)) == SignedWord(r.lam));
}

TEST_CASE("last bar positions of the running example") {
  Permutation w = P("215463"), sigma = P("14253");

  BarPositions b6 = last_bar_positions(w, sigma, 6);
  CHECK(b6.ell == 4);
  CHECK(b6.r == 6);
  CHECK(b6.ell_sigma == 2);
  CHECK(b6.r_sigma == 4);

  BarPositions b5 = last_bar_positions(w, sigma, 5);
  CHECK(b5.ell == 2);
  CHECK(b5.r == 4);
  CHECK(b5.ell_sigma == 3);
  CHECK(b5.r_sigma == 5);

  BarPositions b4 = last_bar_positions(w, sigma, 4);
  CHECK(b4.ell == 2);
  CHECK(b4.r == 6);
  CHECK(b4.ell_sigma == 5);
  CHECK(b4.r_sigma == 4);

  BarPositions b3 = last_bar_positions(w, sigma, 3);
  CHECK(b3.ell == 2);
  CHECK_FALSE(b3.r.has_value());
  CHECK(b3.ell_sigma == 5);
  CHECK_FALSE(b3.r_sigma.has_value());

  BarPositions b2 = last_bar_positions(w, sigma, 2);
  CHECK_FALSE(b2.ell.has_value());
  CHECK(b2.r == 2);
  CHECK_FALSE(b2.ell_sigma.has_value());
  CHECK(b2.r_sigma == 1);

  CHECK_THROWS_AS(last_bar_positions(w, sigma, 1), std::invalid_argument);
  CHECK_THROWS_AS(last_bar_positions(w, sigma, 7), std::invalid_argument);
}
