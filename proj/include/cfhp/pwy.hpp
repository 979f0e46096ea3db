#pragma once

#include <string>
#include <vector>

#include "cfhp/braid.hpp"
#include "cfhp/poset.hpp"

namespace cfhp {

/*
 * The labeled poset P_{w,Y} on bar positions {1..n} (element e of the
 * underlying poset is position e+1), with vertex labels Lambda.  Positive
 * label values are exactly the set Y.
 */
struct PwyPoset {
  Permutation w;
  std::vector<int> y;       // sorted label values
  FinitePoset poset;
  std::vector<int> lambda;  // lambda[p-1] = Lambda(position p), nonzero
};

/*
 * All admissible Y for w, i.e. Y inside {2..n+1} avoiding every
 * left-to-right minimum and containing every right-to-left minimum
 * except 1.  Sorted sets, enumerated smallest-first.
 */
std::vector<std::vector<int>> admissible_label_sets(const Permutation& w);

/* Walks values n+1 down to 2 and applies the five construction steps;
 * inadmissible Y raises invalid_argument naming the violated condition. */
PwyPoset build_pwy(const Permutation& w, const std::vector<int>& y);

/* Lin(P_{w,Y}) == { sigma : ino_set(w, sigma) == Y }. */
bool lin_equals_fiber(const Permutation& w, const std::vector<int>& y);

/* (Lambda(sigma(1)), ..., Lambda(sigma(n))); sigma must be a linear
 * extension. */
SignedWord vertex_word(const PwyPoset& p, const Permutation& sigma);

std::string pwy_to_dot(const PwyPoset& p);
nlohmann::json pwy_to_json(const PwyPoset& p);

}  // namespace cfhp
