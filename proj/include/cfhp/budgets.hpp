#pragma once

/* Hard enumeration budgets; requests beyond them raise BudgetError. */

namespace cfhp::budgets {

inline constexpr int kPermutationStream = 10;       // for_each_permutation(m, ...)
inline constexpr int kPermutationMaterialize = 8;   // all_permutations(m)
inline constexpr int kEulerian = 8;                 // eulerian_polynomial(n)
inline constexpr int kPartitionLattice = 6;         // partition_lattice(n)
inline constexpr int kCompositionPoset = 5;         // composition_poset(n)
inline constexpr int kNumeratorChains = 5;          // numerator_via_chains(n)
inline constexpr int kNumeratorRLabeling = 5;       // numerator_via_rlabeling(n)
inline constexpr int kNumeratorStatistic = 6;       // numerator_via_statistic(n)
inline constexpr int kRefinedIdentity = 6;          // refined_identity_check, n = |w|-1
inline constexpr int kLocalIdentity = 6;            // local_identity_check
inline constexpr int kLemmaSweep = 5;               // label-word lemma sweeps
inline constexpr int kPwySweep = 5;                 // poset-fiber sweeps over S_{n+1}
inline constexpr int kQsymSweep = 4;                // quasisymmetric sweeps
inline constexpr int kBijection = 4;                // pair <-> (chain, Y) bijection sweep
inline constexpr int kRLabelingCheck = 4;           // unique-rising-chain check on Pi_n

}  // namespace cfhp::budgets
