#pragma once

#include <vector>

#include "kacres/partition.hpp"
#include "kacres/realization.hpp"
#include "kacres/weight.hpp"

namespace kacres {

struct CohomologyComponent {
  SuperWeight weight;  // highest weight of an irreducible even-part constituent
  int multiplicity = 1;
};

struct CohomologyDegree {
  int degree = 0;
  long long cochain_dim = 0;
  long long rank_out = 0;  // rank of the differential leaving this degree
  long long rank_in = 0;   // rank of the differential entering this degree
  long long cohomology_dim = 0;
  std::vector<CohomologyComponent> components;
  std::vector<SuperWeight> expected;  // truncation-surviving coset layer, naturalized
  bool matches_expected = false;
};

struct CohomologyReport {
  int m = 1;
  int n = 1;
  Partition lambda;
  bool d_squared_zero = false;
  bool equivariant = false;      // differential commutes with the even action
  bool euler_consistent = false; // alternating dims agree with the rank ledger
  bool all_match = false;
  std::vector<CohomologyDegree> degrees;
};

// Cohomology of the abelian odd radical with coefficients in the irreducible
// module attached to the hook partition p, degree by degree up to kmax, with
// every degree decomposed into even-part constituents and compared against
// the coset layer of the same degree after truncation.
CohomologyReport odd_radical_cohomology(const Partition& p, int m, int n, int kmax,
                                        long long max_cochain = 50000);

}  // namespace kacres
