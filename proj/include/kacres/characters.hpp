#pragma once
/*
 * Exact characters: classical Schur polynomials by semistandard tableau
 * enumeration (general weakly decreasing signatures via a determinant-power
 * shift), hook Schur polynomials by super-semistandard tableaux in the
 * alphabet x_{-m} < ... < x_{-1} < y_1 < ... < y_t, Kac module characters,
 * graded pieces of the (super)symmetric algebra on the odd block, and exact
 * decomposition into irreducible characters of the even subalgebra
 * gl(m) + gl(t) by extreme-monomial peeling.
 */

#include <map>
#include <vector>

#include "kacres/laurent.hpp"
#include "kacres/partition.hpp"
#include "kacres/weight.hpp"

namespace kacres {

// Schur polynomial s_sig(x_1..x_vars) as a (vars, 0)-block Laurent
// polynomial.  sig must be weakly decreasing with at most `vars` entries;
// negative entries are handled by shifting with a power of the determinant.
SparseLaurent schur_polynomial(const std::vector<long long>& sig, int vars);

// Character of the irreducible gl(m) x gl(tvars) module with highest weight
// w (negative block for gl(m), padded positive block for gl(tvars)).
SparseLaurent g0_irrep_character(const SuperWeight& w, int tvars);

// Dimension of the same module, with the positive block realized in
// gl(pos_rank).
long long g0_irrep_dim(const SuperWeight& w, int pos_rank);

// Character of the Kac module with dominant highest weight hw:
// prod_{i,j} (1 + x_i^{-1} y_j) times the top character.
SparseLaurent kac_character(const SuperWeight& hw, int tvars);

// Hook Schur polynomial of p in m x-variables and tvars y-variables
// (x-letters: rows weak, columns strict; y-letters: rows strict, columns
// weak).  Requires in_hook(p, m, tvars).
SparseLaurent hook_schur_polynomial(const Partition& p, int m, int tvars);

// Character of the k-th graded piece of the algebra generated by the
// m*tvars quantities x_i^{-1} y_j: elementary symmetric (exterior, the
// ordinary complex) when symmetric = false, complete homogeneous (the
// purely odd super analogue) when true.
SparseLaurent odd_graded_piece(int k, int m, int tvars, bool symmetric);

// Writes ch as a nonnegative integer combination of g0_irrep_character
// values by peeling the lexicographically extreme monomial.  Throws
// std::domain_error when ch is not such a combination (negative
// multiplicity or a non-dominant extreme term).
std::map<SuperWeight, long long> decompose_even(const SparseLaurent& ch);

// Alternating-sum comparison of the truncated layer-by-layer Kac characters
// against the hook Schur character, masked to doubled Z-degree at least
// z_degree2(natural(lambda)) - 2*depth on both sides.
struct EulerReport {
  bool pass = false;
  SparseLaurent residual;
  int tvars = 0;
  long long z2_cutoff = 0;
  long long layer_terms = 0;
  long long truncated_terms = 0;
};
EulerReport euler_characteristic_check(const Partition& p, int m, int n, int depth);

}  // namespace kacres
