#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kacres/laurent.hpp"
#include "kacres/ratmat.hpp"
#include "kacres/weight.hpp"

namespace kacres {

// Generators are indexed by pairs (a, b) of nonzero block indices: negative
// entries address the first block, positive ones the second.  The pair (a, b)
// stands for the elementary matrix with a 1 in row a, column b.
using GenKey = std::pair<int, int>;

// 1 when the elementary matrix straddles the two blocks, 0 otherwise.
int generator_parity(const GenKey& g);

// Superbracket of two elementary matrices, as a list of (generator, coeff):
// [E_ab, E_cd} = delta_bc E_ad - (-1)^{p(ab) p(cd)} delta_da E_cb.
// Terms with a == b on output are kept (diagonal generators are meaningful);
// the list is empty when both deltas vanish.
std::vector<std::pair<GenKey, long long>> elementary_bracket(const GenKey& x, const GenKey& y);

// Block indices in line order: -m..-1 then 1..n.
std::vector<int> block_index_order(int m, int n);

// Simple raisings (i, succ i) along the line order; the (-1, 1) pair is odd.
std::vector<GenKey> simple_raisings(int m, int n);
// The same list without the odd pair.
std::vector<GenKey> even_simple_raisings(int m, int n);

// One irreducible gl(r) module with an explicit basis.  Row/column indices of
// the generator matrices are local positions 1..r; weights are stored as
// length-r integer vectors in position order.
struct BlockIrrep {
  int r = 1;
  std::vector<std::vector<long long>> weights;
  // E_pq at slot (p-1)*r + (q-1).
  std::vector<RatMat> gens;
  long long dim() const { return static_cast<long long>(weights.size()); }
  const RatMat& gen(int p, int q) const;
};

// Builds the irreducible gl(r) module with highest weight sig (weakly
// decreasing, length <= r, entries possibly negative) inside a tensor product
// of exterior powers twisted by a power of the determinant.  Throws
// guard_error when the target dimension exceeds max_dim.
BlockIrrep build_gl_irrep(int r, const std::vector<long long>& sig, long long max_dim = 5000);

// Weyl dimension of the gl(r) module with the given highest weight.
long long gl_irrep_dim(int r, const std::vector<long long>& sig);

// A finite-dimensional module over the full matrix superalgebra of block
// sizes (m, n), given by one exact matrix per elementary generator.
struct ModuleRealization {
  int m = 1;
  int n = 1;
  std::vector<SuperWeight> weights;  // one per basis vector
  std::vector<int> parity;           // 0 even, 1 odd
  std::vector<std::string> labels;
  std::map<GenKey, RatMat> gens;     // every (a, b) with a, b in the index set
  long long dim() const { return static_cast<long long>(weights.size()); }
  const RatMat& gen(int a, int b) const;
};

// Kac module with the given dominant integral highest weight (finite n).
// Basis: (subset of odd lowering generators, applied in a fixed order) tensor
// (basis vector of the even highest-weight module).  Throws guard_error when
// 2^{mn} * dim exceeds max_dim.
ModuleRealization build_kac_module(const SuperWeight& hw, long long max_dim = 5000);

// A one-dimensional space of vectors killed by the supplied raisings.
struct SingularLine {
  SuperWeight weight;
  std::vector<mpq_class> coords;  // length = module dim, echelon-normalized
};

// All singular lines: per weight space, the joint kernel of the raisings.
// Lines are returned sorted by weight; a k-dimensional kernel yields k lines.
std::vector<SingularLine> singular_vectors(const ModuleRealization& mod,
                                           const std::vector<GenKey>& raisings);

// Smallest subspace containing the seed columns and stable under every
// generator.  Returns a matrix whose columns are an echelonized basis.
RatMat submodule_closure(const ModuleRealization& mod, const RatMat& seeds);

struct QuotientReport {
  ModuleRealization quotient;
  long long maximal_dim = 0;               // dim of the submodule divided out
  bool generated_by_singulars = false;     // quotient has no proper singular line
  std::vector<SingularLine> proper_lines;  // singular lines below the top weight
};

// Quotient by the submodule generated by all proper singular lines, with a
// certificate that nothing proper survives.  top is the highest weight.
QuotientReport irreducible_quotient(const ModuleRealization& mod, const SuperWeight& top);

// Character as a Laurent polynomial in (m, n) blocks of variables.
SparseLaurent module_character(const ModuleRealization& mod);

// Verifies [g, h} = gh -+ hg on every pair of generator matrices.
bool check_superbracket(const ModuleRealization& mod);

}  // namespace kacres
