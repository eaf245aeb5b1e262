#pragma once
/*
 * Weights for the general linear superalgebra gl(m|n) and for the comparison
 * algebra gl(m+n) sharing the same index set {-m,...,-1,1,...,n}.  The
 * positive block may be unbounded (n = kInfiniteN), in which case the
 * positive coordinates form a finitely supported sequence.
 *
 * Two bilinear forms live on these weights: the ordinary gl form summing all
 * coordinate products, and the super form where positive-block coordinates
 * contribute with a minus sign.  Each has its own Weyl vector given by
 * rho_gl(j) = -j for j < 0 and 1-j for j > 0, and rho_super(j) = -j for all
 * j.  The "natural" involution conjugates the positive block of a weight
 * whose positive part is a partition.
 *
 * Degrees along the diagonal Z-grading are half-integers and are returned
 * doubled, keeping everything in exact integer arithmetic.
 */

#include <string>
#include <vector>

#include "kacres/partition.hpp"

namespace kacres {

inline constexpr int kInfiniteN = -1;

struct SuperWeight {
  int m = 1;             // negative-block length, >= 1
  int n = kInfiniteN;    // positive-block length, kInfiniteN when unbounded
  std::vector<long long> neg;  // exactly m entries, coordinates -m..-1 in order
  std::vector<long long> pos;  // support of coordinates 1,2,...; no trailing zeros

  bool operator==(const SuperWeight& o) const = default;
};

// Deterministic total order (m, n, neg, pos), used for canonical sorting.
bool operator<(const SuperWeight& a, const SuperWeight& b);

// Validating constructor: strips trailing zeros of pos, checks the support
// fits when n is finite.
SuperWeight make_weight(int m, int n, std::vector<long long> neg, std::vector<long long> pos);

SuperWeight with_n(const SuperWeight& w, int n);

// Coordinate at index i in {-m..-1} union {1..n}; 0 beyond the stored support.
long long coord(const SuperWeight& w, int i);

// Negative block weakly decreasing and positive block a partition.
bool in_dominant_cone(const SuperWeight& w);

// Both blocks weakly decreasing (positive block as the padded sequence).
bool in_dominant_integral(const SuperWeight& w);

// Conjugates the positive block; requires in_dominant_cone.  An involution
// preserving both the coordinate sum and the doubled Z-degree.
SuperWeight natural(const SuperWeight& w);

long long rho_gl(int i);
long long rho_super(int i);

// (u|v) = sum u_i v_i over all coordinates.
long long bilinear_gl(const SuperWeight& u, const SuperWeight& v);
// (u|v) = sum_{i<0} u_i v_i - sum_{j>0} u_j v_j.
long long bilinear_super(const SuperWeight& u, const SuperWeight& v);

// (u + 2 rho | u) for the respective form.
long long casimir_gl(const SuperWeight& u);
long long casimir_super(const SuperWeight& u);

// (sum of negative coordinates - sum of positive coordinates), i.e. twice
// the Z-degree.
long long z_degree2(const SuperWeight& w);

// Views a partition inside the (m,n)-hook as the weight whose negative block
// is the first m rows and whose positive support is the rest.  The result
// always carries n = kInfiniteN; it is a dominant-cone weight of gl(m|inf).
SuperWeight split_hook(const Partition& p, int m, int n);

// Inverse of split_hook on its image: the full flattened sequence, which must
// be a partition.
Partition flatten_to_partition(const SuperWeight& w);

// Text form "a,b,...|c,d,...": negative block, bar, positive support (the
// part after the bar may be empty).  Parsed weights carry n = kInfiniteN.
SuperWeight parse_weight(const std::string& text);
std::string format_weight(const SuperWeight& w);

// Half-integer rendering of a doubled value: "3" or "5/2".
std::string format_half(long long doubled);

}  // namespace kacres
