#pragma once
/*
 * Bruhat-type partial orders on weights sharing one rho_gl-shifted value
 * multiset.  The defining move lowers a sequence by swapping two shifted
 * entries when the larger sits earlier; the fast membership test is the
 * sorted-prefix (rank-count) criterion, certified against a breadth-first
 * closure over lowering swaps.  The super order compares the images under
 * the natural involution.
 */

#include <optional>
#include <utility>
#include <vector>

#include "kacres/weight.hpp"

namespace kacres {

// Shifted window of u: coordinates plus the staircase, out to `length`
// merged positions.
std::vector<long long> shifted_window(const SuperWeight& u, int length);

// u <= v in the ordinary order.  False when the shifted multisets differ.
bool bruhat_leq(const SuperWeight& u, const SuperWeight& v);

// Transitive-closure reference: BFS from v over lowering swaps inside the
// common window.  Agrees with bruhat_leq; kept as the order of record.
bool bruhat_leq_closure(const SuperWeight& u, const SuperWeight& v);

// u <= v in the super order: compares natural(u) against natural(v).
// Both weights must lie in the dominant cone.
bool bruhat_leq_super(const SuperWeight& u, const SuperWeight& v);

// First comparable ordered pair (indices into ws) under the chosen order,
// or nullopt when the family is pairwise incomparable.  Equal weights count
// as comparable.
std::optional<std::pair<int, int>> first_comparable_pair(const std::vector<SuperWeight>& ws,
                                                         bool super_order);

}  // namespace kacres
