#pragma once
/*
 * Integer partitions and the half-integer bookkeeping used by the hook and
 * content identities.  A partition is a weakly decreasing vector of positive
 * ints; the empty partition is {}.  Half-integers are carried as doubled
 * ints (3/2 travels as 3), squared half-integers as quadrupled ints, so all
 * arithmetic stays exact.
 */

#include <string>
#include <vector>

namespace kacres {

using Partition = std::vector<int>;

bool is_partition(const Partition& p);
void require_partition(const Partition& p);

long long partition_size(const Partition& p);

int part_at(const Partition& p, int i);  // 1-based, 0 beyond the last row

Partition conjugate(const Partition& p);

// True when the part after the first m rows is at most n, i.e. the diagram
// fits in the (m,n)-hook.  n < 0 means unbounded and always fits.
bool in_hook(const Partition& p, int m, int n);

// For i = 1..N:  A collects p'_i - i + 1/2 where positive, B collects
// i - p_i - 1/2 where p_i - i + 1/2 is negative.  Both doubled.  Whenever
// N >= len(p) and N >= p_1, A and B are disjoint with union
// {1/2, 3/2, ..., N - 1/2}.
struct HalfIntegerSets {
  std::vector<int> a2;
  std::vector<int> b2;
};
HalfIntegerSets aux_half_integer_sets(const Partition& p, int N);

// sum_{j=1..N} [(p_j - j + 1/2)^2 + (p'_j - j + 1/2)^2] against
// 2 sum_{j=1..N} (j - 1/2)^2, both in quadrupled units.
// Requires N >= len(p) and N >= p_1.
struct ContentSquareIdentity {
  long long lhs4 = 0;
  long long rhs4 = 0;
  bool ok() const { return lhs4 == rhs4; }
};
ContentSquareIdentity content_square_identity(const Partition& p, int N);

// Text form: comma-separated decreasing positive ints, "" for the empty
// partition.  parse rejects anything else.
Partition parse_partition(const std::string& text);
std::string format_partition(const Partition& p);

// All partitions of exactly `total` (total >= 0), in lexicographically
// decreasing order; partitions_of(0) = { {} }.
std::vector<Partition> partitions_of(int total);

// Number of standard Young tableaux of shape p, by the hook length formula.
long long standard_tableau_count(const Partition& p);

}  // namespace kacres
