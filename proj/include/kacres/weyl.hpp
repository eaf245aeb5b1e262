#pragma once
/*
 * Length-graded minimal-length right-coset representatives for the block
 * subgroup inside the (finitary) permutation group of the merged index line
 * -m < ... < -1 < 1 < 2 < ..., acting on weights through the dot action
 * w . u = w(u + rho_gl) - rho_gl.
 *
 * On the merged line rho_gl is the staircase m+1-p at linear position p, so
 * when the flattened weight is a partition the shifted sequence is strictly
 * decreasing.  A coset is then the choice of which m shifted values land in
 * the negative block; the representative's Coxeter length is the crossing
 * number of that choice.  Layers are enumerated from m-subsets of an initial
 * segment, and certified against a brute-force scan of the full symmetric
 * group on a truncated line.
 */

#include <map>
#include <vector>

#include "kacres/weight.hpp"

namespace kacres {

// Swaps the shifted coordinates at index j and its successor on the merged
// line (the successor of -1 is 1).  Returns the raw result, which need not
// be dominant.
SuperWeight dot_reflect(const SuperWeight& u, int j);

using CosetLayers = std::map<int, std::vector<SuperWeight>>;

// All dot-action images w . lambda of minimal-length coset representatives
// with length k <= kmax, keyed by k.  lambda's flattened sequence must be a
// partition; results are dominant-cone weights with n = kInfiniteN, sorted
// canonically within each layer.
CosetLayers minimal_coset_layers(const SuperWeight& lambda, int kmax);

// Brute-force certification: scans all permutations of the first m+N merged
// positions, keeps those whose inversions all cross the block boundary
// (minimal-length coset representatives), grades by inversion count, and
// applies the dot action.  Requires m+N <= 8.  Must agree with
// minimal_coset_layers restricted to positive support <= N.
CosetLayers minimal_coset_layers_bruteforce(const SuperWeight& lambda, int N, int kmax);

// True when the Kac module attached to the weight survives at finite rank n,
// i.e. its first positive coordinate is at most n.
bool survives_truncation(const SuperWeight& w, int n);

// Filters every layer by survives_truncation.
CosetLayers truncate_layers(const CosetLayers& layers, int n);

}  // namespace kacres
