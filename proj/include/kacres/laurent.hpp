#pragma once
/*
 * Sparse multivariate Laurent polynomials with exact 64-bit integer
 * coefficients.  Variables come in two named blocks: mvars x-variables
 * (exponents of any sign) followed by tvars y-variables.  Terms live in an
 * ordered map keyed by the exponent vector, so iteration order, arithmetic
 * and serialization are deterministic.  Coefficient overflow throws instead
 * of wrapping.
 *
 * Multiplication has a serial reference implementation and an OpenMP
 * variant over row partitions of the left factor; the public entry point
 * dispatches on problem size.  Both produce identical maps.
 */

#include <map>
#include <string>
#include <vector>

namespace kacres {

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

struct SparseLaurent {
  int mvars = 0;
  int tvars = 0;
  std::map<std::vector<int>, long long> terms;  // exponents -> coefficient, no zeros

  int width() const { return mvars + tvars; }
  bool is_zero() const { return terms.empty(); }
};

SparseLaurent laurent_zero(int mvars, int tvars);
SparseLaurent laurent_one(int mvars, int tvars);
SparseLaurent laurent_monomial(int mvars, int tvars, std::vector<int> exponents, long long coeff);

void add_term(SparseLaurent& p, const std::vector<int>& exponents, long long coeff);

SparseLaurent add(const SparseLaurent& a, const SparseLaurent& b);
SparseLaurent sub(const SparseLaurent& a, const SparseLaurent& b);
SparseLaurent scale(const SparseLaurent& a, long long c);

SparseLaurent mul_serial(const SparseLaurent& a, const SparseLaurent& b);
SparseLaurent mul_parallel(const SparseLaurent& a, const SparseLaurent& b);
SparseLaurent mul(const SparseLaurent& a, const SparseLaurent& b);

// Sum of coefficients, i.e. the value at x = y = 1 (a dimension when the
// polynomial is a character).
long long eval_at_ones(const SparseLaurent& p);

// Doubled Z-degree of one exponent vector: sum of x-exponents minus sum of
// y-exponents.
long long term_z_degree2(const std::vector<int>& exponents, int mvars);

// Keeps the terms whose doubled Z-degree is >= z2_min.
SparseLaurent mask_min_z2(const SparseLaurent& p, long long z2_min);

// Reinterprets the variable blocks without touching the exponents
// (new_mvars + new_tvars must equal the current width).
SparseLaurent resplit(const SparseLaurent& p, int new_mvars, int new_tvars);

// Human-readable sum of monomials in x_{-m}..x_{-1}, y_1..y_t, e.g.
// "1 + x-1^-1*y1".  Deterministic (map order).
std::string format_laurent(const SparseLaurent& p);

}  // namespace kacres
