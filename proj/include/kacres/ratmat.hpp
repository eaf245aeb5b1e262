#pragma once
/*
 * Dense matrices over exact rationals (GMP mpq) with reduced row echelon
 * elimination, rank and nullspace.  Elimination has a serial reference
 * implementation and an OpenMP row-parallel variant; the public entry point
 * dispatches on size and both produce identical matrices.
 */

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace kacres {

struct RatMat {
  int rows = 0;
  int cols = 0;
  std::vector<mpq_class> a;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, mpq_class(0)) {}

  mpq_class& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const mpq_class& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  bool operator==(const RatMat& o) const = default;
};

RatMat rat_identity(int n);
RatMat rat_mul(const RatMat& x, const RatMat& y);
RatMat rat_add(const RatMat& x, const RatMat& y);
RatMat rat_sub(const RatMat& x, const RatMat& y);
RatMat rat_scale(const RatMat& x, const mpq_class& c);
bool rat_is_zero(const RatMat& x);

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref_serial(RatMat& x);
std::vector<int> rref_parallel(RatMat& x);
std::vector<int> rref(RatMat& x);

int rat_rank(RatMat x);

// Columns form a basis of the right nullspace, echelonized with free
// variables in increasing column order.
RatMat rat_nullspace(const RatMat& x);

// Matrix times column vector.
std::vector<mpq_class> rat_matvec(const RatMat& x, const std::vector<mpq_class>& v);

// Growing echelonized span.  Rows keep unit pivots and stay fully reduced,
// and every row records its expansion over the vectors that grew the span,
// so members can be expressed in the inserted basis exactly.
class RatSpan {
 public:
  explicit RatSpan(int ambient);

  int ambient() const { return ambient_; }
  int size() const { return static_cast<int>(rows_.size()); }
  const std::vector<int>& pivots() const { return pivots_; }
  const std::vector<mpq_class>& row(int t) const { return rows_[t]; }

  // Inserts v; true when the span grew (v then counts as an inserted vector).
  bool insert(const std::vector<mpq_class>& v);

  // Coordinates of v over the inserted vectors, or nullopt outside the span.
  std::optional<std::vector<mpq_class>> express(const std::vector<mpq_class>& v) const;

  // v minus its span component along the pivot coordinates.
  std::vector<mpq_class> reduce(const std::vector<mpq_class>& v) const;

 private:
  int ambient_ = 0;
  std::vector<std::vector<mpq_class>> rows_;
  std::vector<std::vector<mpq_class>> combos_;  // rows_[t] = sum combos_[t][s] * inserted_s
  std::vector<int> pivots_;
};

}  // namespace kacres
