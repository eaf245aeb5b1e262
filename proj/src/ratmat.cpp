#include "kacres/ratmat.hpp"

#include <stdexcept>

namespace kacres {

RatMat rat_identity(int n) {
  RatMat x(n, n);
  for (int i = 0; i < n; ++i) x.at(i, i) = 1;
  return x;
}

RatMat rat_mul(const RatMat& x, const RatMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("rat_mul: shape mismatch");
  RatMat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      const mpq_class& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        if (y.at(k, j) != 0) z.at(i, j) += v * y.at(k, j);
      }
    }
  }
  return z;
}

RatMat rat_add(const RatMat& x, const RatMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("rat_add: shape mismatch");
  RatMat z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

RatMat rat_sub(const RatMat& x, const RatMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("rat_sub: shape mismatch");
  RatMat z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

RatMat rat_scale(const RatMat& x, const mpq_class& c) {
  RatMat z = x;
  for (auto& v : z.a) v *= c;
  return z;
}

bool rat_is_zero(const RatMat& x) {
  for (const auto& v : x.a)
    if (v != 0) return false;
  return true;
}

namespace {

template <bool Parallel>
std::vector<int> rref_impl(RatMat& x) {
  std::vector<int> pivots;
  int lead = 0;
  for (int col = 0; col < x.cols && lead < x.rows; ++col) {
    int pivot = -1;
    for (int r = lead; r < x.rows; ++r) {
      if (x.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != lead) {
      for (int j = 0; j < x.cols; ++j) std::swap(x.at(pivot, j), x.at(lead, j));
    }
    mpq_class inv = 1 / x.at(lead, col);
    for (int j = col; j < x.cols; ++j) x.at(lead, j) *= inv;
    x.at(lead, col) = 1;

    if constexpr (Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
      for (int r = 0; r < x.rows; ++r) {
        if (r == lead || x.at(r, col) == 0) continue;
        mpq_class f = x.at(r, col);
        for (int j = col; j < x.cols; ++j) x.at(r, j) -= f * x.at(lead, j);
        x.at(r, col) = 0;
      }
#else
      for (int r = 0; r < x.rows; ++r) {
        if (r == lead || x.at(r, col) == 0) continue;
        mpq_class f = x.at(r, col);
        for (int j = col; j < x.cols; ++j) x.at(r, j) -= f * x.at(lead, j);
        x.at(r, col) = 0;
      }
#endif
    } else {
      for (int r = 0; r < x.rows; ++r) {
        if (r == lead || x.at(r, col) == 0) continue;
        mpq_class f = x.at(r, col);
        for (int j = col; j < x.cols; ++j) x.at(r, j) -= f * x.at(lead, j);
        x.at(r, col) = 0;
      }
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

}  // namespace

std::vector<int> rref_serial(RatMat& x) { return rref_impl<false>(x); }

std::vector<int> rref_parallel(RatMat& x) { return rref_impl<true>(x); }

std::vector<int> rref(RatMat& x) {
  constexpr long long kParallelThreshold = 64 * 64;
  if (static_cast<long long>(x.rows) * x.cols >= kParallelThreshold) return rref_parallel(x);
  return rref_serial(x);
}

int rat_rank(RatMat x) { return static_cast<int>(rref(x).size()); }

RatMat rat_nullspace(const RatMat& x) {
  RatMat r = x;
  std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(x.cols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<int> free_cols;
  for (int c = 0; c < x.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  RatMat ns(x.cols, static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) ns.at(free_cols[k], static_cast<int>(k)) = 1;
  for (size_t pi = 0; pi < pivots.size(); ++pi) {
    for (size_t k = 0; k < free_cols.size(); ++k) {
      // Row pi of the echelon form reads x_pivot + sum coeff * x_free = 0.
      ns.at(pivots[pi], static_cast<int>(k)) = -r.at(static_cast<int>(pi), free_cols[k]);
    }
  }
  return ns;
}

std::vector<mpq_class> rat_matvec(const RatMat& x, const std::vector<mpq_class>& v) {
  if (static_cast<int>(v.size()) != x.cols) throw std::invalid_argument("rat_matvec: size mismatch");
  std::vector<mpq_class> out(x.rows, mpq_class(0));
  for (int r = 0; r < x.rows; ++r) {
    for (int c = 0; c < x.cols; ++c) {
      const mpq_class& e = x.at(r, c);
      if (e != 0 && v[c] != 0) out[r] += e * v[c];
    }
  }
  return out;
}

RatSpan::RatSpan(int ambient) : ambient_(ambient) {
  if (ambient < 0) throw std::invalid_argument("RatSpan: negative ambient dimension");
}

bool RatSpan::insert(const std::vector<mpq_class>& v) {
  if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("RatSpan::insert: size mismatch");
  std::vector<mpq_class> r = v;
  std::vector<mpq_class> acc(rows_.size(), mpq_class(0));
  for (size_t t = 0; t < rows_.size(); ++t) {
    mpq_class f = r[pivots_[t]];
    if (f == 0) continue;
    for (int i = 0; i < ambient_; ++i)
      if (rows_[t][i] != 0) r[i] -= f * rows_[t][i];
    for (size_t s = 0; s < combos_[t].size(); ++s)
      if (combos_[t][s] != 0) acc[s] += f * combos_[t][s];
  }
  int p = -1;
  for (int i = 0; i < ambient_; ++i)
    if (r[i] != 0) { p = i; break; }
  if (p < 0) return false;

  mpq_class pv = r[p];
  std::vector<mpq_class> row(ambient_);
  for (int i = 0; i < ambient_; ++i) row[i] = r[i] / pv;
  std::vector<mpq_class> combo(rows_.size() + 1, mpq_class(0));
  for (size_t s = 0; s < acc.size(); ++s) combo[s] = -acc[s] / pv;
  combo[rows_.size()] = 1 / pv;

  for (size_t t = 0; t < rows_.size(); ++t) {
    combos_[t].resize(rows_.size() + 1, mpq_class(0));
    mpq_class c = rows_[t][p];
    if (c == 0) continue;
    for (int i = 0; i < ambient_; ++i)
      if (row[i] != 0) rows_[t][i] -= c * row[i];
    for (size_t s = 0; s < combo.size(); ++s)
      if (combo[s] != 0) combos_[t][s] -= c * combo[s];
  }
  rows_.push_back(std::move(row));
  combos_.push_back(std::move(combo));
  pivots_.push_back(p);
  return true;
}

std::optional<std::vector<mpq_class>> RatSpan::express(const std::vector<mpq_class>& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("RatSpan::express: size mismatch");
  std::vector<mpq_class> r = v;
  std::vector<mpq_class> acc(rows_.size(), mpq_class(0));
  for (size_t t = 0; t < rows_.size(); ++t) {
    mpq_class f = r[pivots_[t]];
    if (f == 0) continue;
    for (int i = 0; i < ambient_; ++i)
      if (rows_[t][i] != 0) r[i] -= f * rows_[t][i];
    for (size_t s = 0; s < combos_[t].size(); ++s)
      if (combos_[t][s] != 0) acc[s] += f * combos_[t][s];
  }
  for (int i = 0; i < ambient_; ++i)
    if (r[i] != 0) return std::nullopt;
  return acc;
}

std::vector<mpq_class> RatSpan::reduce(const std::vector<mpq_class>& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("RatSpan::reduce: size mismatch");
  std::vector<mpq_class> r = v;
  for (size_t t = 0; t < rows_.size(); ++t) {
    mpq_class f = r[pivots_[t]];
    if (f == 0) continue;
    for (int i = 0; i < ambient_; ++i)
      if (rows_[t][i] != 0) r[i] -= f * rows_[t][i];
  }
  return r;
}

}  // namespace kacres
