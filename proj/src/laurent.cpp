#include "kacres/laurent.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <stdexcept>

namespace kacres {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow (add)");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow (mul)");
  return r;
}

SparseLaurent laurent_zero(int mvars, int tvars) {
  if (mvars < 0 || tvars < 0) throw std::invalid_argument("laurent: negative variable count");
  SparseLaurent p;
  p.mvars = mvars;
  p.tvars = tvars;
  return p;
}

SparseLaurent laurent_one(int mvars, int tvars) {
  SparseLaurent p = laurent_zero(mvars, tvars);
  p.terms[std::vector<int>(p.width(), 0)] = 1;
  return p;
}

SparseLaurent laurent_monomial(int mvars, int tvars, std::vector<int> exponents, long long coeff) {
  SparseLaurent p = laurent_zero(mvars, tvars);
  if (static_cast<int>(exponents.size()) != p.width())
    throw std::invalid_argument("laurent_monomial: exponent width mismatch");
  if (coeff != 0) p.terms[std::move(exponents)] = coeff;
  return p;
}

void add_term(SparseLaurent& p, const std::vector<int>& exponents, long long coeff) {
  if (static_cast<int>(exponents.size()) != p.width())
    throw std::invalid_argument("add_term: exponent width mismatch");
  if (coeff == 0) return;
  auto it = p.terms.find(exponents);
  if (it == p.terms.end()) {
    p.terms.emplace(exponents, coeff);
  } else {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) p.terms.erase(it);
  }
}

namespace {

void require_same_vars(const SparseLaurent& a, const SparseLaurent& b) {
  if (a.mvars != b.mvars || a.tvars != b.tvars)
    throw std::invalid_argument("laurent: mismatched variable blocks");
}

}  // namespace

SparseLaurent add(const SparseLaurent& a, const SparseLaurent& b) {
  require_same_vars(a, b);
  SparseLaurent r = a;
  for (const auto& [e, c] : b.terms) add_term(r, e, c);
  return r;
}

SparseLaurent sub(const SparseLaurent& a, const SparseLaurent& b) {
  require_same_vars(a, b);
  SparseLaurent r = a;
  for (const auto& [e, c] : b.terms) add_term(r, e, checked_mul(c, -1));
  return r;
}

SparseLaurent scale(const SparseLaurent& a, long long c) {
  SparseLaurent r = laurent_zero(a.mvars, a.tvars);
  if (c == 0) return r;
  for (const auto& [e, v] : a.terms) r.terms[e] = checked_mul(v, c);
  return r;
}

SparseLaurent mul_serial(const SparseLaurent& a, const SparseLaurent& b) {
  require_same_vars(a, b);
  SparseLaurent r = laurent_zero(a.mvars, a.tvars);
  const int w = a.width();
  std::vector<int> e(w);
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      for (int i = 0; i < w; ++i) e[i] = ea[i] + eb[i];
      add_term(r, e, checked_mul(ca, cb));
    }
  }
  return r;
}

SparseLaurent mul_parallel(const SparseLaurent& a, const SparseLaurent& b) {
  require_same_vars(a, b);
#ifndef _OPENMP
  return mul_serial(a, b);
#else
  const int w = a.width();
  std::vector<const std::pair<const std::vector<int>, long long>*> rows;
  rows.reserve(a.terms.size());
  for (const auto& t : a.terms) rows.push_back(&t);

  int threads = omp_get_max_threads();
  std::vector<SparseLaurent> partial(threads, laurent_zero(a.mvars, a.tvars));

#pragma omp parallel num_threads(threads)
  {
    int tid = omp_get_thread_num();
    SparseLaurent& local = partial[tid];
    std::vector<int> e(w);
#pragma omp for schedule(static)
    for (long long idx = 0; idx < static_cast<long long>(rows.size()); ++idx) {
      const auto& [ea, ca] = *rows[idx];
      for (const auto& [eb, cb] : b.terms) {
        for (int i = 0; i < w; ++i) e[i] = ea[i] + eb[i];
        add_term(local, e, checked_mul(ca, cb));
      }
    }
  }

  SparseLaurent r = laurent_zero(a.mvars, a.tvars);
  for (const auto& part : partial)
    for (const auto& [e2, c2] : part.terms) add_term(r, e2, c2);
  return r;
#endif
}

SparseLaurent mul(const SparseLaurent& a, const SparseLaurent& b) {
  // Exact integer accumulation commutes, so both paths agree term for term.
  constexpr long long kParallelThreshold = 1 << 16;
  long long pairs = static_cast<long long>(a.terms.size()) * static_cast<long long>(b.terms.size());
  if (pairs >= kParallelThreshold) return mul_parallel(a, b);
  return mul_serial(a, b);
}

long long eval_at_ones(const SparseLaurent& p) {
  long long s = 0;
  for (const auto& [e, c] : p.terms) s = checked_add(s, c);
  return s;
}

long long term_z_degree2(const std::vector<int>& exponents, int mvars) {
  long long z2 = 0;
  for (int i = 0; i < static_cast<int>(exponents.size()); ++i)
    z2 += i < mvars ? exponents[i] : -exponents[i];
  return z2;
}

SparseLaurent mask_min_z2(const SparseLaurent& p, long long z2_min) {
  SparseLaurent r = laurent_zero(p.mvars, p.tvars);
  for (const auto& [e, c] : p.terms)
    if (term_z_degree2(e, p.mvars) >= z2_min) r.terms[e] = c;
  return r;
}

SparseLaurent resplit(const SparseLaurent& p, int new_mvars, int new_tvars) {
  if (new_mvars < 0 || new_tvars < 0 || new_mvars + new_tvars != p.width())
    throw std::invalid_argument("resplit: block widths must preserve total width");
  SparseLaurent r = p;
  r.mvars = new_mvars;
  r.tvars = new_tvars;
  return r;
}

std::string format_laurent(const SparseLaurent& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms) {
    long long a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;
    std::string mono;
    for (int i = 0; i < p.width(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      if (i < p.mvars) {
        mono += "x" + std::to_string(i - p.mvars);
      } else {
        mono += "y" + std::to_string(i - p.mvars + 1);
      }
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a) + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace kacres
