// Compares the serial reference kernels against their OpenMP variants on
// synthetic inputs and checks that both produce identical results.  Wall
// times are only meaningful relative to the reported thread count.

#include <chrono>
#include <cstdio>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kacres/laurent.hpp"
#include "kacres/ratmat.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

kacres::SparseLaurent random_laurent(int mvars, int tvars, int nterms, std::mt19937& rng) {
  kacres::SparseLaurent p = kacres::laurent_zero(mvars, tvars);
  std::uniform_int_distribution<int> exp_dist(-4, 4);
  std::uniform_int_distribution<long long> coeff_dist(1, 5);
  while (static_cast<int>(p.terms.size()) < nterms) {
    std::vector<int> e(static_cast<size_t>(mvars + tvars));
    for (int& x : e) x = exp_dist(rng);
    kacres::add_term(p, e, coeff_dist(rng));
  }
  return p;
}

kacres::RatMat random_ratmat(int rows, int cols, std::mt19937& rng) {
  kacres::RatMat x(rows, cols);
  std::uniform_int_distribution<int> num_dist(-9, 9);
  std::uniform_int_distribution<int> den_dist(1, 3);
  for (mpq_class& v : x.a) {
    v = mpq_class(num_dist(rng), den_dist(rng));
    v.canonicalize();
  }
  return x;
}

void bench_laurent_mul(int nterms, std::mt19937& rng) {
  kacres::SparseLaurent a = random_laurent(2, 2, nterms, rng);
  kacres::SparseLaurent b = random_laurent(2, 2, nterms, rng);

  Clock::time_point t0 = Clock::now();
  kacres::SparseLaurent ps = kacres::mul_serial(a, b);
  double ts = seconds_since(t0);

  t0 = Clock::now();
  kacres::SparseLaurent pp = kacres::mul_parallel(a, b);
  double tp = seconds_since(t0);

  if (ps.terms != pp.terms) throw std::runtime_error("laurent mul mismatch");
  std::printf("laurent mul  %5d x %5d terms -> %6zu  serial %8.4fs  parallel %8.4fs  ratio %.2f\n",
              nterms, nterms, ps.terms.size(), ts, tp, ts / tp);
}

void bench_rref(int rows, int cols, std::mt19937& rng) {
  kacres::RatMat base = random_ratmat(rows, cols, rng);

  kacres::RatMat xs = base;
  Clock::time_point t0 = Clock::now();
  std::vector<int> piv_s = kacres::rref_serial(xs);
  double ts = seconds_since(t0);

  kacres::RatMat xp = base;
  t0 = Clock::now();
  std::vector<int> piv_p = kacres::rref_parallel(xp);
  double tp = seconds_since(t0);

  if (piv_s != piv_p || !(xs == xp)) throw std::runtime_error("rref mismatch");
  std::printf("rref         %5d x %5d        rank %4zu  serial %8.4fs  parallel %8.4fs  ratio %.2f\n",
              rows, cols, piv_s.size(), ts, tp, ts / tp);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp threads: (compiled without openmp)\n");
#endif

  std::mt19937 rng(20240915);
  bench_laurent_mul(200, rng);
  bench_laurent_mul(400, rng);
  bench_laurent_mul(800, rng);
  bench_rref(60, 80, rng);
  bench_rref(100, 140, rng);
  return 0;
}
