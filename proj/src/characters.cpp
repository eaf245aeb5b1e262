#include "kacres/characters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kacres/weyl.hpp"

namespace kacres {

namespace {

// Row-major semistandard filling: rows weakly increase, columns strictly.
void fill_ssyt(const Partition& shape, int vars, int r, int c,
               std::vector<std::vector<int>>& tab, std::vector<int>& exps, SparseLaurent& out) {
  if (r == static_cast<int>(shape.size())) {
    add_term(out, exps, 1);
    return;
  }
  int nr = r, nc = c + 1;
  if (nc == shape[r]) {
    nr = r + 1;
    nc = 0;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, tab[r][c - 1]);
  if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
  for (int v = lo; v <= vars; ++v) {
    tab[r][c] = v;
    ++exps[v - 1];
    fill_ssyt(shape, vars, nr, nc, tab, exps, out);
    --exps[v - 1];
  }
}

}  // namespace

SparseLaurent schur_polynomial(const std::vector<long long>& sig, int vars) {
  if (vars < 0) throw std::invalid_argument("schur_polynomial: vars must be >= 0");
  if (static_cast<int>(sig.size()) > vars)
    throw std::invalid_argument("schur_polynomial: signature longer than vars");
  for (size_t i = 1; i < sig.size(); ++i)
    if (sig[i] > sig[i - 1]) throw std::invalid_argument("schur_polynomial: signature must decrease");
  if (vars == 0) {
    SparseLaurent unit = laurent_one(0, 0);
    return unit;
  }

  std::vector<long long> padded(vars, 0);
  std::copy(sig.begin(), sig.end(), padded.begin());
  if (!sig.empty() && static_cast<int>(sig.size()) < vars && sig.back() < 0)
    throw std::invalid_argument("schur_polynomial: signature must stay decreasing after zero padding");

  long long shift = padded.back() < 0 ? -padded.back() : 0;
  Partition shape;
  for (long long v : padded) {
    long long s = v + shift;
    if (s > 0) shape.push_back(static_cast<int>(s));
  }

  SparseLaurent out = laurent_zero(vars, 0);
  if (shape.empty()) {
    out = laurent_one(vars, 0);
  } else {
    std::vector<std::vector<int>> tab(shape.size());
    for (size_t r = 0; r < shape.size(); ++r) tab[r].assign(shape[r], 0);
    std::vector<int> exps(vars, 0);
    fill_ssyt(shape, vars, 0, 0, tab, exps, out);
  }

  if (shift != 0) {
    SparseLaurent shifted = laurent_zero(vars, 0);
    for (const auto& [e, cf] : out.terms) {
      std::vector<int> e2 = e;
      for (int& x : e2) x -= static_cast<int>(shift);
      shifted.terms[std::move(e2)] = cf;
    }
    out = std::move(shifted);
  }
  return out;
}

namespace {

// Combines an (m,0)-block polynomial with a (t,0)-block polynomial into the
// (m,t)-block product.
SparseLaurent tensor_blocks(const SparseLaurent& xs, const SparseLaurent& ys) {
  if (xs.tvars != 0 || ys.tvars != 0)
    throw std::invalid_argument("tensor_blocks: factors must be single-block");
  SparseLaurent out = laurent_zero(xs.mvars, ys.mvars);
  for (const auto& [ex, cx] : xs.terms) {
    for (const auto& [ey, cy] : ys.terms) {
      std::vector<int> e = ex;
      e.insert(e.end(), ey.begin(), ey.end());
      add_term(out, e, checked_mul(cx, cy));
    }
  }
  return out;
}

std::vector<long long> padded_pos(const SuperWeight& w, int tvars) {
  if (static_cast<int>(w.pos.size()) > tvars)
    throw std::invalid_argument("positive-block support exceeds tvars");
  std::vector<long long> sig(tvars, 0);
  std::copy(w.pos.begin(), w.pos.end(), sig.begin());
  return sig;
}

}  // namespace

SparseLaurent g0_irrep_character(const SuperWeight& w, int tvars) {
  SparseLaurent xs = schur_polynomial(w.neg, w.m);
  SparseLaurent ys = schur_polynomial(padded_pos(w, tvars), tvars);
  return tensor_blocks(xs, ys);
}

long long g0_irrep_dim(const SuperWeight& w, int pos_rank) {
  auto block_dim = [](const std::vector<long long>& sig) {
    long long num = 1, den = 1;
    int r = static_cast<int>(sig.size());
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) {
        num = checked_mul(num, sig[i] - sig[j] + j - i);
        den = checked_mul(den, j - i);
        long long g = std::gcd(num, den);
        num /= g;
        den /= g;
      }
    }
    if (den != 1 && den != -1) throw std::logic_error("g0_irrep_dim: non-integral Weyl quotient");
    return num / den;
  };
  return checked_mul(block_dim(w.neg), block_dim(padded_pos(w, pos_rank)));
}

SparseLaurent kac_character(const SuperWeight& hw, int tvars) {
  if (!in_dominant_integral(hw))
    throw std::invalid_argument("kac_character: highest weight must be dominant for both blocks");
  SparseLaurent out = g0_irrep_character(hw, tvars);
  const int w = hw.m + tvars;
  for (int i = 0; i < hw.m; ++i) {
    for (int j = 0; j < tvars; ++j) {
      std::vector<int> e(w, 0);
      e[i] = -1;
      e[hw.m + j] = 1;
      SparseLaurent factor = laurent_one(hw.m, tvars);
      factor.terms[std::move(e)] = 1;
      out = mul(out, factor);
    }
  }
  return out;
}

namespace {

// Row-major super-semistandard filling over letters 0..m+t-1 where letters
// < m are x's (strict down columns) and letters >= m are y's (strict along
// rows).
void fill_hook(const Partition& shape, int m, int letters, int r, int c,
               std::vector<std::vector<int>>& tab, std::vector<int>& exps, SparseLaurent& out) {
  if (r == static_cast<int>(shape.size())) {
    add_term(out, exps, 1);
    return;
  }
  int nr = r, nc = c + 1;
  if (nc == shape[r]) {
    nr = r + 1;
    nc = 0;
  }
  for (int v = 0; v < letters; ++v) {
    if (c > 0) {
      int left = tab[r][c - 1];
      if (v < left) continue;
      if (v == left && v >= m) continue;  // y-letters strict along rows
    }
    if (r > 0) {
      int up = tab[r - 1][c];
      if (v < up) continue;
      if (v == up && v < m) continue;  // x-letters strict down columns
    }
    tab[r][c] = v;
    ++exps[v];
    fill_hook(shape, m, letters, nr, nc, tab, exps, out);
    --exps[v];
  }
}

}  // namespace

SparseLaurent hook_schur_polynomial(const Partition& p, int m, int tvars) {
  require_partition(p);
  if (m < 1 || tvars < 0) throw std::invalid_argument("hook_schur_polynomial: bad block sizes");
  if (!in_hook(p, m, tvars))
    throw std::invalid_argument("hook_schur_polynomial: partition leaves the (m,tvars)-hook");
  SparseLaurent out = laurent_zero(m, tvars);
  if (p.empty()) return laurent_one(m, tvars);
  std::vector<std::vector<int>> tab(p.size());
  for (size_t r = 0; r < p.size(); ++r) tab[r].assign(p[r], 0);
  std::vector<int> exps(m + tvars, 0);
  fill_hook(p, m, m + tvars, 0, 0, tab, exps, out);
  return out;
}

namespace {

void emit_odd_products(int k, int m, int tvars, bool with_repeats, int from, int taken,
                       std::vector<int>& exps, SparseLaurent& out) {
  if (taken == k) {
    add_term(out, exps, 1);
    return;
  }
  int total = m * tvars;
  for (int q = from; q < total; ++q) {
    int i = q / tvars;          // x slot
    int j = m + q % tvars;      // y slot
    exps[i] -= 1;
    exps[j] += 1;
    emit_odd_products(k, m, tvars, with_repeats, with_repeats ? q : q + 1, taken + 1, exps, out);
    exps[i] += 1;
    exps[j] -= 1;
  }
}

}  // namespace

SparseLaurent odd_graded_piece(int k, int m, int tvars, bool symmetric) {
  if (k < 0) throw std::invalid_argument("odd_graded_piece: k must be >= 0");
  SparseLaurent out = laurent_zero(m, tvars);
  std::vector<int> exps(m + tvars, 0);
  emit_odd_products(k, m, tvars, symmetric, 0, 0, exps, out);
  return out;
}

std::map<SuperWeight, long long> decompose_even(const SparseLaurent& ch) {
  const int m = ch.mvars;
  const int t = ch.tvars;
  if (m < 1) throw std::invalid_argument("decompose_even: need at least one x-variable");
  std::map<SuperWeight, long long> out;
  SparseLaurent rest = ch;
  long long guard = 0;
  while (!rest.is_zero()) {
    if (++guard > 200000) throw std::logic_error("decompose_even: peeling did not terminate");
    auto top = rest.terms.rbegin();
    const std::vector<int>& e = top->first;
    long long mult = top->second;
    for (int i = 1; i < m; ++i)
      if (e[i] > e[i - 1]) throw std::domain_error("decompose_even: extreme term not dominant");
    for (int j = m + 1; j < m + t; ++j)
      if (e[j] > e[j - 1]) throw std::domain_error("decompose_even: extreme term not dominant");
    if (mult < 0) throw std::domain_error("decompose_even: negative multiplicity");
    std::vector<long long> neg(e.begin(), e.begin() + m);
    std::vector<long long> pos(e.begin() + m, e.end());
    SuperWeight w = make_weight(m, t, std::move(neg), std::move(pos));
    out[w] += mult;
    rest = sub(rest, scale(g0_irrep_character(w, t), mult));
  }
  return out;
}

EulerReport euler_characteristic_check(const Partition& p, int m, int n, int depth) {
  if (depth < 0) throw std::invalid_argument("euler check: depth must be >= 0");
  if (!in_hook(p, m, n)) throw std::invalid_argument("euler check: partition leaves the hook");
  SuperWeight lambda = split_hook(p, m, n);
  SuperWeight lambda_nat = natural(lambda);

  EulerReport rep;
  rep.tvars = n == kInfiniteN ? m + static_cast<int>(partition_size(p)) + depth : n;
  rep.z2_cutoff = z_degree2(lambda_nat) - 2 * static_cast<long long>(depth);

  CosetLayers layers = minimal_coset_layers(lambda, depth);
  SparseLaurent sum = laurent_zero(m, rep.tvars);
  for (const auto& [k, ws] : layers) {
    for (const auto& eta : ws) {
      ++rep.layer_terms;
      if (!survives_truncation(eta, n)) {
        ++rep.truncated_terms;
        continue;
      }
      SparseLaurent term = kac_character(natural(eta), rep.tvars);
      sum = (k % 2 == 0) ? add(sum, term) : sub(sum, term);
    }
  }

  SparseLaurent hook = hook_schur_polynomial(p, m, rep.tvars);
  rep.residual = mask_min_z2(sub(sum, hook), rep.z2_cutoff);
  rep.pass = rep.residual.is_zero();
  return rep;
}

}  // namespace kacres
