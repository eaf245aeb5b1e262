#include "kacres/realization.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "kacres/errors.hpp"

namespace kacres {

int generator_parity(const GenKey& g) {
  if (g.first == 0 || g.second == 0) throw std::invalid_argument("generator_parity: index 0");
  return (g.first < 0) != (g.second < 0) ? 1 : 0;
}

std::vector<std::pair<GenKey, long long>> elementary_bracket(const GenKey& x, const GenKey& y) {
  long long cross = (generator_parity(x) && generator_parity(y)) ? 1 : -1;
  std::vector<std::pair<GenKey, long long>> out;
  if (x.second == y.first) out.push_back({{x.first, y.second}, 1});
  if (y.second == x.first) {
    GenKey k{y.first, x.second};
    if (!out.empty() && out[0].first == k) {
      out[0].second += cross;
      if (out[0].second == 0) out.clear();
    } else {
      out.push_back({k, cross});
    }
  }
  return out;
}

std::vector<int> block_index_order(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("block_index_order: need m, n >= 1");
  std::vector<int> idx;
  for (int i = -m; i <= -1; ++i) idx.push_back(i);
  for (int j = 1; j <= n; ++j) idx.push_back(j);
  return idx;
}

std::vector<GenKey> simple_raisings(int m, int n) {
  std::vector<int> idx = block_index_order(m, n);
  std::vector<GenKey> out;
  for (size_t t = 0; t + 1 < idx.size(); ++t) out.push_back({idx[t], idx[t + 1]});
  return out;
}

std::vector<GenKey> even_simple_raisings(int m, int n) {
  std::vector<GenKey> out;
  for (const GenKey& g : simple_raisings(m, n))
    if (!generator_parity(g)) out.push_back(g);
  return out;
}

const RatMat& BlockIrrep::gen(int p, int q) const {
  if (p < 1 || p > r || q < 1 || q > r) throw std::invalid_argument("BlockIrrep::gen: position out of range");
  return gens[static_cast<size_t>(p - 1) * r + (q - 1)];
}

const RatMat& ModuleRealization::gen(int a, int b) const {
  auto it = gens.find({a, b});
  if (it == gens.end()) throw std::invalid_argument("ModuleRealization::gen: no such generator");
  return it->second;
}

long long gl_irrep_dim(int r, const std::vector<long long>& sig) {
  if (r < 1) throw std::invalid_argument("gl_irrep_dim: rank must be >= 1");
  if (static_cast<int>(sig.size()) > r) throw std::invalid_argument("gl_irrep_dim: signature too long");
  std::vector<long long> s(sig);
  s.resize(r, 0);
  for (size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] < s[i + 1]) throw std::invalid_argument("gl_irrep_dim: signature not weakly decreasing");
  mpq_class acc(1);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      acc *= mpq_class(static_cast<long>(s[i] - s[j] + j - i));
      acc /= mpq_class(j - i);
    }
  if (acc.get_den() != 1) throw std::logic_error("gl_irrep_dim: non-integral result");
  if (!acc.get_num().fits_slong_p()) throw std::overflow_error("gl_irrep_dim: dimension overflow");
  return acc.get_num().get_si();
}

namespace {

// Basis of a tensor product of exterior powers: one k_f-subset of {1..r} per
// factor, indexed in mixed radix with factor 0 most significant.
struct ExteriorTensor {
  int r = 1;
  std::vector<std::vector<std::vector<int>>> factor_subsets;  // per factor, lex order
  long long ambient_dim = 1;

  std::vector<int> decode(long long idx) const {
    std::vector<int> choice(factor_subsets.size());
    for (size_t f = factor_subsets.size(); f-- > 0;) {
      long long c = static_cast<long long>(factor_subsets[f].size());
      choice[f] = static_cast<int>(idx % c);
      idx /= c;
    }
    return choice;
  }

  long long encode(const std::vector<int>& choice) const {
    long long idx = 0;
    for (size_t f = 0; f < factor_subsets.size(); ++f)
      idx = idx * static_cast<long long>(factor_subsets[f].size()) + choice[f];
    return idx;
  }
};

std::vector<std::vector<int>> subsets_of_size(int r, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v <= r; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// E_pq applied to a dense ambient vector, acting factor by factor.
std::vector<mpq_class> act_exterior(const ExteriorTensor& et, int p, int q,
                                    const std::vector<mpq_class>& v) {
  std::vector<mpq_class> out(et.ambient_dim, mpq_class(0));
  for (long long idx = 0; idx < et.ambient_dim; ++idx) {
    if (v[idx] == 0) continue;
    std::vector<int> choice = et.decode(idx);
    if (p == q) {
      long long count = 0;
      for (size_t f = 0; f < choice.size(); ++f) {
        const std::vector<int>& s = et.factor_subsets[f][choice[f]];
        if (std::binary_search(s.begin(), s.end(), q)) ++count;
      }
      if (count != 0) out[idx] += v[idx] * static_cast<long>(count);
      continue;
    }
    for (size_t f = 0; f < choice.size(); ++f) {
      const std::vector<int>& s = et.factor_subsets[f][choice[f]];
      if (!std::binary_search(s.begin(), s.end(), q)) continue;
      if (std::binary_search(s.begin(), s.end(), p)) continue;
      std::vector<int> s2;
      int between = 0;
      int lo = std::min(p, q), hi = std::max(p, q);
      for (int x : s) {
        if (x == q) continue;
        if (x > lo && x < hi) ++between;
        s2.push_back(x);
      }
      s2.push_back(p);
      std::sort(s2.begin(), s2.end());
      const auto& list = et.factor_subsets[f];
      auto it = std::lower_bound(list.begin(), list.end(), s2);
      std::vector<int> choice2 = choice;
      choice2[f] = static_cast<int>(it - list.begin());
      long long idx2 = et.encode(choice2);
      if (between % 2 == 0)
        out[idx2] += v[idx];
      else
        out[idx2] -= v[idx];
    }
  }
  return out;
}

std::vector<long long> ambient_weight(const ExteriorTensor& et, long long idx) {
  std::vector<long long> wt(et.r, 0);
  std::vector<int> choice = et.decode(idx);
  for (size_t f = 0; f < choice.size(); ++f)
    for (int x : et.factor_subsets[f][choice[f]]) wt[x - 1] += 1;
  return wt;
}

}  // namespace

BlockIrrep build_gl_irrep(int r, const std::vector<long long>& sig, long long max_dim) {
  long long target = gl_irrep_dim(r, sig);
  if (target > max_dim) throw guard_error("build_gl_irrep: dimension guard exceeded");

  std::vector<long long> s(sig);
  s.resize(r, 0);
  long long twist = s.back() < 0 ? -s.back() : 0;
  std::vector<long long> nu(s);
  for (long long& x : nu) x += twist;

  ExteriorTensor et;
  et.r = r;
  for (long long j = 1; j <= (nu.empty() ? 0 : nu[0]); ++j) {
    int height = 0;
    for (long long x : nu)
      if (x >= j) ++height;
    et.factor_subsets.push_back(subsets_of_size(r, height));
    et.ambient_dim *= static_cast<long long>(et.factor_subsets.back().size());
    if (et.ambient_dim > 1000000) throw guard_error("build_gl_irrep: ambient dimension guard exceeded");
  }

  std::vector<mpq_class> hw(et.ambient_dim, mpq_class(0));
  hw[et.encode(std::vector<int>(et.factor_subsets.size(), 0))] = 1;

  RatSpan span(static_cast<int>(et.ambient_dim));
  std::vector<std::vector<mpq_class>> vecs;
  std::deque<long long> queue;
  span.insert(hw);
  vecs.push_back(hw);
  queue.push_back(0);
  while (!queue.empty()) {
    std::vector<mpq_class> v = vecs[queue.front()];
    queue.pop_front();
    for (int p = 1; p < r; ++p) {
      std::vector<mpq_class> w = act_exterior(et, p + 1, p, v);
      if (span.insert(w)) {
        vecs.push_back(w);
        queue.push_back(static_cast<long long>(vecs.size()) - 1);
      }
    }
  }
  if (static_cast<long long>(vecs.size()) != target)
    throw std::logic_error("build_gl_irrep: closure dimension mismatch");

  BlockIrrep out;
  out.r = r;
  int dim = static_cast<int>(vecs.size());
  for (int t = 0; t < dim; ++t) {
    std::vector<long long> wt;
    bool seen = false;
    for (long long idx = 0; idx < et.ambient_dim; ++idx) {
      if (vecs[t][idx] == 0) continue;
      std::vector<long long> w = ambient_weight(et, idx);
      if (!seen) {
        wt = w;
        seen = true;
      } else if (w != wt) {
        throw std::logic_error("build_gl_irrep: basis vector not weight-homogeneous");
      }
    }
    for (long long& x : wt) x -= twist;
    out.weights.push_back(wt);
  }
  for (int p = 1; p <= r; ++p)
    for (int q = 1; q <= r; ++q) {
      RatMat g(dim, dim);
      for (int t = 0; t < dim; ++t) {
        std::vector<mpq_class> w = act_exterior(et, p, q, vecs[t]);
        std::optional<std::vector<mpq_class>> coords = span.express(w);
        if (!coords) throw std::logic_error("build_gl_irrep: span not generator-stable");
        for (int u = 0; u < dim; ++u) g.at(u, t) = (*coords)[u];
      }
      if (p == q && twist != 0)
        for (int t = 0; t < dim; ++t) g.at(t, t) -= mpq_class(static_cast<long>(twist));
      out.gens.push_back(std::move(g));
    }
  return out;
}

namespace {

// Odd lowering generators in the fixed monomial order, slot t = (j-1)*m + (i+m)
// for the generator with row j > 0 and column i < 0.
std::vector<GenKey> odd_lowering_order(int m, int n) {
  std::vector<GenKey> out;
  for (int j = 1; j <= n; ++j)
    for (int i = -m; i <= -1; ++i) out.push_back({j, i});
  return out;
}

int odd_slot(int m, const GenKey& g) { return (g.first - 1) * m + (g.second + m); }

using TermMap = std::map<std::pair<long long, int>, mpq_class>;

void add_term(TermMap& tm, long long mask, int l, const mpq_class& c) {
  if (c == 0) return;
  auto key = std::make_pair(mask, l);
  auto it = tm.find(key);
  if (it == tm.end()) {
    tm.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) tm.erase(it);
  }
}

int sign_pow(long long count) { return count % 2 == 0 ? 1 : -1; }

struct KacBuilder {
  int m, n;
  std::vector<GenKey> olist;
  long long nodd;  // number of odd lowering generators = m*n
  long long l0dim;
  std::map<GenKey, RatMat> l0gens;  // even generators on the tensor factor

  // Even generator applied to the basis vector (mask, l): Leibniz over the odd
  // monomial through the bracket, plus the action on the even factor.
  TermMap apply_even(const GenKey& g, long long mask, int l) const {
    TermMap out;
    for (long long u = 0; u < nodd; ++u) {
      if (!(mask >> u & 1)) continue;
      for (const auto& [k, c] : elementary_bracket(g, olist[u])) {
        if (!(k.first > 0 && k.second < 0))
          throw std::logic_error("apply_even: bracket left the odd lowering space");
        long long v = odd_slot(m, k);
        if (v == u) {
          add_term(out, mask, l, mpq_class(static_cast<long>(c)));
          continue;
        }
        if (mask >> v & 1) continue;
        long long rest = mask & ~(1LL << u);
        long long lo = std::min(u, v), hi = std::max(u, v);
        long long between = std::popcount(static_cast<unsigned long long>(
            rest & ((1LL << hi) - (1LL << (lo + 1)))));
        add_term(out, rest | (1LL << v), l, mpq_class(static_cast<long>(c) * sign_pow(between)));
      }
    }
    const RatMat& G = l0gens.at(g);
    for (int l2 = 0; l2 < static_cast<int>(l0dim); ++l2)
      if (G.at(l2, l) != 0) add_term(out, mask, l2, G.at(l2, l));
    return out;
  }

  // Odd raising generator: anticommute past the monomial, leaving even
  // remainders; the generator kills the even factor directly.
  TermMap apply_odd_raising(const GenKey& g, long long mask, int l) const {
    TermMap out;
    long long passed = 0;
    for (long long u = 0; u < nodd; ++u) {
      if (!(mask >> u & 1)) continue;
      int sign0 = sign_pow(passed);
      ++passed;
      long long prefix = mask & ((1LL << u) - 1);
      long long suffix = mask & ~((1LL << (u + 1)) - 1);
      for (const auto& [k, c] : elementary_bracket(g, olist[u])) {
        if (generator_parity(k)) throw std::logic_error("apply_odd_raising: remainder not even");
        TermMap sub = apply_even(k, suffix, l);
        for (const auto& [key2, c2] : sub) {
          long long cur = key2.first;
          int s = 1;
          for (long long p = u - 1; p >= 0 && s != 0; --p) {
            if (!(prefix >> p & 1)) continue;
            if (cur >> p & 1) {
              s = 0;
              break;
            }
            s *= sign_pow(std::popcount(static_cast<unsigned long long>(cur & ((1LL << p) - 1))));
            cur |= 1LL << p;
          }
          if (s != 0) add_term(out, cur, key2.second, mpq_class(sign0 * static_cast<long>(c) * s) * c2);
        }
      }
    }
    return out;
  }

  // Odd lowering generator: left multiplication into the sorted monomial.
  TermMap apply_odd_lowering(const GenKey& g, long long mask, int l) const {
    TermMap out;
    long long t = odd_slot(m, g);
    if (mask >> t & 1) return out;
    int s = sign_pow(std::popcount(static_cast<unsigned long long>(mask & ((1LL << t) - 1))));
    add_term(out, mask | (1LL << t), l, mpq_class(s));
    return out;
  }

  TermMap apply(const GenKey& g, long long mask, int l) const {
    if (!generator_parity(g)) return apply_even(g, mask, l);
    if (g.first > 0) return apply_odd_lowering(g, mask, l);
    return apply_odd_raising(g, mask, l);
  }
};

}  // namespace

ModuleRealization build_kac_module(const SuperWeight& hw, long long max_dim) {
  if (hw.n == kInfiniteN) throw std::invalid_argument("build_kac_module: n must be finite");
  if (!in_dominant_integral(hw)) throw std::invalid_argument("build_kac_module: weight not dominant integral");
  int m = hw.m, n = hw.n;

  std::vector<long long> possig(hw.pos);
  possig.resize(n, 0);
  long long da = gl_irrep_dim(m, hw.neg);
  long long db = gl_irrep_dim(n, possig);
  if (m * n > 40) throw guard_error("build_kac_module: odd dimension guard exceeded");
  long long total = (1LL << (m * n)) * da * db;
  if (total > max_dim) throw guard_error("build_kac_module: dimension guard exceeded");

  BlockIrrep A = build_gl_irrep(m, hw.neg, max_dim);
  BlockIrrep B = build_gl_irrep(n, possig, max_dim);

  KacBuilder kb;
  kb.m = m;
  kb.n = n;
  kb.olist = odd_lowering_order(m, n);
  kb.nodd = static_cast<long long>(m) * n;
  kb.l0dim = da * db;
  for (int i = -m; i <= -1; ++i)
    for (int j = -m; j <= -1; ++j) {
      RatMat M(static_cast<int>(kb.l0dim), static_cast<int>(kb.l0dim));
      const RatMat& G = A.gen(i + m + 1, j + m + 1);
      for (int a1 = 0; a1 < da; ++a1)
        for (int a2 = 0; a2 < da; ++a2) {
          if (G.at(a1, a2) == 0) continue;
          for (int b = 0; b < db; ++b)
            M.at(a1 * static_cast<int>(db) + b, a2 * static_cast<int>(db) + b) = G.at(a1, a2);
        }
      kb.l0gens.emplace(GenKey{i, j}, std::move(M));
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      RatMat M(static_cast<int>(kb.l0dim), static_cast<int>(kb.l0dim));
      const RatMat& G = B.gen(i, j);
      for (int b1 = 0; b1 < db; ++b1)
        for (int b2 = 0; b2 < db; ++b2) {
          if (G.at(b1, b2) == 0) continue;
          for (int a = 0; a < da; ++a)
            M.at(a * static_cast<int>(db) + b1, a * static_cast<int>(db) + b2) = G.at(b1, b2);
        }
      kb.l0gens.emplace(GenKey{i, j}, std::move(M));
    }

  ModuleRealization mod;
  mod.m = m;
  mod.n = n;
  int dim = static_cast<int>(total);
  long long nmask = 1LL << (m * n);
  for (long long mask = 0; mask < nmask; ++mask) {
    for (int l = 0; l < kb.l0dim; ++l) {
      int a = l / static_cast<int>(db), b = l % static_cast<int>(db);
      std::vector<long long> neg = A.weights[a];
      std::vector<long long> pos = B.weights[b];
      for (long long t = 0; t < kb.nodd; ++t) {
        if (!(mask >> t & 1)) continue;
        const GenKey& o = kb.olist[t];
        pos[o.first - 1] += 1;
        neg[o.second + m] -= 1;
      }
      mod.weights.push_back(make_weight(m, n, std::move(neg), std::move(pos)));
      mod.parity.push_back(std::popcount(static_cast<unsigned long long>(mask)) % 2);
      std::ostringstream lab;
      for (long long t = 0; t < kb.nodd; ++t)
        if (mask >> t & 1) lab << "[" << kb.olist[t].first << "," << kb.olist[t].second << "]";
      lab << "#" << l;
      mod.labels.push_back(lab.str());
    }
  }

  std::vector<int> idx = block_index_order(m, n);
  for (int a : idx)
    for (int b : idx) {
      RatMat M(dim, dim);
      for (long long mask = 0; mask < nmask; ++mask)
        for (int l = 0; l < kb.l0dim; ++l) {
          int col = static_cast<int>(mask * kb.l0dim) + l;
          TermMap terms = kb.apply({a, b}, mask, l);
          for (const auto& [key, c] : terms) {
            int row = static_cast<int>(key.first * kb.l0dim) + key.second;
            M.at(row, col) += c;
          }
        }
      mod.gens.emplace(GenKey{a, b}, std::move(M));
    }
  return mod;
}

std::vector<SingularLine> singular_vectors(const ModuleRealization& mod,
                                           const std::vector<GenKey>& raisings) {
  int dim = static_cast<int>(mod.dim());
  std::map<SuperWeight, std::vector<int>> spaces;
  for (int t = 0; t < dim; ++t) spaces[mod.weights[t]].push_back(t);

  std::vector<SingularLine> out;
  for (const auto& [wt, idxs] : spaces) {
    int cols = static_cast<int>(idxs.size());
    RatMat stacked(static_cast<int>(raisings.size()) * dim, cols);
    for (size_t g = 0; g < raisings.size(); ++g) {
      const RatMat& G = mod.gen(raisings[g].first, raisings[g].second);
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < cols; ++c) stacked.at(static_cast<int>(g) * dim + r, c) = G.at(r, idxs[c]);
    }
    RatMat ns = rat_nullspace(stacked);
    for (int k = 0; k < ns.cols; ++k) {
      SingularLine line;
      line.weight = wt;
      line.coords.assign(dim, mpq_class(0));
      for (int c = 0; c < cols; ++c) line.coords[idxs[c]] = ns.at(c, k);
      out.push_back(std::move(line));
    }
  }
  return out;
}

namespace {

RatSpan closure_span(const ModuleRealization& mod, const RatMat& seeds) {
  int dim = static_cast<int>(mod.dim());
  if (seeds.rows != dim) throw std::invalid_argument("submodule_closure: seed dimension mismatch");
  RatSpan span(dim);
  std::vector<std::vector<mpq_class>> vecs;
  std::deque<size_t> queue;
  for (int c = 0; c < seeds.cols; ++c) {
    std::vector<mpq_class> v(dim);
    for (int r = 0; r < dim; ++r) v[r] = seeds.at(r, c);
    if (span.insert(v)) {
      vecs.push_back(std::move(v));
      queue.push_back(vecs.size() - 1);
    }
  }
  while (!queue.empty()) {
    std::vector<mpq_class> v = vecs[queue.front()];
    queue.pop_front();
    for (const auto& kv : mod.gens) {
      std::vector<mpq_class> w = rat_matvec(kv.second, v);
      if (span.insert(w)) {
        vecs.push_back(std::move(w));
        queue.push_back(vecs.size() - 1);
      }
    }
  }
  return span;
}

}  // namespace

RatMat submodule_closure(const ModuleRealization& mod, const RatMat& seeds) {
  RatSpan span = closure_span(mod, seeds);
  int dim = static_cast<int>(mod.dim());
  RatMat out(dim, span.size());
  for (int t = 0; t < span.size(); ++t)
    for (int r = 0; r < dim; ++r) out.at(r, t) = span.row(t)[r];
  return out;
}

QuotientReport irreducible_quotient(const ModuleRealization& mod, const SuperWeight& top) {
  std::vector<GenKey> raisings = simple_raisings(mod.m, mod.n);
  std::vector<SingularLine> lines = singular_vectors(mod, raisings);

  QuotientReport rep;
  int top_count = 0;
  for (SingularLine& line : lines) {
    if (line.weight == top)
      ++top_count;
    else
      rep.proper_lines.push_back(std::move(line));
  }
  if (top_count != 1) throw std::logic_error("irreducible_quotient: top weight kernel not a line");

  int dim = static_cast<int>(mod.dim());
  RatMat seeds(dim, static_cast<int>(rep.proper_lines.size()));
  for (size_t c = 0; c < rep.proper_lines.size(); ++c)
    for (int r = 0; r < dim; ++r) seeds.at(r, static_cast<int>(c)) = rep.proper_lines[c].coords[r];
  RatSpan sub = closure_span(mod, seeds);
  rep.maximal_dim = sub.size();

  std::vector<bool> is_pivot(dim, false);
  for (int p : sub.pivots()) is_pivot[p] = true;
  std::vector<int> keep;
  for (int t = 0; t < dim; ++t)
    if (!is_pivot[t]) keep.push_back(t);

  ModuleRealization q;
  q.m = mod.m;
  q.n = mod.n;
  for (int t : keep) {
    q.weights.push_back(mod.weights[t]);
    q.parity.push_back(mod.parity[t]);
    q.labels.push_back(mod.labels.empty() ? std::string() : mod.labels[t]);
  }
  int qdim = static_cast<int>(keep.size());
  for (const auto& [key, G] : mod.gens) {
    RatMat M(qdim, qdim);
    for (int c = 0; c < qdim; ++c) {
      std::vector<mpq_class> col(dim);
      for (int r = 0; r < dim; ++r) col[r] = G.at(r, keep[c]);
      std::vector<mpq_class> red = sub.reduce(col);
      for (int r = 0; r < qdim; ++r) M.at(r, c) = red[keep[r]];
    }
    q.gens.emplace(key, std::move(M));
  }
  rep.quotient = std::move(q);

  std::vector<SingularLine> qlines = singular_vectors(rep.quotient, raisings);
  rep.generated_by_singulars = qlines.size() == 1 && qlines[0].weight == top;
  return rep;
}

SparseLaurent module_character(const ModuleRealization& mod) {
  SparseLaurent ch = laurent_zero(mod.m, mod.n);
  for (const SuperWeight& w : mod.weights) {
    std::vector<int> exps;
    for (long long x : w.neg) exps.push_back(static_cast<int>(x));
    std::vector<long long> pos(w.pos);
    pos.resize(mod.n, 0);
    for (long long x : pos) exps.push_back(static_cast<int>(x));
    add_term(ch, exps, 1);
  }
  return ch;
}

bool check_superbracket(const ModuleRealization& mod) {
  for (const auto& [x, gx] : mod.gens)
    for (const auto& [y, gy] : mod.gens) {
      int cross = generator_parity(x) && generator_parity(y);
      RatMat lhs = rat_mul(gx, gy);
      RatMat yx = rat_mul(gy, gx);
      lhs = cross ? rat_add(lhs, yx) : rat_sub(lhs, yx);
      RatMat rhs(static_cast<int>(mod.dim()), static_cast<int>(mod.dim()));
      for (const auto& [k, c] : elementary_bracket(x, y))
        rhs = rat_add(rhs, rat_scale(mod.gen(k.first, k.second), mpq_class(static_cast<long>(c))));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

}  // namespace kacres
