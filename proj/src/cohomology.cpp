#include "kacres/cohomology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "kacres/errors.hpp"
#include "kacres/weyl.hpp"

namespace kacres {

namespace {

using SparseCols = std::vector<std::map<int, mpq_class>>;
using DenseVec = std::map<int, mpq_class>;

void acc_term(DenseVec& v, int row, const mpq_class& c) {
  if (c == 0) return;
  auto it = v.find(row);
  if (it == v.end()) {
    v.emplace(row, c);
  } else {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

DenseVec apply_sparse(const SparseCols& mat, const DenseVec& v) {
  DenseVec out;
  for (const auto& [col, c] : v)
    for (const auto& [row, e] : mat[col]) acc_term(out, row, c * e);
  return out;
}

// Nondecreasing index tuples of length k over {0..no-1}, lex order.
std::vector<std::vector<int>> multisets_of(int no, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v < no; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

SuperWeight add_root(const SuperWeight& w, int i, int j, int times) {
  // Adds times * (delta_j - delta_i) for a raising generator (i, j), i < 0 < j.
  std::vector<long long> neg = w.neg;
  std::vector<long long> pos = w.pos;
  pos.resize(std::max<size_t>(pos.size(), j), 0);
  neg[i + w.m] -= times;
  pos[j - 1] += times;
  return make_weight(w.m, w.n, std::move(neg), std::move(pos));
}

// Weight shifted by the root of an even generator (both indices in one block).
SuperWeight shift_even(const SuperWeight& w, const GenKey& g, int n) {
  std::vector<long long> neg = w.neg;
  std::vector<long long> pos = w.pos;
  if (g.first < 0) {
    neg[g.first + w.m] += 1;
    neg[g.second + w.m] -= 1;
  } else {
    pos.resize(n, 0);
    pos[g.first - 1] += 1;
    pos[g.second - 1] -= 1;
  }
  return make_weight(w.m, w.n, std::move(neg), std::move(pos));
}

}  // namespace

CohomologyReport odd_radical_cohomology(const Partition& p, int m, int n, int kmax,
                                        long long max_cochain) {
  require_partition(p);
  if (m < 1 || n < 1) throw std::invalid_argument("odd_radical_cohomology: need finite m, n >= 1");
  if (kmax < 0) throw std::invalid_argument("odd_radical_cohomology: kmax must be >= 0");
  if (!in_hook(p, m, n)) throw std::invalid_argument("odd_radical_cohomology: partition outside the hook");

  CohomologyReport rep;
  rep.m = m;
  rep.n = n;
  rep.lambda = p;

  SuperWeight hw = with_n(natural(split_hook(p, m, n)), n);
  ModuleRealization kac = build_kac_module(hw);
  ModuleRealization L = irreducible_quotient(kac, hw).quotient;
  int dl = static_cast<int>(L.dim());

  // Odd raising generators in a fixed order; the cochain variables are dual.
  std::vector<GenKey> rgens;
  for (int i = -m; i <= -1; ++i)
    for (int j = 1; j <= n; ++j) rgens.push_back({i, j});
  int no = m * n;

  int top = kmax + 1;
  std::vector<std::vector<std::vector<int>>> multis(top + 1);
  std::vector<std::map<std::vector<int>, int>> multi_index(top + 1);
  std::vector<long long> cdim(top + 1);
  for (int k = 0; k <= top; ++k) {
    multis[k] = multisets_of(no, k);
    for (size_t t = 0; t < multis[k].size(); ++t) multi_index[k][multis[k][t]] = static_cast<int>(t);
    cdim[k] = static_cast<long long>(multis[k].size()) * dl;
    if (cdim[k] > max_cochain) throw guard_error("odd_radical_cohomology: cochain dimension guard exceeded");
  }

  // Weight of every cochain basis vector (multiset index major, module minor).
  std::vector<std::vector<SuperWeight>> wts(top + 1);
  for (int k = 0; k <= top; ++k) {
    wts[k].reserve(cdim[k]);
    for (const std::vector<int>& mu : multis[k]) {
      for (int e = 0; e < dl; ++e) {
        SuperWeight w = L.weights[e];
        for (int a : mu) w = add_root(w, rgens[a].first, rgens[a].second, 1);
        wts[k].push_back(std::move(w));
      }
    }
  }

  // Differential: multiply by one variable while acting by the matching raising.
  std::vector<SparseCols> d(top);  // d[k] : C^k -> C^{k+1}
  for (int k = 0; k < top; ++k) {
    d[k].assign(cdim[k], {});
    for (size_t t = 0; t < multis[k].size(); ++t) {
      for (int e = 0; e < dl; ++e) {
        int col = static_cast<int>(t) * dl + e;
        for (int a = 0; a < no; ++a) {
          std::vector<int> mu2 = multis[k][t];
          mu2.insert(std::upper_bound(mu2.begin(), mu2.end(), a), a);
          int t2 = multi_index[k + 1].at(mu2);
          const RatMat& G = L.gen(rgens[a].first, rgens[a].second);
          for (int e2 = 0; e2 < dl; ++e2)
            if (G.at(e2, e) != 0) acc_term(d[k][col], t2 * dl + e2, G.at(e2, e));
        }
      }
    }
  }

  rep.d_squared_zero = true;
  for (int k = 0; k + 1 < top; ++k)
    for (long long col = 0; col < cdim[k]; ++col)
      if (!apply_sparse(d[k + 1], d[k][col]).empty()) rep.d_squared_zero = false;

  // Even action per degree: Leibniz through the dual of the adjoint action on
  // the variables, plus the action on the coefficients.
  std::vector<GenKey> evens = even_simple_raisings(m, n);
  auto rho = [&](const GenKey& g, int k) -> SparseCols {
    // ad[b][a]: coefficient of generator a in the bracket of g with generator b.
    std::vector<std::vector<long long>> ad(no, std::vector<long long>(no, 0));
    for (int b = 0; b < no; ++b)
      for (const auto& [key, c] : elementary_bracket(g, rgens[b])) {
        if (generator_parity(key) == 0) throw std::logic_error("rho: bracket term not odd");
        int a = static_cast<int>(std::find(rgens.begin(), rgens.end(), key) - rgens.begin());
        if (a == no) throw std::logic_error("rho: bracket left the raising space");
        ad[b][a] += c;
      }
    SparseCols out(cdim[k]);
    const RatMat& G = L.gen(g.first, g.second);
    for (size_t t = 0; t < multis[k].size(); ++t) {
      const std::vector<int>& mu = multis[k][t];
      for (int e = 0; e < dl; ++e) {
        int col = static_cast<int>(t) * dl + e;
        for (size_t pos = 0; pos < mu.size(); ++pos) {
          if (pos > 0 && mu[pos] == mu[pos - 1]) continue;  // one term per distinct variable
          int a = mu[pos];
          long long mult = std::count(mu.begin(), mu.end(), a);
          for (int b = 0; b < no; ++b) {
            if (ad[b][a] == 0) continue;  // dual action: minus transpose of ad
            std::vector<int> mu2 = mu;
            mu2.erase(std::find(mu2.begin(), mu2.end(), a));
            mu2.insert(std::upper_bound(mu2.begin(), mu2.end(), b), b);
            int t2 = multi_index[k].at(mu2);
            acc_term(out[col], t2 * dl + e, mpq_class(static_cast<long>(-mult * ad[b][a])));
          }
        }
        for (int e2 = 0; e2 < dl; ++e2)
          if (G.at(e2, e) != 0) acc_term(out[col], static_cast<int>(t) * dl + e2, G.at(e2, e));
      }
    }
    return out;
  };

  std::vector<std::vector<SparseCols>> rhos(top + 1);
  for (int k = 0; k <= top; ++k)
    for (const GenKey& g : evens) rhos[k].push_back(rho(g, k));

  rep.equivariant = true;
  for (int k = 0; k < top; ++k)
    for (size_t gi = 0; gi < evens.size(); ++gi)
      for (long long col = 0; col < cdim[k]; ++col) {
        DenseVec lhs = apply_sparse(rhos[k + 1][gi], d[k][col]);
        DenseVec rhs = apply_sparse(d[k], rhos[k][gi][col]);
        if (lhs != rhs) rep.equivariant = false;
      }

  // Weight spaces per degree.
  std::vector<std::map<SuperWeight, std::vector<int>>> spaces(top + 1);
  for (int k = 0; k <= top; ++k)
    for (long long t = 0; t < cdim[k]; ++t) spaces[k][wts[k][t]].push_back(static_cast<int>(t));

  struct HSpace {
    std::vector<int> idxs;                       // global cochain indices of the weight space
    RatSpan span{0};                             // image vectors then cohomology representatives
    int boundary_count = 0;                      // inserted vectors that came from the image
    std::vector<std::vector<mpq_class>> reps;    // local coordinates of the representatives
  };

  CosetLayers layers = minimal_coset_layers(split_hook(p, m, kInfiniteN), kmax);

  std::vector<std::map<SuperWeight, HSpace>> hspaces(kmax + 1);
  for (int k = 0; k <= kmax; ++k) {
    CohomologyDegree deg;
    deg.degree = k;
    deg.cochain_dim = cdim[k];
    long long rank_out = 0;
    for (const auto& [wt, idxs] : spaces[k]) {
      int cols = static_cast<int>(idxs.size());
      // Rows live in the same weight space one degree up.
      std::vector<int> rows;
      auto itr = spaces[k + 1].find(wt);
      if (itr != spaces[k + 1].end()) rows = itr->second;
      std::map<int, int> row_local;
      for (size_t r = 0; r < rows.size(); ++r) row_local[rows[r]] = static_cast<int>(r);
      RatMat block(static_cast<int>(rows.size()), cols);
      for (int c = 0; c < cols; ++c)
        for (const auto& [row, e] : d[k][idxs[c]]) block.at(row_local.at(row), c) = e;
      RatMat kernel = rat_nullspace(block);
      rank_out += cols - kernel.cols;

      HSpace hs;
      hs.idxs = idxs;
      hs.span = RatSpan(cols);
      std::map<int, int> col_local;
      for (int c = 0; c < cols; ++c) col_local[idxs[c]] = c;
      if (k > 0) {
        auto its = spaces[k - 1].find(wt);
        if (its != spaces[k - 1].end()) {
          for (int src : its->second) {
            std::vector<mpq_class> v(cols, mpq_class(0));
            for (const auto& [row, e] : d[k - 1][src]) v[col_local.at(row)] = e;
            hs.span.insert(v);
          }
        }
      }
      hs.boundary_count = hs.span.size();
      for (int kc = 0; kc < kernel.cols; ++kc) {
        std::vector<mpq_class> v(cols);
        for (int c = 0; c < cols; ++c) v[c] = kernel.at(c, kc);
        if (hs.span.insert(v)) hs.reps.push_back(std::move(v));
      }
      deg.cohomology_dim += static_cast<long long>(hs.reps.size());
      if (!hs.reps.empty() || hs.boundary_count > 0) hspaces[k].emplace(wt, std::move(hs));
    }
    deg.rank_out = rank_out;
    rep.degrees.push_back(std::move(deg));
  }
  for (int k = 0; k <= kmax; ++k) rep.degrees[k].rank_in = k > 0 ? rep.degrees[k - 1].rank_out : 0;

  // Constituents: joint kernel of the induced even raisings between the
  // cohomology weight spaces.
  for (int k = 0; k <= kmax; ++k) {
    CohomologyDegree& deg = rep.degrees[k];
    for (const auto& [wt, hs] : hspaces[k]) {
      int cols = static_cast<int>(hs.reps.size());
      if (cols == 0) continue;
      std::vector<std::vector<mpq_class>> stacked_rows;
      for (size_t gi = 0; gi < evens.size(); ++gi) {
        const GenKey& g = evens[gi];
        SuperWeight wt2 = shift_even(wt, g, n);
        auto itt = hspaces[k].find(wt2);
        int target_reps = itt == hspaces[k].end() ? 0 : static_cast<int>(itt->second.reps.size());
        std::vector<std::vector<mpq_class>> block(target_reps, std::vector<mpq_class>(cols, mpq_class(0)));
        for (int c = 0; c < cols; ++c) {
          DenseVec gv;
          for (size_t lc = 0; lc < hs.reps[c].size(); ++lc)
            if (hs.reps[c][lc] != 0) gv[hs.idxs[lc]] = hs.reps[c][lc];
          DenseVec w = apply_sparse(rhos[k][gi], gv);
          if (w.empty()) continue;
          if (itt == hspaces[k].end()) {
            // Target space has no cycles at all; the image must still be a
            // boundary-free cycle, which only the zero vector satisfies here.
            throw std::logic_error("odd_radical_cohomology: image misses every recorded weight space");
          }
          const HSpace& ht = itt->second;
          std::map<int, int> tlocal;
          for (size_t r = 0; r < ht.idxs.size(); ++r) tlocal[ht.idxs[r]] = static_cast<int>(r);
          std::vector<mpq_class> tv(ht.idxs.size(), mpq_class(0));
          for (const auto& [row, e] : w) tv[tlocal.at(row)] = e;
          std::optional<std::vector<mpq_class>> coords = ht.span.express(tv);
          if (!coords) throw std::logic_error("odd_radical_cohomology: induced image not a recorded cycle");
          for (int r = 0; r < target_reps; ++r) block[r][c] = (*coords)[ht.boundary_count + r];
        }
        for (auto& row : block) stacked_rows.push_back(std::move(row));
      }
      RatMat stacked(static_cast<int>(stacked_rows.size()), cols);
      for (size_t r = 0; r < stacked_rows.size(); ++r)
        for (int c = 0; c < cols; ++c) stacked.at(static_cast<int>(r), c) = stacked_rows[r][c];
      int nullity = rat_nullspace(stacked).cols;
      if (nullity > 0) deg.components.push_back({wt, nullity});
    }
    std::vector<SuperWeight> expected;
    for (const SuperWeight& eta : layers[k])
      if (survives_truncation(eta, n)) expected.push_back(with_n(natural(eta), n));
    std::sort(expected.begin(), expected.end());
    deg.expected = std::move(expected);
    std::vector<SuperWeight> got;
    for (const CohomologyComponent& c : deg.components)
      for (int t = 0; t < c.multiplicity; ++t) got.push_back(c.weight);
    deg.matches_expected = got == deg.expected;
  }

  rep.all_match = true;
  for (const CohomologyDegree& deg : rep.degrees)
    if (!deg.matches_expected) rep.all_match = false;

  // Alternating dimension count against the rank of the last differential.
  long long lhs = 0, rhs = 0;
  for (int k = 0; k <= kmax; ++k) {
    long long s = k % 2 == 0 ? 1 : -1;
    lhs += s * cdim[k];
    rhs += s * rep.degrees[k].cohomology_dim;
  }
  rhs += (kmax % 2 == 0 ? 1 : -1) * rep.degrees[kmax].rank_out;
  rep.euler_consistent = lhs == rhs;

  return rep;
}

}  // namespace kacres
