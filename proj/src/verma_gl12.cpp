#include "kacres/verma_gl12.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "kacres/errors.hpp"

namespace kacres {

namespace {

// Generators of the (1|2) matrix superalgebra in the straightening order:
// lowerings, then Cartans, then raisings.
constexpr int kNumGens = 9;
const GenKey kGens[kNumGens] = {
    {1, -1},   // 0: odd lowering
    {2, -1},   // 1: odd lowering
    {2, 1},    // 2: even lowering
    {-1, -1},  // 3
    {1, 1},    // 4
    {2, 2},    // 5
    {-1, 1},   // 6: odd raising
    {-1, 2},   // 7: odd raising
    {1, 2},    // 8: even raising
};

int gen_id(const GenKey& k) {
  for (int t = 0; t < kNumGens; ++t)
    if (kGens[t] == k) return t;
  throw std::logic_error("verma: bracket left the generator list");
}

bool odd_id(int t) { return generator_parity(kGens[t]) == 1; }

// Highest weight (1|0,0) evaluated on the Cartan generators.
long long cartan_eval(int t) { return t == 3 ? 1 : 0; }

using Word = std::vector<int>;
using Combo = std::map<Word, long long>;

void add_word(Combo& c, const Word& w, long long coeff) {
  if (coeff == 0) return;
  auto it = c.find(w);
  if (it == c.end()) {
    c.emplace(w, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) c.erase(it);
  }
}

// Rewrites a product of generators into sorted words, smallest id first.
// Adjacent equal odd generators square to zero; an out-of-order pair swaps
// with its supercommutator as the lower-order remainder.
const Combo& normal_form(const Word& w, std::map<Word, Combo>& memo) {
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;

  Combo out;
  size_t bad = w.size();
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1] || (w[i] == w[i + 1] && odd_id(w[i]))) {
      bad = i;
      break;
    }
  }
  if (bad == w.size()) {
    add_word(out, w, 1);
  } else if (w[bad] == w[bad + 1]) {
    // zero: odd square
  } else {
    int x = w[bad], y = w[bad + 1];
    Word swapped = w;
    std::swap(swapped[bad], swapped[bad + 1]);
    long long sign = (odd_id(x) && odd_id(y)) ? -1 : 1;
    for (const auto& [word2, c2] : normal_form(swapped, memo)) add_word(out, word2, sign * c2);
    for (const auto& [k, c] : elementary_bracket(kGens[x], kGens[y])) {
      Word contracted(w.begin(), w.begin() + bad);
      contracted.push_back(gen_id(k));
      contracted.insert(contracted.end(), w.begin() + bad + 2, w.end());
      for (const auto& [word2, c2] : normal_form(contracted, memo)) add_word(out, word2, c * c2);
    }
  }
  return memo.emplace(w, std::move(out)).first->second;
}

struct Monomial {
  int a = 0, b = 0, c = 0;  // exponents of the three lowerings, a, b <= 1
  auto operator<=>(const Monomial&) const = default;
  int depth() const { return a + b + c; }
};

// Applies a sorted word to the highest weight vector: raisings kill it,
// Cartans evaluate, lowerings remain as a monomial.
std::optional<std::pair<Monomial, long long>> eval_on_hw(const Word& w) {
  Monomial mono;
  long long coeff = 1;
  for (int t : w) {
    if (t >= 6) return std::nullopt;  // raising meets the highest weight vector
    if (t >= 3) {
      coeff *= cartan_eval(t);
      if (coeff == 0) return std::nullopt;
    } else if (t == 0) {
      ++mono.a;
    } else if (t == 1) {
      ++mono.b;
    } else {
      ++mono.c;
    }
  }
  return std::make_pair(mono, coeff);
}

std::map<Monomial, long long> act(int genid, const Monomial& mono, std::map<Word, Combo>& memo) {
  Word w;
  w.push_back(genid);
  for (int t = 0; t < mono.a; ++t) w.push_back(0);
  for (int t = 0; t < mono.b; ++t) w.push_back(1);
  for (int t = 0; t < mono.c; ++t) w.push_back(2);
  std::map<Monomial, long long> out;
  for (const auto& [word2, c2] : normal_form(w, memo)) {
    std::optional<std::pair<Monomial, long long>> ev = eval_on_hw(word2);
    if (!ev) continue;
    long long add = c2 * ev->second;
    auto [it, fresh] = out.emplace(ev->first, add);
    if (!fresh) {
      it->second += add;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

SuperWeight monomial_weight(const Monomial& t) {
  return make_weight(1, 2, {1 - t.a - t.b}, {t.a - t.c, t.b + t.c});
}

std::string format_line(const std::vector<Monomial>& monos, const std::vector<mpq_class>& coords,
                        const std::vector<int>& idxs) {
  std::ostringstream os;
  bool first = true;
  for (int i : idxs) {
    const mpq_class& c = coords[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")";
    const Monomial& t = monos[i];
    for (int u = 0; u < t.a; ++u) os << " F1";
    for (int u = 0; u < t.b; ++u) os << " F2";
    for (int u = 0; u < t.c; ++u) os << " F3";
    os << " v";
  }
  return os.str();
}

}  // namespace

VermaGl12Report verma_gl12_study(int depth) {
  if (depth < 2) throw std::invalid_argument("verma_gl12_study: depth must be >= 2");
  if (depth > 8) throw guard_error("verma_gl12_study: depth guard exceeded");

  VermaGl12Report rep;
  rep.depth = depth;

  std::vector<Monomial> monos;
  std::map<Monomial, int> mono_index;
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      for (int c = 0; a + b + c <= depth; ++c) {
        mono_index[{a, b, c}] = static_cast<int>(monos.size());
        monos.push_back({a, b, c});
      }
  int dim = static_cast<int>(monos.size());
  rep.window_dim = dim;

  // Generator matrices on the window; lowering images beyond the window are
  // clipped and recorded per column.
  std::map<Word, Combo> memo;
  std::vector<RatMat> mats(kNumGens, RatMat(dim, dim));
  std::vector<std::vector<bool>> leaked(kNumGens, std::vector<bool>(dim, false));
  for (int g = 0; g < kNumGens; ++g)
    for (int col = 0; col < dim; ++col)
      for (const auto& [mono2, c2] : act(g, monos[col], memo)) {
        auto it = mono_index.find(mono2);
        if (it == mono_index.end())
          leaked[g][col] = true;
        else
          mats[g].at(it->second, col) += static_cast<long>(c2);
      }

  // Weight spaces whose monomials, over the whole module, all lie inside the
  // window: the only partner outside can sit one level deeper.
  std::map<SuperWeight, std::vector<int>> spaces;
  for (int t = 0; t < dim; ++t) spaces[monomial_weight(monos[t])].push_back(t);
  const SuperWeight top = make_weight(1, 2, {1}, {});
  std::vector<std::vector<mpq_class>> line_coords;

  for (const auto& [wt, idxs] : spaces) {
    bool complete = true;
    for (int i : idxs) {
      const Monomial& t = monos[i];
      if (t.a == 0 && t.b == 1 && t.depth() == depth) complete = false;
    }
    if (!complete || wt == top) continue;
    RatMat stacked(2 * dim, static_cast<int>(idxs.size()));
    const int raisings[2] = {6, 8};  // the two simple ones
    for (int r = 0; r < 2; ++r)
      for (size_t c = 0; c < idxs.size(); ++c)
        for (int row = 0; row < dim; ++row)
          stacked.at(r * dim + row, static_cast<int>(c)) = mats[raisings[r]].at(row, idxs[c]);
    RatMat ns = rat_nullspace(stacked);
    for (int k = 0; k < ns.cols; ++k) {
      std::vector<mpq_class> coords(dim, mpq_class(0));
      for (size_t c = 0; c < idxs.size(); ++c) coords[idxs[c]] = ns.at(static_cast<int>(c), k);
      int d = 0;
      for (int i : idxs)
        if (coords[i] != 0) d = std::max(d, monos[i].depth());
      rep.proper_lines.push_back({wt, d, format_line(monos, coords, idxs)});
      line_coords.push_back(std::move(coords));
    }
  }

  if (rep.proper_lines.empty()) return rep;

  // Window part of the submodule generated by the first proper line, grown
  // with clipped generator action.  The clipped span can only underestimate
  // the true window part, never leave it.
  RatSpan sub(dim);
  {
    std::vector<std::vector<mpq_class>> vecs;
    std::vector<size_t> queue;
    if (sub.insert(line_coords.front())) {
      vecs.push_back(line_coords.front());
      queue.push_back(0);
    }
    while (!queue.empty()) {
      std::vector<mpq_class> v = vecs[queue.back()];
      queue.pop_back();
      for (int g = 0; g < kNumGens; ++g) {
        std::vector<mpq_class> w = rat_matvec(mats[g], v);
        if (sub.insert(w)) {
          vecs.push_back(w);
          queue.push_back(vecs.size() - 1);
        }
      }
    }
  }
  rep.submodule_window_dim = sub.size();
  rep.quotient_window_dim = dim - sub.size();
  rep.quotient_dim_is_four = rep.quotient_window_dim == 4;

  // Quotient on the surviving coordinates.
  std::vector<bool> is_pivot(dim, false);
  for (int p : sub.pivots()) is_pivot[p] = true;
  std::vector<int> keep;
  for (int t = 0; t < dim; ++t)
    if (!is_pivot[t]) keep.push_back(t);

  ModuleRealization q;
  q.m = 1;
  q.n = 2;
  for (int t : keep) {
    q.weights.push_back(monomial_weight(monos[t]));
    q.parity.push_back((monos[t].a + monos[t].b) % 2);
    std::ostringstream lab;
    lab << "(" << monos[t].a << "," << monos[t].b << "," << monos[t].c << ")";
    q.labels.push_back(lab.str());
  }
  int qdim = static_cast<int>(keep.size());
  for (int g = 0; g < kNumGens; ++g) {
    RatMat M(qdim, qdim);
    for (int c = 0; c < qdim; ++c) {
      if (leaked[g][keep[c]])
        throw std::logic_error("verma_gl12_study: quotient column left the window");
      std::vector<mpq_class> col(dim);
      for (int r = 0; r < dim; ++r) col[r] = mats[g].at(r, keep[c]);
      std::vector<mpq_class> red = sub.reduce(col);
      for (int r = 0; r < qdim; ++r) M.at(r, c) = red[keep[r]];
    }
    q.gens.emplace(kGens[g], std::move(M));
  }

  // Entrywise match against the induced module with the same highest weight.
  ModuleRealization kac = build_kac_module(top);
  bool match = kac.dim() == qdim;
  if (match) {
    // keep order: (0,0,0), (0,1,0), (1,0,0), (1,1,0); the induced basis index
    // is the generator subset mask a + 2b.
    std::vector<int> perm(qdim);
    for (int t = 0; t < qdim; ++t) {
      const Monomial& mo = monos[keep[t]];
      if (mo.c != 0) match = false;
      perm[t] = mo.a + 2 * mo.b;
    }
    for (int g = 0; match && g < kNumGens; ++g) {
      const RatMat& K = kac.gen(kGens[g].first, kGens[g].second);
      const RatMat& Q = q.gen(kGens[g].first, kGens[g].second);
      for (int r = 0; match && r < qdim; ++r)
        for (int c = 0; c < qdim; ++c)
          if (!(Q.at(r, c) == K.at(perm[r], perm[c]))) {
            match = false;
            break;
          }
    }
  }
  rep.kac_match = match;

  for (const SingularLine& line : singular_vectors(q, simple_raisings(1, 2)))
    if (!(line.weight == top)) rep.quotient_singular_weights.push_back(line.weight);

  rep.irreducible_dim = irreducible_quotient(kac, top).quotient.dim();
  return rep;
}

}  // namespace kacres
