#include "kacres/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kacres/errors.hpp"

namespace kacres {

namespace {

// Shifted value at merged linear position p (1-based): weight + staircase.
long long shifted_at(const SuperWeight& u, int p) {
  long long stair = static_cast<long long>(u.m) + 1 - p;
  int index = p <= u.m ? p - u.m - 1 : p - u.m;
  long long c = p <= u.m ? u.neg[p - 1] : (index <= static_cast<int>(u.pos.size()) ? u.pos[index - 1] : 0);
  return c + stair;
}

SuperWeight weight_from_shifted(int m, const std::vector<long long>& vals) {
  std::vector<long long> neg(vals.begin(), vals.begin() + m);
  std::vector<long long> pos(vals.begin() + m, vals.end());
  for (int p = 1; p <= static_cast<int>(vals.size()); ++p) {
    long long stair = static_cast<long long>(m) + 1 - p;
    (p <= m ? neg[p - 1] : pos[p - m - 1]) -= stair;
  }
  return make_weight(m, kInfiniteN, std::move(neg), std::move(pos));
}

}  // namespace

SuperWeight dot_reflect(const SuperWeight& u, int j) {
  if (j == 0) throw std::invalid_argument("dot_reflect: index 0");
  int p;  // linear position of j
  if (j < 0) {
    if (j < -u.m) throw std::invalid_argument("dot_reflect: index below the line");
    p = j + u.m + 1;
  } else {
    if (u.n != kInfiniteN && j + 1 > u.n)
      throw std::invalid_argument("dot_reflect: successor beyond the line");
    p = j + u.m;
  }
  int len = std::max(p + 1, u.m + static_cast<int>(u.pos.size()) + 1);
  std::vector<long long> vals(len);
  for (int q = 1; q <= len; ++q) vals[q - 1] = shifted_at(u, q);
  std::swap(vals[p - 1], vals[p]);
  SuperWeight r = weight_from_shifted(u.m, vals);
  return with_n(r, u.n);
}

CosetLayers minimal_coset_layers(const SuperWeight& lambda, int kmax) {
  if (kmax < 0) throw std::invalid_argument("minimal_coset_layers: kmax must be >= 0");
  flatten_to_partition(lambda);  // validates the shape
  const int m = lambda.m;
  const int window = m + kmax;
  const int tail = window + static_cast<int>(lambda.pos.size()) + m + 2;

  std::vector<long long> a(tail);
  for (int p = 1; p <= tail; ++p) a[p - 1] = shifted_at(lambda, p);
  for (int p = 1; p < tail; ++p)
    if (a[p - 1] <= a[p]) throw std::logic_error("minimal_coset_layers: shifted sequence not strictly decreasing");

  CosetLayers layers;
  for (int k = 0; k <= kmax; ++k) layers[k];

  // m-subsets of {1..window} as sorted position vectors.
  std::vector<int> pick(m);
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    long long crossing = 0;
    for (int t = 0; t < m; ++t) crossing += pick[t] - 1 - t;
    if (crossing <= kmax) {
      std::vector<long long> vals;
      vals.reserve(tail);
      for (int t = 0; t < m; ++t) vals.push_back(a[pick[t] - 1]);
      int next = 0;
      for (int p = 1; p <= tail; ++p) {
        if (next < m && pick[next] == p) {
          ++next;
          continue;
        }
        vals.push_back(a[p - 1]);
      }
      SuperWeight eta = weight_from_shifted(m, vals);
      if (!in_dominant_cone(eta))
        throw std::logic_error("minimal_coset_layers: image left the dominant cone");
      layers[static_cast<int>(crossing)].push_back(eta);
    }
    // next m-subset of {1..window} in lexicographic order
    int t = m - 1;
    while (t >= 0 && pick[t] == window - (m - 1 - t)) --t;
    if (t < 0) break;
    ++pick[t];
    for (int u = t + 1; u < m; ++u) pick[u] = pick[u - 1] + 1;
  }

  for (auto& [k, ws] : layers) {
    std::sort(ws.begin(), ws.end());
    for (size_t i = 1; i < ws.size(); ++i)
      if (ws[i] == ws[i - 1]) throw std::logic_error("minimal_coset_layers: duplicate image");
  }
  return layers;
}

CosetLayers minimal_coset_layers_bruteforce(const SuperWeight& lambda, int N, int kmax) {
  flatten_to_partition(lambda);
  const int m = lambda.m;
  if (N < 1) throw std::invalid_argument("bruteforce layers: N must be >= 1");
  if (m + N > 8) throw guard_error("bruteforce layers: m+N guard exceeded");
  if (static_cast<int>(lambda.pos.size()) > N)
    throw std::invalid_argument("bruteforce layers: lambda support exceeds N");

  const int len = m + N;
  std::vector<long long> a(len);
  for (int p = 1; p <= len; ++p) a[p - 1] = shifted_at(lambda, p);

  CosetLayers layers;
  for (int k = 0; k <= kmax; ++k) layers[k];

  std::vector<int> w(len);  // w[p-1] = image of position p
  std::iota(w.begin(), w.end(), 1);
  do {
    // Every inversion must send the later position into the negative block
    // and the earlier one into the positive block.
    bool minimal = true;
    int inversions = 0;
    for (int p = 0; p < len && minimal; ++p) {
      for (int q = p + 1; q < len; ++q) {
        if (w[p] > w[q]) {
          ++inversions;
          if (!(w[q] <= m && w[p] > m)) {
            minimal = false;
            break;
          }
        }
      }
    }
    if (!minimal || inversions > kmax) continue;

    std::vector<long long> vals(len);
    for (int p = 0; p < len; ++p) vals[w[p] - 1] = a[p];
    SuperWeight eta = weight_from_shifted(m, vals);
    layers[inversions].push_back(eta);
  } while (std::next_permutation(w.begin(), w.end()));

  for (auto& [k, ws] : layers) std::sort(ws.begin(), ws.end());
  return layers;
}

bool survives_truncation(const SuperWeight& w, int n) {
  if (n == kInfiniteN) return true;
  return coord(w, 1) <= n;
}

CosetLayers truncate_layers(const CosetLayers& layers, int n) {
  CosetLayers out;
  for (const auto& [k, ws] : layers) {
    auto& dst = out[k];
    for (const auto& w : ws)
      if (survives_truncation(w, n)) dst.push_back(w);
  }
  return out;
}

}  // namespace kacres
