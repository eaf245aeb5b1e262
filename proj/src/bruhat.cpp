#include "kacres/bruhat.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kacres {

std::vector<long long> shifted_window(const SuperWeight& u, int length) {
  std::vector<long long> s(length);
  for (int p = 1; p <= length; ++p) {
    long long stair = static_cast<long long>(u.m) + 1 - p;
    long long c;
    if (p <= u.m) {
      c = u.neg[p - 1];
    } else {
      int j = p - u.m;
      c = j <= static_cast<int>(u.pos.size()) ? u.pos[j - 1] : 0;
    }
    s[p - 1] = c + stair;
  }
  return s;
}

namespace {

int common_window(const SuperWeight& u, const SuperWeight& v) {
  if (u.m != v.m) throw std::invalid_argument("bruhat order: mismatched negative-block length");
  int support = std::max(u.pos.size(), v.pos.size());
  return u.m + support + 1;
}

bool same_multiset(std::vector<long long> a, std::vector<long long> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

bool bruhat_leq(const SuperWeight& u, const SuperWeight& v) {
  int T = common_window(u, v);
  std::vector<long long> su = shifted_window(u, T);
  std::vector<long long> sv = shifted_window(v, T);
  if (!same_multiset(su, sv)) return false;
  // Rank-count criterion: every decreasingly sorted prefix of u is dominated
  // entrywise by the matching prefix of v.
  std::vector<long long> pu, pv;
  for (int t = 0; t < T; ++t) {
    pu.insert(std::upper_bound(pu.begin(), pu.end(), su[t], std::greater<>()), su[t]);
    pv.insert(std::upper_bound(pv.begin(), pv.end(), sv[t], std::greater<>()), sv[t]);
    for (int r = 0; r <= t; ++r)
      if (pu[r] > pv[r]) return false;
  }
  return true;
}

bool bruhat_leq_closure(const SuperWeight& u, const SuperWeight& v) {
  int T = common_window(u, v);
  std::vector<long long> target = shifted_window(u, T);
  std::vector<long long> start = shifted_window(v, T);
  if (!same_multiset(target, start)) return false;

  std::set<std::vector<long long>> seen;
  std::vector<std::vector<long long>> frontier{start};
  seen.insert(start);
  while (!frontier.empty()) {
    std::vector<std::vector<long long>> next;
    for (const auto& s : frontier) {
      if (s == target) return true;
      for (int p = 0; p < T; ++p) {
        for (int q = p + 1; q < T; ++q) {
          if (s[p] > s[q]) {
            std::vector<long long> t = s;
            std::swap(t[p], t[q]);
            if (seen.insert(t).second) next.push_back(std::move(t));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return false;
}

bool bruhat_leq_super(const SuperWeight& u, const SuperWeight& v) {
  if (!in_dominant_cone(u) || !in_dominant_cone(v))
    throw std::invalid_argument("bruhat_leq_super: weights must lie in the dominant cone");
  return bruhat_leq(natural(u), natural(v));
}

std::optional<std::pair<int, int>> first_comparable_pair(const std::vector<SuperWeight>& ws,
                                                         bool super_order) {
  for (int i = 0; i < static_cast<int>(ws.size()); ++i) {
    for (int j = 0; j < static_cast<int>(ws.size()); ++j) {
      if (i == j) continue;
      bool leq = super_order ? bruhat_leq_super(ws[i], ws[j]) : bruhat_leq(ws[i], ws[j]);
      if (leq) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

}  // namespace kacres
