#include "kacres/weight.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace kacres {

bool operator<(const SuperWeight& a, const SuperWeight& b) {
  return std::tie(a.m, a.n, a.neg, a.pos) < std::tie(b.m, b.n, b.neg, b.pos);
}

SuperWeight make_weight(int m, int n, std::vector<long long> neg, std::vector<long long> pos) {
  if (m < 1) throw std::invalid_argument("make_weight: m must be >= 1");
  if (n != kInfiniteN && n < 0) throw std::invalid_argument("make_weight: bad n");
  if (static_cast<int>(neg.size()) != m)
    throw std::invalid_argument("make_weight: negative block must have m entries");
  while (!pos.empty() && pos.back() == 0) pos.pop_back();
  if (n != kInfiniteN && static_cast<int>(pos.size()) > n)
    throw std::invalid_argument("make_weight: positive support exceeds n");
  SuperWeight w;
  w.m = m;
  w.n = n;
  w.neg = std::move(neg);
  w.pos = std::move(pos);
  return w;
}

SuperWeight with_n(const SuperWeight& w, int n) {
  return make_weight(w.m, n, w.neg, w.pos);
}

long long coord(const SuperWeight& w, int i) {
  if (i < 0) {
    if (i < -w.m) throw std::out_of_range("coord: negative index out of range");
    return w.neg[i + w.m];
  }
  if (i == 0) throw std::out_of_range("coord: index 0 does not exist");
  if (w.n != kInfiniteN && i > w.n) throw std::out_of_range("coord: positive index out of range");
  return i <= static_cast<int>(w.pos.size()) ? w.pos[i - 1] : 0;
}

bool in_dominant_cone(const SuperWeight& w) {
  for (size_t i = 1; i < w.neg.size(); ++i)
    if (w.neg[i] > w.neg[i - 1]) return false;
  for (size_t i = 0; i < w.pos.size(); ++i) {
    if (w.pos[i] < 0) return false;
    if (i > 0 && w.pos[i] > w.pos[i - 1]) return false;
  }
  return true;
}

bool in_dominant_integral(const SuperWeight& w) {
  for (size_t i = 1; i < w.neg.size(); ++i)
    if (w.neg[i] > w.neg[i - 1]) return false;
  for (size_t i = 1; i < w.pos.size(); ++i)
    if (w.pos[i] > w.pos[i - 1]) return false;
  // Beyond the stored support the sequence is zero.
  if (!w.pos.empty() && w.n != kInfiniteN && static_cast<int>(w.pos.size()) < w.n &&
      w.pos.back() < 0)
    return false;
  if (!w.pos.empty() && w.n == kInfiniteN && w.pos.back() < 0) return false;
  return true;
}

SuperWeight natural(const SuperWeight& w) {
  if (!in_dominant_cone(w))
    throw std::invalid_argument("natural: positive block must be a partition");
  Partition p(w.pos.begin(), w.pos.end());
  Partition q = conjugate(p);
  std::vector<long long> pos(q.begin(), q.end());
  return make_weight(w.m, w.n, w.neg, std::move(pos));
}

long long rho_gl(int i) {
  if (i == 0) throw std::invalid_argument("rho_gl: index 0");
  return i < 0 ? -static_cast<long long>(i) : 1 - static_cast<long long>(i);
}

long long rho_super(int i) {
  if (i == 0) throw std::invalid_argument("rho_super: index 0");
  return -static_cast<long long>(i);
}

namespace {

void require_same_shape(const SuperWeight& u, const SuperWeight& v) {
  if (u.m != v.m || u.n != v.n)
    throw std::invalid_argument("bilinear form: mismatched weight shapes");
}

}  // namespace

long long bilinear_gl(const SuperWeight& u, const SuperWeight& v) {
  require_same_shape(u, v);
  long long s = 0;
  for (int i = 0; i < u.m; ++i) s += u.neg[i] * v.neg[i];
  size_t t = std::min(u.pos.size(), v.pos.size());
  for (size_t j = 0; j < t; ++j) s += u.pos[j] * v.pos[j];
  return s;
}

long long bilinear_super(const SuperWeight& u, const SuperWeight& v) {
  require_same_shape(u, v);
  long long s = 0;
  for (int i = 0; i < u.m; ++i) s += u.neg[i] * v.neg[i];
  size_t t = std::min(u.pos.size(), v.pos.size());
  for (size_t j = 0; j < t; ++j) s -= u.pos[j] * v.pos[j];
  return s;
}

long long casimir_gl(const SuperWeight& u) {
  long long s = 0;
  for (int i = 0; i < u.m; ++i) {
    long long c = u.neg[i];
    s += c * c + 2 * rho_gl(i - u.m) * c;
  }
  for (size_t j = 0; j < u.pos.size(); ++j) {
    long long c = u.pos[j];
    s += c * c + 2 * rho_gl(static_cast<int>(j) + 1) * c;
  }
  return s;
}

long long casimir_super(const SuperWeight& u) {
  long long s = 0;
  for (int i = 0; i < u.m; ++i) {
    long long c = u.neg[i];
    s += c * c + 2 * rho_super(i - u.m) * c;
  }
  for (size_t j = 0; j < u.pos.size(); ++j) {
    long long c = u.pos[j];
    s -= c * c + 2 * rho_super(static_cast<int>(j) + 1) * c;
  }
  return s;
}

long long z_degree2(const SuperWeight& w) {
  long long s = 0;
  for (long long c : w.neg) s += c;
  for (long long c : w.pos) s -= c;
  return s;
}

SuperWeight split_hook(const Partition& p, int m, int n) {
  if (m < 1) throw std::invalid_argument("split_hook: m must be >= 1");
  if (!in_hook(p, m, n)) throw std::invalid_argument("split_hook: partition leaves the hook");
  std::vector<long long> neg(m, 0);
  for (int i = 0; i < m && i < static_cast<int>(p.size()); ++i) neg[i] = p[i];
  std::vector<long long> pos;
  for (int i = m; i < static_cast<int>(p.size()); ++i) pos.push_back(p[i]);
  return make_weight(m, kInfiniteN, std::move(neg), std::move(pos));
}

Partition flatten_to_partition(const SuperWeight& w) {
  Partition p;
  for (long long c : w.neg) {
    if (c < 0) throw std::invalid_argument("flatten_to_partition: negative entry");
    p.push_back(static_cast<int>(c));
  }
  for (long long c : w.pos) p.push_back(static_cast<int>(c));
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (!is_partition(p))
    throw std::invalid_argument("flatten_to_partition: sequence is not a partition");
  return p;
}

namespace {

std::vector<long long> parse_int_list(const std::string& text, const char* what) {
  std::vector<long long> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    long long v;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("parse_weight: bad ") + what + " entry '" + item + "'");
    }
    if (used != item.size())
      throw std::invalid_argument(std::string("parse_weight: bad ") + what + " entry '" + item + "'");
    out.push_back(v);
  }
  if (text.back() == ',') throw std::invalid_argument("parse_weight: trailing separator");
  return out;
}

}  // namespace

SuperWeight parse_weight(const std::string& text) {
  size_t bar = text.find('|');
  if (bar == std::string::npos)
    throw std::invalid_argument("parse_weight: missing '|' separator");
  if (text.find('|', bar + 1) != std::string::npos)
    throw std::invalid_argument("parse_weight: more than one '|'");
  std::vector<long long> neg = parse_int_list(text.substr(0, bar), "negative-block");
  std::vector<long long> pos = parse_int_list(text.substr(bar + 1), "positive-block");
  if (neg.empty()) throw std::invalid_argument("parse_weight: empty negative block");
  int m = static_cast<int>(neg.size());
  return make_weight(m, kInfiniteN, std::move(neg), std::move(pos));
}

std::string format_weight(const SuperWeight& w) {
  std::string out;
  for (int i = 0; i < w.m; ++i) {
    if (i) out += ',';
    out += std::to_string(w.neg[i]);
  }
  out += '|';
  for (size_t j = 0; j < w.pos.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(w.pos[j]);
  }
  return out;
}

std::string format_half(long long doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

}  // namespace kacres
