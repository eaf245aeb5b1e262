#include "kacres/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kacres {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

void require_partition(const Partition& p) {
  if (!is_partition(p)) throw std::invalid_argument("not a partition");
}

long long partition_size(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0LL);
}

int part_at(const Partition& p, int i) {
  if (i < 1) throw std::invalid_argument("part_at: index must be >= 1");
  return i <= static_cast<int>(p.size()) ? p[i - 1] : 0;
}

Partition conjugate(const Partition& p) {
  require_partition(p);
  Partition q;
  if (p.empty()) return q;
  q.resize(p[0]);
  for (int j = 1; j <= p[0]; ++j) {
    int rows = 0;
    while (rows < static_cast<int>(p.size()) && p[rows] >= j) ++rows;
    q[j - 1] = rows;
  }
  return q;
}

bool in_hook(const Partition& p, int m, int n) {
  require_partition(p);
  if (m < 0) throw std::invalid_argument("in_hook: m must be >= 0");
  if (n < 0) return true;
  return part_at(p, m + 1) <= n;
}

HalfIntegerSets aux_half_integer_sets(const Partition& p, int N) {
  require_partition(p);
  if (N < static_cast<int>(p.size()) || N < part_at(p, 1))
    throw std::invalid_argument("aux_half_integer_sets: N too small");
  Partition q = conjugate(p);
  HalfIntegerSets s;
  for (int i = 1; i <= N; ++i) {
    int a2 = 2 * (part_at(q, i) - i) + 1;
    if (a2 > 0) s.a2.push_back(a2);
    int c2 = 2 * (part_at(p, i) - i) + 1;
    if (c2 < 0) s.b2.push_back(-c2);
  }
  return s;
}

ContentSquareIdentity content_square_identity(const Partition& p, int N) {
  require_partition(p);
  if (N < static_cast<int>(p.size()) || N < part_at(p, 1))
    throw std::invalid_argument("content_square_identity: N too small");
  Partition q = conjugate(p);
  ContentSquareIdentity id;
  for (long long j = 1; j <= N; ++j) {
    long long a = 2 * (part_at(p, static_cast<int>(j)) - j) + 1;
    long long b = 2 * (part_at(q, static_cast<int>(j)) - j) + 1;
    id.lhs4 += a * a + b * b;
    id.rhs4 += 2 * (2 * j - 1) * (2 * j - 1);
  }
  return id;
}

Partition parse_partition(const std::string& text) {
  Partition p;
  if (text.empty()) return p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_partition: bad entry '" + item + "'");
    }
    if (used != item.size())
      throw std::invalid_argument("parse_partition: bad entry '" + item + "'");
    p.push_back(v);
  }
  if (!ss.eof() || text.back() == ',')
    throw std::invalid_argument("parse_partition: trailing separator");
  if (!is_partition(p))
    throw std::invalid_argument("parse_partition: entries must be positive and decreasing");
  return p;
}

std::string format_partition(const Partition& p) {
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

namespace {

void extend_partitions(int remaining, int cap, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(cap, remaining); part >= 1; --part) {
    cur.push_back(part);
    extend_partitions(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int total) {
  if (total < 0) throw std::invalid_argument("partitions_of: total must be >= 0");
  std::vector<Partition> out;
  Partition cur;
  extend_partitions(total, total == 0 ? 1 : total, cur, out);
  return out;
}

long long standard_tableau_count(const Partition& p) {
  require_partition(p);
  long long size = partition_size(p);
  if (size > 20) throw std::invalid_argument("standard_tableau_count: shape too large");
  Partition q = conjugate(p);
  unsigned long long fact = 1;  // 20! still fits in 64 bits
  for (long long v = 2; v <= size; ++v) fact *= static_cast<unsigned long long>(v);
  unsigned long long hooks = 1;
  for (int r = 0; r < static_cast<int>(p.size()); ++r)
    for (int c = 0; c < p[r]; ++c)
      hooks *= static_cast<unsigned long long>((p[r] - c) + (q[c] - r) - 1);
  if (hooks == 0 || fact % hooks != 0)
    throw std::logic_error("standard_tableau_count: hook product must divide n!");
  return static_cast<long long>(fact / hooks);
}

}  // namespace kacres
