#include "kwmod/partition.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace kwmod {

std::string Partition::str() const {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out;
}

Partition validate_partition(const std::vector<int>& parts) {
  Partition p;
  p.parts = parts;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1)
      throw error(errc::not_weakly_decreasing,
                  "part " + std::to_string(parts[i]) + " is not positive");
    if (i > 0 && parts[i - 1] < parts[i])
      throw error(errc::not_weakly_decreasing,
                  "parts " + std::to_string(parts[i - 1]) + "," + std::to_string(parts[i]) +
                      " increase");
    p.total += parts[i];
  }
  return p;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string trimmed = text;
  // allow surrounding whitespace
  while (!trimmed.empty() && isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.erase(trimmed.begin());
  while (!trimmed.empty() && isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
  if (!trimmed.empty()) {
    std::stringstream ss(trimmed);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        size_t used = 0;
        int v = std::stoi(item, &used);
        while (used < item.size() && isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size()) throw std::invalid_argument(item);
        parts.push_back(v);
      } catch (const std::exception&) {
        throw error(errc::bad_argument, "cannot parse partition entry '" + item + "'");
      }
    }
  }
  return validate_partition(parts);
}

MergedShape merge_shapes(const Partition& r, const Partition& q) {
  MergedShape z;
  size_t ir = 0, iq = 0;
  // Two-way merge by descending length; odd (q) rows win ties so they end up
  // below the even row of the same length.
  while (ir < r.parts.size() || iq < q.parts.size()) {
    bool take_q;
    if (iq >= q.parts.size())
      take_q = false;
    else if (ir >= r.parts.size())
      take_q = true;
    else
      take_q = q.parts[iq] >= r.parts[ir];
    if (take_q) {
      z.rows.push_back({q.parts[iq], Parity::odd});
      ++iq;
    } else {
      z.rows.push_back({r.parts[ir], Parity::even});
      ++ir;
    }
  }
  return z;
}

std::pair<int, int> centralizer_dims_formula(const PartitionPair& pp) {
  int even = 0, odd = 0;
  for (int a : pp.r.parts)
    for (int b : pp.r.parts) even += std::min(a, b);
  for (int a : pp.q.parts)
    for (int b : pp.q.parts) even += std::min(a, b);
  for (int a : pp.r.parts)
    for (int b : pp.q.parts) odd += 2 * std::min(a, b);
  return {even, odd};
}

namespace {

void emit_partitions(int remaining, int cap, std::vector<int>& acc,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    Partition p;
    p.parts = acc;
    for (int v : acc) p.total += v;
    out.push_back(std::move(p));
    return;
  }
  for (int next = std::min(cap, remaining); next >= 1; --next) {
    acc.push_back(next);
    emit_partitions(remaining - next, next, acc, out);
    acc.pop_back();
  }
}

} // namespace

std::vector<Partition> all_partitions(int k) {
  if (k < 0) throw error(errc::bad_argument, "negative partition total");
  std::vector<Partition> out;
  std::vector<int> acc;
  emit_partitions(k, k, acc, out);
  return out;
}

std::vector<PartitionPair> partition_pairs(int m, int n) {
  std::vector<PartitionPair> out;
  for (const auto& r : all_partitions(m))
    for (const auto& q : all_partitions(n)) out.push_back({r, q});
  return out;
}

} // namespace kwmod
