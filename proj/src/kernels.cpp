#include "rowmotion/kernels.hpp"

#include <cstdint>

#include "rowmotion/errors.hpp"

namespace rowmotion::kernels {

namespace {

template <class Step>
std::vector<std::size_t> parallel_table(const AntichainSet& ans, Step step) {
  const auto n = static_cast<std::int64_t>(ans.size());
  constexpr auto kMissing = static_cast<std::size_t>(-1);
  std::vector<std::size_t> table(ans.size());
  // No exceptions may leave the parallel region; misses are checked after.
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    auto hit = ans.find(step(ans[static_cast<std::size_t>(i)]));
    table[static_cast<std::size_t>(i)] = hit ? *hit : kMissing;
  }
  for (auto t : table)
    if (t == kMissing)
      throw NotAnAntichain("image is not in the antichain set");
  return table;
}

template <class Step>
std::vector<std::size_t> serial_table(const AntichainSet& ans, Step step) {
  std::vector<std::size_t> table(ans.size());
  for (std::size_t i = 0; i < ans.size(); ++i)
    table[i] = ans.index_of(step(ans[i]));
  return table;
}

}  // namespace

std::vector<std::size_t> rowmotion_table(const Poset& p, const AntichainSet& ans) {
  return parallel_table(ans, [&](const ElementSet& a) { return rowmotion(p, a); });
}

std::vector<std::size_t> rowmotion_table_serial(const Poset& p, const AntichainSet& ans) {
  return serial_table(ans, [&](const ElementSet& a) { return rowmotion(p, a); });
}

std::vector<std::size_t> inverse_rowmotion_table(const Poset& p, const AntichainSet& ans) {
  return parallel_table(ans, [&](const ElementSet& a) { return inverse_rowmotion(p, a); });
}

std::vector<std::size_t> inverse_rowmotion_table_serial(const Poset& p, const AntichainSet& ans) {
  return serial_table(ans, [&](const ElementSet& a) { return inverse_rowmotion(p, a); });
}

std::vector<std::vector<std::size_t>> cycles(const std::vector<std::size_t>& table) {
  std::vector<bool> seen(table.size(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < table.size(); ++start) {
    if (seen[start])
      continue;
    std::vector<std::size_t> cyc;
    for (auto i = start; !seen[i]; i = table[i]) {
      seen[i] = true;
      cyc.push_back(i);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<std::size_t> table_power(const std::vector<std::size_t>& table, std::size_t power) {
  std::vector<std::size_t> result(table.size());
  for (std::size_t i = 0; i < table.size(); ++i)
    result[i] = i;
  std::vector<std::size_t> base = table;
  // Square-and-multiply on permutations.
  while (power > 0) {
    if (power & 1U) {
      for (auto& r : result)
        r = base[r];
    }
    std::vector<std::size_t> sq(base.size());
    for (std::size_t i = 0; i < base.size(); ++i)
      sq[i] = base[base[i]];
    base = std::move(sq);
    power >>= 1U;
  }
  return result;
}

}  // namespace rowmotion::kernels
