#pragma once

#include <cstddef>
#include <vector>

#include "rowmotion/poset.hpp"

namespace rowmotion::kernels {

// Dense permutation tables over an AntichainSet: entry i is the index of the
// image of antichain i. The OpenMP versions split the antichain range across
// threads; the *_serial versions are the single-threaded reference used by
// the tests and the benchmark.

std::vector<std::size_t> rowmotion_table(const Poset& p, const AntichainSet& ans);
std::vector<std::size_t> rowmotion_table_serial(const Poset& p, const AntichainSet& ans);

std::vector<std::size_t> inverse_rowmotion_table(const Poset& p, const AntichainSet& ans);
std::vector<std::size_t> inverse_rowmotion_table_serial(const Poset& p, const AntichainSet& ans);

/// Cycle decomposition of a permutation table; each cycle starts at its
/// smallest index and cycles are returned in order of their first index.
std::vector<std::vector<std::size_t>> cycles(const std::vector<std::size_t>& table);

/// table applied `power` times (power >= 0).
std::vector<std::size_t> table_power(const std::vector<std::size_t>& table, std::size_t power);

}  // namespace rowmotion::kernels
