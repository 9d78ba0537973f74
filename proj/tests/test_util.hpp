#pragma once

#include <random>
#include <string>
#include <vector>

#include "rowmotion/poset.hpp"

namespace test_util {

// Random poset on n elements: a random DAG on 0..n-1 (edges i -> j, i < j).
inline rowmotion::Poset random_poset(std::mt19937& rng, std::size_t n, double density) {
  std::bernoulli_distribution edge(density);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back("x" + std::to_string(i));
  std::vector<rowmotion::Cover> covers;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng))
        covers.emplace_back(i, j);
  return rowmotion::Poset::from_covers(labels, covers);
}

}  // namespace test_util
