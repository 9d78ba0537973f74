#include <doctest.h>

#include <random>

#include "rowmotion/kernels.hpp"
#include "rowmotion/root_system.hpp"
#include "test_util.hpp"

using namespace rowmotion;

TEST_CASE("parallel tables match the serial reference") {
  for (const char* name : {"A5", "D5", "E6", "F4", "B4"}) {
    const auto rs = build_root_system(name);
    for (auto v : {PosetVariant::full(), PosetVariant::no_simple()}) {
      const auto p = root_poset(rs, v).poset;
      const auto ans = enumerate_antichains(p);
      const auto table = kernels::rowmotion_table(p, ans);
      const auto inverse = kernels::inverse_rowmotion_table(p, ans);
      CHECK(table == kernels::rowmotion_table_serial(p, ans));
      CHECK(inverse == kernels::inverse_rowmotion_table_serial(p, ans));
      for (std::size_t i = 0; i < ans.size(); ++i) {
        CHECK(ans[table[i]] == rowmotion::rowmotion(p, ans[i]));
        CHECK(inverse[table[i]] == i);
      }
    }
  }
}

TEST_CASE("cycles and powers") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = test_util::random_poset(rng, 4 + trial % 8, 0.3);
    const auto ans = enumerate_antichains(p);
    const auto table = kernels::rowmotion_table(p, ans);
    const auto cycles = kernels::cycles(table);
    std::vector<int> seen(ans.size(), 0);
    for (const auto& c : cycles) {
      CHECK(c.front() == *std::min_element(c.begin(), c.end()));
      for (std::size_t k = 0; k < c.size(); ++k) {
        ++seen[c[k]];
        CHECK(table[c[k]] == c[(k + 1) % c.size()]);
      }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
    for (std::uint64_t k : {0U, 1U, 5U, 13U}) {
      const auto power = kernels::table_power(table, k);
      for (std::size_t i = 0; i < ans.size(); ++i)
        CHECK(ans[power[i]] == rowmotion_power(p, ans[i], static_cast<long long>(k)));
    }
  }
}
