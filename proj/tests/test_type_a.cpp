#include <doctest.h>

#include "rowmotion/errors.hpp"
#include "rowmotion/type_a.hpp"

using namespace rowmotion;
using namespace rowmotion::type_a;

namespace {

std::uint64_t catalan(std::uint64_t n) {
  std::uint64_t c = 1;
  for (std::uint64_t k = 0; k < n; ++k)
    c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

// Runs of consecutive integers in a sorted sequence, counted directly.
int runs(const std::vector<int>& v) {
  int r = 0;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (k == 0 || v[k] != v[k - 1] + 1)
      ++r;
  return r;
}

}  // namespace

TEST_CASE("antichain counts are Catalan numbers") {
  for (int n = 1; n <= 7; ++n) {
    RootPosetA ra(n);
    CHECK(enumerate_antichains(ra.poset()).size() == catalan(static_cast<std::uint64_t>(n + 1)));
  }
}

TEST_CASE("OY examples") {
  RootPosetA a3(3);
  CHECK(oy_ideal_form(a3, {a3.element(1, 1), a3.element(3, 3)}) == 2);
  CHECK(oy_difference_form({3, {1, 3}, {1, 3}}) == 2);
  RootPosetA a4(4);
  ElementSet simple;
  for (int t = 1; t <= 4; ++t)
    simple.insert(a4.element(t, t));
  CHECK(oy_ideal_form(a4, simple) == 0);
  CHECK(oy_difference_form(a4.to_array(simple)) == 0);
  CHECK(oy_difference_form({5, {}, {}}) == 0);
  // alternating simple roots reach n - 1
  CHECK(oy_ideal_form(a4, {a4.element(1, 1), a4.element(3, 3)}) == 3);
}

TEST_CASE("array rowmotion by hand") {
  // {alpha_1} in A3: shifted array (1,2 | 0,3) drops the first column
  CHECK(rowmotion_array(TwoRowArray{3, {1}, {1}}) == TwoRowArray{3, {2}, {3}});
  CHECK(rowmotion_array(TwoRowArray{3, {}, {}}) == TwoRowArray{3, {1}, {3}});
  CHECK(inverse_rowmotion_array(TwoRowArray{3, {}, {}}) == TwoRowArray{3, {1, 2, 3}, {1, 2, 3}});
  CHECK(inverse_rowmotion_array(TwoRowArray{3, {2}, {3}}) == TwoRowArray{3, {1}, {1}});
}

TEST_CASE("duality") {
  RootPosetA a3(3);
  const auto dual = star(a3, {a3.element(1, 1)});
  CHECK(dual == ElementSet{a3.element(2, 2), a3.element(3, 3)});
  CHECK(star(TwoRowArray{3, {}, {}}) == TwoRowArray{3, {1, 2, 3}, {1, 2, 3}});
}

TEST_CASE("array and generic operators agree exhaustively") {
  for (int n = 1; n <= 6; ++n) {
    RootPosetA ra(n);
    const auto& p = ra.poset();
    for (const auto& a : enumerate_antichains(p)) {
      const auto arr = ra.to_array(a);
      CHECK(arr.valid());
      CHECK(ra.from_array(arr) == a);
      CHECK(rowmotion_array(ra, a) == rowmotion::rowmotion(p, a));
      CHECK(inverse_rowmotion_array(ra, a) == inverse_rowmotion(p, a));
      CHECK(oy_ideal_form(ra, a) == oy_difference_form(arr));
      CHECK(oy_ideal_form(ra, rowmotion::rowmotion(p, a)) == oy_ideal_form(ra, a));
      CHECK(star(ra, star(ra, a)) == a);
      CHECK(star(ra, rowmotion::rowmotion(p, a)) == inverse_rowmotion(p, star(ra, a)));
    }
  }
}

TEST_CASE("component counts match the chi sums for n <= 10") {
  for (int n = 1; n <= 10; ++n) {
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<int> seq;
      for (int t = 1; t <= n; ++t)
        if (mask & (1U << (t - 1)))
          seq.push_back(t);
      auto with_zero = seq;
      with_zero.insert(with_zero.begin(), 0);
      auto with_top = seq;
      with_top.push_back(n + 1);
      CHECK(lower_chi_sum(seq) == runs(with_zero) - 1);
      CHECK(upper_chi_sum(seq, n) == runs(with_top) - 1);
      CHECK(lower_components(seq) == runs(with_zero) - 1);
      CHECK(upper_components(seq, n) == runs(with_top) - 1);
      CHECK(lower_chi_sum(seq) == upper_chi_sum(complement(seq, n), n));
    }
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(RootPosetA(build_root_system("B3")), NotTypeA);
  RootPosetA a3(3);
  CHECK_THROWS_AS(a3.to_array({a3.element(1, 1), a3.element(1, 2)}), NotAnAntichain);
  CHECK_THROWS_AS(a3.from_array(TwoRowArray{3, {2, 1}, {2, 3}}), NotAnAntichain);
  CHECK_FALSE(TwoRowArray{3, {1, 2}, {3, 3}}.valid());
  CHECK_THROWS_AS(a3.element(2, 1), ParseError);
}
