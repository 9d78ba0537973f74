#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "rowmotion/errors.hpp"
#include "rowmotion/poset.hpp"
#include "rowmotion/root_system.hpp"
#include "test_util.hpp"

using namespace rowmotion;

namespace {

// Brute-force oracles over explicit subsets; independent of the engine's
// ideal and antichain routines.
std::vector<std::uint32_t> brute_antichains(const Poset& p) {
  std::vector<std::uint32_t> out;
  const std::size_t n = p.size();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y)
        if (x != y && (mask >> x & 1) && (mask >> y & 1) && p.leq(x, y))
          ok = false;
    if (ok)
      out.push_back(mask);
  }
  return out;
}

std::uint32_t brute_rowmotion(const Poset& p, std::uint32_t a) {
  const std::size_t n = p.size();
  std::uint32_t ideal = 0;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      if ((a >> x & 1) && p.leq(x, y))
        ideal |= 1U << y;
  const std::uint32_t rest = ((1U << n) - 1) & ~ideal;
  std::uint32_t out = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (!(rest >> x & 1))
      continue;
    bool maximal = true;
    for (std::size_t y = 0; y < n; ++y)
      if (y != x && (rest >> y & 1) && p.leq(x, y))
        maximal = false;
    if (maximal)
      out |= 1U << x;
  }
  return out;
}

ElementSet from_mask(std::uint32_t m) {
  ElementSet s;
  for (std::size_t i = 0; i < 32; ++i)
    if (m >> i & 1)
      s.insert(i);
  return s;
}

std::uint32_t to_mask(const ElementSet& s) {
  std::uint32_t m = 0;
  s.for_each([&](std::size_t i) { m |= 1U << i; });
  return m;
}

}  // namespace

TEST_CASE("A2 root poset: antichains and the standard orbit") {
  auto p = Poset::from_cover_relations({"a1", "a2", "t"}, {{"a1", "t"}, {"a2", "t"}});
  CHECK(enumerate_antichains(p).size() == 5);
  const auto t = *p.index_of("t");
  const ElementSet theta{t};
  const ElementSet simple{*p.index_of("a1"), *p.index_of("a2")};
  CHECK(rowmotion::rowmotion(p, ElementSet{}) == theta);
  CHECK(rowmotion::rowmotion(p, theta) == simple);
  CHECK(rowmotion::rowmotion(p, simple).empty());
  CHECK(rowmotion::rowmotion(p, ElementSet{*p.index_of("a1")}) == ElementSet{*p.index_of("a2")});
  auto orbits = all_orbits(p);
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0].size() == 2);
  CHECK(orbits[1].size() == 3);
  CHECK(orbits[0].mean_size() == Rational(1));
  CHECK(orbits[1].mean_size() == Rational(1));
  CHECK(rowmotion_order(orbits) == 6);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Poset::from_cover_relations({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleDetected);
  CHECK_THROWS_AS(Poset::from_cover_relations({"a", "a"}, {}), DuplicateLabel);
  CHECK_THROWS_AS(Poset::from_cover_relations({"a"}, {{"a", "z"}}), UnknownLabel);
  CHECK_THROWS_AS(Poset::from_order({"a", "b"}, [](std::size_t, std::size_t) { return true; }), NotAPartialOrder);
}

TEST_CASE("covers are the transitive reduction") {
  auto p = Poset::from_cover_relations({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(p.covers().size() == 2);
  CHECK(p.leq(0, 2));
  CHECK_FALSE(p.is_cover(0, 2));
}

TEST_CASE("foreign sets and non-members are rejected") {
  auto p = Poset::from_cover_relations({"a", "b"}, {{"a", "b"}});
  CHECK_THROWS_AS(upper_ideal(p, ElementSet{5}), ForeignElement);
  CHECK_THROWS_AS(removal_index(p, ElementSet{0}, 1), NotAMember);
}

TEST_CASE("random posets agree with brute-force oracles") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = test_util::random_poset(rng, 2 + trial % 10, 0.3);
    const auto brute = brute_antichains(p);
    const auto ans = enumerate_antichains(p);
    REQUIRE(ans.size() == brute.size());
    std::set<std::uint32_t> engine;
    for (const auto& a : ans)
      engine.insert(to_mask(a));
    CHECK(engine == std::set<std::uint32_t>(brute.begin(), brute.end()));
    // enumeration order is lexicographic on sorted members
    CHECK(std::is_sorted(ans.begin(), ans.end()));

    std::set<std::uint32_t> images;
    for (auto m : brute) {
      const auto a = from_mask(m);
      const auto x = rowmotion::rowmotion(p, a);
      CHECK(to_mask(x) == brute_rowmotion(p, m));
      CHECK(inverse_rowmotion(p, x) == a);
      CHECK(rowmotion_power(p, a, -3) == inverse_rowmotion(p, inverse_rowmotion(p, inverse_rowmotion(p, a))));
      CHECK(minimal_elements(p, upper_ideal(p, a)) == a);
      CHECK(maximal_elements(p, lower_ideal(p, a)) == a);
      images.insert(to_mask(x));
    }
    CHECK(images.size() == brute.size());

    const auto orbits = all_orbits(p, ans);
    std::size_t total = 0;
    std::uint64_t lcm = 1;
    for (const auto& o : orbits) {
      total += o.size();
      lcm = std::lcm(lcm, static_cast<std::uint64_t>(o.size()));
      for (std::size_t k = 0; k < o.size(); ++k)
        CHECK(rowmotion::rowmotion(p, o.antichains[k]) == o.antichains[(k + 1) % o.size()]);
      CHECK(o.representative() == *std::min_element(o.antichains.begin(), o.antichains.end()));
      CHECK(orbit_of(p, o.antichains.back()).antichains == o.antichains);
    }
    CHECK(total == ans.size());
    CHECK(rowmotion_order(orbits) == lcm);
    for (std::size_t k = 1; k < orbits.size(); ++k)
      CHECK((orbits[k - 1].size() < orbits[k].size() ||
             (orbits[k - 1].size() == orbits[k].size() &&
              orbits[k - 1].representative() < orbits[k].representative())));

    CHECK(antichain_lattice_edge_count(p, ans) == antichain_lattice_cover_count(p, ans));
  }
}

TEST_CASE("grading and the standard orbit") {
  SUBCASE("chain of three") {
    auto p = Poset::from_covers({"a", "b", "c"}, {{0, 1}, {1, 2}});
    auto g = grading_of(p);
    REQUIRE(g);
    CHECK(g->level == 3);
    CHECK(g->standard_orbit_hypotheses());
    auto so = standard_orbit(p);
    CHECK(so.size() == 4);
    CHECK(so.antichains.front().empty());
  }
  SUBCASE("not graded") {
    // a < b < c and a < x < y < c: maximal chains of different lengths
    auto p = Poset::from_covers({"a", "b", "c", "x", "y"}, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {4, 2}});
    CHECK_FALSE(grading_of(p).has_value());
  }
  SUBCASE("components are normalized separately") {
    auto p = Poset::from_covers({"a", "b", "c", "d", "e"}, {{0, 1}, {1, 2}, {3, 4}});
    auto g = grading_of(p);
    REQUIRE(g);
    CHECK(g->rank == std::vector<int>{1, 2, 3, 1, 2});
    CHECK(g->level == 3);
    CHECK_FALSE(g->top_is_maximal);
  }
  SUBCASE("empty poset") { CHECK_FALSE(grading_of(Poset::from_covers({}, {})).has_value()); }
  SUBCASE("hypotheses fail") {
    // maximal element at rank 2
    auto p = Poset::from_covers({"b1", "b2", "m1", "m2", "t"}, {{0, 2}, {1, 3}, {3, 4}});
    auto g = grading_of(p);
    REQUIRE(g);
    CHECK_FALSE(g->top_is_maximal);
    CHECK_THROWS_AS(standard_orbit(p), HypothesesNotMet);
  }
}

TEST_CASE("removal index on A3") {
  const auto rs = build_root_system(CartanType::A, 3);
  const auto rp = root_poset(rs, PosetVariant::full());
  const auto& p = rp.poset;
  const auto a1 = *rp.element_of_root(rs.simple(0));
  const auto a3 = *rp.element_of_root(rs.simple(2));
  const ElementSet g{a1, a3};
  // I = whole poset minus alpha_2; dropping alpha_1 leaves mins {a12, a3}
  CHECK(removal_index(p, g, a1) == 1);
  CHECK(removal_index(p, g, a3) == 1);
  std::vector<int> ones(p.size(), 1);
  CHECK(weighted_oy(p, g, ones) == 2);
}

TEST_CASE("isomorphism search") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = test_util::random_poset(rng, 3 + trial % 9, 0.35);
    std::vector<std::size_t> perm(p.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> labels(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
      labels[perm[x]] = "v" + std::to_string(x);
    const auto q = Poset::from_order(labels, [&](std::size_t x, std::size_t y) {
      std::size_t px = 0, py = 0;
      for (std::size_t k = 0; k < perm.size(); ++k) {
        if (perm[k] == x) px = k;
        if (perm[k] == y) py = k;
      }
      return p.leq(px, py);
    });
    auto iso = poset_isomorphic(p, q);
    REQUIRE(iso);
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y)
        CHECK(p.leq(x, y) == q.leq((*iso)[x], (*iso)[y]));
  }
  auto chain = Poset::from_covers({"a", "b", "c"}, {{0, 1}, {1, 2}});
  auto vee = Poset::from_covers({"a", "b", "c"}, {{0, 1}, {0, 2}});
  CHECK_FALSE(poset_isomorphic(chain, vee));
  CHECK_THROWS_AS(poset_isomorphic(chain, chain, 2), SizeLimitExceeded);
}
