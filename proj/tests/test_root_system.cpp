#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "rowmotion/errors.hpp"
#include "rowmotion/poset.hpp"
#include "rowmotion/root_system.hpp"

using namespace rowmotion;

namespace {

// Cartan matrix A[i][j] = <alpha_i, alpha_j^vee> and squared simple-root
// lengths, written out independently of the engine's Gram data.
struct CartanData {
  std::vector<std::vector<int>> a;
  std::vector<int> length;
};

CartanData cartan(CartanType t, int n) {
  CartanData c;
  c.a.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  c.length.assign(static_cast<std::size_t>(n), 2);
  auto link = [&](int i, int j, int aij, int aji) {
    c.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = aij;
    c.a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = aji;
  };
  for (int i = 0; i < n; ++i)
    c.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  switch (t) {
    case CartanType::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case CartanType::B:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -2, -1);
      c.length[static_cast<std::size_t>(n - 1)] = 1;
      break;
    case CartanType::C:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -1, -2);
      for (int i = 0; i + 1 < n; ++i) c.length[static_cast<std::size_t>(i)] = 1;
      break;
    case CartanType::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 3, n - 1, -1, -1);
      break;
    case CartanType::E:
      link(0, 2, -1, -1);
      link(1, 3, -1, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case CartanType::F:
      link(0, 1, -1, -1);
      link(1, 2, -2, -1);
      link(2, 3, -1, -1);
      c.length = {2, 2, 1, 1};
      break;
    case CartanType::G:
      link(0, 1, -1, -3);
      c.length = {1, 3};
      break;
  }
  return c;
}

// Positive roots as the closure of the simple roots under simple reflections.
std::set<RootVector> reflection_closure(const CartanData& c) {
  const std::size_t n = c.a.size();
  std::set<RootVector> seen;
  std::vector<RootVector> todo;
  for (std::size_t i = 0; i < n; ++i) {
    RootVector v(n, 0);
    v[i] = 1;
    seen.insert(v);
    todo.push_back(v);
  }
  while (!todo.empty()) {
    auto b = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      int pairing = 0;
      for (std::size_t j = 0; j < n; ++j)
        pairing += b[j] * c.a[j][i];
      auto r = b;
      r[i] -= pairing;
      if (std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; }) && seen.insert(r).second)
        todo.push_back(r);
    }
  }
  return seen;
}

int squared_length(const CartanData& c, const RootVector& v) {
  // (alpha_i, alpha_j) = A[i][j] * |alpha_j|^2 / 2; doubled to stay integral
  int twice = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      twice += v[i] * v[j] * c.a[i][j] * c.length[j];
  return twice;
}

struct Known {
  CartanType type;
  int rank;
  std::size_t positive;
  int coxeter;
};

const std::vector<Known> kKnown = {
    {CartanType::A, 1, 1, 2},   {CartanType::A, 4, 10, 5},  {CartanType::A, 7, 28, 8},  {CartanType::B, 2, 4, 4},
    {CartanType::B, 5, 25, 10}, {CartanType::C, 3, 9, 6},   {CartanType::C, 5, 25, 10}, {CartanType::D, 4, 12, 6},
    {CartanType::D, 5, 20, 8},  {CartanType::D, 7, 42, 12}, {CartanType::E, 6, 36, 12}, {CartanType::E, 7, 63, 18},
    {CartanType::E, 8, 120, 30}, {CartanType::F, 4, 24, 12}, {CartanType::G, 2, 6, 6},
};

}  // namespace

TEST_CASE("positive roots match the reflection-closure oracle") {
  for (const auto& k : kKnown) {
    CAPTURE(k.rank);
    CAPTURE(to_char(k.type));
    const auto rs = build_root_system(k.type, k.rank);
    const auto c = cartan(k.type, k.rank);
    const auto oracle = reflection_closure(c);
    const std::set<RootVector> engine(rs.positive_roots().begin(), rs.positive_roots().end());
    CHECK(engine == oracle);
    CHECK(rs.num_positive() == k.positive);
    CHECK(rs.coxeter_number() == k.coxeter);
    CHECK(std::accumulate(rs.exponents().begin(), rs.exponents().end(), std::size_t{0}) == k.positive);
    CHECK(2 * k.positive == static_cast<std::size_t>(k.rank * k.coxeter));

    int longest = 0;
    for (const auto& v : oracle)
      longest = std::max(longest, squared_length(c, v));
    for (std::size_t i = 0; i < rs.num_positive(); ++i) {
      CHECK(rs.height(i) == std::accumulate(rs.root(i).begin(), rs.root(i).end(), 0));
      CHECK(rs.is_short(i) == (squared_length(c, rs.root(i)) < longest));
      CHECK(rs.find(rs.root(i)) == i);
      if (i > 0)
        CHECK(rs.height(i - 1) <= rs.height(i));
    }
    CHECK(rs.height(rs.theta()) == k.coxeter - 1);
  }
}

TEST_CASE("highest roots") {
  CHECK(build_root_system("E8").root(build_root_system("E8").theta()) == RootVector{2, 3, 4, 6, 5, 4, 3, 2});
  const auto f4 = build_root_system("F4");
  CHECK(f4.root(f4.theta()) == RootVector{2, 3, 4, 2});
  REQUIRE(f4.theta_s());
  CHECK(f4.root(*f4.theta_s()) == RootVector{1, 2, 3, 2});
  CHECK(print_root(f4, f4.theta(), Convention::paper_f4) == "2432");
  CHECK(print_root(f4, *f4.theta_s(), Convention::paper_f4) == "2321");
  CHECK_FALSE(build_root_system("E6").theta_s());
}

TEST_CASE("height of the highest short root") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(build_root_system(CartanType::B, n).dual_coxeter_of_dual() == n + 1);
    CHECK(build_root_system(CartanType::C, n).dual_coxeter_of_dual() == 2 * n - 1);
  }
  CHECK(build_root_system("F4").dual_coxeter_of_dual() == 9);
  CHECK(build_root_system("G2").dual_coxeter_of_dual() == 4);
  CHECK_THROWS_AS(build_root_system("D4").short_level(), NoShortRoots);
  CHECK_THROWS_AS(root_poset(build_root_system("E6"), PosetVariant::short_roots()), NoShortRoots);
}

TEST_CASE("-w0 is a poset automorphism and nontrivial exactly where expected") {
  for (const auto& k : kKnown) {
    const auto rs = build_root_system(k.type, k.rank);
    const auto perm = minus_w0_root_permutation(rs);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      CHECK(perm[perm[i]] == i);
      for (std::size_t j = 0; j < perm.size(); ++j) {
        const auto& x = rs.root(i);
        const auto& y = rs.root(j);
        bool le = std::equal(x.begin(), x.end(), y.begin(), [](int a, int b) { return a <= b; });
        const auto& px = rs.root(perm[i]);
        const auto& py = rs.root(perm[j]);
        bool ple = std::equal(px.begin(), px.end(), py.begin(), [](int a, int b) { return a <= b; });
        CHECK(le == ple);
      }
    }
    const bool nontrivial = (k.type == CartanType::A && k.rank >= 2) ||
                            (k.type == CartanType::D && k.rank % 2 == 1) || (k.type == CartanType::E && k.rank == 6);
    CHECK(rs.w0_is_minus_one() == !nontrivial);
  }
}

TEST_CASE("variants and closed-form counts") {
  for (const char* name : {"A3", "B3", "C4", "D4", "E6", "F4", "G2"}) {
    const auto rs = build_root_system(name);
    for (auto v : {PosetVariant::full(), PosetVariant::no_simple()}) {
      const auto rp = root_poset(rs, v);
      CHECK(enumerate_antichains(rp.poset).size() == expected_antichain_count(rs, v));
    }
    if (rs.two_lengths())
      CHECK(enumerate_antichains(root_poset(rs, PosetVariant::short_roots()).poset).size() ==
            expected_antichain_count(rs, PosetVariant::short_roots()));
  }
  const auto f4 = build_root_system("F4");
  CHECK(expected_antichain_count(f4, PosetVariant::full()) == 105);
  CHECK(expected_antichain_count(f4, PosetVariant::no_simple()) == 66);
  CHECK(expected_antichain_count(f4, PosetVariant::short_roots()) == 21);
  CHECK(root_poset(f4, PosetVariant::short_no_simple()).poset.size() == 10);
  CHECK_THROWS_AS(expected_antichain_count(f4, PosetVariant::height_geq(3)), UnsupportedVariant);

  const auto rp = root_poset(f4, PosetVariant::height_geq(3));
  CHECK(rp.poset.size() == 24 - 4 - 3);
  CHECK(rp.level == 9);
  const auto par = root_poset(f4, PosetVariant::parabolic({0, 1}));
  CHECK(par.poset.size() == 3);
}

TEST_CASE("variant names round-trip") {
  for (auto v : {PosetVariant::full(), PosetVariant::no_simple(), PosetVariant::short_roots(),
                 PosetVariant::short_no_simple(), PosetVariant::height_geq(3), PosetVariant::parabolic({0, 2})}) {
    const auto back = PosetVariant::parse(v.name());
    CHECK(back.name() == v.name());
  }
  CHECK(PosetVariant::parabolic({0, 2}).name() == "parabolic-1,3");
  CHECK_THROWS_AS(PosetVariant::parse("bogus"), Error);
}

TEST_CASE("root notation round-trips") {
  for (const char* name : {"A4", "F4", "E7", "G2"}) {
    const auto rs = build_root_system(name);
    std::vector<Convention> conventions = {Convention::bourbaki};
    if (rs.type() == CartanType::F)
      conventions.push_back(Convention::paper_f4);
    if (rs.type() == CartanType::A)
      conventions.push_back(Convention::interval_a);
    for (auto c : conventions)
      for (std::size_t i = 0; i < rs.num_positive(); ++i)
        CHECK(parse_root(rs, print_root(rs, i, c), c) == i);
  }
  const auto a4 = build_root_system("A4");
  CHECK(parse_root(a4, "2-3", Convention::interval_a) == parse_root(a4, "0110", Convention::bourbaki));
  CHECK_THROWS_AS(parse_root(a4, "3-2", Convention::interval_a), ParseError);
  CHECK_THROWS_AS(parse_root(a4, "0101", Convention::bourbaki), ParseError);
  CHECK_THROWS_AS(print_root(a4, 0, Convention::paper_f4), ConventionMismatch);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(build_root_system(CartanType::D, 3), InvalidRank);
  CHECK_THROWS_AS(build_root_system(CartanType::E, 9), InvalidRank);
  CHECK_THROWS_AS(build_root_system(CartanType::B, 1), InvalidRank);
  CHECK_THROWS_AS(build_root_system("Q3"), Error);
}

TEST_CASE("orthogonal bipartition of the Dynkin diagram") {
  for (const char* name : {"A5", "D5", "E8", "F4", "G2", "C4"}) {
    const auto rs = build_root_system(name);
    const auto [first, second] = orthogonal_bipartition(rs);
    CHECK(first.size() + second.size() == static_cast<std::size_t>(rs.rank()));
    CHECK(std::find(first.begin(), first.end(), 0) != first.end());
    for (const auto* cls : {&first, &second})
      for (int i : *cls)
        for (int j : *cls)
          if (i != j)
            CHECK(rs.gram()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0);
  }
}
