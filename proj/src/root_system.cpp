#include "rowmotion/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "rowmotion/errors.hpp"
#include "rowmotion/rational.hpp"

namespace rowmotion {

char to_char(CartanType t) { return "ABCDEFG"[static_cast<int>(t)]; }

namespace {

using Matrix = std::vector<std::vector<int>>;

void check_rank(CartanType t, int n) {
  bool ok = false;
  switch (t) {
    case CartanType::A: ok = n >= 1; break;
    case CartanType::B:
    case CartanType::C: ok = n >= 2; break;
    case CartanType::D: ok = n >= 4; break;
    case CartanType::E: ok = n >= 6 && n <= 8; break;
    case CartanType::F: ok = n == 4; break;
    case CartanType::G: ok = n == 2; break;
  }
  if (!ok)
    throw InvalidRank(std::string("no root system of type ") + to_char(t) + std::to_string(n));
}

// Inner products of simple roots, scaled to integers. Bourbaki numbering.
Matrix gram_matrix(CartanType t, int n) {
  Matrix g(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  auto link = [&](int i, int j, int v) {
    g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    g[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
  };
  auto diag = [&](int i, int v) { g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = v; };
  switch (t) {
    case CartanType::A:
      for (int i = 0; i < n; ++i) diag(i, 2);
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case CartanType::B:  // alpha_n short
      for (int i = 0; i < n; ++i) diag(i, i == n - 1 ? 2 : 4);
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case CartanType::C:  // alpha_n long
      for (int i = 0; i < n; ++i) diag(i, i == n - 1 ? 4 : 2);
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, i + 2 == n ? -2 : -1);
      break;
    case CartanType::D:
      for (int i = 0; i < n; ++i) diag(i, 2);
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case CartanType::E:
      for (int i = 0; i < n; ++i) diag(i, 2);
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case CartanType::F:
      diag(0, 4); diag(1, 4); diag(2, 2); diag(3, 2);
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case CartanType::G:
      diag(0, 2); diag(1, 6);
      link(0, 1, -3);
      break;
  }
  return g;
}

std::vector<int> exponent_table(CartanType t, int n) {
  std::vector<int> e;
  switch (t) {
    case CartanType::A:
      for (int i = 1; i <= n; ++i) e.push_back(i);
      break;
    case CartanType::B:
    case CartanType::C:
      for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1);
      break;
    case CartanType::D:
      for (int i = 1; i < n; ++i) e.push_back(2 * i - 1);
      e.push_back(n - 1);
      break;
    case CartanType::E:
      if (n == 6) e = {1, 4, 5, 7, 8, 11};
      else if (n == 7) e = {1, 5, 7, 9, 11, 13, 17};
      else e = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case CartanType::F: e = {1, 5, 7, 11}; break;
    case CartanType::G: e = {1, 5}; break;
  }
  std::sort(e.begin(), e.end());
  return e;
}

int coxeter_table(CartanType t, int n) {
  switch (t) {
    case CartanType::A: return n + 1;
    case CartanType::B:
    case CartanType::C: return 2 * n;
    case CartanType::D: return 2 * n - 2;
    case CartanType::E: return n == 6 ? 12 : n == 7 ? 18 : 30;
    case CartanType::F: return 12;
    case CartanType::G: return 6;
  }
  return 0;
}

std::vector<int> minus_w0_table(CartanType t, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  if (t == CartanType::A) {
    std::reverse(perm.begin(), perm.end());
  } else if (t == CartanType::D && n % 2 == 1) {
    std::swap(perm[static_cast<std::size_t>(n - 2)], perm[static_cast<std::size_t>(n - 1)]);
  } else if (t == CartanType::E && n == 6) {
    perm = {5, 1, 4, 3, 2, 0};
  }
  return perm;
}

int inner(const Matrix& g, const RootVector& a, const RootVector& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      s += a[i] * g[i][j] * b[j];
  return s;
}

}  // namespace

RootSystem build_root_system(CartanType type, int rank) {
  check_rank(type, rank);
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.gram_ = gram_matrix(type, rank);
  const auto n = static_cast<std::size_t>(rank);
  const Matrix& g = rs.gram_;

  auto add = [&](RootVector v) {
    rs.lookup_.emplace(v, rs.roots_.size());
    rs.heights_.push_back(std::accumulate(v.begin(), v.end(), 0));
    rs.roots_.push_back(std::move(v));
  };
  for (std::size_t i = 0; i < n; ++i) {
    RootVector v(n, 0);
    v[i] = 1;
    add(v);
  }

  // Height-by-height closure: beta + alpha_i is a root iff the alpha_i-string
  // through beta extends upward, i.e. q = p - <beta, alpha_i^vee> > 0.
  std::size_t level_begin = 0;
  while (level_begin < rs.roots_.size()) {
    std::size_t level_end = rs.roots_.size();
    for (std::size_t r = level_begin; r < level_end; ++r) {
      const RootVector beta = rs.roots_[r];
      for (std::size_t i = 0; i < n; ++i) {
        RootVector up = beta;
        ++up[i];
        if (rs.lookup_.count(up))
          continue;
        RootVector simple_i(n, 0);
        simple_i[i] = 1;
        if (beta == simple_i)
          continue;  // 2 alpha_i is never a root
        int p = 0;
        RootVector down = beta;
        while (down[i] > 0) {
          --down[i];
          if (!rs.lookup_.count(down))
            break;
          ++p;
        }
        int pairing = 2 * inner(g, beta, simple_i) / g[i][i];
        if (p - pairing > 0)
          add(up);
      }
    }
    level_begin = level_end;
  }

  // Canonical element order: by height, then alpha_1-heavy first.
  std::vector<std::size_t> order(rs.roots_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    if (rs.heights_[a] != rs.heights_[b])
      return rs.heights_[a] < rs.heights_[b];
    return rs.roots_[a] > rs.roots_[b];
  });
  std::vector<RootVector> sorted;
  for (auto i : order)
    sorted.push_back(rs.roots_[i]);
  rs.roots_.clear();
  rs.heights_.clear();
  rs.lookup_.clear();
  for (auto& v : sorted)
    add(std::move(v));

  int max_len = 0;
  std::vector<int> len;
  for (const auto& v : rs.roots_) {
    len.push_back(inner(g, v, v));
    max_len = std::max(max_len, len.back());
  }
  for (auto l : len)
    rs.short_.push_back(l < max_len);

  for (std::size_t i = 0; i < n; ++i) {
    RootVector v(n, 0);
    v[i] = 1;
    rs.simple_.push_back(rs.lookup_.at(v));
  }

  rs.theta_ = 0;
  for (std::size_t i = 0; i < rs.roots_.size(); ++i) {
    if (rs.heights_[i] > rs.heights_[rs.theta_])
      rs.theta_ = i;
    if (rs.short_[i] && (!rs.theta_s_ || rs.heights_[i] > rs.heights_[*rs.theta_s_]))
      rs.theta_s_ = i;
  }

  rs.coxeter_number_ = rs.heights_[rs.theta_] + 1;
  rs.exponents_ = exponent_table(type, rank);
  const int sum_e = std::accumulate(rs.exponents_.begin(), rs.exponents_.end(), 0);
  if (rs.coxeter_number_ != coxeter_table(type, rank) ||
      static_cast<std::size_t>(sum_e) != rs.roots_.size() ||
      rs.roots_.size() * 2 != n * static_cast<std::size_t>(rs.coxeter_number_))
    throw Error("root generation disagrees with tabulated Coxeter data for " + rs.name());
  rs.minus_w0_ = minus_w0_table(type, rank);
  return rs;
}

RootSystem build_root_system(std::string_view name) {
  if (name.size() < 2)
    throw InvalidRank("expected a type name such as A3 or F4, got '" + std::string(name) + "'");
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  if (c < 'A' || c > 'G')
    throw InvalidRank("unknown Cartan type '" + std::string(name) + "'");
  int rank = 0;
  auto rest = name.substr(1);
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), rank);
  if (ec != std::errc{} || ptr != rest.data() + rest.size())
    throw InvalidRank("bad rank in '" + std::string(name) + "'");
  return build_root_system(static_cast<CartanType>(c - 'A'), rank);
}

std::string RootSystem::name() const { return std::string(1, to_char(type_)) + std::to_string(rank_); }

bool RootSystem::two_lengths() const {
  return type_ == CartanType::B || type_ == CartanType::C || type_ == CartanType::F || type_ == CartanType::G;
}

std::optional<std::size_t> RootSystem::find(const RootVector& v) const {
  auto it = lookup_.find(v);
  if (it == lookup_.end())
    return std::nullopt;
  return it->second;
}

int RootSystem::short_level() const {
  if (!theta_s_)
    throw NoShortRoots(name() + " is simply laced");
  return heights_[*theta_s_];
}

std::size_t RootSystem::num_simple_short() const {
  std::size_t m = 0;
  for (auto s : simple_)
    m += short_[s] ? 1 : 0;
  return m;
}

bool RootSystem::w0_is_minus_one() const {
  for (std::size_t i = 0; i < minus_w0_.size(); ++i)
    if (minus_w0_[i] != static_cast<int>(i))
      return false;
  return true;
}

// --- variants ----------------------------------------------------------------

std::string PosetVariant::name() const {
  switch (kind) {
    case Kind::full: return "full";
    case Kind::no_simple: return "no-simple";
    case Kind::short_roots: return "short";
    case Kind::short_no_simple: return "short-no-simple";
    case Kind::height_geq: return "height-geq-" + std::to_string(min_height);
    case Kind::parabolic: {
      std::string s = "parabolic-";
      for (std::size_t i = 0; i < simple_subset.size(); ++i)
        s += (i ? "," : "") + std::to_string(simple_subset[i] + 1);
      return s;
    }
  }
  return {};
}

PosetVariant PosetVariant::parse(std::string_view text) {
  auto number = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      throw ParseError("bad number '" + std::string(s) + "' in variant '" + std::string(text) + "'");
    return v;
  };
  if (text == "full") return full();
  if (text == "no-simple") return no_simple();
  if (text == "short") return short_roots();
  if (text == "short-no-simple") return short_no_simple();
  constexpr std::string_view kHeight = "height-geq-";
  constexpr std::string_view kParabolic = "parabolic-";
  if (text.starts_with(kHeight))
    return height_geq(number(text.substr(kHeight.size())));
  if (text.starts_with(kParabolic)) {
    std::vector<int> simple;
    auto rest = text.substr(kParabolic.size());
    while (!rest.empty()) {
      auto comma = rest.find(',');
      simple.push_back(number(rest.substr(0, comma)) - 1);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    return parabolic(std::move(simple));
  }
  throw ParseError("unknown poset variant '" + std::string(text) + "'");
}

std::optional<std::size_t> RootPoset::element_of_root(std::size_t root_index) const {
  auto it = std::find(roots.begin(), roots.end(), root_index);
  if (it == roots.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - roots.begin());
}

ElementSet RootPoset::map_roots(const ElementSet& s, const std::vector<std::size_t>& root_perm) const {
  ElementSet out;
  s.for_each([&](std::size_t e) {
    auto target = element_of_root(root_perm[roots[e]]);
    if (!target)
      throw UnsupportedVariant("subposet is not closed under the root permutation");
    out.insert(*target);
  });
  return out;
}

RootPoset root_poset(const RootSystem& rs, const PosetVariant& variant) {
  using Kind = PosetVariant::Kind;
  const bool needs_short = variant.kind == Kind::short_roots || variant.kind == Kind::short_no_simple;
  if (needs_short && !rs.two_lengths())
    throw NoShortRoots(rs.name() + " has a single root length");

  RootPoset rp;
  switch (variant.kind) {
    case Kind::full:
    case Kind::short_roots:
    case Kind::parabolic: rp.height_offset = 0; break;
    case Kind::no_simple:
    case Kind::short_no_simple: rp.height_offset = 1; break;
    case Kind::height_geq: rp.height_offset = variant.min_height - 1; break;
  }

  for (std::size_t r = 0; r < rs.num_positive(); ++r) {
    const int ht = rs.height(r);
    bool keep = true;
    switch (variant.kind) {
      case Kind::full: break;
      case Kind::no_simple: keep = ht >= 2; break;
      case Kind::short_roots: keep = rs.is_short(r); break;
      case Kind::short_no_simple: keep = rs.is_short(r) && ht >= 2; break;
      case Kind::height_geq: keep = ht >= variant.min_height; break;
      case Kind::parabolic:
        for (std::size_t i = 0; i < rs.root(r).size(); ++i)
          if (rs.root(r)[i] != 0 &&
              std::find(variant.simple_subset.begin(), variant.simple_subset.end(), static_cast<int>(i)) ==
                  variant.simple_subset.end())
            keep = false;
        break;
    }
    if (keep)
      rp.roots.push_back(r);
  }

  std::vector<std::string> labels;
  for (auto r : rp.roots)
    labels.push_back(print_root(rs, r, Convention::bourbaki));
  // Root order: x <= y iff y - x has non-negative simple-root coefficients.
  rp.poset = Poset::from_order(std::move(labels), [&](std::size_t x, std::size_t y) {
    const auto& a = rs.root(rp.roots[x]);
    const auto& b = rs.root(rp.roots[y]);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i])
        return false;
    return true;
  });
  for (auto r : rp.roots)
    rp.level = std::max(rp.level, rs.height(r) - rp.height_offset);
  return rp;
}

std::vector<int> RootPoset::attached_rank(const RootSystem& rs) const {
  std::vector<int> out;
  for (auto r : roots)
    out.push_back(rs.height(r) - height_offset);
  return out;
}

std::uint64_t expected_antichain_count(const RootSystem& rs, const PosetVariant& variant) {
  using Kind = PosetVariant::Kind;
  const std::int64_t h = rs.coxeter_number();
  std::vector<int> exps = rs.exponents();
  std::int64_t shift = 1;
  switch (variant.kind) {
    case Kind::full: shift = 1; break;
    case Kind::no_simple: shift = -1; break;
    case Kind::short_roots:
      if (!rs.two_lengths())
        throw NoShortRoots(rs.name() + " has a single root length");
      exps.resize(rs.num_simple_short());
      shift = 1;
      break;
    default:
      throw UnsupportedVariant("no closed-form antichain count for variant " + variant.name());
  }
  Rational product(1);
  for (int e : exps)
    product *= Rational(h + e + shift, e + 1);
  if (product.denominator() != 1)
    throw NonIntegralCount("antichain count product is not integral: " + to_string(product));
  return static_cast<std::uint64_t>(product.numerator());
}

std::vector<std::size_t> minus_w0_root_permutation(const RootSystem& rs) {
  const auto& perm = rs.minus_w0();
  std::vector<std::size_t> out(rs.num_positive());
  for (std::size_t r = 0; r < rs.num_positive(); ++r) {
    RootVector image(rs.root(r).size(), 0);
    for (std::size_t i = 0; i < image.size(); ++i)
      image[static_cast<std::size_t>(perm[i])] = rs.root(r)[i];
    out[r] = rs.find(image).value();
  }
  return out;
}

ElementSet minus_w0_on_antichain(const RootSystem& rs, const RootPoset& rp, const ElementSet& a) {
  return rp.map_roots(a, minus_w0_root_permutation(rs));
}

std::pair<std::vector<int>, std::vector<int>> orthogonal_bipartition(const RootSystem& rs) {
  const auto n = static_cast<std::size_t>(rs.rank());
  const auto& g = rs.gram();
  std::vector<int> colour(n, -1);
  colour[0] = 0;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && g[i][j] != 0 && colour[j] < 0) {
        colour[j] = 1 - colour[i];
        stack.push_back(j);
      }
  }
  std::pair<std::vector<int>, std::vector<int>> out;
  for (std::size_t i = 0; i < n; ++i)
    (colour[i] == 0 ? out.first : out.second).push_back(static_cast<int>(i));
  return out;
}

std::string print_root(const RootSystem& rs, std::size_t root, Convention convention) {
  const auto& v = rs.root(root);
  switch (convention) {
    case Convention::bourbaki: {
      std::string s;
      for (int c : v)
        s += std::to_string(c);
      return s;
    }
    case Convention::paper_f4: {
      if (rs.type() != CartanType::F)
        throw ConventionMismatch("paper-f4 numbering applies to F4 only");
      std::string s;
      for (auto it = v.rbegin(); it != v.rend(); ++it)
        s += std::to_string(*it);
      return s;
    }
    case Convention::interval_a: {
      if (rs.type() != CartanType::A)
        throw ConventionMismatch("interval notation applies to type A only");
      std::size_t i = 0;
      while (v[i] == 0)
        ++i;
      std::size_t j = i;
      while (j + 1 < v.size() && v[j + 1] != 0)
        ++j;
      return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    }
  }
  return {};
}

std::size_t parse_root(const RootSystem& rs, std::string_view text, Convention convention) {
  const auto n = static_cast<std::size_t>(rs.rank());
  auto fail = [&]() -> std::size_t {
    throw ParseError("'" + std::string(text) + "' is not a positive root of " + rs.name());
  };
  if (convention == Convention::interval_a) {
    if (rs.type() != CartanType::A)
      throw ConventionMismatch("interval notation applies to type A only");
    std::string_view t = text;
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')')
      t = t.substr(1, t.size() - 2);
    auto sep = t.find_first_of(",-");
    if (sep == std::string_view::npos)
      return fail();
    int i = 0, j = 0;
    auto a = t.substr(0, sep), b = t.substr(sep + 1);
    auto r1 = std::from_chars(a.data(), a.data() + a.size(), i);
    auto r2 = std::from_chars(b.data(), b.data() + b.size(), j);
    if (r1.ec != std::errc{} || r2.ec != std::errc{} || r1.ptr != a.data() + a.size() ||
        r2.ptr != b.data() + b.size() || i < 1 || i > j || static_cast<std::size_t>(j) > n)
      return fail();
    RootVector v(n, 0);
    for (int k = i; k <= j; ++k)
      v[static_cast<std::size_t>(k - 1)] = 1;
    return rs.find(v).value();
  }
  if (convention == Convention::paper_f4 && rs.type() != CartanType::F)
    throw ConventionMismatch("paper-f4 numbering applies to F4 only");
  if (text.size() != n)
    return fail();
  RootVector v(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      return fail();
    std::size_t slot = convention == Convention::paper_f4 ? n - 1 - i : i;
    v[slot] = text[i] - '0';
  }
  auto r = rs.find(v);
  if (!r)
    return fail();
  return *r;
}

}  // namespace rowmotion
