#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "rowmotion/poset.hpp"
#include "rowmotion/root_system.hpp"

namespace rowmotion::harness {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, unsupported };
std::string_view to_string(Status s);

/// Outcome of one claim on one scope. A FAIL always carries a witness under
/// evidence["witness"]: {"poset": <poset id>, "antichain": [labels]} plus a
/// reason, which `rowmotion orbits`/`rowmotion rowmotion` can replay.
struct Report {
  std::string claim_id;
  Json scope = Json::object();
  Status status = Status::pass;
  Json evidence = Json::object();

  bool passed() const { return status == Status::pass; }
  /// Marks the report failed (first failure wins the witness slot).
  void fail(const std::string& reason, const std::string& poset_id, const Poset& p, const ElementSet& a);
  void fail(const std::string& reason);
  Json to_json() const;
};

// Poset ids used in witnesses: "<type><rank>/<variant>" or "custom:<name>".
std::string poset_id(const RootSystem& rs, const PosetVariant& v);
std::vector<std::string> antichain_labels(const Poset& p, const ElementSet& a);

// --- individual checks -----------------------------------------------------

/// Rowmotion order h or 2h (with -w0 as the h-th power), and mean antichain
/// size n/2 on every orbit, on the full root poset.
Report check_full_root_poset(const RootSystem& rs);
/// Same on the positive roots minus the simple ones, with h - 1 in place of h
/// and mean n(h-2)/(2(h-1)); includes the standard orbit of size h - 1.
Report check_no_simple_root_poset(const RootSystem& rs);
/// Order hot(theta_s)+1 and mean #short/(hot(theta_s)+1) on the short roots.
Report check_short_root_poset(const RootSystem& rs);
/// Short roots of C_n: all orbits of size 2n-1, Catalan(n-1) of them, each
/// meeting the antichains supported on alpha_1..alpha_{n-2} exactly once.
Report check_cn_short_orbits(int n);
/// Short roots minus short simple roots: F4 has 16 antichains in two orbits
/// of 8; the B/G cases are trivial and C_n reduces to C_{n-1}.
Report check_short_no_simple(const RootSystem& rs);
/// F4 roots of height >= 3: orbit sizes 10 and 8, order 40, unequal means.
Report check_height_geq_3_f4();
/// Closed form for the orbit of {alpha_1} in A_n (n >= 3).
Report check_alpha1_orbit(int n);
/// The two level-3 posets: A3-shaped {8,4,2} versus the modified {16,7}.
Report check_modified_poset();
/// Sum of antichain sizes equals #AN * #P / (level + 1), cross-checked
/// against the covering pairs of the antichain lattice.
Report check_edge_identity(const RootSystem& rs, const PosetVariant& v);
/// The three F4 tables (full, minus simple roots, short roots): orbit-size
/// multisets, representatives and printed chains, in paper numbering.
Report check_f4_table_i();
Report check_f4_table_ii();
Report check_f4_table_iii();
/// OY-invariant and duality facts on A_n, exhaustively.
Report check_oy_suite(int n);
/// Short-weighted removal-index sum is constant on C_n orbits; the
/// unweighted sum is not.
Report check_weighted_oy_cn(int n);
/// Antichain counts against the closed-form products.
Report check_counts(const RootSystem& rs);
/// Poset isomorphisms between root-poset variants.
Report check_isomorphisms();
/// Engine properties on every variant of `rs`: bijectivity, antichain
/// outputs, ideal/antichain bijection, standard orbits, kernel agreement.
Report check_engine(const RootSystem& rs);

// --- fixtures ---------------------------------------------------------------

/// Hasse diagrams of the two level-3 example posets in the custom format.
extern const std::string_view kPosetP1;
extern const std::string_view kPosetP2;

// --- registry ----------------------------------------------------------------

struct Scope {
  std::optional<std::string> type;  // e.g. "F4"; restricts root-system claims
  std::optional<int> n;             // restricts rank-parameterized claims
  bool include_large = false;       // adds E7, E8 to the default matrix
};

struct Claim {
  std::string id;
  std::string description;
  std::function<std::vector<Report>(const Scope&)> run;
};

const std::vector<Claim>& registry();
const Claim* find_claim(std::string_view id);

/// Default type matrix: A1-A7, B2-B5, C2-C5, D4-D5, E6, F4, G2 (+E7, E8).
std::vector<std::string> default_matrix(bool include_large);

/// Runs the given claims; reports are ordered by claim id then scope.
std::vector<Report> run_claims(const std::vector<const Claim*>& claims, const Scope& scope);

}  // namespace rowmotion::harness
