#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hkwall/lattice.hpp"

namespace hkwall {

using BigInt = boost::multiprecision::cpp_int;

enum class ComponentName { Sigma, Omega, SPlus, SMinus };
enum class Sign { Trivial, Det, Unset };

const char* to_string(ComponentName n);
const char* to_string(Sign s);

/// One connected component of the fixed locus of the antisymplectic involution.
struct FixedComponentReport {
  ComponentName name;
  Int dim;  // always g
  bool contained_in_delta;
  BigInt fiber_count;  // fixed points in a smooth Lagrangian fiber
  Sign sign;
  Int image_dim_after_contraction;
};

std::vector<FixedComponentReport> components(const GenusContext& ctx);

/// Number of nontrivial 2-torsion points of a g-dimensional abelian variety.
BigInt two_torsion_fiber_count(Int genus);

/// Classical theta-characteristic counts (even, odd) = 2^{g-1}(2^g +- 1).
std::pair<BigInt, BigInt> theta_char_counts(Int genus);

/// Brute-force oracle for the theta counts: enumerate every quadratic form on
/// F_2^{2g} whose polarization is the standard symplectic form and classify by
/// Arf invariant. Cost 2^{4g}; restricted to 1 <= g <= 6.
std::pair<Int, Int> arf_census(int g);

/// Dimension bookkeeping for one disjoint flip of the local model: a component
/// P(V_Gamma) with dim V = p inside a flopped P^{n-1}-bundle over a base of
/// dimension dim_w is replaced by the annihilator bundle on the dual side.
struct FlipDims {
  Int gamma_dim;        // dim_w + p - 1
  Int gamma_prime_dim;  // dim_w + (n - p) - 1
};

FlipDims standard_flip(Int n, Int p, Int dim_w);

/// Eigenspace split (p, n-p) of the induced involution on the flop fiber
/// P^{n-1}, where recorded: trivial on the first wall, (1,2)/(1,6)/(2,3) at
/// g = 4 and g = 8. Unknown splits return nullopt.
std::optional<std::pair<Int, Int>> action_split(const GenusContext& ctx, Int c, Int d);

enum class FlopStatus { Untouched, FloppedAtThisWall, DualSide };

const char* to_string(FlopStatus s);

/// Snapshot of the fixed-locus components on one birational model of the chain.
struct TransportState {
  std::string model_label;
  std::vector<std::pair<ComponentName, FlopStatus>> components;
  std::map<ComponentName, Sign> signs;
  Int component_count;
};

/// Transport the two divisibility-2 components through the flop chain. The
/// zero section is the center of the first flop and is replaced by its dual
/// bundle; every later flop center avoids both components.
std::vector<TransportState> flip_transport(const GenusContext& ctx);

struct SignReport {
  std::vector<TransportState> per_model;
  std::map<ComponentName, Sign> final_signs;
  bool disjoint_in_contracted_model;
  Int main_theorem_count;  // equals divisibility(lambda)
};

/// Linearization-sign calculus along the chain: both components start with the
/// trivial character; the zero-section component flips to the determinant
/// character at the first flop exactly when the ledger degree m is odd.
SignReport linearization_signs(const GenusContext& ctx);

}  // namespace hkwall
