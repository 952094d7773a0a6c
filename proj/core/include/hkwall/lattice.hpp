#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace hkwall {

using Int = std::int64_t;

enum class DivCase { Div1, Div2 };

inline const char* to_string(DivCase c) { return c == DivCase::Div1 ? "1" : "2"; }

bool genus_admissible(Int genus, DivCase div_case);

/// Admissible genus plus divisibility case. h_square = 2g-2 is the degree of
/// the polarization on the K3; the divisibility-2 family only exists when 4 | g.
struct GenusContext {
  Int genus;
  DivCase div_case;
  Int h_square;

  // Throws std::invalid_argument on an inadmissible (genus, case) pair.
  static GenusContext make(Int genus, DivCase div_case);
};

/// Integer triple (r, c, s) standing for (r, c*h, s) in the rank-3 algebraic
/// Mukai lattice of a Picard-rank-1 K3. Picard rank 1 is a standing hypothesis,
/// so only the h-coefficient of the degree-2 part is stored.
struct MukaiVector {
  Int r{};
  Int c{};
  Int s{};

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

MukaiVector operator+(const MukaiVector& a, const MukaiVector& b);
MukaiVector operator-(const MukaiVector& a, const MukaiVector& b);
MukaiVector operator-(const MukaiVector& a);
MukaiVector operator*(Int k, const MukaiVector& a);

std::string to_string(const MukaiVector& w);

/// Mukai pairing restricted to the rank-3 algebraic lattice:
/// (w1, w2) = c1*c2*(2g-2) - r1*s2 - r2*s1.
Int pairing(const MukaiVector& w1, const MukaiVector& w2, const GenusContext& ctx);

Int square(const MukaiVector& w, const GenusContext& ctx);

enum class VectorKind { Spherical, Isotropic, Positive, Other };

const char* to_string(VectorKind k);

struct Classification {
  VectorKind kind;
  std::optional<Int> moduli_dim;  // square(w) + 2, present when square(w) >= -2
};

Classification classify(const MukaiVector& w, const GenusContext& ctx);

/// The distinguished classes of the Lagrangian fibration: the fibered Mukai
/// vector v, the fibration class f, the exceptional-divisor class delta, the
/// square-2 class lambda, and (divisibility 2 only) the Mukai vector of the
/// rigid bundle whose hom-spaces stratify the exceptional divisor.
struct CanonicalClasses {
  MukaiVector v;
  MukaiVector f;
  MukaiVector delta;
  MukaiVector lambda;
  std::optional<MukaiVector> rigid_bundle;
};

CanonicalClasses canonical_classes(const GenusContext& ctx);

/// Divisibility of w: gcd of the pairings of w against a basis of the rank-2
/// lattice v-perp inside the algebraic lattice. Requires pairing(w, v) = 0;
/// since the degree-2 part of w is a multiple of h, the transcendental lattice
/// pairs to zero with w and the algebraic computation equals the full-lattice
/// divisibility. Throws std::domain_error if w is not orthogonal to v.
Int divisibility(const MukaiVector& w, const GenusContext& ctx);

// Basis of v-perp in the algebraic lattice for the given case.
std::array<MukaiVector, 2> v_perp_basis(const GenusContext& ctx);

/// Rank-2 invariant eigenlattice of the antisymplectic involution, with its
/// Gram matrix under the Mukai pairing.
struct EigenLattice {
  std::array<MukaiVector, 2> basis;
  std::array<std::array<Int, 2>, 2> gram;
};

EigenLattice invariant_lattice(const GenusContext& ctx);

}  // namespace hkwall
