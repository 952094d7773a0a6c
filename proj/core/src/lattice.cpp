#include "hkwall/lattice.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hkwall {

bool genus_admissible(Int genus, DivCase div_case) {
  if (genus < 2) return false;
  if (div_case == DivCase::Div2 && genus % 4 != 0) return false;
  return true;
}

GenusContext GenusContext::make(Int genus, DivCase div_case) {
  if (genus < 2) {
    throw std::invalid_argument("genus must be at least 2, got " + std::to_string(genus));
  }
  if (div_case == DivCase::Div2 && genus % 4 != 0) {
    throw std::invalid_argument("divisibility 2 requires 4 | g, got genus " +
                                std::to_string(genus));
  }
  return GenusContext{genus, div_case, 2 * genus - 2};
}

MukaiVector operator+(const MukaiVector& a, const MukaiVector& b) {
  return {a.r + b.r, a.c + b.c, a.s + b.s};
}

MukaiVector operator-(const MukaiVector& a, const MukaiVector& b) {
  return {a.r - b.r, a.c - b.c, a.s - b.s};
}

MukaiVector operator-(const MukaiVector& a) { return {-a.r, -a.c, -a.s}; }

MukaiVector operator*(Int k, const MukaiVector& a) {
  return {k * a.r, k * a.c, k * a.s};
}

std::string to_string(const MukaiVector& w) {
  std::ostringstream os;
  os << "(" << w.r << "," << w.c << "," << w.s << ")";
  return os.str();
}

Int pairing(const MukaiVector& w1, const MukaiVector& w2, const GenusContext& ctx) {
  return w1.c * w2.c * ctx.h_square - w1.r * w2.s - w2.r * w1.s;
}

Int square(const MukaiVector& w, const GenusContext& ctx) {
  return pairing(w, w, ctx);
}

const char* to_string(VectorKind k) {
  switch (k) {
    case VectorKind::Spherical: return "spherical";
    case VectorKind::Isotropic: return "isotropic";
    case VectorKind::Positive: return "positive";
    case VectorKind::Other: return "other";
  }
  return "?";
}

Classification classify(const MukaiVector& w, const GenusContext& ctx) {
  const Int q = square(w, ctx);
  Classification out{};
  if (q == -2) {
    out.kind = VectorKind::Spherical;
  } else if (q == 0) {
    out.kind = VectorKind::Isotropic;
  } else if (q > 0) {
    out.kind = VectorKind::Positive;
  } else {
    out.kind = VectorKind::Other;
  }
  if (q >= -2) out.moduli_dim = q + 2;
  return out;
}

CanonicalClasses canonical_classes(const GenusContext& ctx) {
  CanonicalClasses out{};
  out.f = MukaiVector{0, 0, -1};
  if (ctx.div_case == DivCase::Div1) {
    out.v = MukaiVector{0, 1, 0};
    out.delta = MukaiVector{1, 0, 1};
    out.lambda = MukaiVector{1, 0, -1};  // = 2f + delta
  } else {
    const Int half = ctx.genus / 2;
    out.v = MukaiVector{0, 1, 1 - ctx.genus};
    out.delta = MukaiVector{2, -1, half};
    out.lambda = MukaiVector{2, -1, half - 1};  // = f + delta
    out.rigid_bundle = out.delta;               // v(A) = (2, -h, g/2)
  }
  return out;
}

std::array<MukaiVector, 2> v_perp_basis(const GenusContext& ctx) {
  if (ctx.div_case == DivCase::Div1) {
    // v = (0, h, 0); orthogonality kills the h-coefficient.
    return {MukaiVector{1, 0, 0}, MukaiVector{0, 0, 1}};
  }
  // v = (0, h, 1-g); (w, v) = (g-1)(2c + r), so v-perp is {r = -2c}.
  return {MukaiVector{-2, 1, 0}, MukaiVector{0, 0, 1}};
}

Int divisibility(const MukaiVector& w, const GenusContext& ctx) {
  const auto classes = canonical_classes(ctx);
  if (pairing(w, classes.v, ctx) != 0) {
    throw std::domain_error("divisibility requires a class orthogonal to v, got " +
                            to_string(w));
  }
  const auto basis = v_perp_basis(ctx);
  const Int g0 = std::gcd(pairing(w, basis[0], ctx), pairing(w, basis[1], ctx));
  if (g0 == 0) {
    throw std::domain_error("divisibility of the zero class is undefined");
  }
  return g0;
}

EigenLattice invariant_lattice(const GenusContext& ctx) {
  EigenLattice out{};
  if (ctx.div_case == DivCase::Div1) {
    out.basis = {MukaiVector{1, 0, 0}, MukaiVector{0, 0, 1}};
  } else {
    out.basis = {MukaiVector{2, -1, 0}, MukaiVector{0, 0, 1}};
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.gram[i][j] = pairing(out.basis[i], out.basis[j], ctx);
  return out;
}

}  // namespace hkwall
