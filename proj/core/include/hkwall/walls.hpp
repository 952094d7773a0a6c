#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "hkwall/lattice.hpp"

namespace hkwall {

using Rational = boost::rational<Int>;

/// One interior wall of the movable cone in the divisibility-2 case,
/// parametrized by (c, d) with c >= 0, d >= -1 subject to
///   (a) 4d + (2c+1)^2 <= g-1
///   (b) (2c+1) | (g-1)c^2 - d.
/// The flop at this wall has center a product of two moduli factors of
/// dimension 2d+2 and projective-space fibers of dimension
/// (a_{c,d}, v - a_{c,d}) - 1.
struct WallDatum {
  Int c;
  Int d;
  Rational slope;               // mu_{c,d} = (g-1-4d-(2c+1)^2) / (2(2c+1)^2)
  MukaiVector wall_vector;      // a_{c,d} = (2c+1, -c, ((g-1)c^2 - d)/(2c+1))
  MukaiVector complement_vector;  // v - a_{c,d}
  Int center_factor_dim;        // 2d + 2
  Int fiber_proj_dim;           // (a, v-a) - 1
};

struct WallList {
  std::vector<WallDatum> walls;   // sorted by slope, strictly descending
  std::vector<std::string> diagnostics;  // slope ties, if any
};

/// Divisibility 1: scan the hyperbolic lattice Z*delta + Z*v for classes with
/// a^2 >= -2 and 0 <= (a, v) <= g-1. The Gram matrix diag(-2, 2g-2) forces the
/// answer {delta, -delta} for every genus.
std::vector<MukaiVector> hyperbolic_scan_div1(const GenusContext& ctx);

/// Divisibility 2: all walls (c, d), ordered by slope descending with ties
/// broken lexicographically in (c, d) and reported as diagnostics.
WallList enumerate_walls_div2(const GenusContext& ctx);

/// Generic wall predicate: a^2 >= -2 and 0 <= (a, v) <= v^2 / 2.
bool is_wall_class(const MukaiVector& a, const GenusContext& ctx);

/// Primitive integral representative of lambda + mu * f.
MukaiVector cleared_wall_ray(const Rational& mu, const GenusContext& ctx);

struct ConeData {
  std::vector<MukaiVector> movable_rays;
  std::vector<MukaiVector> nef_rays;            // nef cone of M itself
  std::vector<MukaiVector> interior_wall_rays;  // in wall order (Div2 only)
};

ConeData movable_nef(const GenusContext& ctx);

/// Arithmetic fact underlying the absence of totally semistable walls: no
/// integer multiple of g-1 equals 1 once g-1 > 1. Divisibility 2 only.
bool totally_semistable_guard(const GenusContext& ctx);

enum class EdgeKind { Flop, Fibration, DivisorialContraction };

const char* to_string(EdgeKind k);

/// Chain of birational models: M = M_{0,-1} --f--> ... --f--> M_last, plus the
/// Lagrangian fibration pi: M -> P^g and the contraction phi: M_last -> Mbar.
/// Node ids spell minus signs as 'm' (M_0_m1), plus "M_last", "Mbar", "Pg".
struct ModelChain {
  struct Edge {
    std::string from;
    std::string to;
    EdgeKind kind;
    std::string label;
  };
  std::vector<std::string> nodes;
  std::vector<Edge> edges;
};

std::string model_id(Int c, Int d);

ModelChain model_chain(const GenusContext& ctx);

}  // namespace hkwall
