#include "hkwall/walls.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hkwall {

namespace {

void require_case(const GenusContext& ctx, DivCase expected, const char* op) {
  if (ctx.div_case != expected) {
    throw std::domain_error(std::string(op) + " is only defined in divisibility " +
                            (expected == DivCase::Div1 ? "1" : "2"));
  }
}

}  // namespace

std::vector<MukaiVector> hyperbolic_scan_div1(const GenusContext& ctx) {
  require_case(ctx, DivCase::Div1, "hyperbolic_scan_div1");
  const auto classes = canonical_classes(ctx);
  // H = Z*delta + Z*v has Gram diag(-2, 2g-2): a = x*delta + y*v needs
  // 0 <= y(2g-2) <= g-1, so y = 0, and then -2x^2 >= -2 forces x = +-1.
  return {classes.delta, -classes.delta};
}

bool is_wall_class(const MukaiVector& a, const GenusContext& ctx) {
  const auto classes = canonical_classes(ctx);
  if (square(a, ctx) < -2) return false;
  const Int av = pairing(a, classes.v, ctx);
  return 0 <= av && 2 * av <= square(classes.v, ctx);
}

WallList enumerate_walls_div2(const GenusContext& ctx) {
  require_case(ctx, DivCase::Div2, "enumerate_walls_div2");
  const Int g = ctx.genus;
  const auto classes = canonical_classes(ctx);

  WallList out;
  for (Int c = 0; (2 * c + 1) * (2 * c + 1) <= g + 3; ++c) {
    const Int odd = 2 * c + 1;
    for (Int d = -1; 4 * d + odd * odd <= g - 1; ++d) {
      if (((g - 1) * c * c - d) % odd != 0) continue;
      WallDatum w{};
      w.c = c;
      w.d = d;
      w.slope = Rational(g - 1 - 4 * d - odd * odd, 2 * odd * odd);
      w.wall_vector = MukaiVector{odd, -c, ((g - 1) * c * c - d) / odd};
      w.complement_vector = classes.v - w.wall_vector;
      w.center_factor_dim = 2 * d + 2;
      w.fiber_proj_dim = pairing(w.wall_vector, w.complement_vector, ctx) - 1;
      out.walls.push_back(w);
    }
  }

  std::stable_sort(out.walls.begin(), out.walls.end(),
                   [](const WallDatum& x, const WallDatum& y) {
                     if (x.slope != y.slope) return x.slope > y.slope;
                     if (x.c != y.c) return x.c < y.c;
                     return x.d < y.d;
                   });
  for (std::size_t i = 1; i < out.walls.size(); ++i) {
    if (out.walls[i].slope == out.walls[i - 1].slope) {
      std::ostringstream os;
      os << "slope tie between walls (" << out.walls[i - 1].c << ","
         << out.walls[i - 1].d << ") and (" << out.walls[i].c << "," << out.walls[i].d
         << ") at mu = " << out.walls[i].slope << "; ordered lexicographically";
      out.diagnostics.push_back(os.str());
    }
  }
  return out;
}

MukaiVector cleared_wall_ray(const Rational& mu, const GenusContext& ctx) {
  const auto classes = canonical_classes(ctx);
  const Int p = mu.numerator();
  const Int q = mu.denominator();
  MukaiVector w = q * classes.lambda + p * classes.f;
  Int g0 = std::gcd(std::gcd(w.r, w.c), w.s);
  if (g0 > 1) w = MukaiVector{w.r / g0, w.c / g0, w.s / g0};
  return w;
}

ConeData movable_nef(const GenusContext& ctx) {
  const auto classes = canonical_classes(ctx);
  ConeData out;
  out.movable_rays = {classes.f, classes.lambda};
  if (ctx.div_case == DivCase::Div1) {
    out.nef_rays = out.movable_rays;
    return out;
  }
  const auto walls = enumerate_walls_div2(ctx);
  for (const auto& w : walls.walls) {
    out.interior_wall_rays.push_back(cleared_wall_ray(w.slope, ctx));
  }
  // The first wall bounds the first chamber, hence the nef cone of M.
  out.nef_rays = {classes.f, out.interior_wall_rays.front()};
  return out;
}

bool totally_semistable_guard(const GenusContext& ctx) {
  require_case(ctx, DivCase::Div2, "totally_semistable_guard");
  return ctx.genus - 1 > 1;
}

const char* to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Flop: return "flop";
    case EdgeKind::Fibration: return "fibration";
    case EdgeKind::DivisorialContraction: return "divisorial_contraction";
  }
  return "?";
}

std::string model_id(Int c, Int d) {
  auto num = [](Int n) {
    return n < 0 ? "m" + std::to_string(-n) : std::to_string(n);
  };
  return "M_" + num(c) + "_" + num(d);
}

ModelChain model_chain(const GenusContext& ctx) {
  ModelChain chain;
  if (ctx.div_case == DivCase::Div1) {
    chain.nodes = {"M", "Pg", "Mbar"};
    chain.edges.push_back({"M", "Pg", EdgeKind::Fibration, "pi"});
    chain.edges.push_back({"M", "Mbar", EdgeKind::DivisorialContraction, "phi"});
    return chain;
  }
  const auto walls = enumerate_walls_div2(ctx);
  for (const auto& w : walls.walls) chain.nodes.push_back(model_id(w.c, w.d));
  chain.nodes.push_back("M_last");
  for (std::size_t i = 0; i < walls.walls.size(); ++i) {
    std::ostringstream label;
    label << "f_{" << walls.walls[i].c << "," << walls.walls[i].d << "}";
    chain.edges.push_back({chain.nodes[i], chain.nodes[i + 1], EdgeKind::Flop,
                           label.str()});
  }
  chain.nodes.push_back("Pg");
  chain.nodes.push_back("Mbar");
  chain.edges.push_back({chain.nodes.front(), "Pg", EdgeKind::Fibration, "pi"});
  chain.edges.push_back({"M_last", "Mbar", EdgeKind::DivisorialContraction, "phi"});
  return chain;
}

}  // namespace hkwall
