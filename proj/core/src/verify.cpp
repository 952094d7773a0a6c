#include "hkwall/verify.hpp"

#include <map>
#include <sstream>

#include "hkwall/fixed.hpp"
#include "hkwall/report.hpp"
#include "hkwall/strata.hpp"
#include "hkwall/walls.hpp"

namespace hkwall {

namespace {

std::string wall_list_string(const WallList& walls) {
  std::ostringstream os;
  for (std::size_t i = 0; i < walls.walls.size(); ++i) {
    const auto& w = walls.walls[i];
    if (i) os << ";";
    os << "(" << w.c << "," << w.d << ")a" << to_string(w.wall_vector);
  }
  return os.str();
}

std::string slope_list_string(const WallList& walls) {
  std::ostringstream os;
  for (std::size_t i = 0; i < walls.walls.size(); ++i) {
    if (i) os << ";";
    os << rational_string(walls.walls[i].slope);
  }
  return os.str();
}

std::string fiber_dim_string(const WallList& walls) {
  std::ostringstream os;
  for (std::size_t i = 0; i < walls.walls.size(); ++i) {
    if (i) os << ";";
    os << walls.walls[i].fiber_proj_dim;
  }
  return os.str();
}

std::string ledger_string(const LedgerDiv2& l) {
  std::ostringstream os;
  os << "h0=" << l.h0_dual << ",r=" << l.point_count_r << ",mult=" << l.mult_sigma_delta
     << ",dg=" << l.delta_dot_gamma << ",m=" << l.m_degree
     << ",odd=" << (l.m_is_odd ? 1 : 0);
  return os.str();
}

std::string pair_string(const std::pair<Int, Int>& p) {
  return std::to_string(p.first) + "," + std::to_string(p.second);
}

std::string gram_string(const EigenLattice& lat) {
  std::ostringstream os;
  os << "[[" << lat.gram[0][0] << "," << lat.gram[0][1] << "],[" << lat.gram[1][0]
     << "," << lat.gram[1][1] << "]]";
  return os.str();
}

// Freshly computed values for every name in the pinned table.
std::map<std::string, std::string> computed_values() {
  std::map<std::string, std::string> out;

  const auto g4 = GenusContext::make(4, DivCase::Div2);
  const auto g8 = GenusContext::make(8, DivCase::Div2);
  const auto g12 = GenusContext::make(12, DivCase::Div2);
  const auto w4 = enumerate_walls_div2(g4);
  const auto w8 = enumerate_walls_div2(g8);
  const auto w12 = enumerate_walls_div2(g12);

  out["walls/g4/list"] = wall_list_string(w4);
  out["walls/g4/slopes"] = slope_list_string(w4);
  out["walls/g8/list"] = wall_list_string(w8);
  out["walls/g12/count"] = std::to_string(w12.walls.size());
  {
    const auto& last = w12.walls.back();
    std::ostringstream os;
    os << "(" << last.c << "," << last.d << ")a" << to_string(last.wall_vector);
    out["walls/g12/last"] = os.str();
  }
  out["fiber_dims/g4"] = fiber_dim_string(w4);
  out["fiber_dims/g8"] = fiber_dim_string(w8);

  out["arf/g1"] = pair_string(arf_census(1));
  out["arf/g2"] = pair_string(arf_census(2));
  out["arf/g3"] = pair_string(arf_census(3));

  out["ledger/g4"] = ledger_string(ledger_div2(g4));
  out["ledger/g8"] = ledger_string(ledger_div2(g8));

  const auto d1 = GenusContext::make(5, DivCase::Div1);
  out["classes/div1/lambda"] = to_string(canonical_classes(d1).lambda);
  out["classes/div2/g4/lambda"] = to_string(canonical_classes(g4).lambda);
  out["gram/div1"] = gram_string(invariant_lattice(d1));
  out["gram/div2/g4"] = gram_string(invariant_lattice(g4));

  out["fiber/two_torsion/g2"] = two_torsion_fiber_count(2).str();
  {
    const auto [even, odd] = theta_char_counts(2);
    out["fiber/theta/g2"] = even.str() + "," + odd.str();
  }

  out["main_count/div1"] = std::to_string(linearization_signs(d1).main_theorem_count);
  out["main_count/div2/g4"] =
      std::to_string(linearization_signs(g4).main_theorem_count);
  return out;
}

struct Checker {
  VerifyResult& result;

  void check(bool ok, const std::string& what) {
    ++result.checks_run;
    if (!ok) {
      result.ok = false;
      result.failures.push_back(what);
    }
  }
};

void sweep_genus(Int g, DivCase div_case, Checker& ck) {
  const auto ctx = GenusContext::make(g, div_case);
  const auto classes = canonical_classes(ctx);
  const std::string tag =
      "g=" + std::to_string(g) + " div" + to_string(div_case) + ": ";

  ck.check(square(classes.lambda, ctx) == 2, tag + "lambda^2 = 2");
  ck.check(square(classes.delta, ctx) == -2, tag + "delta^2 = -2");
  ck.check(pairing(classes.delta, classes.lambda, ctx) == 0, tag + "(delta,lambda) = 0");
  if (div_case == DivCase::Div1) {
    ck.check(classes.lambda == 2 * classes.f + classes.delta, tag + "lambda = 2f+delta");
    ck.check(divisibility(classes.lambda, ctx) == 1, tag + "div(lambda) = 1");
  } else {
    ck.check(classes.lambda == classes.f + classes.delta, tag + "lambda = f+delta");
    ck.check(divisibility(classes.lambda, ctx) == 2, tag + "div(lambda) = 2");
  }
  ck.check(square(classes.lambda, ctx) % divisibility(classes.lambda, ctx) == 0,
           tag + "div(lambda) | lambda^2");

  // Rank-3 Gram determinant -(2g-2) comes from the hyperbolic block in
  // (e1, e3) and the square of e2.
  {
    const MukaiVector e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
    const Int det = pairing(e2, e2, ctx) *
                    (pairing(e1, e1, ctx) * pairing(e3, e3, ctx) -
                     pairing(e1, e3, ctx) * pairing(e1, e3, ctx));
    ck.check(det == -(2 * g - 2), tag + "full gram determinant");
  }

  // Strata: floor(sqrt(g)) of them, dims 2g-2k^2 / 2g-k^2, strictly decreasing.
  {
    const auto st = strata(ctx);
    Int count = 0;
    while ((count + 1) * (count + 1) <= g) ++count;
    ck.check(static_cast<Int>(st.size()) == count, tag + "stratum count");
    for (std::size_t i = 0; i < st.size(); ++i) {
      const Int k = st[i].k;
      ck.check(st[i].base_dim == 2 * g - 2 * k * k, tag + "stratum base dim");
      ck.check(st[i].total_dim == 2 * g - k * k, tag + "stratum total dim");
      ck.check(st[i].fiber_dim == k * k, tag + "stratum fiber dim");
      if (i) {
        ck.check(st[i].base_dim < st[i - 1].base_dim, tag + "base dims decrease");
        ck.check(st[i].total_dim < st[i - 1].total_dim, tag + "total dims decrease");
      }
    }
    ck.check(st.front().total_dim == 2 * g - 1, tag + "k=1 stratum is dense in Delta");
  }

  if (div_case == DivCase::Div1) {
    const auto scan = hyperbolic_scan_div1(ctx);
    ck.check(scan.size() == 2 && scan[0] == classes.delta && scan[1] == -classes.delta,
             tag + "hyperbolic scan = {delta, -delta}");
    return;
  }

  // Divisibility-2 wall invariants.
  const auto walls = enumerate_walls_div2(ctx);
  ck.check(!walls.walls.empty() && walls.walls.front().c == 0 &&
               walls.walls.front().d == -1,
           tag + "first wall is (0,-1)");
  for (std::size_t i = 0; i < walls.walls.size(); ++i) {
    const auto& w = walls.walls[i];
    ck.check(square(w.wall_vector, ctx) == 2 * w.d, tag + "a^2 = 2d");
    ck.check(pairing(w.wall_vector, classes.v, ctx) == g - 1, tag + "(a,v) = g-1");
    ck.check(pairing(classes.delta, w.wall_vector, ctx) <= -(2 * w.c + 1),
             tag + "(delta,a) <= -(2c+1)");
    ck.check(pairing(cleared_wall_ray(w.slope, ctx), w.wall_vector, ctx) == 0,
             tag + "cleared wall ray orthogonal to a");
    ck.check(w.slope >= Rational(0), tag + "mu >= 0");
    ck.check(w.center_factor_dim >= 0 && w.fiber_proj_dim >= 1,
             tag + "flop center dims");
    ck.check(is_wall_class(w.wall_vector, ctx), tag + "wall predicate");
    if (i) {
      ck.check(walls.walls[i - 1].slope >= w.slope, tag + "slopes non-increasing");
    }
  }
  {
    Int ties = 0;
    for (std::size_t i = 1; i < walls.walls.size(); ++i) {
      if (walls.walls[i].slope == walls.walls[i - 1].slope) ++ties;
    }
    ck.check(ties == static_cast<Int>(walls.diagnostics.size()),
             tag + "every slope tie is reported");
  }
  ck.check(totally_semistable_guard(ctx), tag + "no totally semistable walls");

  const auto cones = movable_nef(ctx);
  ck.check(cones.interior_wall_rays.size() == walls.walls.size(),
           tag + "one interior ray per wall");

  const auto chain = model_chain(ctx);
  Int flops = 0;
  for (const auto& e : chain.edges)
    if (e.kind == EdgeKind::Flop) ++flops;
  ck.check(flops == static_cast<Int>(walls.walls.size()), tag + "flop edge count");

  const auto ledger = ledger_div2(ctx);
  ck.check(ledger.m_is_odd, tag + "m is odd");
  ck.check(ledger.delta_dot_gamma ==
               pairing(classes.delta, MukaiVector{1, 0, 1}, ctx),
           tag + "delta.gamma two routes agree");

  const auto transport = flip_transport(ctx);
  ck.check(static_cast<Int>(transport.size()) ==
               static_cast<Int>(walls.walls.size()) + 1,
           tag + "one transport state per model");
  Int flop_events = 0;
  for (const auto& st : transport) {
    ck.check(st.component_count == 2, tag + "component count constant");
    for (const auto& [name, status] : st.components) {
      if (status == FlopStatus::FloppedAtThisWall) ++flop_events;
    }
  }
  ck.check(flop_events == 1, tag + "exactly one flop event");

  const auto signs = linearization_signs(ctx);
  ck.check(signs.final_signs.at(ComponentName::Sigma) == Sign::Det &&
               signs.final_signs.at(ComponentName::Omega) == Sign::Trivial,
           tag + "final signs");
  ck.check(signs.disjoint_in_contracted_model, tag + "components disjoint in Mbar");
  ck.check(signs.main_theorem_count == divisibility(classes.lambda, ctx),
           tag + "main theorem count = div(lambda)");
}

}  // namespace

const std::vector<PinnedValue>& pinned_table() {
  static const std::vector<PinnedValue> table = {
      {"walls/g4/list", "(0,-1)a(1,0,1);(0,0)a(1,0,0)"},
      {"walls/g4/slopes", "3/1;1/1"},
      {"walls/g8/list", "(0,-1)a(1,0,1);(0,0)a(1,0,0);(0,1)a(1,0,-1)"},
      {"walls/g12/count", "5"},
      {"walls/g12/last", "(1,-1)a(3,-1,4)"},
      {"fiber_dims/g4", "4;2"},
      {"fiber_dims/g8", "8;6;4"},
      {"arf/g1", "3,1"},
      {"arf/g2", "10,6"},
      {"arf/g3", "36,28"},
      {"ledger/g4", "h0=4,r=2,mult=4,dg=-4,m=-3,odd=1"},
      {"ledger/g8", "h0=6,r=3,mult=6,dg=-6,m=-5,odd=1"},
      {"classes/div1/lambda", "(1,0,-1)"},
      {"classes/div2/g4/lambda", "(2,-1,1)"},
      {"gram/div1", "[[0,-1],[-1,0]]"},
      {"gram/div2/g4", "[[6,-2],[-2,0]]"},
      {"fiber/two_torsion/g2", "15"},
      {"fiber/theta/g2", "10,6"},
      {"main_count/div1", "1"},
      {"main_count/div2/g4", "2"},
  };
  return table;
}

VerifyResult run_verify(Int max_genus, const std::vector<PinnedValue>& table) {
  VerifyResult result;
  Checker ck{result};

  const auto actual = computed_values();
  for (const auto& pin : table) {
    auto it = actual.find(pin.name);
    if (it == actual.end()) {
      ck.check(false, "unknown pinned value '" + pin.name + "'");
      continue;
    }
    ck.check(it->second == pin.value, "pinned value '" + pin.name + "': expected '" +
                                          pin.value + "', computed '" + it->second +
                                          "'");
  }

  for (Int g = 2; g <= max_genus; ++g) {
    sweep_genus(g, DivCase::Div1, ck);
    if (g % 4 == 0) sweep_genus(g, DivCase::Div2, ck);
    if (g % 4 == 2) {
      // Diagnostic branch: outside the admissible divisibility-2 genera the
      // degree m is even, which is exactly why those genera are excluded.
      ck.check(line_degree_for_even_genus(g) % 2 == 0,
               "g=" + std::to_string(g) + ": m even on diagnostic branch");
    }
  }
  return result;
}

}  // namespace hkwall
