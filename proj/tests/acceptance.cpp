// Acceptance suite: one pass/fail line per criterion, exit nonzero on any
// failure. All comparisons are exact; the timed criteria carry their budgets.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hkwall/fixed.hpp"
#include "hkwall/report.hpp"
#include "hkwall/strata.hpp"
#include "hkwall/verify.hpp"
#include "hkwall/walls.hpp"

using namespace hkwall;

namespace {

struct Criterion {
  std::string name;
  std::function<bool()> run;
  double budget_seconds = 0.0;  // 0 = untimed
};

bool expect(bool ok, const char* what, std::string& detail) {
  if (!ok && detail.empty()) detail = what;
  return ok;
}

bool criterion_wall_lists() {
  std::string detail;
  bool ok = true;
  {
    const auto w = enumerate_walls_div2(GenusContext::make(4, DivCase::Div2)).walls;
    ok &= expect(w.size() == 2, "g=4 wall count", detail);
    ok &= expect(w[0].c == 0 && w[0].d == -1 && w[0].wall_vector == MukaiVector{1, 0, 1},
                 "g=4 first wall", detail);
    ok &= expect(w[1].c == 0 && w[1].d == 0 && w[1].wall_vector == MukaiVector{1, 0, 0},
                 "g=4 second wall", detail);
  }
  {
    const auto w = enumerate_walls_div2(GenusContext::make(8, DivCase::Div2)).walls;
    ok &= expect(w.size() == 3, "g=8 wall count", detail);
    ok &= expect(w[2].wall_vector == MukaiVector{1, 0, -1}, "g=8 a_{0,1}", detail);
  }
  {
    const auto w = enumerate_walls_div2(GenusContext::make(12, DivCase::Div2)).walls;
    ok &= expect(w.size() == 5, "g=12 wall count", detail);
    bool found = false;
    for (const auto& wall : w)
      if (wall.c == 1 && wall.d == -1 && wall.wall_vector == MukaiVector{3, -1, 4})
        found = true;
    ok &= expect(found, "g=12 wall (1,-1)", detail);
  }
  return ok;
}

bool criterion_flop_dims() {
  const auto w4 = enumerate_walls_div2(GenusContext::make(4, DivCase::Div2)).walls;
  const auto w8 = enumerate_walls_div2(GenusContext::make(8, DivCase::Div2)).walls;
  bool ok = w4[1].fiber_proj_dim == 2 && w8[1].fiber_proj_dim == 6 &&
            w8[2].fiber_proj_dim == 4;
  for (const auto* list : {&w4, &w8})
    for (const auto& w : *list) ok &= w.center_factor_dim == 2 * w.d + 2;
  return ok;
}

bool criterion_class_identities() {
  for (Int g = 2; g <= 200; ++g) {
    for (DivCase dc : {DivCase::Div1, DivCase::Div2}) {
      if (!genus_admissible(g, dc)) continue;
      const auto ctx = GenusContext::make(g, dc);
      const auto cls = canonical_classes(ctx);
      if (square(cls.lambda, ctx) != 2) return false;
      if (square(cls.delta, ctx) != -2) return false;
      if (pairing(cls.delta, cls.lambda, ctx) != 0) return false;
      const MukaiVector rel = dc == DivCase::Div1 ? 2 * cls.f + cls.delta
                                                  : cls.f + cls.delta;
      if (!(cls.lambda - rel == MukaiVector{0, 0, 0})) return false;
      if (divisibility(cls.lambda, ctx) != (dc == DivCase::Div1 ? 1 : 2))
        return false;
    }
  }
  return true;
}

bool criterion_strata() {
  for (Int g = 2; g <= 100; ++g) {
    for (DivCase dc : {DivCase::Div1, DivCase::Div2}) {
      if (!genus_admissible(g, dc)) continue;
      const auto ctx = GenusContext::make(g, dc);
      const auto st = strata(ctx);
      Int bound = 0;
      while ((bound + 1) * (bound + 1) <= g) ++bound;
      if (static_cast<Int>(st.size()) != bound) return false;
      for (const auto& s : st) {
        if (s.base_dim != 2 * g - 2 * s.k * s.k) return false;
        if (s.total_dim != 2 * g - s.k * s.k) return false;
        // Independent pairing-expansion oracle.
        const Int expanded =
            s.b_k.c * s.b_k.c * (2 * g - 2) - 2 * s.b_k.r * s.b_k.s;
        if (expanded + 2 != s.base_dim) return false;
      }
    }
  }
  return true;
}

bool criterion_arf_fast() {
  return arf_census(1) == std::pair<Int, Int>{3, 1} &&
         arf_census(2) == std::pair<Int, Int>{10, 6} &&
         arf_census(3) == std::pair<Int, Int>{36, 28};
}

bool criterion_arf_slow() {
  return arf_census(4) == std::pair<Int, Int>{136, 120};
}

bool criterion_ledger() {
  const auto l = ledger_div2(GenusContext::make(4, DivCase::Div2));
  if (!(l.h0_dual == 4 && l.mult_sigma_delta == 4 && l.delta_dot_gamma == -4 &&
        l.m_degree == -3 && l.m_is_odd))
    return false;
  for (Int g = 4; g <= 200; g += 4) {
    if (!ledger_div2(GenusContext::make(g, DivCase::Div2)).m_is_odd) return false;
  }
  for (Int g = 6; g <= 198; g += 4) {
    if (line_degree_for_even_genus(g) % 2 != 0) return false;
  }
  return true;
}

bool criterion_transport_signs() {
  for (Int g : {4, 8, 12, 16}) {
    const auto ctx = GenusContext::make(g, DivCase::Div2);
    const auto report = linearization_signs(ctx);
    Int flips = 0;
    for (std::size_t i = 0; i < report.per_model.size(); ++i) {
      if (report.per_model[i].component_count != 2) return false;
      if (i && report.per_model[i].signs.at(ComponentName::Sigma) !=
                   report.per_model[i - 1].signs.at(ComponentName::Sigma))
        ++flips;
    }
    if (flips != 1) return false;
    if (report.per_model[1].signs.at(ComponentName::Sigma) != Sign::Det)
      return false;
    if (!report.disjoint_in_contracted_model) return false;
  }
  for (Int g = 2; g <= 100; ++g) {
    for (DivCase dc : {DivCase::Div1, DivCase::Div2}) {
      if (!genus_admissible(g, dc)) continue;
      const auto ctx = GenusContext::make(g, dc);
      if (linearization_signs(ctx).main_theorem_count !=
          divisibility(canonical_classes(ctx).lambda, ctx))
        return false;
    }
  }
  return true;
}

bool criterion_hyperbolic_scan() {
  for (Int g = 2; g <= 100; ++g) {
    const auto ctx = GenusContext::make(g, DivCase::Div1);
    const auto cls = canonical_classes(ctx);
    const auto scan = hyperbolic_scan_div1(ctx);
    if (scan.size() != 2 || scan[0] != cls.delta || scan[1] != -cls.delta)
      return false;
    // Exhaustive box confirmation.
    std::vector<MukaiVector> found;
    for (Int x = -2; x <= 2; ++x)
      for (Int y = -2; y <= 2; ++y) {
        if (x == 0 && y == 0) continue;
        const MukaiVector a = x * cls.delta + y * cls.v;
        if (square(a, ctx) < -2) continue;
        const Int av = pairing(a, cls.v, ctx);
        if (av < 0 || av > g - 1) continue;
        found.push_back(a);
      }
    if (found.size() != 2) return false;
    for (const auto& a : found)
      if (a != cls.delta && a != -cls.delta) return false;
  }
  return true;
}

bool criterion_verify_and_mutation() {
  if (!run_verify(64).ok) return false;
  const auto& table = pinned_table();
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto mutated = table;
    mutated[i].value += "_x";
    if (run_verify(8, mutated).ok) return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1 wall lists at g = 4, 8, 12", criterion_wall_lists, 1.0},
      {"2 flop fiber and center dimensions", criterion_flop_dims, 0.0},
      {"3 class identities for g <= 200", criterion_class_identities, 2.0},
      {"4 strata with pairing-expansion oracle, g <= 100", criterion_strata, 0.0},
      {"5a arf oracle g <= 3", criterion_arf_fast, 5.0},
      {"5b arf oracle g = 4 (slow tier)", criterion_arf_slow, 0.0},
      {"6 ledger at g = 4 and parity sweep", criterion_ledger, 0.0},
      {"7 transport, signs, main theorem count", criterion_transport_signs, 0.0},
      {"8 hyperbolic scan with box confirmation", criterion_hyperbolic_scan, 0.0},
      {"9 verify sweep to genus 64 and mutation test", criterion_verify_and_mutation,
       10.0},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto started = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "  exception: %s\n", e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    if (ok && criterion.budget_seconds > 0 && elapsed > criterion.budget_seconds) {
      std::printf("FAIL  %s (%.3f s, budget %.1f s)\n", criterion.name.c_str(),
                  elapsed, criterion.budget_seconds);
      ++failures;
      continue;
    }
    std::printf("%s  %s (%.3f s)\n", ok ? "PASS" : "FAIL", criterion.name.c_str(),
                elapsed);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
