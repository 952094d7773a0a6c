#pragma once

#include <string>
#include <vector>

#include "hkwall/lattice.hpp"

namespace hkwall {

/// One Brill-Noether stratum Delta(k) of the exceptional divisor: a
/// Grassmannian Gr(k, 2k) bundle over a (2g-2k^2)-dimensional moduli space
/// with Mukai vector b_k.
struct StratumDatum {
  Int k;
  MukaiVector b_k;
  Int base_dim;      // square(b_k) + 2 = 2g - 2k^2
  Int grass_k;       // fiber is Gr(grass_k, grass_n)
  Int grass_n;
  Int fiber_dim;     // k^2
  Int total_dim;     // 2g - k^2
  Int codim_in_delta;  // k^2 - 1
};

/// Strata for k = 1 .. floor(sqrt(g)); emitted even when base_dim = 0.
std::vector<StratumDatum> strata(const GenusContext& ctx);

/// The b_k displayed in the divisibility-2 source differs from the one forced
/// by the Jordan-Hoelder filtration (v - k*v(A)); kept for comparison output.
MukaiVector displayed_b_k_div2(Int k, const GenusContext& ctx);

/// Note emitted alongside divisibility-2 strata about the b_k discrepancy.
std::string b_k_formula_note(const GenusContext& ctx);

struct ContractionDatum {
  MukaiVector delta;
  MukaiVector lambda;
  std::string relation;  // "lambda = 2f + delta" or "lambda = f + delta"
  bool delta_spherical;
  bool delta_lambda_orthogonal;
  bool lambda_on_movable_boundary;  // lambda spans the boundary ray opposite f
};

ContractionDatum contraction_datum(const GenusContext& ctx);

/// Closed-form multiplicity/degree bookkeeping for the divisibility-2 sign
/// calculus at the first flop.
struct LedgerDiv2 {
  Int h0_dual;           // h^0 of the dual rigid bundle restricted to a curve: 2 + g/2
  Int point_count_r;     // 1 + g/4
  Int mult_sigma_delta;  // multiplicity of the zero section in Delta: 2 + g/2
  Int delta_dot_gamma;   // -(g/2 + 2), pairing of delta with the first wall vector
  Int m_degree;          // 1 + delta_dot_gamma = -(g/2 + 1)
  bool m_is_odd;
};

LedgerDiv2 ledger_div2(const GenusContext& ctx);

/// Diagnostic branch: the degree m = -(g/2 + 1) for any even genus, admissible
/// or not. m is odd exactly when 4 | g.
Int line_degree_for_even_genus(Int genus);

}  // namespace hkwall
