#include "hkwall/strata.hpp"

#include <stdexcept>

namespace hkwall {

namespace {

Int isqrt_floor(Int n) {
  Int k = 0;
  while ((k + 1) * (k + 1) <= n) ++k;
  return k;
}

}  // namespace

std::vector<StratumDatum> strata(const GenusContext& ctx) {
  const Int g = ctx.genus;
  const auto classes = canonical_classes(ctx);
  std::vector<StratumDatum> out;
  for (Int k = 1; k <= isqrt_floor(g); ++k) {
    StratumDatum st{};
    st.k = k;
    if (ctx.div_case == DivCase::Div1) {
      st.b_k = MukaiVector{-k, 1, -k};  // -(k, -h, k)
    } else {
      st.b_k = classes.v - k * (*classes.rigid_bundle);
    }
    st.base_dim = square(st.b_k, ctx) + 2;
    st.grass_k = k;
    st.grass_n = 2 * k;
    st.fiber_dim = k * k;
    st.total_dim = st.base_dim + st.fiber_dim;
    st.codim_in_delta = (2 * g - 1) - st.total_dim;
    out.push_back(st);
  }
  return out;
}

MukaiVector displayed_b_k_div2(Int k, const GenusContext& ctx) {
  if (ctx.div_case != DivCase::Div2) {
    throw std::domain_error("displayed_b_k_div2 is only defined in divisibility 2");
  }
  // -(2k, (1-k)h, (1-k/2)g - 1), written with denominators cleared in s.
  const Int g = ctx.genus;
  return MukaiVector{-2 * k, k - 1, 1 - g + k * g / 2};
}

std::string b_k_formula_note(const GenusContext& ctx) {
  if (ctx.div_case != DivCase::Div2) return {};
  return "divisibility-2 strata use b_k = v - k*v(A), which matches the "
         "Jordan-Hoelder filtration and the base dimension 2g-2k^2; the "
         "displayed closed form -(2k,(1-k)h,(1-k/2)g-1) disagrees and is "
         "reported only for comparison";
}

ContractionDatum contraction_datum(const GenusContext& ctx) {
  const auto classes = canonical_classes(ctx);
  ContractionDatum out{};
  out.delta = classes.delta;
  out.lambda = classes.lambda;
  if (ctx.div_case == DivCase::Div1) {
    out.relation = "lambda = 2f + delta";
    out.lambda_on_movable_boundary =
        classes.lambda == 2 * classes.f + classes.delta;
  } else {
    out.relation = "lambda = f + delta";
    out.lambda_on_movable_boundary = classes.lambda == classes.f + classes.delta;
  }
  out.delta_spherical = square(classes.delta, ctx) == -2;
  out.delta_lambda_orthogonal = pairing(classes.delta, classes.lambda, ctx) == 0;
  return out;
}

LedgerDiv2 ledger_div2(const GenusContext& ctx) {
  if (ctx.div_case != DivCase::Div2) {
    throw std::domain_error("ledger_div2 is only defined in divisibility 2");
  }
  const Int g = ctx.genus;
  LedgerDiv2 out{};
  out.h0_dual = 2 + g / 2;
  out.point_count_r = 1 + g / 4;
  out.mult_sigma_delta = 2 + g / 2;
  out.delta_dot_gamma = -(g / 2 + 2);
  out.m_degree = 1 + out.delta_dot_gamma;
  out.m_is_odd = out.m_degree % 2 != 0;
  return out;
}

Int line_degree_for_even_genus(Int genus) {
  if (genus < 2 || genus % 2 != 0) {
    throw std::invalid_argument("line_degree_for_even_genus needs an even genus >= 2");
  }
  return -(genus / 2 + 1);
}

}  // namespace hkwall
