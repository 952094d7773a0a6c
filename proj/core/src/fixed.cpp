#include "hkwall/fixed.hpp"

#include <bit>
#include <stdexcept>

#include "hkwall/strata.hpp"
#include "hkwall/walls.hpp"

namespace hkwall {

const char* to_string(ComponentName n) {
  switch (n) {
    case ComponentName::Sigma: return "Sigma";
    case ComponentName::Omega: return "Omega";
    case ComponentName::SPlus: return "S+";
    case ComponentName::SMinus: return "S-";
  }
  return "?";
}

const char* to_string(Sign s) {
  switch (s) {
    case Sign::Trivial: return "trivial";
    case Sign::Det: return "det";
    case Sign::Unset: return "unset";
  }
  return "?";
}

const char* to_string(FlopStatus s) {
  switch (s) {
    case FlopStatus::Untouched: return "untouched";
    case FlopStatus::FloppedAtThisWall: return "flopped_at_this_wall";
    case FlopStatus::DualSide: return "dual_side";
  }
  return "?";
}

BigInt two_torsion_fiber_count(Int genus) {
  return (BigInt(1) << (2 * genus)) - 1;
}

std::pair<BigInt, BigInt> theta_char_counts(Int genus) {
  const BigInt half = BigInt(1) << (genus - 1);
  const BigInt full = BigInt(1) << genus;
  return {half * (full + 1), half * (full - 1)};
}

std::vector<FixedComponentReport> components(const GenusContext& ctx) {
  const Int g = ctx.genus;
  std::vector<FixedComponentReport> out;
  if (ctx.div_case == DivCase::Div2) {
    // Zero section: structure sheaves, one point per fiber; contained in Delta.
    out.push_back({ComponentName::Sigma, g, true, BigInt(1), Sign::Unset, g});
    // Closure of the nontrivial 2-torsion points; not contained in Delta.
    out.push_back({ComponentName::Omega, g, false, two_torsion_fiber_count(g),
                   Sign::Unset, g});
  } else {
    const auto [even, odd] = theta_char_counts(g);
    // Even theta-characteristics: contraction is birational on this component.
    out.push_back({ComponentName::SPlus, g, false, even, Sign::Unset, g});
    // Odd theta-characteristics: contracted to dimension g-1.
    out.push_back({ComponentName::SMinus, g, true, odd, Sign::Unset, g - 1});
  }
  return out;
}

std::pair<Int, Int> arf_census(int g) {
  if (g < 1 || g > 6) {
    throw std::invalid_argument("arf_census supports 1 <= g <= 6");
  }
  const unsigned dim = 2u * static_cast<unsigned>(g);
  const std::uint64_t n_vectors = std::uint64_t{1} << dim;

  // Base form q0(x) = sum_i x_{2i} x_{2i+1}; every form with symplectic
  // polarization is q0 + <c, .> for a unique c in F_2^{2g}.
  auto q0 = [&](std::uint64_t x) -> unsigned {
    unsigned v = 0;
    for (unsigned i = 0; i < dim; i += 2) v ^= ((x >> i) & (x >> (i + 1))) & 1u;
    return v;
  };

  // Arf invariant 0 exactly when the form has 2^{2g-1} + 2^{g-1} zeros.
  const std::uint64_t even_zero_count =
      (n_vectors >> 1) + (std::uint64_t{1} << (g - 1));

  Int n_even = 0;
  Int n_odd = 0;
  for (std::uint64_t c = 0; c < n_vectors; ++c) {
    std::uint64_t zeros = 0;
    for (std::uint64_t x = 0; x < n_vectors; ++x) {
      const unsigned val = q0(x) ^ (std::popcount(c & x) & 1u);
      zeros += (val == 0u);
    }
    if (zeros == even_zero_count) {
      ++n_even;
    } else {
      ++n_odd;
    }
  }
  return {n_even, n_odd};
}

FlipDims standard_flip(Int n, Int p, Int dim_w) {
  if (n < 2 || p < 1 || p > n - 1 || dim_w < 0) {
    throw std::invalid_argument("standard_flip requires n >= 2, 1 <= p <= n-1, dim_w >= 0");
  }
  return {dim_w + p - 1, dim_w + (n - p) - 1};
}

std::optional<std::pair<Int, Int>> action_split(const GenusContext& ctx, Int c, Int d) {
  if (ctx.div_case != DivCase::Div2) return std::nullopt;
  if (ctx.genus == 4) {
    if (c == 0 && d == 0) return std::make_pair(Int{1}, Int{2});
  } else if (ctx.genus == 8) {
    if (c == 0 && d == 0) return std::make_pair(Int{1}, Int{6});
    if (c == 0 && d == 1) return std::make_pair(Int{2}, Int{3});
  }
  return std::nullopt;
}

std::vector<TransportState> flip_transport(const GenusContext& ctx) {
  if (ctx.div_case != DivCase::Div2) {
    throw std::domain_error("flip_transport is only defined in divisibility 2");
  }
  const auto chain_walls = enumerate_walls_div2(ctx).walls;
  const bool sign_flips = ledger_div2(ctx).m_is_odd;

  std::vector<TransportState> states;
  const std::size_t n_models = chain_walls.size() + 1;
  for (std::size_t i = 0; i < n_models; ++i) {
    TransportState st;
    st.model_label = (i < chain_walls.size())
                         ? model_id(chain_walls[i].c, chain_walls[i].d)
                         : "M_last";
    // The zero section is the center of the first flop f_{0,-1}; afterwards
    // the component lives on the dual side. Every later flop center avoids
    // both components, so Omega is never touched.
    FlopStatus sigma = FlopStatus::Untouched;
    if (i == 1) sigma = FlopStatus::FloppedAtThisWall;
    if (i >= 2) sigma = FlopStatus::DualSide;
    st.components = {{ComponentName::Sigma, sigma},
                     {ComponentName::Omega, FlopStatus::Untouched}};
    st.signs[ComponentName::Sigma] =
        (i >= 1 && sign_flips) ? Sign::Det : Sign::Trivial;
    st.signs[ComponentName::Omega] = Sign::Trivial;
    st.component_count = 2;
    states.push_back(std::move(st));
  }
  return states;
}

SignReport linearization_signs(const GenusContext& ctx) {
  SignReport out{};
  if (ctx.div_case == DivCase::Div1) {
    // No flops: a single g-dimensional component survives the contraction
    // (the odd component drops to dimension g-1).
    TransportState st;
    st.model_label = "M";
    st.components = {{ComponentName::SPlus, FlopStatus::Untouched},
                     {ComponentName::SMinus, FlopStatus::Untouched}};
    st.signs[ComponentName::SPlus] = Sign::Trivial;
    st.signs[ComponentName::SMinus] = Sign::Trivial;
    st.component_count = 2;
    out.per_model.push_back(std::move(st));
    out.final_signs = out.per_model.back().signs;
    out.disjoint_in_contracted_model = false;
    out.main_theorem_count = 1;
  } else {
    out.per_model = flip_transport(ctx);
    out.final_signs = out.per_model.back().signs;
    // Distinct characters on the two components separate their images.
    out.disjoint_in_contracted_model =
        out.final_signs.at(ComponentName::Sigma) !=
        out.final_signs.at(ComponentName::Omega);
    out.main_theorem_count = out.disjoint_in_contracted_model ? 2 : 1;
  }
  return out;
}

}  // namespace hkwall
