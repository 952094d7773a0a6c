#include "hkwall/report.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hkwall {

using nlohmann::json;

std::string rational_string(const Rational& q) {
  std::ostringstream os;
  os << q.numerator() << "/" << q.denominator();
  return os.str();
}

ReportBundle build_report(const GenusContext& ctx, const SectionSet& sections) {
  ReportBundle bundle;
  bundle.genus = ctx.genus;
  bundle.divisibility = ctx.div_case == DivCase::Div1 ? 1 : 2;

  if (sections.classes) {
    ClassesSection cs;
    cs.classes = canonical_classes(ctx);
    cs.invariant = invariant_lattice(ctx);
    cs.lambda_square = square(cs.classes.lambda, ctx);
    cs.lambda_divisibility = divisibility(cs.classes.lambda, ctx);
    bundle.classes = std::move(cs);
  }
  if (sections.walls || sections.chain || sections.fixed) {
    if (ctx.div_case == DivCase::Div2) {
      auto walls = enumerate_walls_div2(ctx);
      for (const auto& d : walls.diagnostics) bundle.diagnostics.push_back(d);
      if (sections.walls) bundle.walls = std::move(walls);
    }
  }
  if (sections.strata) {
    StrataSection ss;
    ss.list = strata(ctx);
    ss.contraction = contraction_datum(ctx);
    bundle.strata = std::move(ss);
    if (ctx.div_case == DivCase::Div2) {
      bundle.diagnostics.push_back(b_k_formula_note(ctx));
    }
  }
  if (sections.ledger) {
    if (ctx.div_case != DivCase::Div2) {
      throw std::domain_error("the ledger section is only defined in divisibility 2");
    }
    bundle.ledger = ledger_div2(ctx);
  }
  if (sections.fixed) {
    FixedSection fs;
    fs.components = components(ctx);
    fs.signs = linearization_signs(ctx);
    for (auto& comp : fs.components) {
      auto it = fs.signs.final_signs.find(comp.name);
      if (it != fs.signs.final_signs.end()) comp.sign = it->second;
    }
    bundle.fixed = std::move(fs);
  }
  if (sections.chain) {
    bundle.chain = model_chain(ctx);
  }
  return bundle;
}

namespace {

json vector_json(const MukaiVector& w) { return json::array({w.r, w.c, w.s}); }

json walls_json(const WallList& walls) {
  json arr = json::array();
  for (const auto& w : walls.walls) {
    json entry;
    entry["c"] = w.c;
    entry["d"] = w.d;
    entry["slope"] = rational_string(w.slope);
    entry["a"] = vector_json(w.wall_vector);
    entry["complement"] = vector_json(w.complement_vector);
    entry["center_factor_dim"] = w.center_factor_dim;
    entry["fiber_proj_dim"] = w.fiber_proj_dim;
    arr.push_back(entry);
  }
  return arr;
}

json strata_json(const StrataSection& ss) {
  json arr = json::array();
  for (const auto& st : ss.list) {
    json entry;
    entry["k"] = st.k;
    entry["b_k"] = vector_json(st.b_k);
    entry["base_dim"] = st.base_dim;
    entry["fiber_dim"] = st.fiber_dim;
    entry["total_dim"] = st.total_dim;
    entry["codim_in_delta"] = st.codim_in_delta;
    entry["grass_fiber"] = json::array({st.grass_k, st.grass_n});
    arr.push_back(entry);
  }
  return arr;
}

json ledger_json(const LedgerDiv2& ledger) {
  json j;
  j["h0_dual"] = ledger.h0_dual;
  j["point_count_r"] = ledger.point_count_r;
  j["mult_sigma_delta"] = ledger.mult_sigma_delta;
  j["delta_dot_gamma"] = ledger.delta_dot_gamma;
  j["m_degree"] = ledger.m_degree;
  j["m_is_odd"] = ledger.m_is_odd;
  return j;
}

json fixed_json(const FixedSection& fs) {
  json j;
  json comps = json::array();
  for (const auto& c : fs.components) {
    json entry;
    entry["name"] = to_string(c.name);
    entry["dim"] = c.dim;
    entry["contained_in_delta"] = c.contained_in_delta;
    entry["fiber_count"] = c.fiber_count.str();
    entry["sign"] = to_string(c.sign);
    entry["image_dim_after_contraction"] = c.image_dim_after_contraction;
    comps.push_back(entry);
  }
  j["components"] = comps;
  json signs;
  for (const auto& [name, sign] : fs.signs.final_signs) {
    signs[to_string(name)] = to_string(sign);
  }
  j["signs"] = signs;
  j["disjoint_in_contracted_model"] = fs.signs.disjoint_in_contracted_model;
  j["main_theorem_count"] = fs.signs.main_theorem_count;
  return j;
}

json chain_json(const ModelChain& chain) {
  json j;
  j["nodes"] = chain.nodes;
  json edges = json::array();
  for (const auto& e : chain.edges) {
    json entry;
    entry["from"] = e.from;
    entry["to"] = e.to;
    entry["kind"] = to_string(e.kind);
    entry["label"] = e.label;
    edges.push_back(entry);
  }
  j["edges"] = edges;
  return j;
}

json classes_json(const ClassesSection& cs) {
  json j;
  j["v"] = vector_json(cs.classes.v);
  j["f"] = vector_json(cs.classes.f);
  j["delta"] = vector_json(cs.classes.delta);
  j["lambda"] = vector_json(cs.classes.lambda);
  if (cs.classes.rigid_bundle) j["rigid_bundle"] = vector_json(*cs.classes.rigid_bundle);
  j["lambda_square"] = cs.lambda_square;
  j["lambda_divisibility"] = cs.lambda_divisibility;
  j["invariant_basis"] =
      json::array({vector_json(cs.invariant.basis[0]), vector_json(cs.invariant.basis[1])});
  j["invariant_gram"] = json::array(
      {json::array({cs.invariant.gram[0][0], cs.invariant.gram[0][1]}),
       json::array({cs.invariant.gram[1][0], cs.invariant.gram[1][1]})});
  return j;
}

}  // namespace

std::string emit_json(const ReportBundle& bundle) {
  json j;
  j["genus"] = bundle.genus;
  j["divisibility"] = bundle.divisibility;
  j["diagnostics"] = bundle.diagnostics;
  if (bundle.classes) j["classes"] = classes_json(*bundle.classes);
  if (bundle.walls) j["walls"] = walls_json(*bundle.walls);
  if (bundle.strata) j["strata"] = strata_json(*bundle.strata);
  if (bundle.ledger) j["ledger"] = ledger_json(*bundle.ledger);
  if (bundle.fixed) j["fixed"] = fixed_json(*bundle.fixed);
  if (bundle.chain) j["chain"] = chain_json(*bundle.chain);
  return j.dump(2) + "\n";
}

std::string emit_text(const ReportBundle& bundle) {
  std::ostringstream os;
  os << "genus " << bundle.genus << ", divisibility " << bundle.divisibility << "\n";
  if (bundle.classes) {
    const auto& cs = *bundle.classes;
    os << "v = " << to_string(cs.classes.v) << ", f = " << to_string(cs.classes.f)
       << ", delta = " << to_string(cs.classes.delta)
       << ", lambda = " << to_string(cs.classes.lambda) << "\n";
    if (cs.classes.rigid_bundle)
      os << "v(A) = " << to_string(*cs.classes.rigid_bundle) << "\n";
    os << "lambda^2 = " << cs.lambda_square
       << ", div(lambda) = " << cs.lambda_divisibility << "\n";
    os << "invariant lattice basis " << to_string(cs.invariant.basis[0]) << ", "
       << to_string(cs.invariant.basis[1]) << "; gram [[" << cs.invariant.gram[0][0]
       << "," << cs.invariant.gram[0][1] << "],[" << cs.invariant.gram[1][0] << ","
       << cs.invariant.gram[1][1] << "]]\n";
  }
  if (bundle.walls) {
    os << "walls (" << bundle.walls->walls.size() << "):\n";
    for (const auto& w : bundle.walls->walls) {
      os << "  (" << w.c << "," << w.d << ")  mu = " << rational_string(w.slope)
         << "  a = " << to_string(w.wall_vector)
         << "  center factor dim " << w.center_factor_dim << "  fiber P^"
         << w.fiber_proj_dim << "\n";
    }
  }
  if (bundle.strata) {
    os << "strata (" << bundle.strata->list.size() << "):\n";
    for (const auto& st : bundle.strata->list) {
      os << "  k = " << st.k << "  b_k = " << to_string(st.b_k) << "  base "
         << st.base_dim << "  fiber Gr(" << st.grass_k << "," << st.grass_n
         << ") dim " << st.fiber_dim << "  total " << st.total_dim << "\n";
    }
    const auto& cd = bundle.strata->contraction;
    os << "contraction: delta = " << to_string(cd.delta) << ", " << cd.relation
       << ", delta^2 = -2: " << (cd.delta_spherical ? "ok" : "FAIL")
       << ", (delta,lambda) = 0: " << (cd.delta_lambda_orthogonal ? "ok" : "FAIL")
       << "\n";
  }
  if (bundle.ledger) {
    const auto& l = *bundle.ledger;
    os << "ledger: h0 = " << l.h0_dual << ", r = " << l.point_count_r
       << ", mult = " << l.mult_sigma_delta << ", delta.gamma = " << l.delta_dot_gamma
       << ", m = " << l.m_degree << (l.m_is_odd ? " (odd)" : " (even)") << "\n";
  }
  if (bundle.fixed) {
    os << "fixed components:\n";
    for (const auto& c : bundle.fixed->components) {
      os << "  " << to_string(c.name) << "  dim " << c.dim << "  in Delta: "
         << (c.contained_in_delta ? "yes" : "no") << "  fiber count "
         << c.fiber_count.str() << "  sign " << to_string(c.sign)
         << "  image dim " << c.image_dim_after_contraction << "\n";
    }
    os << "main theorem count: " << bundle.fixed->signs.main_theorem_count << "\n";
  }
  if (bundle.chain) {
    os << "model chain:\n";
    for (const auto& e : bundle.chain->edges) {
      os << "  " << e.from << " -> " << e.to << "  [" << to_string(e.kind) << " "
         << e.label << "]\n";
    }
  }
  for (const auto& d : bundle.diagnostics) os << "note: " << d << "\n";
  return os.str();
}

std::string emit_tsv(const ReportBundle& bundle) {
  std::ostringstream os;
  if (bundle.walls) {
    os << "c\td\tslope\ta_r\ta_c\ta_s\tcenter_factor_dim\tfiber_proj_dim\n";
    for (const auto& w : bundle.walls->walls) {
      os << w.c << "\t" << w.d << "\t" << rational_string(w.slope) << "\t"
         << w.wall_vector.r << "\t" << w.wall_vector.c << "\t" << w.wall_vector.s
         << "\t" << w.center_factor_dim << "\t" << w.fiber_proj_dim << "\n";
    }
  } else if (bundle.strata) {
    os << "k\tb_r\tb_c\tb_s\tbase_dim\tfiber_dim\ttotal_dim\tcodim_in_delta\n";
    for (const auto& st : bundle.strata->list) {
      os << st.k << "\t" << st.b_k.r << "\t" << st.b_k.c << "\t" << st.b_k.s << "\t"
         << st.base_dim << "\t" << st.fiber_dim << "\t" << st.total_dim << "\t"
         << st.codim_in_delta << "\n";
    }
  } else if (bundle.ledger) {
    const auto& l = *bundle.ledger;
    os << "h0_dual\tpoint_count_r\tmult_sigma_delta\tdelta_dot_gamma\tm_degree\tm_is_odd\n";
    os << l.h0_dual << "\t" << l.point_count_r << "\t" << l.mult_sigma_delta << "\t"
       << l.delta_dot_gamma << "\t" << l.m_degree << "\t"
       << (l.m_is_odd ? "true" : "false") << "\n";
  } else if (bundle.fixed) {
    os << "name\tdim\tcontained_in_delta\tfiber_count\tsign\timage_dim\n";
    for (const auto& c : bundle.fixed->components) {
      os << to_string(c.name) << "\t" << c.dim << "\t"
         << (c.contained_in_delta ? "true" : "false") << "\t" << c.fiber_count.str()
         << "\t" << to_string(c.sign) << "\t" << c.image_dim_after_contraction << "\n";
    }
  } else if (bundle.chain) {
    os << "from\tto\tkind\tlabel\n";
    for (const auto& e : bundle.chain->edges) {
      os << e.from << "\t" << e.to << "\t" << to_string(e.kind) << "\t" << e.label
         << "\n";
    }
  } else if (bundle.classes) {
    const auto& cs = *bundle.classes;
    os << "name\tr\tc\ts\n";
    os << "v\t" << cs.classes.v.r << "\t" << cs.classes.v.c << "\t" << cs.classes.v.s << "\n";
    os << "f\t" << cs.classes.f.r << "\t" << cs.classes.f.c << "\t" << cs.classes.f.s << "\n";
    os << "delta\t" << cs.classes.delta.r << "\t" << cs.classes.delta.c << "\t"
       << cs.classes.delta.s << "\n";
    os << "lambda\t" << cs.classes.lambda.r << "\t" << cs.classes.lambda.c << "\t"
       << cs.classes.lambda.s << "\n";
  }
  return os.str();
}

std::string emit_chain_dot(const ModelChain& chain) {
  std::ostringstream os;
  os << "digraph chain {\n";
  for (const auto& n : chain.nodes) os << "  " << n << ";\n";
  for (const auto& e : chain.edges) {
    os << "  " << e.from << " -> " << e.to;
    if (e.kind == EdgeKind::Flop) {
      os << " [style=dashed, label=\"" << e.label << "\"]";
    } else {
      os << " [label=\"" << e.label << "\"]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace hkwall
