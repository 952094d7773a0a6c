#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hkwall/fixed.hpp"
#include "hkwall/lattice.hpp"
#include "hkwall/strata.hpp"
#include "hkwall/walls.hpp"

namespace hkwall {

struct SectionSet {
  bool classes = false;
  bool walls = false;
  bool strata = false;
  bool ledger = false;
  bool fixed = false;
  bool chain = false;
};

struct ClassesSection {
  CanonicalClasses classes;
  EigenLattice invariant;
  Int lambda_square;
  Int lambda_divisibility;
};

struct StrataSection {
  std::vector<StratumDatum> list;
  ContractionDatum contraction;
};

struct FixedSection {
  std::vector<FixedComponentReport> components;
  SignReport signs;
};

/// Aggregated exact report for one (genus, divisibility) context. Every
/// numeric field serializes as an exact integer or a reduced fraction "p/q".
struct ReportBundle {
  Int genus;
  int divisibility;
  std::optional<ClassesSection> classes;
  std::optional<WallList> walls;
  std::optional<StrataSection> strata;
  std::optional<LedgerDiv2> ledger;
  std::optional<FixedSection> fixed;
  std::optional<ModelChain> chain;
  std::vector<std::string> diagnostics;
};

ReportBundle build_report(const GenusContext& ctx, const SectionSet& sections);

std::string emit_json(const ReportBundle& bundle);
std::string emit_text(const ReportBundle& bundle);
std::string emit_tsv(const ReportBundle& bundle);

/// DOT rendering of the model chain; node and edge order follow wall order,
/// then the fibration, then the contraction, so output is byte-stable.
std::string emit_chain_dot(const ModelChain& chain);

std::string rational_string(const Rational& q);

}  // namespace hkwall
