#pragma once

#include <string>
#include <vector>

#include "hkwall/lattice.hpp"

namespace hkwall {

/// One frozen expected value; `value` is an exact string rendering so that a
/// mismatch anywhere (including a mutated table) fails loudly.
struct PinnedValue {
  std::string name;
  std::string value;
};

const std::vector<PinnedValue>& pinned_table();

struct VerifyResult {
  bool ok = true;
  Int checks_run = 0;
  std::vector<std::string> failures;
};

/// Full invariant sweep over every admissible genus up to max_genus, plus a
/// comparison of every entry of `table` against freshly computed values.
VerifyResult run_verify(Int max_genus, const std::vector<PinnedValue>& table);

inline VerifyResult run_verify(Int max_genus) {
  return run_verify(max_genus, pinned_table());
}

}  // namespace hkwall
