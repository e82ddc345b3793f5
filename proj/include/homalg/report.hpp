#pragma once

#include <string>
#include <vector>

#include "homalg/tensor.hpp"

namespace homalg {

struct Violation {
  IndexTuple tuple;
  Vec lhs;
  Vec rhs;
};

/// Verdict of an exhaustive identity check: pass iff no violating basis
/// tuple; violations are lexicographically first, capped.
struct AxiomReport {
  static constexpr int kDefaultViolationCap = 5;

  std::string axiom;
  bool pass = true;
  long checked = 0;
  std::vector<Violation> violations;

  void note(const IndexTuple& tuple, const Vec& lhs, const Vec& rhs, int cap) {
    ++checked;
    if (lhs == rhs) return;
    pass = false;
    if (static_cast<int>(violations.size()) < cap) violations.push_back({tuple, lhs, rhs});
  }

  std::string summary() const;
};

}  // namespace homalg
