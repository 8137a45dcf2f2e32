#pragma once

// Invariant battery run by `hfsplice selftest` and the acceptance suite.

#include <string>
#include <vector>

#include "hfsplice/cfk.hpp"

namespace hfs::selftest {

struct CheckResult {
  std::string subject;
  std::string check;
  bool passed = false;
  std::string detail;
};

// Validator, slice bookkeeping, H_inf symmetry, cone identities, per-s
// exactness, chain-level cone agreement, surgery at n = 1, splice with the
// unknot and (with maslov gradings) Alexander symmetry. A check that throws
// is recorded as failed with the exception text.
std::vector<CheckResult> check_complex(const cfk::FilteredKnotComplex& k);

// d_M^2 = 0 under every built-in eta strategy, argument-swap symmetry,
// odd parity, and reduced vs unreduced cube rank.
std::vector<CheckResult> check_pair(const cfk::FilteredKnotComplex& a, const cfk::FilteredKnotComplex& b);

std::size_t failures(const std::vector<CheckResult>& results);

}  // namespace hfs::selftest
