#pragma once

#include <string>

#include "dhecke/modular.hpp"
#include "dhecke/root_datum.hpp"

namespace dhecke {

struct RegimeReport {
  bool pass = true;
  /// Empty on pass; otherwise names the violated condition.
  std::string reason;
};

/// Checks ell^r | q - 1, ell not dividing |W|, and ell != char F_q.
RegimeReport validate_regime(const RootDatum& rd, const CoeffRing& s, Int q);

/// Throws RegimeError with the report's reason on failure.
void require_regime(const RootDatum& rd, const CoeffRing& s, Int q);

}  // namespace dhecke
