#pragma once

#include "loccon/curve.hpp"

namespace loccon::detail {

struct TateOutcome {
  WeierstrassCurve minimal;
  ReductionKind kind;
};

TateOutcome run_tate(const WeierstrassCurve& e, const Integer& l);

}  // namespace loccon::detail
