#pragma once

#include "loccon/tower.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loccon {

/// Everything the local-constant engines read about E at one self-conjugate
/// (or split) site v of K.
struct SiteData {
  PrimeSite site;
  Integer p;
  bool ramified_in_L = false;
  LocalReductionData over_Q;
  ReductionType over_Kv;
  bool over_Kv_from_override = false;
  /// Semistability defect over Q_l; set only for potentially good reduction.
  std::optional<SemistabilityDefect> defect;
  bool defect_from_override = false;
  std::optional<bool> anomalous_override;
  /// At l = p: Frobenius data of a model with good reduction at p, either E
  /// itself or a quadratic twist E^c that E becomes isomorphic to over Q_p(sqrt c).
  std::optional<FrobeniusData> residue_frobenius;
  Integer residue_twist = 1;
  std::vector<std::string> notes;

  const Integer& l() const { return site.l; }
  bool above_p() const { return site.l == p; }
  bool potentially_multiplicative() const { return over_Q.potential == PotentialType::PotentiallyMultiplicative; }
};

SiteData analyze_site(const WeierstrassCurve& e, const TowerSpec& tower, const PrimeSite& v);

/// Semistability defect of E over K_v from the one over Q_l: unchanged for
/// unramified K_v, halved when even for ramified K_v.
SemistabilityDefect defect_over_Kv(SemistabilityDefect e, SplitType t);

}  // namespace loccon
