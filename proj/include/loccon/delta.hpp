#pragma once

#include "loccon/gamma.hpp"

namespace loccon {

enum class DeltaCase {
  PairCancels,
  SplitsCompletely,
  GoodNotP,
  GoodOrdinaryP,
  GoodSupersingularUnramified,
  PotMultSplit,
  PotMultNonsplitOrAdditive,
  AdditiveNotP,
  AdditiveP_OrdNonAnom,
  Uncovered
};

std::string to_string(DeltaCase c);
DeltaCase delta_case_from_string(const std::string& s);

/// delta_v in Z/2. For a split pair only delta_v + delta_{v^c} = 0 is known,
/// carried in pair_sum with value left empty.
struct DeltaVerdict {
  std::optional<int> value;
  std::optional<int> pair_sum;
  DeltaCase case_tag = DeltaCase::Uncovered;
  std::string citation;
  std::vector<std::string> notes;

  bool determined() const { return value.has_value() || pair_sum.has_value(); }
  bool operator==(const DeltaVerdict&) const = default;
};

DeltaVerdict delta(const WeierstrassCurve& e, const TowerSpec& tower, const PrimeSite& v);

DeltaVerdict delta_from_data(const SiteData& v);

/// At l = p with additive reduction over K_v: does E acquire good ordinary
/// non-anomalous reduction over the defect extension? Empty when neither the
/// automated test (defect 2, K_v unramified) nor an override decides it.
std::optional<bool> ordinary_non_anomalous_over_defect_field(const SiteData& v, std::vector<std::string>* notes);

/// Prefixes ("delta/...") of every citation string a verdict can carry.
std::vector<std::string> delta_citation_anchors();

}  // namespace loccon
