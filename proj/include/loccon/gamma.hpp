#pragma once

#include "loccon/site_data.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loccon {

class InvalidTowerError : public std::invalid_argument {
 public:
  explicit InvalidTowerError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Throws SingularCurveError or InvalidTowerError.
void require_valid(const TowerSpec& tower, const WeierstrassCurve& e);

/// A rational prime or the infinite place.
struct Place {
  bool archimedean = false;
  Integer l = 0;

  static Place infinite() { return {true, 0}; }
  static Place prime(Integer l) { return {false, std::move(l)}; }
  std::string label() const;
  bool operator==(const Place&) const = default;
};

enum class GammaCase {
  Archimedean,
  SplitPair,
  SelfConjUnramified,
  GoodOverKv,
  PotMultSplit,
  PotMultNonsplitOrAdditive,
  PotGoodUnramifiedTame,
  PotGoodRamifiedAbelian,
  PotGoodWildCyclicDefect,
  Uncovered
};

std::string to_string(GammaCase c);
GammaCase gamma_case_from_string(const std::string& s);

/// gamma_u in Z/2, or no value (case Uncovered).
struct GammaVerdict {
  std::optional<int> value;
  GammaCase case_tag = GammaCase::Uncovered;
  std::string citation;
  std::vector<std::string> notes;

  bool determined() const { return value.has_value(); }
  bool operator==(const GammaVerdict&) const = default;
};

GammaVerdict gamma(const WeierstrassCurve& e, const TowerSpec& tower, const Place& u);

/// The case table applied to precomputed data at a site above u.
GammaVerdict gamma_from_data(const SiteData& v);

GammaVerdict gamma_archimedean();

/// Prefixes ("gamma/...") of every citation string a verdict can carry.
std::vector<std::string> gamma_citation_anchors();

}  // namespace loccon
