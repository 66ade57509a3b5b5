#include "loccon/gamma.hpp"

#include <stdexcept>

namespace loccon {

namespace {

std::string describe_violations(const std::vector<Violation>& vs) {
  std::string s = "invalid tower:";
  for (const auto& v : vs) s += " [" + to_string(v.rule) + "] " + v.message + ";";
  return s;
}

const char* const kNames[] = {"Archimedean",          "SplitPair",
                              "SelfConjUnramified",   "GoodOverKv",
                              "PotMultSplit",         "PotMultNonsplitOrAdditive",
                              "PotGoodUnramifiedTame", "PotGoodRamifiedAbelian",
                              "PotGoodWildCyclicDefect", "Uncovered"};

GammaVerdict make(std::optional<int> value, GammaCase c, std::string citation) {
  GammaVerdict g;
  g.value = value;
  g.case_tag = c;
  g.citation = std::move(citation);
  return g;
}

const char* kCiteSplit = "gamma/split-pair: for v != v^c the root numbers of tau_rho and tau_1 agree";
const char* kCiteUnram =
    "gamma/unramified-self-conjugate: for v = v^c unramified in L/K, tau_rho and tau_1 are isomorphic locally";
const char* kCiteGood = "gamma/good-over-Kv: with good reduction over K_v both root numbers have common value 1";
const char* kCiteMult =
    "gamma/potentially-multiplicative: gamma_u = 1 iff E has split multiplicative reduction over K_v";
const char* kCiteTame =
    "gamma/potentially-good-unramified: for v not above 6, or K_v/Q_l unramified, additive potentially good "
    "reduction gives gamma_u = 0";
const char* kCiteAbelian =
    "gamma/potentially-good-ramified: gamma_u = 0 when E acquires good reduction over an abelian extension of "
    "K_v (tame test: mu_e in K_v, e the defect over K_v)";
const char* kCiteWild = "gamma/potentially-good-above-6: gamma_u = 0 when the semistability group is cyclic Z/eZ";

}  // namespace

std::vector<std::string> gamma_citation_anchors() {
  std::vector<std::string> out;
  for (const char* c : {kCiteSplit, kCiteUnram, kCiteGood, kCiteMult, kCiteTame, kCiteAbelian, kCiteWild})
    out.push_back(std::string(c).substr(0, std::string(c).find(':')));
  out.push_back("gamma/archimedean");
  return out;
}


InvalidTowerError::InvalidTowerError(std::vector<Violation> violations)
    : std::invalid_argument(describe_violations(violations)), violations_(std::move(violations)) {}

void require_valid(const TowerSpec& tower, const WeierstrassCurve& e) {
  invariants(e);
  auto vs = validate_tower(tower, e);
  if (!vs.empty()) throw InvalidTowerError(std::move(vs));
}

std::string Place::label() const { return archimedean ? "inf" : loccon::to_string(l); }

std::string to_string(GammaCase c) { return kNames[static_cast<int>(c)]; }

GammaCase gamma_case_from_string(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(GammaCase::Uncovered); ++i)
    if (s == kNames[i]) return static_cast<GammaCase>(i);
  throw std::invalid_argument("unknown gamma case tag '" + s + "'");
}

GammaVerdict gamma_archimedean() {
  auto g = make(0, GammaCase::Archimedean,
                "gamma/archimedean: for p > 3 the local extension at the infinite place is trivial, so tau_rho "
                "and tau_1 agree there");
  g.notes.push_back("documented extension: the case table treats finite primes only");
  return g;
}

GammaVerdict gamma_from_data(const SiteData& v) {
  if (!v.site.self_conjugate()) return make(0, GammaCase::SplitPair, kCiteSplit);
  if (!v.ramified_in_L) return make(0, GammaCase::SelfConjUnramified, kCiteUnram);

  const auto& kv = v.over_Kv;
  if (kv.kind == ReductionKind::Good) {
    auto g = make(0, GammaCase::GoodOverKv, kCiteGood);
    if (v.over_Q.type.kind != ReductionKind::Good)
      g.notes.push_back("E is " + to_string(v.over_Q.type) + " over Q_" + to_string(v.l()) +
                        " and acquires good reduction only over K_v");
    return g;
  }

  if (v.potentially_multiplicative()) {
    if (kv.kind == ReductionKind::Unknown) {
      auto g = make(std::nullopt, GammaCase::Uncovered, kCiteMult);
      g.notes.push_back("reduction type over K_v unknown");
      return g;
    }
    return kv.is_split_multiplicative() ? make(1, GammaCase::PotMultSplit, kCiteMult)
                                        : make(0, GammaCase::PotMultNonsplitOrAdditive, kCiteMult);
  }

  // potentially good, not good over K_v
  const Integer& l = v.l();
  const bool divides_6 = l == 2 || l == 3;
  if (!divides_6 && !v.above_p()) return make(0, GammaCase::PotGoodUnramifiedTame, kCiteTame);
  if (v.above_p() && v.site.split_type == SplitType::Inert) return make(0, GammaCase::PotGoodUnramifiedTame, kCiteTame);

  const SemistabilityDefect e = v.defect.value_or(SemistabilityDefect::Unknown);
  if (v.above_p()) {
    if (!is_cyclic(e)) {
      auto g = make(std::nullopt, GammaCase::Uncovered, kCiteAbelian);
      g.notes.push_back("semistability defect at " + v.site.label() + " is " + to_string(e));
      return g;
    }
    const long e_kv = static_cast<long>(defect_over_Kv(e, v.site.split_type));
    const bool abelian = (v.l() - 1) % e_kv == 0;
    auto g = abelian ? make(0, GammaCase::PotGoodRamifiedAbelian, kCiteAbelian)
                     : make(std::nullopt, GammaCase::Uncovered, kCiteAbelian);
    g.notes.push_back("abelian criterion at " + v.site.label() + ": residue field size " + to_string(v.l()) +
                      (abelian ? " = 1" : " != 1") + " mod " + std::to_string(e_kv) + " (defect " + to_string(e) +
                      " over Q_p, " + std::to_string(e_kv) + " over K_v)");
    return g;
  }

  if (is_cyclic(e)) {
    auto g = make(0, GammaCase::PotGoodWildCyclicDefect, kCiteWild);
    if (v.defect_from_override) g.notes.push_back("defect at " + v.site.label() + " taken from override");
    return g;
  }
  auto g = make(std::nullopt, GammaCase::Uncovered, kCiteWild);
  g.notes.push_back("semistability group at " + v.site.label() + " is " + to_string(e) +
                    "; supply a defect override to resolve");
  return g;
}

GammaVerdict gamma(const WeierstrassCurve& e, const TowerSpec& tower, const Place& u) {
  require_valid(tower, e);
  if (u.archimedean) return gamma_archimedean();
  if (!is_prime(u.l)) throw std::invalid_argument("gamma: " + to_string(u.l) + " is not prime");
  const auto sites = sites_above(u.l, tower.K);
  if (!sites.front().self_conjugate()) return make(0, GammaCase::SplitPair, kCiteSplit);
  return gamma_from_data(analyze_site(e, tower, sites.front()));
}

}  // namespace loccon
