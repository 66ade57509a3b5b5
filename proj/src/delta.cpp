#include "loccon/delta.hpp"

#include <stdexcept>

namespace loccon {

namespace {

const char* const kNames[] = {"PairCancels",       "SplitsCompletely",          "GoodNotP",
                              "GoodOrdinaryP",     "GoodSupersingularUnramified", "PotMultSplit",
                              "PotMultNonsplitOrAdditive", "AdditiveNotP", "AdditiveP_OrdNonAnom",
                              "Uncovered"};

const char* kCitePair = "delta/split-pair: for v != v^c, delta_v = delta_{v^c}, so the pair contributes 0";
const char* kCiteSplits = "delta/unramified: for v = v^c unramified in L/K the local norm is surjective, delta_v = 0";
const char* kCiteGood = "delta/good-away-from-p: good reduction at v not above p gives delta_v = 0";
const char* kCiteOrdinary = "delta/good-ordinary: good ordinary reduction at v above p gives delta_v = 0";
const char* kCiteSupersingular =
    "delta/good-supersingular: E over Q_p with good supersingular reduction and K_v containing the unramified "
    "quadratic extension of Q_p gives delta_v = 0";
const char* kCiteMult =
    "delta/potentially-multiplicative: delta_v = 0 iff E does not have split multiplicative reduction over K_v";
const char* kCiteAdditive = "delta/additive-away-from-p: additive reduction over K_v, v not above p, gives delta_v = 0";
const char* kCiteAdditiveP =
    "delta/additive-above-p: delta_v = 0 when E acquires good ordinary non-anomalous reduction over a Galois "
    "extension of K_v of degree prime to p";

DeltaVerdict make(std::optional<int> value, DeltaCase c, std::string citation) {
  DeltaVerdict d;
  d.value = value;
  d.case_tag = c;
  d.citation = std::move(citation);
  return d;
}

DeltaVerdict uncovered(std::string citation, std::string note) {
  auto d = make(std::nullopt, DeltaCase::Uncovered, std::move(citation));
  d.notes.push_back(std::move(note));
  return d;
}

}  // namespace

std::vector<std::string> delta_citation_anchors() {
  std::vector<std::string> out;
  for (const char* c : {kCitePair, kCiteSplits, kCiteGood, kCiteOrdinary, kCiteSupersingular, kCiteMult,
                        kCiteAdditive, kCiteAdditiveP})
    out.push_back(std::string(c).substr(0, std::string(c).find(':')));
  return out;
}


std::string to_string(DeltaCase c) { return kNames[static_cast<int>(c)]; }

DeltaCase delta_case_from_string(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(DeltaCase::Uncovered); ++i)
    if (s == kNames[i]) return static_cast<DeltaCase>(i);
  throw std::invalid_argument("unknown delta case tag '" + s + "'");
}

std::optional<bool> ordinary_non_anomalous_over_defect_field(const SiteData& v, std::vector<std::string>* notes) {
  auto note = [&](std::string s) {
    if (notes) notes->push_back(std::move(s));
  };
  const SemistabilityDefect e = v.defect.value_or(SemistabilityDefect::Unknown);
  // Defect 2 over an unramified K_v: E becomes isomorphic to the twist E^c over
  // M = K_v(sqrt c), whose residue field is F_{p^2}.
  if (e == SemistabilityDefect::Two && v.site.split_type == SplitType::Inert && v.residue_frobenius) {
    const auto& f = *v.residue_frobenius;
    const bool ok = f.ordinary && !f.anomalous_l2;
    note("over K_v(sqrt " + to_string(v.residue_twist) + "): a_p = " + std::to_string(f.a_l) +
         ", a_{p^2} = " + std::to_string(f.a_l2) + (f.ordinary ? ", ordinary" : ", supersingular") +
         (f.anomalous_l2 ? ", anomalous" : ", non-anomalous"));
    if (v.anomalous_override && *v.anomalous_override == ok)
      note("anomalous override at " + v.site.label() + " ignored: contradicts the computed residue curve");
    return ok;
  }
  if (v.anomalous_override) {
    note("ordinary non-anomalous reduction over the defect extension taken from override");
    return !*v.anomalous_override;
  }
  note("defect " + to_string(e) + " over " + to_string(v.site.split_type) +
       " K_v: supply an anomalous override to decide reduction over the defect extension");
  return std::nullopt;
}

DeltaVerdict delta_from_data(const SiteData& v) {
  if (!v.site.self_conjugate()) {
    auto d = make(std::nullopt, DeltaCase::PairCancels, kCitePair);
    d.pair_sum = 0;
    return d;
  }
  if (!v.ramified_in_L) return make(0, DeltaCase::SplitsCompletely, kCiteSplits);

  const auto& kv = v.over_Kv;
  if (kv.kind == ReductionKind::Unknown)
    return uncovered(kCiteMult, "reduction type over K_v at " + v.site.label() + " unknown");

  if (kv.kind == ReductionKind::Good) {
    if (!v.above_p()) return make(0, DeltaCase::GoodNotP, kCiteGood);
    if (!v.residue_frobenius)
      return uncovered(kCiteOrdinary, "no residue curve data at " + v.site.label() + " to decide ordinarity");
    const auto& f = *v.residue_frobenius;
    if (f.ordinary) {
      auto d = make(0, DeltaCase::GoodOrdinaryP, kCiteOrdinary);
      d.notes.push_back("a_p = " + std::to_string(f.a_l) + " != 0 mod p" +
                        (v.residue_twist != 1 ? " on the twist by " + to_string(v.residue_twist) : ""));
      return d;
    }
    const bool good_over_Qp = v.over_Q.type.kind == ReductionKind::Good;
    if (good_over_Qp && v.site.split_type == SplitType::Inert)
      return make(0, DeltaCase::GoodSupersingularUnramified, kCiteSupersingular);
    return uncovered(kCiteSupersingular, std::string("supersingular at ") + v.site.label() +
                                             (good_over_Qp ? " with p ramified in K" : " with E additive over Q_p") +
                                             ": no value known");
  }

  if (v.potentially_multiplicative())
    return kv.is_split_multiplicative() ? make(1, DeltaCase::PotMultSplit, kCiteMult)
                                        : make(0, DeltaCase::PotMultNonsplitOrAdditive, kCiteMult);

  if (!v.above_p()) return make(0, DeltaCase::AdditiveNotP, kCiteAdditive);

  std::vector<std::string> notes;
  const auto ok = ordinary_non_anomalous_over_defect_field(v, &notes);
  DeltaVerdict d = ok && *ok ? make(0, DeltaCase::AdditiveP_OrdNonAnom, kCiteAdditiveP)
                             : make(std::nullopt, DeltaCase::Uncovered, kCiteAdditiveP);
  d.notes = std::move(notes);
  return d;
}

DeltaVerdict delta(const WeierstrassCurve& e, const TowerSpec& tower, const PrimeSite& v) {
  require_valid(tower, e);
  if (!is_prime(v.l) || split_type(v.l, tower.K) != v.split_type)
    throw std::invalid_argument("delta: " + v.label() + " is not a prime of K");
  if (!v.self_conjugate()) {
    SiteData pair;
    pair.site = v;
    pair.p = tower.p;
    return delta_from_data(pair);
  }
  return delta_from_data(analyze_site(e, tower, v));
}

}  // namespace loccon
