#include "loccon/site_data.hpp"

#include <stdexcept>

namespace loccon {

SemistabilityDefect defect_over_Kv(SemistabilityDefect e, SplitType t) {
  if (t != SplitType::Ramified || !is_cyclic(e)) return e;
  const int n = static_cast<int>(e);
  return static_cast<SemistabilityDefect>(n % 2 == 0 ? n / 2 : n);
}

SiteData analyze_site(const WeierstrassCurve& e, const TowerSpec& tower, const PrimeSite& v) {
  SiteData s;
  s.site = v;
  s.p = tower.p;
  s.ramified_in_L = tower.ramified_in_L(v);
  s.over_Q = local_reduction(e, v.l);
  const SiteOverrides* ov = tower.overrides_for(v);

  s.over_Kv = reduction_over_Kv(e, v.l, local_extension(v, tower.K));
  if (ov && ov->reduction_over_Kv) {
    if (s.over_Kv.kind == ReductionKind::Unknown) {
      s.over_Kv = *ov->reduction_over_Kv;
      s.over_Kv_from_override = true;
    } else if (*ov->reduction_over_Kv != s.over_Kv) {
      s.notes.push_back("reduction override " + to_string(*ov->reduction_over_Kv) + " ignored at " + v.label() +
                        ": the computed reduction over K_v is " + to_string(s.over_Kv));
    }
  }

  if (!s.potentially_multiplicative()) {
    s.defect = semistability_defect(e, v.l);
    if (*s.defect == SemistabilityDefect::Unknown && ov && ov->defect) {
      s.defect = ov->defect;
      s.defect_from_override = true;
    } else if (ov && ov->defect && *ov->defect != *s.defect) {
      s.notes.push_back("defect override " + to_string(*ov->defect) + " ignored at " + v.label() +
                        ": the computed defect is " + to_string(*s.defect));
    }
  }
  if (ov) s.anomalous_override = ov->anomalous;

  if (s.above_p() && !s.potentially_multiplicative()) {
    try {
      if (s.over_Q.type.kind == ReductionKind::Good) {
        s.residue_frobenius = frobenius_data(e, v.l, tower.p);
      } else {
        const auto classes = good_twist_classes(e, v.l);
        if (!classes.empty()) {
          s.residue_twist = classes.front();
          s.residue_frobenius = frobenius_data(quadratic_twist(e, s.residue_twist), v.l, tower.p);
        }
      }
    } catch (const std::exception& ex) {
      s.notes.push_back("no Frobenius data at " + v.label() + ": " + ex.what());
    }
  }
  return s;
}

}  // namespace loccon
