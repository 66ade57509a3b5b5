#include "loccon/report_json.hpp"

#include <sstream>
#include <stdexcept>

namespace loccon {

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    Integer out;
    if (s.empty() || out.set_str(s, 10) != 0) throw std::invalid_argument("'" + s + "' is not an integer");
    return out;
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

std::string reduction_type_name(const ReductionType& t) {
  switch (t.kind) {
    case ReductionKind::Good: return "good";
    case ReductionKind::Multiplicative: return t.split ? "split_multiplicative" : "nonsplit_multiplicative";
    case ReductionKind::Additive: return "additive";
    case ReductionKind::Unknown: return "unknown";
  }
  return "unknown";
}

ReductionType reduction_type_from_name(const std::string& s) {
  if (s == "good") return ReductionType::good();
  if (s == "split_multiplicative") return ReductionType::multiplicative(true);
  if (s == "nonsplit_multiplicative") return ReductionType::multiplicative(false);
  if (s == "additive") return ReductionType::additive();
  if (s == "unknown") return ReductionType::unknown();
  throw std::invalid_argument("unknown reduction type '" + s + "'");
}

Json defect_json(SemistabilityDefect e) {
  if (e == SemistabilityDefect::NonCyclic) return "noncyclic";
  if (e == SemistabilityDefect::Unknown) return "unknown";
  return static_cast<int>(e);
}

SemistabilityDefect defect_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "noncyclic") return SemistabilityDefect::NonCyclic;
    if (s == "unknown") return SemistabilityDefect::Unknown;
    throw std::invalid_argument("unknown defect '" + s + "'");
  }
  if (j.is_number_integer()) {
    switch (j.get<int>()) {
      case 1: return SemistabilityDefect::One;
      case 2: return SemistabilityDefect::Two;
      case 3: return SemistabilityDefect::Three;
      case 4: return SemistabilityDefect::Four;
      case 6: return SemistabilityDefect::Six;
      default: break;
    }
  }
  throw std::invalid_argument("defect must be 1, 2, 3, 4, 6 or \"noncyclic\", got " + j.dump());
}

namespace {

const char* which_name(Conjugate w) {
  switch (w) {
    case Conjugate::Self: return "self";
    case Conjugate::First: return "first";
    case Conjugate::Second: return "second";
  }
  return "self";
}

Conjugate which_from_name(const std::string& s) {
  if (s == "self") return Conjugate::Self;
  if (s == "first") return Conjugate::First;
  if (s == "second") return Conjugate::Second;
  throw std::invalid_argument("unknown site selector '" + s + "'");
}

SplitType split_type_from_name(const std::string& s) {
  for (SplitType t : {SplitType::Split, SplitType::Inert, SplitType::Ramified})
    if (to_string(t) == s) return t;
  throw std::invalid_argument("unknown split type '" + s + "'");
}

Json optional_int(const std::optional<int>& x) { return x ? Json(*x) : Json(nullptr); }

std::optional<int> optional_int_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

Json strings(const std::vector<std::string>& v) { return Json(v); }

std::vector<std::string> strings_from(const Json& j) { return j.get<std::vector<std::string>>(); }

Json sites_json(const std::vector<PrimeSite>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(site_json(s));
  return a;
}

std::vector<PrimeSite> sites_from(const Json& j) {
  std::vector<PrimeSite> out;
  for (const auto& s : j) out.push_back(site_from_json(s));
  return out;
}

Json curve_json(const WeierstrassCurve& e) {
  return Json::array({integer_json(e.a1), integer_json(e.a2), integer_json(e.a3), integer_json(e.a4),
                      integer_json(e.a6)});
}

WeierstrassCurve curve_from(const Json& j) {
  if (!j.is_array() || j.size() != 5) throw std::invalid_argument("curve must be an array of five integers");
  return {integer_from_json(j[0]), integer_from_json(j[1]), integer_from_json(j[2]), integer_from_json(j[3]),
          integer_from_json(j[4])};
}

Json gamma_json(const GammaVerdict& g) {
  return Json{{"value", optional_int(g.value)},
              {"case", to_string(g.case_tag)},
              {"citation", g.citation},
              {"notes", strings(g.notes)}};
}

GammaVerdict gamma_from(const Json& j) {
  GammaVerdict g;
  g.value = optional_int_from(j.at("value"));
  g.case_tag = gamma_case_from_string(j.at("case").get<std::string>());
  g.citation = j.at("citation").get<std::string>();
  g.notes = strings_from(j.at("notes"));
  return g;
}

Json delta_json(const DeltaVerdict& d) {
  return Json{{"value", optional_int(d.value)},
              {"pair_sum", optional_int(d.pair_sum)},
              {"case", to_string(d.case_tag)},
              {"citation", d.citation},
              {"notes", strings(d.notes)}};
}

DeltaVerdict delta_from(const Json& j) {
  DeltaVerdict d;
  d.value = optional_int_from(j.at("value"));
  d.pair_sum = optional_int_from(j.at("pair_sum"));
  d.case_tag = delta_case_from_string(j.at("case").get<std::string>());
  d.citation = j.at("citation").get<std::string>();
  d.notes = strings_from(j.at("notes"));
  return d;
}

Json place_json(const Place& u) { return u.archimedean ? Json("inf") : integer_json(u.l); }

Place place_from(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Place::infinite();
  return Place::prime(integer_from_json(j));
}

Json condition_json(const std::optional<char>& c) { return c ? Json(std::string(1, *c)) : Json(nullptr); }

std::optional<char> condition_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  const auto s = j.get<std::string>();
  if (s.size() != 1 || s[0] < 'a' || s[0] > 'd') throw std::invalid_argument("bad audit condition '" + s + "'");
  return s[0];
}

}  // namespace

Json site_json(const PrimeSite& v) {
  return Json{{"l", integer_json(v.l)},
              {"split_type", to_string(v.split_type)},
              {"which", which_name(v.which)},
              {"label", v.label()}};
}

PrimeSite site_from_json(const Json& j) {
  PrimeSite v;
  v.l = integer_from_json(j.at("l"));
  v.split_type = split_type_from_name(j.at("split_type").get<std::string>());
  v.which = which_from_name(j.at("which").get<std::string>());
  return v;
}

Json tower_json(const TowerSpec& t) {
  Json overrides = Json::array();
  for (const auto& [site, ov] : t.overrides) {
    Json o{{"site", site_json(site)}};
    if (ov.defect) o["defect_override"] = defect_json(*ov.defect);
    if (ov.anomalous) o["anomalous_override"] = *ov.anomalous;
    if (ov.reduction_over_Kv) o["reduction_over_Kv_override"] = reduction_type_name(*ov.reduction_over_Kv);
    overrides.push_back(o);
  }
  return Json{{"d", integer_json(t.K.d)},
              {"p", integer_json(t.p)},
              {"n", t.n},
              {"ramified_sites", sites_json(t.ramified_sites)},
              {"overrides", overrides}};
}

TowerSpec tower_from_json(const Json& j) {
  TowerSpec t;
  t.K.d = integer_from_json(j.at("d"));
  t.p = integer_from_json(j.at("p"));
  t.n = j.at("n").get<int>();
  t.ramified_sites = sites_from(j.at("ramified_sites"));
  for (const auto& o : j.at("overrides")) {
    SiteOverrides ov;
    if (o.contains("defect_override")) ov.defect = defect_from_json(o["defect_override"]);
    if (o.contains("anomalous_override")) ov.anomalous = o["anomalous_override"].get<bool>();
    if (o.contains("reduction_over_Kv_override"))
      ov.reduction_over_Kv = reduction_type_from_name(o["reduction_over_Kv_override"].get<std::string>());
    t.overrides[site_from_json(o.at("site"))] = ov;
  }
  return t;
}

Json to_json(const ParityReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json deltas = Json::array();
    for (const auto& sd : row.deltas) deltas.push_back(Json{{"site", site_json(sd.site)}, {"delta", delta_json(sd.delta)}});
    rows.push_back(Json{{"u", place_json(row.u)},
                        {"gamma", gamma_json(row.gamma)},
                        {"deltas", deltas},
                        {"delta_sum", optional_int(row.delta_sum)},
                        {"status", to_string(row.status)},
                        {"audited", row.audited},
                        {"failure", row.failure}});
  }
  Json audit = Json::array();
  for (const auto& a : r.audit)
    audit.push_back(Json{{"site", site_json(a.site)},
                         {"above_6p", a.above_6p},
                         {"parity_condition", condition_json(a.parity_condition)},
                         {"selmer_condition", condition_json(a.selmer_condition)},
                         {"reasons", strings(a.reasons)}});

  Json j{{"schema_version", r.schema_version},
         {"label", r.label},
         {"curve", curve_json(r.curve)},
         {"tower", tower_json(r.tower)},
         {"dim_Sp_E_K", r.dim_selmer_K ? Json(*r.dim_selmer_K) : Json(nullptr)},
         {"rows", rows},
         {"blanket_row", r.blanket_row},
         {"S", sites_json(r.S)},
         {"S_sum", optional_int(r.S_sum)},
         {"S_sum_reasons", strings(r.S_sum_reasons)},
         {"frak_S", sites_json(r.frak_S)},
         {"frak_S_6p", sites_json(r.frak_S_6p)},
         {"frak_S_m", sites_json(r.frak_S_m)},
         {"hypothesis_audit", audit},
         {"parity_audit_passed", r.parity_audit_passed},
         {"selmer_audit_passed", r.selmer_audit_passed}};
  if (r.relative_parity)
    j["relative_parity"] = Json{{"parity", r.relative_parity->parity}, {"statement", r.relative_parity->statement}};
  j["relative_parity_reasons"] = strings(r.relative_parity_reasons);
  if (r.selmer) {
    j["selmer_bound"] = Json{{"applicable", r.selmer->applicable},
                             {"bound", r.selmer->bound ? integer_json(*r.selmer->bound) : Json(nullptr)},
                             {"reasons", strings(r.selmer->reasons)}};
  }
  j["notes"] = strings(r.notes);
  return j;
}

ParityReport report_from_json(const Json& j) {
  try {
    ParityReport r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kReportSchemaVersion)
      throw std::invalid_argument("unsupported report schema version " + std::to_string(r.schema_version));
    r.label = j.at("label").get<std::string>();
    r.curve = curve_from(j.at("curve"));
    r.tower = tower_from_json(j.at("tower"));
    if (!j.at("dim_Sp_E_K").is_null()) r.dim_selmer_K = j["dim_Sp_E_K"].get<long>();
    for (const auto& row : j.at("rows")) {
      ParityRow pr;
      pr.u = place_from(row.at("u"));
      pr.gamma = gamma_from(row.at("gamma"));
      for (const auto& sd : row.at("deltas")) pr.deltas.push_back({site_from_json(sd.at("site")), delta_from(sd.at("delta"))});
      pr.delta_sum = optional_int_from(row.at("delta_sum"));
      pr.status = row_status_from_string(row.at("status").get<std::string>());
      pr.audited = row.at("audited").get<bool>();
      pr.failure = row.at("failure").get<bool>();
      r.rows.push_back(std::move(pr));
    }
    r.blanket_row = j.at("blanket_row").get<std::string>();
    r.S = sites_from(j.at("S"));
    r.S_sum = optional_int_from(j.at("S_sum"));
    r.S_sum_reasons = strings_from(j.at("S_sum_reasons"));
    r.frak_S = sites_from(j.at("frak_S"));
    r.frak_S_6p = sites_from(j.at("frak_S_6p"));
    r.frak_S_m = sites_from(j.at("frak_S_m"));
    for (const auto& a : j.at("hypothesis_audit")) {
      AuditEntry e;
      e.site = site_from_json(a.at("site"));
      e.above_6p = a.at("above_6p").get<bool>();
      e.parity_condition = condition_from(a.at("parity_condition"));
      e.selmer_condition = condition_from(a.at("selmer_condition"));
      e.reasons = strings_from(a.at("reasons"));
      r.audit.push_back(std::move(e));
    }
    r.parity_audit_passed = j.at("parity_audit_passed").get<bool>();
    r.selmer_audit_passed = j.at("selmer_audit_passed").get<bool>();
    if (j.contains("relative_parity"))
      r.relative_parity = RelativeParity{j["relative_parity"].at("parity").get<int>(),
                                         j["relative_parity"].at("statement").get<std::string>()};
    r.relative_parity_reasons = strings_from(j.at("relative_parity_reasons"));
    if (j.contains("selmer_bound")) {
      const auto& s = j["selmer_bound"];
      SelmerBound b;
      b.applicable = s.at("applicable").get<bool>();
      if (!s.at("bound").is_null()) b.bound = integer_from_json(s["bound"]);
      b.reasons = strings_from(s.at("reasons"));
      r.selmer = b;
    }
    r.notes = strings_from(j.at("notes"));
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed report: ") + ex.what());
  }
}

namespace {

std::string value_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "?"; }

}  // namespace

std::string render_text(const ParityReport& r) {
  std::ostringstream out;
  out << "curve " << (r.label.empty() ? r.curve.to_string() : r.label + " " + r.curve.to_string()) << "\n";
  out << "tower K = Q(sqrt " << r.tower.K.d << "), p = " << r.tower.p << ", n = " << r.tower.n
      << ", ramified in L/K:";
  if (r.tower.ramified_sites.empty()) out << " none";
  for (const auto& v : r.tower.ramified_sites) out << " " << v.label();
  out << "\n\n";
  out << "u      gamma  delta-sum  status        gamma case / delta cases\n";
  for (const auto& row : r.rows) {
    std::string u = row.u.label();
    u.resize(7, ' ');
    std::string status = to_string(row.status) + (row.failure ? " FAILURE" : "");
    status.resize(14, ' ');
    out << u << value_text(row.gamma.value) << "      " << value_text(row.delta_sum) << "          " << status
        << to_string(row.gamma.case_tag);
    for (const auto& sd : row.deltas) out << " | " << sd.site.label() << ": " << to_string(sd.delta.case_tag);
    out << "\n";
  }
  out << "(" << r.blanket_row << ")\n\n";
  out << "S:";
  for (const auto& v : r.S) out << " " << v.label();
  out << "\nsum of delta over S: " << value_text(r.S_sum) << "\n";
  out << "self-conjugate ramified sites:";
  for (const auto& a : r.audit) {
    out << " " << a.site.label() << "[" << (a.parity_condition ? std::string(1, *a.parity_condition) : "-") << "/"
        << (a.selmer_condition ? std::string(1, *a.selmer_condition) : "-") << "]";
  }
  out << "\nsplit multiplicative among them: " << r.frak_S_m.size() << "\n";
  if (r.relative_parity) out << "relative parity: " << r.relative_parity->statement << "\n";
  for (const auto& reason : r.relative_parity_reasons) out << "relative parity not established: " << reason << "\n";
  if (r.selmer) {
    if (r.selmer->applicable) out << "Selmer growth: dim S_p(E/L) >= " << *r.selmer->bound << "\n";
    for (const auto& reason : r.selmer->reasons) out << "Selmer bound not applicable: " << reason << "\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace loccon
