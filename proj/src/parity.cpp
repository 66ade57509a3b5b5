#include "loccon/parity.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

namespace loccon {

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Match: return "Match";
    case RowStatus::Mismatch: return "Mismatch";
    case RowStatus::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

RowStatus row_status_from_string(const std::string& s) {
  for (RowStatus r : {RowStatus::Match, RowStatus::Mismatch, RowStatus::Undetermined})
    if (to_string(r) == s) return r;
  throw std::invalid_argument("unknown row status '" + s + "'");
}

bool ParityReport::has_failure() const {
  return std::any_of(rows.begin(), rows.end(), [](const ParityRow& r) { return r.failure; });
}

bool ParityReport::has_undetermined() const {
  if (!S_sum) return true;
  return std::any_of(rows.begin(), rows.end(), [](const ParityRow& r) { return r.status == RowStatus::Undetermined; });
}

std::vector<Integer> support_primes(const WeierstrassCurve& e, const TowerSpec& tower) {
  std::set<Integer> ls;
  for (const auto& l : prime_factors(invariants(e).discriminant))
    if (local_reduction(e, l).v_disc_min > 0) ls.insert(l);
  ls.insert(tower.p);
  for (const auto& l : prime_factors(tower.K.discriminant())) ls.insert(l);
  for (const auto& v : tower.ramified_sites) ls.insert(v.l);
  return {ls.begin(), ls.end()};
}

namespace {

struct PrimeResult {
  ParityRow row;
  std::vector<SiteData> data;  // self-conjugate sites only
};

PrimeResult evaluate_prime(const WeierstrassCurve& e, const TowerSpec& tower, const Integer& l) {
  PrimeResult out;
  out.row.u = Place::prime(l);
  const auto sites = sites_above(l, tower.K);
  if (!sites.front().self_conjugate()) {
    SiteData pair;
    pair.site = sites.front();
    pair.p = tower.p;
    out.row.gamma = gamma_from_data(pair);
    for (const auto& v : sites) {
      pair.site = v;
      pair.ramified_in_L = tower.ramified_in_L(v);
      out.row.deltas.push_back({v, delta_from_data(pair)});
    }
    return out;
  }
  SiteData d = analyze_site(e, tower, sites.front());
  out.row.gamma = gamma_from_data(d);
  out.row.deltas.push_back({d.site, delta_from_data(d)});
  out.data.push_back(std::move(d));
  return out;
}

void finish_row(ParityRow& row) {
  bool all = true;
  int sum = 0;
  const bool pair = row.deltas.size() == 2;
  if (pair) {
    // the pair contributes delta_v + delta_{v^c}
    const auto& d = row.deltas.front().delta;
    if (d.pair_sum) sum = *d.pair_sum;
    else all = false;
  } else {
    for (const auto& sd : row.deltas) {
      if (sd.delta.value) sum += *sd.delta.value;
      else all = false;
    }
  }
  if (all) row.delta_sum = sum % 2;
  if (row.gamma.value && row.delta_sum)
    row.status = *row.gamma.value == *row.delta_sum ? RowStatus::Match : RowStatus::Mismatch;
  else
    row.status = RowStatus::Undetermined;
}

bool abelian_above_p(const SiteData& v) {
  if (v.site.split_type == SplitType::Inert) return true;  // q = p^2 = 1 mod 24
  const SemistabilityDefect e = v.defect.value_or(SemistabilityDefect::Unknown);
  if (!is_cyclic(e)) return false;
  const long e_kv = static_cast<long>(defect_over_Kv(e, v.site.split_type));
  return (v.l() - 1) % e_kv == 0;
}

AuditEntry audit_site(const SiteData& v) {
  AuditEntry a;
  a.site = v.site;
  const Integer& l = v.l();
  a.above_6p = l == 2 || l == 3 || v.above_p();
  const auto& kv = v.over_Kv;
  const auto& frob = v.residue_frobenius;
  auto both = [&](char c) {
    a.parity_condition = c;
    a.selmer_condition = c;
  };

  if (v.potentially_multiplicative()) {
    both('c');
    return a;
  }
  if (kv.kind == ReductionKind::Good) {
    if (!v.above_p()) {
      both('a');
      return a;
    }
    if (!frob) {
      a.reasons.push_back(v.site.label() + ": no residue curve data to decide ordinarity");
      return a;
    }
    if (frob->ordinary) {
      both('a');
      return a;
    }
    if (v.over_Q.type.kind == ReductionKind::Good && v.site.split_type == SplitType::Inert) {
      both('b');
      return a;
    }
    a.reasons.push_back(v.site.label() + ": supersingular above p without E good over Q_p and p inert in K");
    return a;
  }
  if (kv.kind == ReductionKind::Unknown) {
    a.reasons.push_back(v.site.label() + ": reduction type over K_v unknown");
    return a;
  }

  // additive, potentially good
  std::optional<bool> ord_nonanom;
  if (v.above_p()) {
    std::vector<std::string> scratch;
    ord_nonanom = ordinary_non_anomalous_over_defect_field(v, &scratch);
  }
  const bool p_ok = !v.above_p() || (ord_nonanom && *ord_nonanom);
  if (p_ok) a.selmer_condition = 'd';
  else a.reasons.push_back(v.site.label() + ": ordinary non-anomalous reduction over the defect extension not established");

  bool abelian = true;
  if (l == 2 || l == 3) {
    abelian = is_cyclic(v.defect.value_or(SemistabilityDefect::Unknown));
    if (!abelian)
      a.reasons.push_back(v.site.label() + ": semistability group " +
                          to_string(v.defect.value_or(SemistabilityDefect::Unknown)) + " not known to be cyclic");
  } else if (v.above_p()) {
    abelian = abelian_above_p(v);
    if (!abelian) a.reasons.push_back(v.site.label() + ": good reduction not acquired over an abelian extension of K_v");
  }
  if (abelian && p_ok) a.parity_condition = 'd';
  return a;
}

ParityRow archimedean_row() {
  ParityRow inf;
  inf.u = Place::infinite();
  inf.gamma = gamma_archimedean();
  inf.delta_sum = 0;
  inf.status = RowStatus::Match;
  return inf;
}

std::string statement(int parity) {
  return "r_p^arith(E, tau_rho) - r_p^arith(E, tau_1) = r^an(E, tau_rho) - r^an(E, tau_1) = " +
         std::to_string(parity) + " mod 2";
}

}  // namespace

ParityRow parity_row(const WeierstrassCurve& e, const TowerSpec& tower, const Place& u) {
  require_valid(tower, e);
  if (u.archimedean) return archimedean_row();
  ParityRow row;
  if (!is_prime(u.l)) throw std::invalid_argument("parity_row: " + to_string(u.l) + " is not prime");
  PrimeResult pr = evaluate_prime(e, tower, u.l);
  row = std::move(pr.row);
  finish_row(row);
  for (const auto& d : pr.data)
    if (d.ramified_in_L) {
      const AuditEntry a = audit_site(d);
      if (a.above_6p && !a.parity_condition) row.audited = false;
    }
  row.failure = row.status == RowStatus::Mismatch && row.audited;
  return row;
}

SelmerBound selmer_growth_bound(const ParityReport& report, std::optional<long> dim_selmer_K) {
  SelmerBound b;
  if (!report.selmer_audit_passed) {
    for (const auto& a : report.audit)
      if (!a.selmer_condition)
        for (const auto& r : a.reasons) b.reasons.push_back(r);
    if (b.reasons.empty()) b.reasons.push_back("hypothesis audit failed");
  }
  if (!dim_selmer_K) {
    b.reasons.push_back("dim S_p(E/K) not supplied");
  } else if (*dim_selmer_K < 0) {
    b.reasons.push_back("dim S_p(E/K) must be nonnegative");
  } else if ((*dim_selmer_K + static_cast<long>(report.frak_S_m.size())) % 2 == 0) {
    b.reasons.push_back("dim S_p(E/K) + |S_m| = " + std::to_string(*dim_selmer_K) + " + " +
                        std::to_string(report.frak_S_m.size()) + " is even");
  }
  if (b.reasons.empty()) {
    b.applicable = true;
    b.bound = Integer(*dim_selmer_K) + report.tower.degree() - 1;
  }
  return b;
}

ParityReport analyze(const WeierstrassCurve& e, const TowerSpec& tower, std::optional<long> dim_selmer_K,
                     std::string label) {
  require_valid(tower, e);
  ParityReport r;
  r.label = std::move(label);
  r.curve = e;
  r.tower = tower;
  r.dim_selmer_K = dim_selmer_K;

  const auto primes = support_primes(e, tower);
  std::vector<std::future<PrimeResult>> futures;
  for (const auto& l : primes)
    futures.push_back(std::async(std::launch::async, [&e, &tower, l] { return evaluate_prime(e, tower, l); }));
  std::vector<PrimeResult> results;
  for (auto& f : futures) results.push_back(f.get());

  std::vector<SiteData> self_conjugate;
  for (auto& pr : results) {
    for (auto& d : pr.data) self_conjugate.push_back(std::move(d));
  }

  // audit of self-conjugate sites ramified in L/K
  std::map<PrimeSite, AuditEntry> audit_by_site;
  for (const auto& d : self_conjugate) {
    for (const auto& n : d.notes) r.notes.push_back(n);
    if (!d.ramified_in_L) continue;
    const AuditEntry a = audit_site(d);
    r.frak_S.push_back(d.site);
    if (a.above_6p) r.frak_S_6p.push_back(d.site);
    audit_by_site[d.site] = a;
    r.audit.push_back(a);
  }
  r.parity_audit_passed = std::all_of(r.audit.begin(), r.audit.end(),
                                      [](const AuditEntry& a) { return !a.above_6p || a.parity_condition; });
  r.selmer_audit_passed =
      std::all_of(r.audit.begin(), r.audit.end(), [](const AuditEntry& a) { return a.selmer_condition.has_value(); });

  for (auto& pr : results) {
    ParityRow& row = pr.row;
    finish_row(row);
    for (const auto& sd : row.deltas) {
      auto it = audit_by_site.find(sd.site);
      if (it != audit_by_site.end() && it->second.above_6p && !it->second.parity_condition) row.audited = false;
      if (sd.delta.case_tag == DeltaCase::PotMultSplit && it != audit_by_site.end()) r.frak_S_m.push_back(sd.site);
    }
    for (const auto& n : row.gamma.notes) r.notes.push_back("gamma at " + row.u.label() + ": " + n);
    row.failure = row.status == RowStatus::Mismatch && row.audited;
    r.rows.push_back(std::move(row));
  }
  r.rows.push_back(archimedean_row());
  r.blanket_row =
      "every other prime u: u is unramified in K and all primes above u are unramified in L/K, so gamma_u = 0 "
      "(split pair or unramified self-conjugate prime) and the delta sum is 0 (pair cancellation or surjective "
      "local norm): Match";

  // the sum over S
  std::set<Integer> bad;
  for (const auto& l : primes)
    if (local_reduction(e, l).v_disc_min > 0) bad.insert(l);
  bool determined = true;
  int sum = 0;
  for (const auto& row : r.rows) {
    if (row.u.archimedean) continue;
    const Integer& l = row.u.l;
    for (const auto& sd : row.deltas) {
      const bool in_S = l == tower.p || bad.count(l) || tower.ramified_in_L(sd.site);
      if (!in_S) continue;
      r.S.push_back(sd.site);
    }
    const bool row_in_S = std::any_of(row.deltas.begin(), row.deltas.end(), [&](const SiteDelta& sd) {
      return std::find(r.S.begin(), r.S.end(), sd.site) != r.S.end();
    });
    if (!row_in_S) continue;
    if (row.deltas.size() == 2) {
      const auto& d = row.deltas.front().delta;
      if (d.pair_sum) sum += *d.pair_sum;
      else determined = false;
      continue;
    }
    const auto& d = row.deltas.front().delta;
    if (d.value) {
      sum += *d.value;
    } else {
      determined = false;
      r.S_sum_reasons.push_back("delta at " + row.deltas.front().site.label() + " undetermined");
    }
  }
  if (determined) r.S_sum = sum % 2;

  if (!r.parity_audit_passed) {
    for (const auto& a : r.audit)
      if (a.above_6p && !a.parity_condition)
        for (const auto& reason : a.reasons) r.relative_parity_reasons.push_back(reason);
  }
  if (!r.S_sum) r.relative_parity_reasons.push_back("the delta sum over S is undetermined");
  if (r.parity_audit_passed && r.S_sum) r.relative_parity = RelativeParity{*r.S_sum, statement(*r.S_sum)};

  if (dim_selmer_K) r.selmer = selmer_growth_bound(r, dim_selmer_K);
  return r;
}

}  // namespace loccon
