#pragma once

#include "loccon/delta.hpp"
#include "loccon/gamma.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loccon {

inline constexpr int kReportSchemaVersion = 1;

enum class RowStatus { Match, Mismatch, Undetermined };
std::string to_string(RowStatus s);
RowStatus row_status_from_string(const std::string& s);

struct SiteDelta {
  PrimeSite site;
  DeltaVerdict delta;
  bool operator==(const SiteDelta&) const = default;
};

/// gamma_u against the sum of delta_v over v | u.
struct ParityRow {
  Place u;
  GammaVerdict gamma;
  std::vector<SiteDelta> deltas;
  std::optional<int> delta_sum;
  RowStatus status = RowStatus::Undetermined;
  /// Every site above u outside the audited set, or satisfying one of its conditions.
  bool audited = true;
  /// A Mismatch on an audited row contradicts the comparison theorem.
  bool failure = false;
  bool operator==(const ParityRow&) const = default;
};

/// Conditions under which gamma_u = delta_v is known at a self-conjugate
/// ramified site: 'a' good (ordinary above p), 'b' supersingular above p with
/// p inert, 'c' potentially multiplicative, 'd' additive potentially good with
/// the extra conditions of the respective theorem.
struct AuditEntry {
  PrimeSite site;
  bool above_6p = false;
  std::optional<char> parity_condition;
  std::optional<char> selmer_condition;
  std::vector<std::string> reasons;
  bool operator==(const AuditEntry&) const = default;
};

struct SelmerBound {
  bool applicable = false;
  std::optional<Integer> bound;
  std::vector<std::string> reasons;
  bool operator==(const SelmerBound&) const = default;
};

struct RelativeParity {
  int parity = 0;
  std::string statement;
  bool operator==(const RelativeParity&) const = default;
};

struct ParityReport {
  int schema_version = kReportSchemaVersion;
  std::string label;
  WeierstrassCurve curve;
  TowerSpec tower;
  std::optional<long> dim_selmer_K;

  std::vector<ParityRow> rows;
  std::string blanket_row;

  /// Sites above p, sites ramified in L/K, sites above primes of bad reduction.
  std::vector<PrimeSite> S;
  std::optional<int> S_sum;
  std::vector<std::string> S_sum_reasons;

  /// Self-conjugate sites ramified in L/K; the comparison audit covers those above 6p.
  std::vector<PrimeSite> frak_S;
  std::vector<PrimeSite> frak_S_6p;
  std::vector<PrimeSite> frak_S_m;
  std::vector<AuditEntry> audit;
  bool parity_audit_passed = false;
  bool selmer_audit_passed = false;

  std::optional<RelativeParity> relative_parity;
  std::vector<std::string> relative_parity_reasons;
  /// Absent when dim S_p(E/K) was not supplied.
  std::optional<SelmerBound> selmer;
  std::vector<std::string> notes;

  bool has_failure() const;
  bool has_undetermined() const;
  bool operator==(const ParityReport&) const = default;
};

/// Full analysis. Throws SingularCurveError or InvalidTowerError.
ParityReport analyze(const WeierstrassCurve& e, const TowerSpec& tower, std::optional<long> dim_selmer_K = std::nullopt,
                     std::string label = "");

/// Rational primes with a row: bad primes of E, p, primes dividing disc(K)
/// and primes below ramified sites, ascending.
std::vector<Integer> support_primes(const WeierstrassCurve& e, const TowerSpec& tower);

/// The comparison row at a single place, including primes outside the support set.
ParityRow parity_row(const WeierstrassCurve& e, const TowerSpec& tower, const Place& u);

SelmerBound selmer_growth_bound(const ParityReport& report, std::optional<long> dim_selmer_K);

}  // namespace loccon
