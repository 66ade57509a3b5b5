#pragma once

#include "loccon/curve.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace loccon {

/// K = Q(sqrt d), d squarefree and not 0 or 1.
struct QuadraticFieldSpec {
  Integer d;

  Integer discriminant() const;
  bool operator==(const QuadraticFieldSpec&) const = default;
};

/// Which of the two primes above a split l; Self for inert or ramified l.
enum class Conjugate { Self, First, Second };

struct PrimeSite {
  Integer l;
  SplitType split_type = SplitType::Inert;
  Conjugate which = Conjugate::Self;

  bool self_conjugate() const { return split_type != SplitType::Split; }
  PrimeSite conjugate() const;
  /// "v11", "v5" / "v5'" for the two primes above a split 5.
  std::string label() const;

  bool operator==(const PrimeSite&) const = default;
  bool operator<(const PrimeSite& o) const;
};

/// Optional per-site data the automated criteria cannot supply; used only where the computed value is unknown.
struct SiteOverrides {
  std::optional<SemistabilityDefect> defect;
  /// true: anomalous (or not ordinary) over the good-reduction extension;
  /// false: good ordinary non-anomalous there.
  std::optional<bool> anomalous;
  std::optional<ReductionType> reduction_over_Kv;

  bool operator==(const SiteOverrides&) const = default;
};

/// Dihedral tower Q ⊂ K ⊂ L with [L : K] = p^n; L is described by the primes
/// of K that ramify in L/K. When used for Selmer growth, L plays the role of
/// the abelian extension F.
struct TowerSpec {
  QuadraticFieldSpec K;
  Integer p;
  int n = 1;
  std::vector<PrimeSite> ramified_sites;
  std::map<PrimeSite, SiteOverrides> overrides;

  Integer degree() const;
  bool ramified_in_L(const PrimeSite& v) const;
  const SiteOverrides* overrides_for(const PrimeSite& v) const;
  bool operator==(const TowerSpec&) const = default;
};

SplitType split_type(const Integer& l, const QuadraticFieldSpec& K);

/// Two sites (First, Second) when l splits, one self-conjugate site otherwise.
std::vector<PrimeSite> sites_above(const Integer& l, const QuadraticFieldSpec& K);

/// K_v viewed as an extension of Q_l.
LocalExtension local_extension(const PrimeSite& v, const QuadraticFieldSpec& K);

enum class TowerRule {
  PrimeAboveThree,      // p prime, p > 3, n >= 1
  SquarefreeRadicand,   // d squarefree, d != 0, 1
  ConjugationClosed,    // ramified sites closed under v -> v^c
  RamifiedInBothAboveP, // a site ramified in K/Q and in L/K lies above p
  NonsingularCurve,     // disc(E) != 0
  SiteConsistency       // declared site data agrees with the splitting of l in K
};

std::string to_string(TowerRule r);

struct Violation {
  TowerRule rule;
  std::string message;
  std::string citation;
};

/// All violations of the standing hypotheses, empty when valid; the curve rule comes last.
std::vector<Violation> validate_tower(const TowerSpec& tower, const WeierstrassCurve& e);
/// The curve-independent rules only.
std::vector<Violation> validate_tower(const TowerSpec& tower);

}  // namespace loccon
