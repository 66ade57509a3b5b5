#pragma once

#include "loccon/arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loccon {

class SingularCurveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integral Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct WeierstrassCurve {
  Integer a1, a2, a3, a4, a6;

  bool operator==(const WeierstrassCurve&) const = default;
  std::string to_string() const;
};

struct CurveInvariants {
  Integer b2, b4, b6, b8;
  Integer c4, c6;
  Integer discriminant;
  Rational j;
};

/// Throws SingularCurveError when the discriminant vanishes.
CurveInvariants invariants(const WeierstrassCurve& e);

/// The model obtained from the substitution x = x' + r, y = y' + s x' + t.
WeierstrassCurve change_coordinates(const WeierstrassCurve& e, const Integer& r, const Integer& s,
                                    const Integer& t);

/// Scale by u: a_i -> u^i a_i (the inverse of dividing out a non-minimal factor).
WeierstrassCurve scale(const WeierstrassCurve& e, const Integer& u);

/// Isomorphism over Q, decided on (c4, c6).
bool is_isomorphic(const WeierstrassCurve& e1, const WeierstrassCurve& e2);

enum class ReductionKind { Good, Multiplicative, Additive, Unknown };

struct ReductionType {
  ReductionKind kind = ReductionKind::Unknown;
  bool split = false;  // meaningful only for Multiplicative

  static ReductionType good() { return {ReductionKind::Good, false}; }
  static ReductionType multiplicative(bool split) { return {ReductionKind::Multiplicative, split}; }
  static ReductionType additive() { return {ReductionKind::Additive, false}; }
  static ReductionType unknown() { return {ReductionKind::Unknown, false}; }

  bool is_split_multiplicative() const { return kind == ReductionKind::Multiplicative && split; }
  bool operator==(const ReductionType&) const = default;
};

std::string to_string(const ReductionType& t);

enum class PotentialType { PotentiallyGood, PotentiallyMultiplicative };

struct LocalReductionData {
  Integer l;
  ReductionType type;
  long v_disc_min = 0;
  std::optional<long> v_c4_min;  // nullopt: c4 = 0
  std::optional<long> v_c6_min;  // nullopt: c6 = 0
  std::optional<long> v_j;       // nullopt: j = 0
  PotentialType potential = PotentialType::PotentiallyGood;
  WeierstrassCurve minimal_model;
};

/// Tate's algorithm; the returned model is l-minimal and obtained from e by
/// integral coordinate changes and division by powers of l.
WeierstrassCurve minimal_model_at(const WeierstrassCurve& e, const Integer& l);

LocalReductionData local_reduction(const WeierstrassCurve& e, const Integer& l);

/// Quadratic twist by the squarefree d. The model has c4' = D^2 c4, c6' = D^3 c6
/// and disc' = D^6 disc, where D = d when d = 1 mod 4 or a1, a3 are both even,
/// and D = 4d otherwise (the smallest integral choice).
WeierstrassCurve quadratic_twist(const WeierstrassCurve& e, const Integer& d);

/// Order of the inertia image Lambda for potentially good reduction.
enum class SemistabilityDefect { One = 1, Two = 2, Three = 3, Four = 4, Six = 6, NonCyclic = 0, Unknown = -1 };

std::string to_string(SemistabilityDefect e);
bool is_cyclic(SemistabilityDefect e);

/// Representatives of Q_l^x / Q_l^x^2: {1, -1, 2, -2, 5, -5, 10, -10} at 2,
/// {1, e, l, e l} with e the smallest non-residue otherwise.
std::vector<Integer> square_class_representatives(const Integer& l);

/// Square classes d for which the twist E^d has good reduction at l.
std::vector<Integer> good_twist_classes(const WeierstrassCurve& e, const Integer& l);

/// For l >= 5: 12 / gcd(v(disc_min), 12). For l in {2, 3}: 1 for good reduction,
/// 2 when some quadratic twist has good reduction (an inertia image of order 2 is
/// always -1, so this test is exact for e <= 2), Unknown otherwise.
/// Throws std::invalid_argument for potentially multiplicative reduction.
SemistabilityDefect semistability_defect(const WeierstrassCurve& e, const Integer& l);

/// Local splitting of l in the quadratic field; d is the radicand of K_v / Q_l
/// when ramified.
enum class SplitType { Split, Inert, Ramified };
std::string to_string(SplitType s);

struct LocalExtension {
  SplitType type = SplitType::Split;
  Integer d = 0;
};

/// Reduction type of E over K_v.
ReductionType reduction_over_Kv(const WeierstrassCurve& e, const Integer& l, const LocalExtension& ext);

struct FrobeniusData {
  Integer l;
  long a_l = 0;
  long a_l2 = 0;  // trace of Frobenius over F_{l^2}
  bool ordinary = false;
  bool anomalous_l = false;   // l + 1 - a_l = 0 mod p
  bool anomalous_l2 = false;  // l^2 + 1 - a_{l^2} = 0 mod p
};

/// Largest l accepted for naive point counting.
inline constexpr long kMaxCountingPrime = 1L << 24;

/// a_l by naive point counting on the l-minimal model.
long trace_of_frobenius(const WeierstrassCurve& e, const Integer& l);

FrobeniusData frobenius_data(const WeierstrassCurve& e, const Integer& l, const Integer& p);

}  // namespace loccon
