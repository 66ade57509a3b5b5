#include "loccon/curve.hpp"

#include "tate_internal.hpp"

#include <numeric>

namespace loccon {

std::string WeierstrassCurve::to_string() const {
  return "[" + a1.get_str() + "," + a2.get_str() + "," + a3.get_str() + "," + a4.get_str() + "," +
         a6.get_str() + "]";
}

CurveInvariants invariants(const WeierstrassCurve& e) {
  CurveInvariants v;
  v.b2 = e.a1 * e.a1 + 4 * e.a2;
  v.b4 = 2 * e.a4 + e.a1 * e.a3;
  v.b6 = e.a3 * e.a3 + 4 * e.a6;
  v.b8 = e.a1 * e.a1 * e.a6 + 4 * e.a2 * e.a6 - e.a1 * e.a3 * e.a4 + e.a2 * e.a3 * e.a3 - e.a4 * e.a4;
  v.c4 = v.b2 * v.b2 - 24 * v.b4;
  v.c6 = -v.b2 * v.b2 * v.b2 + 36 * v.b2 * v.b4 - 216 * v.b6;
  v.discriminant = -v.b2 * v.b2 * v.b8 - 8 * v.b4 * v.b4 * v.b4 - 27 * v.b6 * v.b6 + 9 * v.b2 * v.b4 * v.b6;
  if (v.discriminant == 0) throw SingularCurveError("singular Weierstrass model " + e.to_string());
  v.j = make_rational(v.c4 * v.c4 * v.c4, v.discriminant);
  return v;
}

WeierstrassCurve change_coordinates(const WeierstrassCurve& e, const Integer& r, const Integer& s,
                                    const Integer& t) {
  WeierstrassCurve o;
  o.a1 = e.a1 + 2 * s;
  o.a2 = e.a2 - s * e.a1 + 3 * r - s * s;
  o.a3 = e.a3 + r * e.a1 + 2 * t;
  o.a4 = e.a4 - s * e.a3 + 2 * r * e.a2 - (t + r * s) * e.a1 + 3 * r * r - 2 * s * t;
  o.a6 = e.a6 + r * e.a4 + r * r * e.a2 + r * r * r - t * e.a3 - t * t - r * t * e.a1;
  return o;
}

WeierstrassCurve scale(const WeierstrassCurve& e, const Integer& u) {
  const Integer u2 = u * u, u3 = u2 * u;
  return {u * e.a1, u2 * e.a2, u3 * e.a3, u2 * u2 * e.a4, u3 * u3 * e.a6};
}

namespace {

// q = w^k for some rational w.
bool is_rational_power(const Rational& q, unsigned long k) {
  if (q == 0) return true;
  if (q < 0 && k % 2 == 0) return false;
  auto exact_root = [k](Integer x) {
    const bool neg = x < 0;
    if (neg) x = -x;
    Integer r;
    return mpz_root(r.get_mpz_t(), x.get_mpz_t(), k) != 0;
  };
  return exact_root(q.get_num()) && exact_root(q.get_den());
}

}  // namespace

bool is_isomorphic(const WeierstrassCurve& e1, const WeierstrassCurve& e2) {
  const auto i1 = invariants(e1), i2 = invariants(e2);
  if ((i1.c4 == 0) != (i2.c4 == 0) || (i1.c6 == 0) != (i2.c6 == 0)) return false;
  if (i1.c4 == 0) return is_rational_power(make_rational(i2.c6, i1.c6), 6);
  if (i1.c6 == 0) return is_rational_power(make_rational(i2.c4, i1.c4), 4);
  // c4' = w^4 c4 and c6' = w^6 c6 force w^2 = (c6'/c6) / (c4'/c4).
  const Rational r4 = make_rational(i2.c4, i1.c4), r6 = make_rational(i2.c6, i1.c6);
  const Rational w2 = r6 / r4;
  return w2 > 0 && is_rational_power(w2, 2) && w2 * w2 == r4 && w2 * w2 * w2 == r6;
}

std::string to_string(const ReductionType& t) {
  switch (t.kind) {
    case ReductionKind::Good: return "good";
    case ReductionKind::Multiplicative: return t.split ? "split multiplicative" : "nonsplit multiplicative";
    case ReductionKind::Additive: return "additive";
    case ReductionKind::Unknown: return "unknown";
  }
  return "unknown";
}

WeierstrassCurve minimal_model_at(const WeierstrassCurve& e, const Integer& l) {
  invariants(e);
  return detail::run_tate(e, l).minimal;
}

LocalReductionData local_reduction(const WeierstrassCurve& e, const Integer& l) {
  const auto inv = invariants(e);
  const auto outcome = detail::run_tate(e, l);
  const auto minv = invariants(outcome.minimal);

  LocalReductionData out;
  out.l = l;
  out.minimal_model = outcome.minimal;
  out.v_disc_min = padic_valuation(minv.discriminant, l);
  if (minv.c4 != 0) out.v_c4_min = padic_valuation(minv.c4, l);
  if (minv.c6 != 0) out.v_c6_min = padic_valuation(minv.c6, l);
  if (inv.j != 0) out.v_j = padic_valuation(inv.j, l);
  out.potential = out.v_j && *out.v_j < 0 ? PotentialType::PotentiallyMultiplicative
                                          : PotentialType::PotentiallyGood;
  switch (outcome.kind) {
    case ReductionKind::Good: out.type = ReductionType::good(); break;
    case ReductionKind::Multiplicative:
      out.type = ReductionType::multiplicative(is_local_square(Rational(-minv.c6), l));
      break;
    default: out.type = ReductionType::additive(); break;
  }
  return out;
}

WeierstrassCurve quadratic_twist(const WeierstrassCurve& e, const Integer& d) {
  if (d == 0 || !is_squarefree(d))
    throw std::invalid_argument("twist parameter must be a nonzero squarefree integer, got " + to_string(d));
  const auto inv = invariants(e);
  const bool odd_a = mod(e.a1, 2) != 0 || mod(e.a3, 2) != 0;
  const Integer big_d = (mod(d, 4) == 1 || !odd_a) ? d : Integer(4 * d);
  // (2y + a1 x + a3)^2 = 4x^3 + D b2 x^2 + 2 D^2 b4 x + D^3 b6
  const Integer b2 = big_d * inv.b2, b4 = big_d * big_d * inv.b4, b6 = big_d * big_d * big_d * inv.b6;
  const Integer a1 = mod(b2, 2), a3 = mod(b6, 2);
  WeierstrassCurve o{a1, (b2 - a1) / 4, a3, (b4 - a1 * a3) / 2, (b6 - a3) / 4};
  return o;
}

std::string to_string(SemistabilityDefect e) {
  switch (e) {
    case SemistabilityDefect::NonCyclic: return "noncyclic";
    case SemistabilityDefect::Unknown: return "unknown";
    default: return std::to_string(static_cast<int>(e));
  }
}

bool is_cyclic(SemistabilityDefect e) {
  return e != SemistabilityDefect::NonCyclic && e != SemistabilityDefect::Unknown;
}

std::vector<Integer> square_class_representatives(const Integer& l) {
  if (l == 2) return {1, -1, 2, -2, 5, -5, 10, -10};
  const Integer eps = smallest_nonresidue(l);
  return {1, eps, l, eps * l};
}

std::vector<Integer> good_twist_classes(const WeierstrassCurve& e, const Integer& l) {
  // Every representative is squarefree: the smallest non-residue is prime and below l.
  std::vector<Integer> out;
  for (const auto& d : square_class_representatives(l)) {
    const auto twist = d == 1 ? e : quadratic_twist(e, d);
    if (detail::run_tate(twist, l).kind == ReductionKind::Good) out.push_back(d);
  }
  return out;
}

SemistabilityDefect semistability_defect(const WeierstrassCurve& e, const Integer& l) {
  const auto red = local_reduction(e, l);
  if (red.potential == PotentialType::PotentiallyMultiplicative)
    throw std::invalid_argument("semistability defect requires potentially good reduction at " + to_string(l));
  if (red.v_disc_min == 0) return SemistabilityDefect::One;
  if (l >= 5) return static_cast<SemistabilityDefect>(12 / std::gcd(red.v_disc_min, 12L));
  if (!good_twist_classes(e, l).empty()) return SemistabilityDefect::Two;
  return SemistabilityDefect::Unknown;
}

std::string to_string(SplitType s) {
  switch (s) {
    case SplitType::Split: return "split";
    case SplitType::Inert: return "inert";
    case SplitType::Ramified: return "ramified";
  }
  return "split";
}

ReductionType reduction_over_Kv(const WeierstrassCurve& e, const Integer& l, const LocalExtension& ext) {
  const auto red = local_reduction(e, l);
  if (ext.type == SplitType::Split) return red.type;

  QuadraticExt qext = QuadraticExt::unramified();
  if (ext.type == SplitType::Ramified) {
    if (ext.d == 0 || is_unramified_class(Rational(ext.d), l))
      throw std::invalid_argument("Q_" + to_string(l) + "(sqrt " + to_string(ext.d) + ") is not ramified");
    qext = QuadraticExt::ramified(ext.d);
  }

  if (red.potential == PotentialType::PotentiallyMultiplicative) {
    // E is the twist of a Tate curve by the character of Q_l(sqrt(-c6)).
    const Rational minus_c6(-invariants(red.minimal_model).c6);
    const bool split = is_square_in_quadratic_ext(minus_c6, l, qext);
    if (split) return ReductionType::multiplicative(true);
    bool unramified_over_kv = is_unramified_class(minus_c6, l);
    if (ext.type == SplitType::Ramified) unramified_over_kv |= is_unramified_class(minus_c6 * ext.d, l);
    return unramified_over_kv ? ReductionType::multiplicative(false) : ReductionType::additive();
  }

  if (red.type.kind == ReductionKind::Good) return ReductionType::good();
  // Additive over Q_l stays additive over an unramified extension.
  if (ext.type == SplitType::Inert) return ReductionType::additive();
  if (l >= 5) {
    const int e_def = static_cast<int>(semistability_defect(e, l));
    return 2 % e_def == 0 ? ReductionType::good() : ReductionType::additive();
  }
  // Good over a ramified quadratic K_v: inertia acts through an element of
  // order 2 in SL_2, i.e. by -1, so some twist E^c is good with c d unramified.
  for (const auto& c : good_twist_classes(e, l))
    if (is_unramified_class(Rational(c * ext.d), l)) return ReductionType::good();
  return ReductionType::additive();
}

long trace_of_frobenius(const WeierstrassCurve& e_in, const Integer& l) {
  if (!is_prime(l)) throw std::invalid_argument(to_string(l) + " is not prime");
  if (l > kMaxCountingPrime)
    throw std::invalid_argument("point counting bound exceeded: " + to_string(l) + " > " +
                                std::to_string(kMaxCountingPrime));
  const auto e = minimal_model_at(e_in, l);
  const auto inv = invariants(e);
  if (mod(inv.discriminant, l) == 0) throw std::invalid_argument("bad reduction at " + to_string(l));

  const long q = l.get_si();
  auto red = [q](const Integer& x) { return mod(x, q).get_si(); };
  if (q == 2) {
    const long a1 = red(e.a1), a2 = red(e.a2), a3 = red(e.a3), a4 = red(e.a4), a6 = red(e.a6);
    long count = 1;
    for (long x = 0; x < 2; ++x)
      for (long y = 0; y < 2; ++y)
        if ((y * y + a1 * x * y + a3 * y - x * x * x - a2 * x * x - a4 * x - a6) % 2 == 0) ++count;
    return q + 1 - count;
  }
  // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
  std::vector<signed char> chi(static_cast<size_t>(q), -1);
  chi[0] = 0;
  for (long y = 1; y <= q / 2; ++y) chi[static_cast<size_t>((y * y) % q)] = 1;
  const __int128 b2 = red(inv.b2), b4 = red(inv.b4), b6 = red(inv.b6);
  long sum = 0;
  for (long x = 0; x < q; ++x) {
    const __int128 xx = x;
    const __int128 f = ((((4 * xx + b2) % q) * xx % q + 2 * b4) % q * xx + b6) % q;
    sum += chi[static_cast<size_t>(f)];
  }
  return -sum;
}

FrobeniusData frobenius_data(const WeierstrassCurve& e, const Integer& l, const Integer& p) {
  FrobeniusData out;
  out.l = l;
  out.a_l = trace_of_frobenius(e, l);
  const long q = l.get_si();
  out.a_l2 = out.a_l * out.a_l - 2 * q;
  out.ordinary = mod(Integer(out.a_l), l) != 0;
  out.anomalous_l = mod(Integer(q + 1 - out.a_l), p) == 0;
  out.anomalous_l2 = mod(Integer(q) * q + 1 - out.a_l2, p) == 0;
  return out;
}

}  // namespace loccon
