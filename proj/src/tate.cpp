// Tate's algorithm, run only as far as needed to decide the reduction
// trichotomy and l-minimality. Once a Kodaira type is reached the model is
// minimal, so the I_n* subprocedure is never entered.

#include "loccon/curve.hpp"
#include "tate_internal.hpp"

#include <climits>

namespace loccon::detail {

namespace {

long val(const Integer& x, const Integer& l) { return x == 0 ? LONG_MAX : padic_valuation(x, l); }

bool divides(const Integer& l_pow, const Integer& x) { return mod(x, l_pow) == 0; }

Integer power(const Integer& l, unsigned long k) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), l.get_mpz_t(), k);
  return r;
}

WeierstrassCurve singular_point_to_origin(const WeierstrassCurve& e, const CurveInvariants& inv,
                                          const Integer& l) {
  Integer r, t;
  if (l <= 3) {
    const long lp = l.get_si();
    bool found = false;
    for (long x = 0; x < lp && !found; ++x) {
      for (long y = 0; y < lp && !found; ++y) {
        const Integer f = y * y + e.a1 * x * y + e.a3 * y - x * x * x - e.a2 * x * x - e.a4 * x - e.a6;
        const Integer fx = e.a1 * y - 3 * x * x - 2 * e.a2 * x - e.a4;
        const Integer fy = 2 * y + e.a1 * x + e.a3;
        if (mod(f, l) == 0 && mod(fx, l) == 0 && mod(fy, l) == 0) {
          r = x;
          t = y;
          found = true;
        }
      }
    }
    if (!found) throw std::logic_error("no singular point mod " + to_string(l));
  } else {
    if (divides(l, inv.c4)) {
      r = mod(-inverse_mod(12, l) * inv.b2, l);
    } else {
      r = mod(-inverse_mod(12 * inv.c4, l) * (inv.c6 + inv.b2 * inv.c4), l);
    }
    t = mod(-inverse_mod(2, l) * (e.a1 * r + e.a3), l);
  }
  return change_coordinates(e, r, 0, t);
}

// After steps 3-5 fail: arrange l | a1, a2; l^2 | a3, a4; l^3 | a6.
WeierstrassCurve normalize_step6(const WeierstrassCurve& e, const Integer& l) {
  const Integer l2 = l * l, l3 = l2 * l;
  auto ok = [&](const WeierstrassCurve& c) {
    return divides(l, c.a1) && divides(l, c.a2) && divides(l2, c.a3) && divides(l2, c.a4) &&
           divides(l3, c.a6);
  };
  if (l > 3) {
    const Integer inv2 = inverse_mod(2, l2);
    auto c = change_coordinates(e, 0, mod(-e.a1 * inv2, l), mod(-e.a3 * inv2, l2));
    if (!ok(c)) throw std::logic_error("step 6 normalization failed at " + to_string(l));
    return c;
  }
  const long lp = l.get_si();
  for (long r = 0; r < lp; ++r)
    for (long s = 0; s < lp; ++s)
      for (long t = 0; t < lp; ++t) {
        auto c = change_coordinates(e, l * r, s, l * t);
        if (ok(c)) return c;
      }
  throw std::logic_error("step 6 normalization failed at " + to_string(l));
}

}  // namespace

TateOutcome run_tate(const WeierstrassCurve& input, const Integer& l) {
  WeierstrassCurve cur = input;
  for (;;) {
    auto inv = invariants(cur);
    if (val(inv.discriminant, l) == 0) return {cur, ReductionKind::Good};

    cur = singular_point_to_origin(cur, inv, l);
    inv = invariants(cur);
    if (!divides(l, cur.a3) || !divides(l, cur.a4) || !divides(l, cur.a6))
      throw std::logic_error("singular point not moved to origin at " + to_string(l));

    if (!divides(l, inv.b2)) return {cur, ReductionKind::Multiplicative};
    if (val(cur.a6, l) < 2) return {cur, ReductionKind::Additive};  // II
    if (val(inv.b8, l) < 3) return {cur, ReductionKind::Additive};  // III
    if (val(inv.b6, l) < 3) return {cur, ReductionKind::Additive};  // IV

    cur = normalize_step6(cur, l);
    const Integer l2 = l * l, l3 = l2 * l;
    const Integer b = cur.a2 / l, c = cur.a4 / l2, d = cur.a6 / l3;
    const Integer disc = b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d;
    if (!divides(l, disc)) return {cur, ReductionKind::Additive};  // I0*

    // Multiple root of T^3 + b T^2 + c T + d mod l; triple iff 3 alpha + b = 0.
    Integer alpha;
    bool triple = false;
    if (l <= 3) {
      const long lp = l.get_si();
      bool found = false;
      for (long a = 0; a < lp && !found; ++a) {
        const Integer pa = a * a * a + b * a * a + c * a + d;
        const Integer dpa = 3 * a * a + 2 * b * a + c;
        if (mod(pa, l) == 0 && mod(dpa, l) == 0) {
          alpha = a;
          found = true;
          triple = mod(3 * a + b, l) == 0;
        }
      }
      if (!found) throw std::logic_error("no multiple root at " + to_string(l));
    } else {
      triple = divides(l, b * b - 3 * c);
      alpha = mod(-b * inverse_mod(3, l), l);
    }
    if (!triple) return {cur, ReductionKind::Additive};  // I_n*

    cur = change_coordinates(cur, l * alpha, 0, 0);
    const Integer l4 = l3 * l;
    if (!divides(l2, cur.a2) || !divides(l3, cur.a4) || !divides(l4, cur.a6))
      throw std::logic_error("triple root translation failed at " + to_string(l));
    const Integer a32 = cur.a3 / l2, a64 = cur.a6 / l4;
    if (l == 2 ? mod(a32, 2) != 0 : !divides(l, a32 * a32 + 4 * a64))
      return {cur, ReductionKind::Additive};  // IV*

    const Integer beta = l == 2 ? mod(a64, 2) : mod(-a32 * inverse_mod(2, l), l);
    cur = change_coordinates(cur, 0, 0, l2 * beta);
    if (!divides(l3, cur.a3) || !divides(l4 * l, cur.a6))
      throw std::logic_error("double root translation failed at " + to_string(l));
    if (val(cur.a4, l) < 4) return {cur, ReductionKind::Additive};  // III*
    if (val(cur.a6, l) < 6) return {cur, ReductionKind::Additive};  // II*

    cur = WeierstrassCurve{cur.a1 / l, cur.a2 / l2, cur.a3 / l3, cur.a4 / l4, cur.a6 / power(l, 6)};
  }
}

}  // namespace loccon::detail
