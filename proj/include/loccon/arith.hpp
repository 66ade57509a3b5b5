#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace loccon {

using Integer = mpz_class;
/// Always canonical: positive denominator, coprime to the numerator.
using Rational = mpq_class;

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

Rational make_rational(const Integer& num, const Integer& den);

bool is_prime(const Integer& n);
bool is_squarefree(const Integer& n);

/// Distinct prime divisors of |n| in ascending order. n must be nonzero.
std::vector<Integer> prime_factors(const Integer& n);

/// v_l(x). Throws ArithmeticError for x = 0.
long padic_valuation(const Integer& x, const Integer& l);
long padic_valuation(const Rational& x, const Integer& l);

/// x with all factors of l removed (sign kept).
Integer prime_to_part(const Integer& x, const Integer& l);

/// Kronecker symbol (a|n), n != 0.
int kronecker_symbol(const Integer& a, const Integer& n);

/// Nonnegative residue of x modulo m (m > 0).
Integer mod(const Integer& x, const Integer& m);

/// Inverse of a modulo m; throws if not invertible.
Integer inverse_mod(const Integer& a, const Integer& m);

// Square classes of Q_l^x.
//
// A class is identified by the parity of the valuation together with the
// class of the unit part: for odd l the unit part is either a residue
// (tag 1) or a non-residue (tag = smallest non-residue mod l); for l = 2 the
// unit part is taken mod 8 (tag 1, 3, 5 or 7).
struct LocalSquareVerdict {
  bool is_square = false;
  int valuation_parity = 0;
  long unit_class = 1;

  /// Canonical representative l^parity * unit_class of the class.
  Integer representative(const Integer& l) const;
  bool operator==(const LocalSquareVerdict&) const = default;
};

LocalSquareVerdict local_square_class(const Rational& z, const Integer& l);

bool is_local_square(const Rational& z, const Integer& l);

/// True iff Q_l(sqrt z) / Q_l is unramified (including the trivial case z a square).
bool is_unramified_class(const Rational& z, const Integer& l);

/// Smallest positive non-residue modulo an odd prime.
long smallest_nonresidue(const Integer& l);

/// The quadratic extension of Q_l a square test is performed in.
struct QuadraticExt {
  enum class Kind { Unramified, Ramified };
  Kind kind = Kind::Unramified;
  Integer d = 0;  // radicand; used only when kind == Ramified

  static QuadraticExt unramified() { return {Kind::Unramified, 0}; }
  static QuadraticExt ramified(Integer d) { return {Kind::Ramified, std::move(d)}; }
};

/// Radicand generating the extension: d itself or the standard unramified one
/// (smallest non-residue for odd l, 5 for l = 2).
Integer radicand(const QuadraticExt& ext, const Integer& l);

/// z in (K^x)^2 for K = Q_l(sqrt d). Uses Q_l^x ∩ K^x^2 = Q_l^x^2 ∪ d Q_l^x^2.
/// Throws std::invalid_argument when a Ramified radicand does not ramify at l.
bool is_square_in_quadratic_ext(const Rational& z, const Integer& l, const QuadraticExt& ext);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

}  // namespace loccon
