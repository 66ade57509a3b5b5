#include "loccon/arith.hpp"

#include <algorithm>

namespace loccon {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Integer mod(const Integer& x, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw ArithmeticError(to_string(a) + " is not invertible modulo " + to_string(m));
  return r;
}

namespace {

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const Integer& v) { return mod(v * v + c, n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mod(q * abs(x - y), n);
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(Integer n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer f = pollard_brent(n);
  factor_into(f, out);
  factor_into(n / f, out);
}

}  // namespace

std::vector<Integer> prime_factors(const Integer& n_in) {
  if (n_in == 0) throw ArithmeticError("prime_factors of zero");
  Integer n = abs(n_in);
  std::vector<Integer> out;
  for (unsigned long p = 2; p < 10000 && Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.emplace_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
    }
  }
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  for (const auto& p : prime_factors(n))
    if (padic_valuation(n, p) > 1) return false;
  return true;
}

long padic_valuation(const Integer& x, const Integer& l) {
  if (x == 0) throw ArithmeticError("valuation of zero is undefined");
  if (l < 2) throw ArithmeticError("valuation at non-prime " + to_string(l));
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), l.get_mpz_t()));
}

long padic_valuation(const Rational& x, const Integer& l) {
  if (x == 0) throw ArithmeticError("valuation of zero is undefined");
  return padic_valuation(x.get_num(), l) - padic_valuation(x.get_den(), l);
}

Integer prime_to_part(const Integer& x, const Integer& l) {
  if (x == 0) return 0;
  Integer rest;
  mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), l.get_mpz_t());
  return rest;
}

int kronecker_symbol(const Integer& a, const Integer& n) {
  if (n == 0) throw ArithmeticError("Kronecker symbol with n = 0");
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

long smallest_nonresidue(const Integer& l) {
  for (long a = 2;; ++a)
    if (kronecker_symbol(a, l) == -1) return a;
}

Integer LocalSquareVerdict::representative(const Integer& l) const {
  Integer r = unit_class;
  if (valuation_parity) r *= l;
  return r;
}

LocalSquareVerdict local_square_class(const Rational& z, const Integer& l) {
  if (z == 0) throw ArithmeticError("square class of zero");
  const long v = padic_valuation(z, l);
  // Unit part num'/den' has the same class as num' * den'.
  const Integer unit = prime_to_part(z.get_num(), l) * prime_to_part(z.get_den(), l);
  LocalSquareVerdict out;
  out.valuation_parity = static_cast<int>(((v % 2) + 2) % 2);
  if (l == 2) {
    out.unit_class = mod(unit, 8).get_si();
  } else {
    out.unit_class = kronecker_symbol(unit, l) == 1 ? 1 : smallest_nonresidue(l);
  }
  out.is_square = out.valuation_parity == 0 && out.unit_class == 1;
  return out;
}

bool is_local_square(const Rational& z, const Integer& l) { return local_square_class(z, l).is_square; }

bool is_unramified_class(const Rational& z, const Integer& l) {
  const auto c = local_square_class(z, l);
  if (c.valuation_parity != 0) return false;
  if (l == 2) return c.unit_class % 4 == 1;
  return true;
}

Integer radicand(const QuadraticExt& ext, const Integer& l) {
  if (ext.kind == QuadraticExt::Kind::Ramified) return ext.d;
  return l == 2 ? Integer(5) : Integer(smallest_nonresidue(l));
}

bool is_square_in_quadratic_ext(const Rational& z, const Integer& l, const QuadraticExt& ext) {
  if (z == 0) throw ArithmeticError("square test of zero");
  if (ext.kind == QuadraticExt::Kind::Ramified &&
      (ext.d == 0 || is_unramified_class(Rational(ext.d), l)))
    throw std::invalid_argument("Q_" + to_string(l) + "(sqrt " + to_string(ext.d) +
                                ") is not a ramified quadratic extension");
  const Rational d(radicand(ext, l));
  return is_local_square(z, l) || is_local_square(z * d, l);
}

std::string to_string(const Integer& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace loccon
