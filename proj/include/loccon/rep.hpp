#pragma once

#include "loccon/arith.hpp"

#include <complex>
#include <string>
#include <vector>

namespace loccon {

/// Element of Z[zeta_m] stored as coefficients on 1, zeta, ..., zeta^(m-1).
/// The representation is not unique; equality reduces modulo Phi_m.
class CyclotomicInteger {
 public:
  CyclotomicInteger() = default;
  CyclotomicInteger(long m, const Integer& constant);
  static CyclotomicInteger zeta_power(long m, long k);

  long level() const { return m_; }
  const std::vector<Integer>& coefficients() const { return c_; }

  CyclotomicInteger operator+(const CyclotomicInteger& o) const;
  CyclotomicInteger operator-(const CyclotomicInteger& o) const;
  CyclotomicInteger operator*(const CyclotomicInteger& o) const;
  CyclotomicInteger operator*(const Integer& k) const;
  /// Complex conjugation zeta -> zeta^-1.
  CyclotomicInteger conj() const;

  /// Coefficients of the reduction modulo Phi_m, of length phi(m).
  std::vector<Integer> reduced() const;
  bool is_integer() const;
  /// Constant term after reduction; throws std::domain_error unless is_integer().
  Integer to_integer() const;
  std::complex<double> to_complex() const;

  bool operator==(const CyclotomicInteger& o) const;

 private:
  long m_ = 1;
  std::vector<Integer> c_{Integer(0)};
};

/// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
std::vector<Integer> cyclotomic_polynomial(long m);

/// D_{2m} = <r, s | r^m = s^2 = 1, s r s = r^-1> with m odd, and the two
/// subgroup types decomposition groups can take: the rotations C_m and an
/// order-2 group {1, s}.
enum class GroupKind { Dihedral, Rotations, Reflection };

struct GroupSpec {
  GroupKind kind = GroupKind::Dihedral;
  long m = 3;

  static GroupSpec dihedral(long m);
  static GroupSpec rotations(long m) { return {GroupKind::Rotations, m}; }
  static GroupSpec reflection(long m) { return {GroupKind::Reflection, m}; }

  long order() const;
  /// Dihedral: identity, rotation classes {r^k, r^-k} for k = 1..(m-1)/2,
  /// then the reflections. Rotations: r^0..r^(m-1). Reflection: 1, s.
  long class_count() const;
  long class_size(long index) const;
  std::string to_string() const;
  bool operator==(const GroupSpec&) const = default;
};

class ClassFunction {
 public:
  ClassFunction(GroupSpec g, std::vector<CyclotomicInteger> values);

  static ClassFunction trivial(const GroupSpec& g);
  /// The sign character of D_{2m} (or of the order-2 group).
  static ClassFunction sign(const GroupSpec& g);
  /// r^k -> zeta^(jk) on C_m.
  static ClassFunction rotation_character(long m, long j);

  const GroupSpec& group() const { return g_; }
  const std::vector<CyclotomicInteger>& values() const { return v_; }
  const CyclotomicInteger& operator[](long cls) const { return v_.at(cls); }
  CyclotomicInteger degree() const { return v_.at(0); }

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction operator*(const Integer& k) const;
  bool operator==(const ClassFunction& o) const;
  bool is_zero() const;

 private:
  GroupSpec g_;
  std::vector<CyclotomicInteger> v_;
};

/// Induction from C_m to D_{2m}. Throws std::invalid_argument unless chi lives
/// on the rotation subgroup of g.
ClassFunction induce(const ClassFunction& chi, const GroupSpec& g);

/// Restriction from D_{2m} to the rotations or to {1, s}. Throws
/// std::invalid_argument for any other source or target.
ClassFunction restrict(const ClassFunction& chi, GroupKind subgroup);

/// (1/|G|) sum chi1(g) conj(chi2(g)). Throws std::invalid_argument on a group
/// mismatch and std::domain_error when the value is not rational.
Rational inner_product(const ClassFunction& a, const ClassFunction& b);

/// Trivial, sign, then induce(rho_j) for j = 1..(m-1)/2.
std::vector<ClassFunction> irreducible_characters(const GroupSpec& dihedral);

}  // namespace loccon
