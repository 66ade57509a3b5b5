#include "loccon/rep.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace loccon {

namespace {

// Exact division of integer polynomials by a monic divisor.
std::vector<Integer> divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
  const size_t dn = den.size() - 1;
  if (num.size() <= dn) return {Integer(0)};
  std::vector<Integer> q(num.size() - dn, 0);
  for (size_t i = num.size(); i-- > dn;) {
    const Integer c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

std::vector<Integer> reduce_mod(std::vector<Integer> a, const std::vector<Integer>& phi) {
  const size_t deg = phi.size() - 1;
  for (size_t i = a.size(); i-- > deg;) {
    const Integer c = a[i];
    if (c == 0) continue;
    for (size_t j = 0; j <= deg; ++j) a[i - deg + j] -= c * phi[j];
  }
  a.resize(deg, 0);
  return a;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(long m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
  static std::mutex mu;
  static std::map<long, std::vector<Integer>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  std::vector<Integer> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (long d = 1; d < m; ++d)
    if (m % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(m, poly);
  return poly;
}

CyclotomicInteger::CyclotomicInteger(long m, const Integer& constant) : m_(m), c_(m, 0) {
  if (m < 1) throw std::invalid_argument("CyclotomicInteger: level must be positive");
  c_[0] = constant;
}

CyclotomicInteger CyclotomicInteger::zeta_power(long m, long k) {
  CyclotomicInteger z(m, 0);
  z.c_[((k % m) + m) % m] = 1;
  return z;
}

static void require_same_level(long a, long b) {
  if (a != b) throw std::invalid_argument("cyclotomic values of different levels");
}

CyclotomicInteger CyclotomicInteger::operator+(const CyclotomicInteger& o) const {
  require_same_level(m_, o.m_);
  CyclotomicInteger r = *this;
  for (long i = 0; i < m_; ++i) r.c_[i] += o.c_[i];
  return r;
}

CyclotomicInteger CyclotomicInteger::operator-(const CyclotomicInteger& o) const {
  require_same_level(m_, o.m_);
  CyclotomicInteger r = *this;
  for (long i = 0; i < m_; ++i) r.c_[i] -= o.c_[i];
  return r;
}

CyclotomicInteger CyclotomicInteger::operator*(const CyclotomicInteger& o) const {
  require_same_level(m_, o.m_);
  CyclotomicInteger r(m_, 0);
  for (long i = 0; i < m_; ++i) {
    if (c_[i] == 0) continue;
    for (long j = 0; j < m_; ++j)
      if (o.c_[j] != 0) r.c_[(i + j) % m_] += c_[i] * o.c_[j];
  }
  return r;
}

CyclotomicInteger CyclotomicInteger::operator*(const Integer& k) const {
  CyclotomicInteger r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

CyclotomicInteger CyclotomicInteger::conj() const {
  CyclotomicInteger r(m_, 0);
  for (long i = 0; i < m_; ++i) r.c_[(m_ - i) % m_] = c_[i];
  return r;
}

std::vector<Integer> CyclotomicInteger::reduced() const { return reduce_mod(c_, cyclotomic_polynomial(m_)); }

bool CyclotomicInteger::is_integer() const {
  const auto r = reduced();
  for (size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) return false;
  return true;
}

Integer CyclotomicInteger::to_integer() const {
  if (!is_integer()) throw std::domain_error("cyclotomic value is not an integer");
  const auto r = reduced();
  return r.empty() ? Integer(0) : r[0];
}

std::complex<double> CyclotomicInteger::to_complex() const {
  std::complex<double> z = 0;
  for (long i = 0; i < m_; ++i)
    if (c_[i] != 0) z += c_[i].get_d() * std::polar(1.0, 2 * std::numbers::pi * i / m_);
  return z;
}

bool CyclotomicInteger::operator==(const CyclotomicInteger& o) const {
  return m_ == o.m_ && (*this - o).reduced() == std::vector<Integer>(reduced().size(), 0);
}

GroupSpec GroupSpec::dihedral(long m) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("dihedral group needs an odd rotation order >= 3");
  return {GroupKind::Dihedral, m};
}

long GroupSpec::order() const {
  switch (kind) {
    case GroupKind::Dihedral: return 2 * m;
    case GroupKind::Rotations: return m;
    case GroupKind::Reflection: return 2;
  }
  return 0;
}

long GroupSpec::class_count() const {
  switch (kind) {
    case GroupKind::Dihedral: return (m + 3) / 2;
    case GroupKind::Rotations: return m;
    case GroupKind::Reflection: return 2;
  }
  return 0;
}

long GroupSpec::class_size(long index) const {
  if (index < 0 || index >= class_count()) throw std::out_of_range("class index");
  if (kind != GroupKind::Dihedral || index == 0) return 1;
  return index == class_count() - 1 ? m : 2;
}

std::string GroupSpec::to_string() const {
  switch (kind) {
    case GroupKind::Dihedral: return "D" + std::to_string(2 * m);
    case GroupKind::Rotations: return "C" + std::to_string(m);
    case GroupKind::Reflection: return "C2 in D" + std::to_string(2 * m);
  }
  return "?";
}

ClassFunction::ClassFunction(GroupSpec g, std::vector<CyclotomicInteger> values) : g_(g), v_(std::move(values)) {
  if (static_cast<long>(v_.size()) != g_.class_count())
    throw std::invalid_argument("class function on " + g_.to_string() + " needs " +
                                std::to_string(g_.class_count()) + " values");
  for (const auto& x : v_)
    if (x.level() != g_.m) throw std::invalid_argument("class function values must lie in Q(zeta_m)");
}

ClassFunction ClassFunction::trivial(const GroupSpec& g) {
  return ClassFunction(g, std::vector<CyclotomicInteger>(g.class_count(), CyclotomicInteger(g.m, 1)));
}

ClassFunction ClassFunction::sign(const GroupSpec& g) {
  if (g.kind == GroupKind::Rotations) throw std::invalid_argument("the rotation group has no sign character");
  auto v = std::vector<CyclotomicInteger>(g.class_count(), CyclotomicInteger(g.m, 1));
  v.back() = CyclotomicInteger(g.m, -1);
  return ClassFunction(g, v);
}

ClassFunction ClassFunction::rotation_character(long m, long j) {
  std::vector<CyclotomicInteger> v;
  for (long k = 0; k < m; ++k) v.push_back(CyclotomicInteger::zeta_power(m, j * k));
  return ClassFunction(GroupSpec::rotations(m), v);
}

static void require_same_group(const ClassFunction& a, const ClassFunction& b) {
  if (!(a.group() == b.group()))
    throw std::invalid_argument("class functions on " + a.group().to_string() + " and " + b.group().to_string());
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  require_same_group(*this, o);
  auto v = v_;
  for (size_t i = 0; i < v.size(); ++i) v[i] = v[i] + o.v_[i];
  return ClassFunction(g_, v);
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  require_same_group(*this, o);
  auto v = v_;
  for (size_t i = 0; i < v.size(); ++i) v[i] = v[i] - o.v_[i];
  return ClassFunction(g_, v);
}

ClassFunction ClassFunction::operator*(const Integer& k) const {
  auto v = v_;
  for (auto& x : v) x = x * k;
  return ClassFunction(g_, v);
}

bool ClassFunction::operator==(const ClassFunction& o) const { return g_ == o.g_ && v_ == o.v_; }

bool ClassFunction::is_zero() const { return *this == trivial(g_) * 0; }

ClassFunction induce(const ClassFunction& chi, const GroupSpec& g) {
  if (g.kind != GroupKind::Dihedral) throw std::invalid_argument("induce: target must be a dihedral group");
  if (!(chi.group() == GroupSpec::rotations(g.m)))
    throw std::invalid_argument("induce: " + chi.group().to_string() + " is not the rotation subgroup of " +
                                g.to_string());
  std::vector<CyclotomicInteger> v;
  v.push_back(chi[0] * 2);
  for (long k = 1; k <= (g.m - 1) / 2; ++k) v.push_back(chi[k] + chi[g.m - k]);
  v.push_back(CyclotomicInteger(g.m, 0));
  return ClassFunction(g, v);
}

ClassFunction restrict(const ClassFunction& chi, GroupKind subgroup) {
  const GroupSpec& g = chi.group();
  if (g.kind != GroupKind::Dihedral) throw std::invalid_argument("restrict: source must be a dihedral group");
  if (subgroup == GroupKind::Rotations) {
    std::vector<CyclotomicInteger> v;
    for (long k = 0; k < g.m; ++k) {
      const long r = std::min(k, g.m - k);
      v.push_back(chi[r]);
    }
    return ClassFunction(GroupSpec::rotations(g.m), v);
  }
  if (subgroup == GroupKind::Reflection) return ClassFunction(GroupSpec::reflection(g.m), {chi[0], chi.values().back()});
  throw std::invalid_argument("restrict: unsupported subgroup");
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  const GroupSpec& g = a.group();
  CyclotomicInteger sum(g.m, 0);
  for (long i = 0; i < g.class_count(); ++i) sum = sum + (a[i] * b[i].conj()) * Integer(g.class_size(i));
  if (!sum.is_integer()) throw std::domain_error("inner product is not rational");
  return make_rational(sum.to_integer(), g.order());
}

std::vector<ClassFunction> irreducible_characters(const GroupSpec& dihedral) {
  if (dihedral.kind != GroupKind::Dihedral) throw std::invalid_argument("irreducible_characters: dihedral group expected");
  std::vector<ClassFunction> out{ClassFunction::trivial(dihedral), ClassFunction::sign(dihedral)};
  for (long j = 1; j <= (dihedral.m - 1) / 2; ++j)
    out.push_back(induce(ClassFunction::rotation_character(dihedral.m, j), dihedral));
  return out;
}

}  // namespace loccon
