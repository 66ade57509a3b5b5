#include "loccon/tower.hpp"

#include <algorithm>
#include <tuple>

namespace loccon {

Integer QuadraticFieldSpec::discriminant() const {
  const Integer r = mod(d, 4);
  return r == 1 ? d : Integer(4 * d);
}

PrimeSite PrimeSite::conjugate() const {
  PrimeSite c = *this;
  if (which == Conjugate::First) c.which = Conjugate::Second;
  else if (which == Conjugate::Second) c.which = Conjugate::First;
  return c;
}

std::string PrimeSite::label() const {
  std::string s = "v" + loccon::to_string(l);
  if (which == Conjugate::Second) s += "'";
  return s;
}

bool PrimeSite::operator<(const PrimeSite& o) const {
  if (l != o.l) return l < o.l;
  return std::tie(split_type, which) < std::tie(o.split_type, o.which);
}

Integer TowerSpec::degree() const {
  Integer out = 1;
  for (int i = 0; i < n; ++i) out *= p;
  return out;
}

bool TowerSpec::ramified_in_L(const PrimeSite& v) const {
  return std::find(ramified_sites.begin(), ramified_sites.end(), v) != ramified_sites.end();
}

const SiteOverrides* TowerSpec::overrides_for(const PrimeSite& v) const {
  auto it = overrides.find(v);
  return it == overrides.end() ? nullptr : &it->second;
}

SplitType split_type(const Integer& l, const QuadraticFieldSpec& K) {
  const int k = kronecker_symbol(K.discriminant(), l);
  if (k == 0) return SplitType::Ramified;
  return k == 1 ? SplitType::Split : SplitType::Inert;
}

std::vector<PrimeSite> sites_above(const Integer& l, const QuadraticFieldSpec& K) {
  const SplitType t = split_type(l, K);
  if (t == SplitType::Split) return {PrimeSite{l, t, Conjugate::First}, PrimeSite{l, t, Conjugate::Second}};
  return {PrimeSite{l, t, Conjugate::Self}};
}

LocalExtension local_extension(const PrimeSite& v, const QuadraticFieldSpec& K) {
  return LocalExtension{v.split_type, v.split_type == SplitType::Ramified ? K.d : Integer(0)};
}

std::string to_string(TowerRule r) {
  switch (r) {
    case TowerRule::PrimeAboveThree: return "prime-above-three";
    case TowerRule::SquarefreeRadicand: return "squarefree-radicand";
    case TowerRule::ConjugationClosed: return "conjugation-closed";
    case TowerRule::RamifiedInBothAboveP: return "ramified-in-both-above-p";
    case TowerRule::NonsingularCurve: return "nonsingular-curve";
    case TowerRule::SiteConsistency: return "site-consistency";
  }
  return "?";
}

namespace {

const char* citation(TowerRule r) {
  switch (r) {
    case TowerRule::PrimeAboveThree:
      return "setting: a rational prime p > 3 is fixed and rho has order p^n, n >= 1";
    case TowerRule::SquarefreeRadicand:
      return "setting: K = Q(sqrt d) is a quadratic field";
    case TowerRule::ConjugationClosed:
      return "setting: the tower Q < K < L is dihedral, so the ramification of L/K is stable under Gal(K/Q)";
    case TowerRule::RamifiedInBothAboveP:
      return "local setting: for v not dividing p ramified in L/K, K_v/Q_l is unramified, since L/Q is dihedral "
             "with an inertia group of p-power order inside the rotation subgroup";
    case TowerRule::NonsingularCurve:
      return "setting: E is an elliptic curve over Q";
    case TowerRule::SiteConsistency:
      return "sites: the primes of K above l are determined by the splitting of l in K";
  }
  return "";
}

void add(std::vector<Violation>& out, TowerRule r, std::string msg) {
  out.push_back(Violation{r, std::move(msg), citation(r)});
}

}  // namespace

std::vector<Violation> validate_tower(const TowerSpec& tower, const WeierstrassCurve& e) {
  auto out = validate_tower(tower);
  try {
    invariants(e);
  } catch (const SingularCurveError&) {
    add(out, TowerRule::NonsingularCurve, "the model " + e.to_string() + " has discriminant 0");
  }
  return out;
}

std::vector<Violation> validate_tower(const TowerSpec& tower) {
  std::vector<Violation> out;

  if (!is_prime(tower.p)) add(out, TowerRule::PrimeAboveThree, "p = " + to_string(tower.p) + " is not prime");
  else if (tower.p <= 3) add(out, TowerRule::PrimeAboveThree, "p = " + to_string(tower.p) + ": p > 3 required");
  if (tower.n < 1) add(out, TowerRule::PrimeAboveThree, "n = " + std::to_string(tower.n) + " must be at least 1");

  const Integer& d = tower.K.d;
  const bool field_ok = d != 0 && d != 1 && is_squarefree(d);
  if (!field_ok) add(out, TowerRule::SquarefreeRadicand, "d = " + to_string(d) + " is not a squarefree integer other than 0, 1");

  for (const auto& v : tower.ramified_sites) {
    if (v.split_type == SplitType::Split && !tower.ramified_in_L(v.conjugate()))
      add(out, TowerRule::ConjugationClosed,
          v.label() + " is ramified in L/K but its conjugate " + v.conjugate().label() + " is not");
  }

  for (const auto& v : tower.ramified_sites) {
    if (v.split_type == SplitType::Ramified && v.l != tower.p)
      add(out, TowerRule::RamifiedInBothAboveP,
          v.label() + " is ramified in K/Q and in L/K but does not lie above p = " + to_string(tower.p));
  }

  for (const auto& v : tower.ramified_sites) {
    if (v.l < 2 || !is_prime(v.l)) {
      add(out, TowerRule::SiteConsistency, v.label() + " does not lie above a rational prime");
      continue;
    }
    if (!field_ok) continue;
    const SplitType actual = split_type(v.l, tower.K);
    const bool which_ok = (actual == SplitType::Split) == (v.which != Conjugate::Self);
    if (actual != v.split_type || !which_ok)
      add(out, TowerRule::SiteConsistency,
          v.label() + " is declared " + to_string(v.split_type) + " but " + to_string(v.l) + " is " +
              to_string(actual) + " in Q(sqrt " + to_string(d) + ")");
  }
  return out;
}

}  // namespace loccon
