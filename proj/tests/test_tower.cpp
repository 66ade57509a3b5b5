#include "doctest.h"
#include "loccon/tower.hpp"
#include "oracles.hpp"

#include <random>

using namespace loccon;

namespace {

const WeierstrassCurve k11a1{0, -1, 1, -10, -20};

TowerSpec tower_11a1() {
  TowerSpec t;
  t.K = {-1};
  t.p = 5;
  t.n = 1;
  t.ramified_sites = {PrimeSite{11, SplitType::Inert, Conjugate::Self}};
  return t;
}

bool has_rule(const std::vector<Violation>& vs, TowerRule r) {
  for (const auto& v : vs)
    if (v.rule == r) return true;
  return false;
}

}  // namespace

TEST_CASE("split_type examples") {
  CHECK(split_type(5, {-1}) == SplitType::Split);
  CHECK(split_type(11, {-1}) == SplitType::Inert);
  CHECK(split_type(2, {-1}) == SplitType::Ramified);
  // 2 in Q(sqrt d), d = 1 mod 4, follows d mod 8
  CHECK(split_type(2, {-7}) == SplitType::Split);
  CHECK(split_type(2, {5}) == SplitType::Inert);
  CHECK(split_type(2, {3}) == SplitType::Ramified);
  CHECK(split_type(3, {-3}) == SplitType::Ramified);
}

TEST_CASE("sites_above examples") {
  const auto s5 = sites_above(5, {-1});
  REQUIRE(s5.size() == 2);
  CHECK(s5[0].which == Conjugate::First);
  CHECK(s5[1] == s5[0].conjugate());
  CHECK_FALSE(s5[0].self_conjugate());
  CHECK(s5[0].label() == "v5");
  CHECK(s5[1].label() == "v5'");
  const auto s11 = sites_above(11, {-1});
  REQUIRE(s11.size() == 1);
  CHECK(s11[0].self_conjugate());
  const auto s2 = sites_above(2, {-1});
  REQUIRE(s2.size() == 1);
  CHECK(s2[0].self_conjugate());
  CHECK(s2[0].split_type == SplitType::Ramified);
}

TEST_CASE("split_type agrees with root finding of x^2 - d") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> dist(-500, 500);
  int tested = 0;
  while (tested < 300) {
    const long d = dist(rng);
    if (d == 0 || d == 1 || !is_squarefree(d)) continue;
    ++tested;
    const QuadraticFieldSpec K{d};
    for (long l : oracle::small_primes(60)) {
      const SplitType t = split_type(l, K);
      for (const auto& s : sites_above(l, K)) CHECK(s.split_type == t);
      if (l == 2) {
        const long r = oracle::positive_mod(d, 8);
        const SplitType expected = (r % 4 != 1) ? SplitType::Ramified : (r == 1 ? SplitType::Split : SplitType::Inert);
        CHECK(t == expected);
        continue;
      }
      const long dm = oracle::positive_mod(d, l);
      int roots = 0;
      for (long x = 0; x < l; ++x)
        if ((x * x - dm) % l == 0) ++roots;
      const SplitType expected = dm == 0 ? SplitType::Ramified : (roots == 2 ? SplitType::Split : SplitType::Inert);
      CHECK(t == expected);
    }
  }
}

TEST_CASE("validate_tower: the 11a1 tower is valid") {
  CHECK(validate_tower(tower_11a1(), k11a1).empty());
}

TEST_CASE("validate_tower: v2 ramified in both layers is rejected") {
  auto t = tower_11a1();
  t.ramified_sites = {PrimeSite{2, SplitType::Ramified, Conjugate::Self}};
  const auto vs = validate_tower(t, k11a1);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].rule == TowerRule::RamifiedInBothAboveP);
  CHECK_FALSE(vs[0].citation.empty());
  CHECK(vs[0].message.find("v2") != std::string::npos);
}

TEST_CASE("validate_tower: p = 3 is rejected") {
  auto t = tower_11a1();
  t.p = 3;
  const auto vs = validate_tower(t, k11a1);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].rule == TowerRule::PrimeAboveThree);
  t.p = 9;
  CHECK(has_rule(validate_tower(t, k11a1), TowerRule::PrimeAboveThree));
  t.p = 7;
  t.n = 0;
  CHECK(has_rule(validate_tower(t, k11a1), TowerRule::PrimeAboveThree));
}

TEST_CASE("validate_tower reports every violation") {
  TowerSpec t;
  t.K = {12};
  t.p = 2;
  t.n = 1;
  t.ramified_sites = {PrimeSite{13, SplitType::Split, Conjugate::First}};
  const WeierstrassCurve singular{0, 0, 0, 0, 0};
  const auto vs = validate_tower(t, singular);
  CHECK(has_rule(vs, TowerRule::PrimeAboveThree));
  CHECK(has_rule(vs, TowerRule::SquarefreeRadicand));
  CHECK(has_rule(vs, TowerRule::ConjugationClosed));
  CHECK(has_rule(vs, TowerRule::NonsingularCurve));
  for (const auto& v : vs) CHECK_FALSE(v.citation.empty());
}

TEST_CASE("validate_tower: split pairs must be closed and sites must match the field") {
  auto t = tower_11a1();
  t.ramified_sites = {PrimeSite{5, SplitType::Split, Conjugate::First}};
  CHECK(has_rule(validate_tower(t, k11a1), TowerRule::ConjugationClosed));
  t.ramified_sites.push_back(PrimeSite{5, SplitType::Split, Conjugate::Second});
  CHECK(validate_tower(t, k11a1).empty());
  t.ramified_sites = {PrimeSite{13, SplitType::Inert, Conjugate::Self}};
  CHECK(has_rule(validate_tower(t, k11a1), TowerRule::SiteConsistency));
  t.ramified_sites = {PrimeSite{7, SplitType::Inert, Conjugate::Self}};
  CHECK(validate_tower(t, k11a1).empty());
  // a ramified site above p is allowed
  t.K = {5};
  t.ramified_sites = {PrimeSite{5, SplitType::Ramified, Conjugate::Self}};
  CHECK(validate_tower(t, k11a1).empty());
}

TEST_CASE("validate_tower is monotone under adding violating sites") {
  std::mt19937_64 rng(5);
  const std::vector<long> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23};
  std::uniform_int_distribution<size_t> pick(0, primes.size() - 1);
  for (long d : {-1L, 2L, -7L, 5L, 13L}) {
    const QuadraticFieldSpec K{d};
    for (int trial = 0; trial < 40; ++trial) {
      TowerSpec t;
      t.K = K;
      t.p = 5;
      std::vector<Violation> before = validate_tower(t, k11a1);
      for (int step = 0; step < 4; ++step) {
        // a site that violates a per-site rule on its own: ramified in K away
        // from p, or declared with the wrong splitting
        const long l = primes[pick(rng)];
        const SplitType declared = static_cast<SplitType>(rng() % 3);
        const PrimeSite s{l, declared, declared == SplitType::Split ? Conjugate::First : Conjugate::Self};
        const bool violating = (declared == SplitType::Ramified && l != 5) || declared != split_type(l, K);
        if (!violating) continue;
        t.ramified_sites.push_back(s);
        const auto after = validate_tower(t, k11a1);
        for (const auto& v : before) {
          bool kept = false;
          for (const auto& w : after)
            if (w.rule == v.rule && w.message == v.message) kept = true;
          CHECK(kept);
        }
        before = after;
      }
    }
  }
}
