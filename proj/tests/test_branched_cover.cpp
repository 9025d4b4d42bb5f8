#include <doctest.h>

#include <random>

#include "covercalc/branched_cover.hpp"
#include "covercalc/error.hpp"
#include "oracles.hpp"

using namespace covercalc;

namespace {

const Knot& knot(const char* name) { return bundled_table().at(name); }

PrimeSet set_of(std::initializer_list<unsigned long> xs) {
  std::vector<mpz_class> v;
  for (auto x : xs) v.emplace_back(x);
  return PrimeSet(v);
}

}  // namespace

TEST_CASE("fox_order examples") {
  CHECK(fox_order(knot("3_1"), 2).order == 3);
  const std::vector<long> trefoil{3, 4, 3, 1, 0};
  for (std::uint64_t n = 2; n <= 6; ++n) {
    const CoverOrder o = fox_order(knot("3_1"), n);
    CHECK(o.order == trefoil[n - 2]);
    CHECK(o.order == abs(resultant_sylvester(IntPoly::t_pow_minus_one(n), tilde(knot("3_1").alexander))));
  }
  CHECK(fox_order(knot("3_1"), 6).infinite());
  CHECK(fox_order(knot("unknot"), 17).order == 1);
  CHECK_THROWS_AS(fox_order(knot("3_1"), 0), DomainError);
}

TEST_CASE("fox_order for n = 2 is the determinant |Delta(-1)|") {
  for (const Knot& k : bundled_table().entries()) {
    const mpz_class det = abs(eval_at(tilde(k.alexander), 1) * eval_at(tilde(k.alexander), -1));
    CHECK(fox_order(k, 2).order == det);
  }
}

TEST_CASE("fox_order regression against an external oracle") {
  // Computed independently (sympy resultant of t^n - 1 and tilde Delta).
  CHECK(fox_order(knot("4_1"), 10).order == 15125);
  CHECK(fox_order(knot("5_1"), 10).order == 0);
  CHECK(fox_order(knot("5_2"), 20).order == 2751903);
  CHECK(fox_order(knot("6_2"), 20).order == 16265216);
  CHECK(fox_order(knot("6_3"), 15).order == 12054784);
  CHECK(fox_order(knot("3_1#6_1"), 20).order == mpz_class("3298528591875"));
}

TEST_CASE("infinite order exactly when tilde Delta shares a root with t^n - 1") {
  for (const Knot& k : bundled_table().entries()) {
    for (std::uint64_t n = 1; n <= 30; ++n) {
      const bool shares = gcd(IntPoly::t_pow_minus_one(n), tilde(k.alexander)).degree() > 0;
      CHECK(fox_order(k, n).infinite() == shares);
    }
  }
}

TEST_CASE("fox_order(K, 1) = 1") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto a = AlexanderPoly::from_symmetric(covercalc::testing::random_alexander_coeffs(rng, 5, 9));
    CHECK(fox_order(a, 1).order == 1);
  }
}

TEST_CASE("is_zp_homology_sphere examples") {
  CHECK(is_zp_homology_sphere(knot("3_1"), 2, 2));
  CHECK_FALSE(is_zp_homology_sphere(knot("3_1"), 3, 2));
  CHECK_FALSE(is_zp_homology_sphere(knot("4_1"), 3, 2));
  CHECK_FALSE(is_zp_homology_sphere(knot("3_1"), 6, 5));  // infinite H_1
  CHECK(is_zp_homology_sphere(knot("unknot"), 100, 2));
  CHECK_THROWS_AS(is_zp_homology_sphere(knot("3_1"), 2, 4), DomainError);
}

TEST_CASE("gcd criterion agrees with divisibility of the Fox order") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 150; ++i) {
    const auto a = AlexanderPoly::from_symmetric(covercalc::testing::random_alexander_coeffs(rng, 4, 8));
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
      for (std::uint64_t n = 1; n <= 24; ++n) {
        const CoverOrder o = fox_order(a, n);
        const bool via_order = !o.infinite() && !mpz_divisible_ui_p(o.order.get_mpz_t(), p);
        CHECK(is_zp_homology_sphere(a, n, p) == via_order);
      }
    }
  }
}

TEST_CASE("skp_set examples") {
  CHECK(skp_set(knot("3_1"), 2) == set_of({3}));
  CHECK(skp_set(knot("4_1"), 3) == set_of({2}));
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 101ULL}) CHECK(skp_set(knot("unknot"), p).empty());
  CHECK_THROWS_AS(skp_set(knot("3_1"), 9), DomainError);
  CHECK_THROWS_AS(skp_set(IntPoly{3, 6}, 3), DataError);
}

TEST_CASE("skp_set regression against an external oracle") {
  // sympy factor_list over GF(p), primes of prod (p^d - 1).
  CHECK(skp_set(knot("5_1"), 2) == set_of({3, 5}));
  CHECK(skp_set(knot("5_1"), 7) == set_of({2, 3, 5}));
  CHECK(skp_set(knot("5_2"), 2).empty());
  CHECK(skp_set(knot("6_1"), 2).empty());
  CHECK(skp_set(knot("6_2"), 2) == set_of({3, 5}));
  CHECK(skp_set(knot("6_3"), 5) == set_of({2, 3, 13}));
  CHECK(skp_set(knot("3_1#6_1"), 5) == set_of({2, 3}));
}

TEST_CASE("table knots satisfy the S_{K,p} properties") {
  for (const Knot& k : bundled_table().entries()) {
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
      const PrimeSet s = skp_set(k, p);
      CHECK_FALSE(s.contains(p));
      mpz_class bound;
      mpz_ui_pow_ui(bound.get_mpz_t(), p, static_cast<unsigned long>(2 * k.alexander.half_degree()));
      CHECK(s.product() <= bound);
      if (p == 7) continue;
      for (std::uint64_t n : primes_up_to(50)) {
        if (!admissible(n, s)) continue;
        const CoverOrder o = fox_order(k, n);
        CHECK_FALSE(o.infinite());
        CHECK(mpz_divisible_ui_p(o.order.get_mpz_t(), p) == 0);
      }
    }
  }
}

TEST_CASE("S_{J,p} is contained in S_{K,p} when Delta_J divides Delta_K") {
  const auto& t = bundled_table();
  for (const Knot& j : t.entries()) {
    for (const Knot& k : t.entries()) {
      if (!exact_quotient(tilde(k.alexander), tilde(j.alexander))) continue;
      for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) CHECK(skp_set(j, p).is_subset_of(skp_set(k, p)));
    }
  }
}

TEST_CASE("admissibility is sufficient, not necessary") {
  // 2 is in S_{4_1,3}, yet the double cover has order 5 and is a Z/3-homology sphere.
  CHECK(skp_set(knot("4_1"), 3).contains(2));
  CHECK_FALSE(admissible(2, skp_set(knot("4_1"), 3)));
  CHECK(fox_order(knot("4_1"), 2).order == 5);
  CHECK(is_zp_homology_sphere(knot("4_1"), 2, 3));
}

TEST_CASE("admissible and admissible_primes") {
  CHECK(admissible(5, set_of({3})));
  CHECK_FALSE(admissible(6, set_of({3})));
  CHECK(admissible(123456, PrimeSet()));
  CHECK(admissible_primes(knot("3_1"), 2, 20) == std::vector<std::uint64_t>{2, 5, 7, 11, 13, 17, 19});
  CHECK(admissible_primes(knot("unknot"), 2, 10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(admissible_primes(knot("4_1"), 3, 10) == std::vector<std::uint64_t>{3, 5, 7});
  for (const Knot& k : bundled_table().entries()) {
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
      const auto ps = admissible_primes(k, p, 50);
      CHECK(std::find(ps.begin(), ps.end(), p) != ps.end());
    }
  }
}

TEST_CASE("hfk_dim_upper examples") {
  auto b = hfk_dim_upper(5, 2);
  CHECK(b.tight == 900);
  CHECK(b.loose == 14400);
  b = hfk_dim_upper(2, 1);
  CHECK(b.tight == 1);
  CHECK(b.loose == 2);
  b = hfk_dim_upper(5, 3);
  CHECK(b.tight == 108000);
  CHECK(b.loose == 1728000);
  b = hfk_dim_upper(6, 1);  // 720 / 32 = 22.5, rounded up
  CHECK(b.tight == 23);
  CHECK_THROWS_AS(hfk_dim_upper(1, 2), DomainError);
  CHECK_THROWS_AS(hfk_dim_upper(3, 0), DomainError);
}
