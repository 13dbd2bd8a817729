#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qcert/error.hpp"
#include "qcert/family.hpp"
#include "qcert/local_field.hpp"
#include "qcert/modpoly.hpp"

using namespace qcert;

namespace {

UniPoly X() { return UniPoly({0, 1}); }

ModPoly product(const std::vector<ModFactor>& fs, const BigInt& p)
{
  ModPoly acc = ModPoly::constant(p, 1);
  for (auto const& f : fs)
    for (unsigned i = 0; i < f.multiplicity; ++i)
      acc = acc * f.factor;
  return acc;
}

DegreePattern pattern(std::vector<std::pair<unsigned, unsigned>> parts) { return DegreePattern(std::move(parts)); }

// f_{-2/3, 27 t}: X^2 (X-1)^3 - 86 t^2 (9X - 8)
UniPoly corollary_poly(long u)
{
  BigRat t = BigRat(86) * u * u * u;
  return build_poly(WParam(-2, 3), 27 * t);
}

}  // namespace

TEST_CASE("reduction and basic arithmetic")
{
  ModPoly f = ModPoly::reduce(UniPoly({-1, 0, 0, 1}), 2);
  CHECK(f.to_string() == "X^3 + 1");
  CHECK(ModPoly::reduce(UniPoly({make_rat(1, 3), 1}), 5).coeff(0) == 2);
  CHECK_THROWS_AS(ModPoly::reduce(UniPoly({make_rat(1, 5), 1}), 5), Error);
  CHECK(is_separable(f));
  CHECK_FALSE(is_separable(ModPoly::reduce(UniPoly({1, 2, 1}), 7)));
  // X^5 = X^2 X^3 = 2 X^2 mod X^3 - 2
  CHECK(powmod(ModPoly::x(5), 5, ModPoly::reduce(UniPoly({-2, 0, 0, 1}), 5)) == ModPoly::reduce(UniPoly({0, 0, 2}), 5));
}

TEST_CASE("factor_mod_p examples")
{
  auto fs = factor_mod_p(ModPoly::reduce(UniPoly({1, 0, 0, 1}), 2));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].factor.to_string() == "X + 1");
  CHECK(fs[1].factor.to_string() == "X^2 + X + 1");

  CHECK(degree_pattern(ModPoly::reduce(UniPoly({0, -1, 0, 0, 0, 1}), 5)) == pattern({{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}}));
  UniPoly g = UniPoly({1, 0, 1}) * UniPoly({1, 1, 0, 1});
  CHECK(degree_pattern(ModPoly::reduce(g, 2)) == pattern({{1, 2}, {3, 1}}));
  CHECK(degree_pattern(ModPoly::reduce(g, 2)).to_string() == "{1^2,3}");
}

TEST_CASE("patterns of the corollary quintics")
{
  for (long u : {1L, 7L, 11L}) {
    UniPoly f = corollary_poly(u);
    auto p3 = degree_pattern(ModPoly::reduce(f, 3));
    auto p5 = degree_pattern(ModPoly::reduce(f, 5));
    CHECK(p3.separable());
    CHECK(p3.to_string() == "{2,3}");
    CHECK(p5.separable());
    CHECK((p5.to_string() == "{5}" || p5.to_string() == "{1,4}"));
  }
  CHECK(degree_pattern(ModPoly::reduce(corollary_poly(1), 5)).to_string() == "{5}");
  CHECK(degree_pattern(ModPoly::reduce(corollary_poly(7), 5)).to_string() == "{1,4}");
}

TEST_CASE("mod-p factorization reconstruction on 10^3 random polynomials")
{
  std::mt19937_64 rng(1234567);
  const long primes[] = {2, 3, 5, 7, 43, 97};
  std::uniform_int_distribution<int> deg(1, 8), pick(0, 5);
  for (int i = 0; i < 1000; ++i) {
    BigInt p = primes[pick(rng)];
    UniPoly g = oracle::random_poly(rng, deg(rng), -200, 200, false);
    ModPoly f = ModPoly::reduce(g, p);
    if (f.degree() < 1)
      continue;
    auto fs = factor_mod_p(f, static_cast<std::uint64_t>(i));
    REQUIRE(product(fs, p) == f.monic());
    for (std::size_t k = 0; k < fs.size(); ++k) {
      auto const& q = fs[k].factor;
      REQUIRE(q.leading() == 1);
      REQUIRE(is_irreducible(q));
      // exhaustive check when at most ~10^4 candidate divisors
      unsigned long half = static_cast<unsigned long>(q.degree() / 2);
      if (mpz_sizeinbase(p.get_mpz_t(), 2) * half <= 14)
        REQUIRE(oracle::brute_irreducible(q));
      if (k > 0)
        REQUIRE(!(fs[k - 1].factor == q));
    }
  }
}

TEST_CASE("irreducibility test against brute force")
{
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> deg(2, 6);
  for (int i = 0; i < 300; ++i) {
    ModPoly f = ModPoly::reduce(oracle::random_poly(rng, deg(rng), 0, 2, true), 3);
    REQUIRE(is_irreducible(f) == oracle::brute_irreducible(f));
  }
}

TEST_CASE("degree pattern is invariant under integer shifts")
{
  std::mt19937_64 rng(8080);
  std::uniform_int_distribution<long> a(-30, 30);
  const long primes[] = {7, 11, 43, 97};
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    UniPoly f = oracle::random_poly(rng, 5, -50, 50, true);
    BigInt p = primes[i % 4];
    ModPoly fp = ModPoly::reduce(f, p);
    if (!is_separable(fp))
      continue;
    UniPoly g = compose(f, UniPoly({a(rng), 1}));
    REQUIRE(degree_pattern(ModPoly::reduce(g, p)) == degree_pattern(fp));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("Dedekind criterion")
{
  CHECK(dedekind_index_test(UniPoly({1, 0, 1}), 2));
  CHECK_FALSE(dedekind_index_test(UniPoly({-5, 0, 1}), 2));
  CHECK_FALSE(dedekind_index_test(UniPoly({-3 * 49, 0, 1}), 7));
  CHECK(dedekind_index_test(UniPoly({-3 * 7, 0, 1}), 7));
  // Eisenstein after a shift: (X-1)^2 - 7
  CHECK(dedekind_index_test(UniPoly({-6, -2, 1}), 7));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    UniPoly f = oracle::random_poly(rng, 4, -40, 40, true);
    BigRat d = discriminant(f);
    if (d == 0 || valuation(d.get_num(), BigInt(13)) > 0)
      continue;
    REQUIRE(dedekind_index_test(f, 13));
  }
}

TEST_CASE("local splitting")
{
  // X^2 - 7^3: one ramified quadratic block, index divisible by 7
  auto s = local_splitting(UniPoly({-343, 0, 1}), 7);
  REQUIRE(s);
  CHECK(s->to_string() == "[e2f1]");
  CHECK(s->transposition_inertia());
  CHECK(tame_disc_valuation(UniPoly({-343, 0, 1}), 7) == 1u);

  // X^2 - 7^2 * 2: unramified quadratic, split since 2 is a square mod 7
  auto u = local_splitting(UniPoly({-98, 0, 1}), 7);
  REQUIRE(u);
  CHECK(u->unramified());
  CHECK(tame_disc_valuation(UniPoly({-98, 0, 1}), 7) == 0u);

  // Eisenstein quintic: totally ramified
  auto e = local_splitting(UniPoly({7, 0, 0, 0, 0, 1}), 7);
  REQUIRE(e);
  CHECK(e->to_string() == "[e5f1]");
  CHECK_FALSE(e->transposition_inertia());
  CHECK(tame_disc_valuation(UniPoly({7, 0, 0, 0, 0, 1}), 7) == 4u);

  // repeated irreducible quadratic residual factor is out of reach
  UniPoly hard = X() * pow(UniPoly({1, 1, 1}), 2) + UniPoly({2});
  CHECK_FALSE(local_splitting(hard, 2).has_value());

  CHECK_THROWS_AS(tame_disc_valuation(UniPoly({-343, 0, 1}), 5), Error);
}

TEST_CASE("tame discriminant valuation on a constructed instance")
{
  // ((X-1)^2 - 7)((X-2)^2 - 7)(X-3): two tame ramified quadratics, v_7(disc) = 2
  UniPoly f = UniPoly({-6, -2, 1}) * UniPoly({-3, -4, 1}) * UniPoly({-3, 1});
  BigRat d = discriminant(f);
  CHECK(valuation(d.get_num(), BigInt(7)) == 2);
  CHECK(dedekind_index_test(f, 7));
  CHECK(tame_disc_valuation(f, 7) == 2u);
  auto s = local_splitting(f, 7);
  REQUIRE(s);
  CHECK(s->to_string() == "[e1f1,e2f1,e2f1]");
  CHECK_FALSE(s->transposition_inertia());
}
