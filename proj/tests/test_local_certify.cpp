#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qcert/error.hpp"
#include "qcert/local_certify.hpp"

using namespace qcert;

namespace {

UniPoly X() { return UniPoly({0, 1}); }

BigRat corollary_s(long u) { return BigRat(27 * 86) * u * u * u; }

const SpecializationCertificate& corollary_cert(long u)
{
  static std::map<long, SpecializationCertificate> cache;
  auto it = cache.find(u);
  if (it == cache.end())
    it = cache.emplace(u, certify_specialization(WParam(-2, 3), corollary_s(u))).first;
  return it->second;
}

const LocalCertificate* local_at(const SpecializationCertificate& c, long p)
{
  for (auto const& l : c.locals)
    if (l.p == p)
      return &l;
  return nullptr;
}

bool has_even_part(const DegreePattern& d) { return d.has_even_degree(); }

}  // namespace

TEST_CASE("unramified primes")
{
  UniPoly f = build_poly(WParam(-2, 3), corollary_s(1));
  auto l = certify_prime(f, 7);
  CHECK(l.v_disc == 0);
  CHECK(l.inertia == InertiaClass::unramified);
  CHECK(l.method == CertMethod::separability);
  CHECK(l.obstruction_free);
  CHECK_THROWS_AS(certify_prime(f, 5), Error);
  try {
    certify_prime(f, 3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::wild_prime);
  }
}

TEST_CASE("wild primes 3 and 5 on the u = 1 quintic")
{
  UniPoly f = build_poly(WParam(-2, 3), corollary_s(1));
  auto at3 = certify_wild(f, 3);
  CHECK(at3.inertia == InertiaClass::unramified);
  CHECK(at3.residual_pattern.to_string() == "{2,3}");
  auto at5 = certify_wild(f, 5);
  CHECK(at5.inertia == InertiaClass::unramified);
  CHECK(at5.residual_pattern.to_string() == "{5}");
  CHECK_THROWS_AS(certify_wild(f, 7), Error);
}

TEST_CASE("43 via the shipped reduction plan")
{
  WParam w(-2, 3);
  BigRat s = corollary_s(1);
  auto plans = builtin_plans(w, s);
  auto c = corollary_cert(1);
  auto l = local_at(c, 43);
  REQUIRE(l);
  CHECK(l->v_disc >= 2);
  CHECK(l->inertia == InertiaClass::transposition);
  CHECK(l->method == CertMethod::scaled_reduction);
  REQUIRE(l->plan);
  CHECK(l->residual_pattern.to_string() == "{1,1,1}");
  CHECK(l->decomposition_cyclic == true);
  CHECK(l->obstruction_free);
  CHECK(l->tame);

  // the reduction itself: (1/43^3) f(1 - 43 X) in t-form with t = 86
  UniPoly f = build_poly(w, s);
  UniPoly g = shift_scale(f, 1, -43, 43 * 43 * 43);
  REQUIRE(g.has_integer_coeffs());
  ModPoly r = ModPoly::reduce(g, 43);
  CHECK(r.degree() == 3);
  CHECK(is_separable(r));
  CHECK(degree_pattern(r).to_string() == "{1,1,1}");
}

TEST_CASE("valuation-one transposition with and without obstruction")
{
  // ((X-1)^2 - 7)(X - 4)(X - 5)(X - 6): residual splits, cyclic decomposition
  UniPoly good = UniPoly({-6, -2, 1}) * UniPoly({-4, 1}) * UniPoly({-5, 1}) * UniPoly({-6, 1});
  auto g = certify_prime(good, 7);
  CHECK(g.v_disc == 1);
  CHECK(g.inertia == InertiaClass::transposition);
  CHECK(g.method == CertMethod::valuation_one);
  CHECK(g.residual_pattern.to_string() == "{1,1,1}");
  CHECK(g.decomposition_cyclic == true);
  CHECK(g.obstruction_free);

  // ((X-1)^2 - 7)(X^2 + 1)(X - 4): quadratic residual factor gives C2 x C2
  UniPoly bad = UniPoly({-6, -2, 1}) * UniPoly({1, 0, 1}) * UniPoly({-4, 1});
  auto b = certify_prime(bad, 7);
  CHECK(b.v_disc == 1);
  CHECK(b.inertia == InertiaClass::transposition);
  CHECK(b.residual_pattern.to_string() == "{1,2}");
  CHECK(b.decomposition_cyclic == false);
  CHECK_FALSE(b.obstruction_free);
}

TEST_CASE("two tame transpositions are rejected")
{
  UniPoly f = UniPoly({-6, -2, 1}) * UniPoly({-3, -4, 1}) * UniPoly({-3, 1});
  auto l = certify_prime(f, 7);
  CHECK(l.v_disc == 2);
  CHECK(l.inertia == InertiaClass::other);
  CHECK_FALSE(l.obstruction_free);
}

TEST_CASE("Newton splitting fallback")
{
  // X^2 - 7^3 times three split linears: index divisible by 7, v_7(disc) = 3
  UniPoly f = UniPoly({-343, 0, 1}) * UniPoly({-1, 1}) * UniPoly({-2, 1}) * UniPoly({-3, 1});
  auto l = certify_prime(f, 7);
  CHECK(l.inertia == InertiaClass::transposition);
  CHECK(l.method == CertMethod::scaled_reduction);
  CHECK(l.detail == "[e1f1,e1f1,e1f1,e2f1]");
  CHECK(l.residual_pattern.to_string() == "{1,1,1}");
  CHECK(l.obstruction_free);
}

TEST_CASE("undetermined wild shape")
{
  UniPoly hard = X() * pow(UniPoly({1, 1, 1}), 2) + UniPoly({2});
  auto l = analyze_prime(hard, 2);
  CHECK(l.inertia == InertiaClass::undetermined);
  CHECK(l.method == CertMethod::none);
  try {
    certify_wild(hard, 2);
    FAIL("expected InconclusiveReduction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::inconclusive_reduction);
  }
}

TEST_CASE("mod-2 plan for w = 1")
{
  WParam w(1, 1);
  auto c = certify_specialization(w, 2);
  auto l = local_at(c, 2);
  REQUIRE(l);
  CHECK((l->inertia == InertiaClass::unramified || l->inertia == InertiaClass::transposition));
  CHECK(l->method == CertMethod::scaled_reduction);
  REQUIRE(c.fundamental_disc);
  CHECK(*c.fundamental_disc == BigInt("43201248841"));
  // the certificate as a whole fails at 19 and 23, which is data rather than a defect
  CHECK(c.status == CertStatus::failed);
}

TEST_CASE("Galois witnesses")
{
  UniPoly f = build_poly(WParam(-2, 3), corollary_s(1));
  auto g = galois_s5(f);
  CHECK(g.s5);
  CHECK(g.generation_fact);
  REQUIRE(g.witnesses.size() == 2);
  CHECK(g.witnesses[0].p == 3);
  CHECK(g.witnesses[0].pattern.to_string() == "{2,3}");
  CHECK(g.witnesses[1].p == 5);
  CHECK(g.witnesses[1].pattern.to_string() == "{5}");
  BigRat d = discriminant(f);
  for (auto const& wt : g.witnesses)
    CHECK(valuation(d.get_num(), wt.p) == 0);

  auto h = galois_s5(UniPoly({-1, -1, 0, 0, 0, 1}), 100);
  CHECK(h.s5);
  CHECK_THROWS_AS(galois_s5(UniPoly({-1, 0, 0, 0, 0, 1}), 200), Error);
  CHECK(generation_fact_32());
}

TEST_CASE("exceptional sets")
{
  PolyInT F = family_in_t(WParam(-2, 3));
  auto e = exceptional_set(F);
  CHECK(e.complete);
  CHECK(e.primes == std::set<BigInt>{2, 3, 5, 43, 97});
  CHECK(exceptional_set(F.rescale_t(-1)).primes == e.primes);

  PolyInT sq({UniPoly({0, -1}), UniPoly(), UniPoly({1})});
  CHECK(exceptional_set(sq, 2).primes == std::set<BigInt>{2});

  PolyInT G = family_in_t(WParam(2, 3));
  CHECK(exceptional_set(G).primes == std::set<BigInt>{2, 3, 5, 43, 97});
  CHECK(exceptional_set(G.rescale_t(-1)).primes == exceptional_set(G).primes);
  CHECK(exceptional_set(family_in_t(WParam(1, 3))).primes == std::set<BigInt>{2, 3, 5, 7, 43, 193});
  CHECK(exceptional_set(family_in_t(WParam(1, 5))).primes == std::set<BigInt>{2, 3, 5, 23});
}

TEST_CASE("intersection multiplicity")
{
  CHECK(intersection_multiplicity(std::nullopt, make_rat(5, 8), 2) == 3);
  CHECK(intersection_multiplicity(UniPoly({0, 1}), 86, 43) == 1);
  CHECK(intersection_multiplicity(UniPoly({-2, 0, 1}), 3, 7) == 1);
  CHECK(intersection_multiplicity(UniPoly({0, 1}), make_rat(43 * 43, 5), 43) == 2);
  CHECK_THROWS_AS(intersection_multiplicity(UniPoly({0, 1}), 0, 43), Error);
}

TEST_CASE("integral model and plan transport")
{
  UniPoly f = UniPoly({make_rat(1, 8), 0, 0, 0, 0, 1});
  auto m = integral_model(f);
  CHECK(m.scale == 2);
  CHECK(m.poly == UniPoly({4, 0, 0, 0, 0, 1}));
  ReductionPlan p{2, 1, -2, 8, "test"};
  ReductionPlan q = transport_plan(p, m, 5);
  CHECK(q.shift == 2);
  CHECK(q.scale == -4);
  CHECK(q.normalizer == 8 * 32);
  CHECK(shift_scale(m.poly, q.shift, q.scale, q.normalizer) == shift_scale(f, 1, -2, 8));
}

TEST_CASE("corollary certificates")
{
  std::set<BigInt> kernels;
  for (long u : {1L, 7L, 11L}) {
    auto const& c = corollary_cert(u);
    CAPTURE(u);
    CHECK(c.status == CertStatus::certified);
    REQUIRE(c.kernel);
    CHECK(*c.kernel == squarefree_kernel(corollary_quad_disc(u)).kernel);
    kernels.insert(*c.kernel);
    CHECK(c.real_roots == 3);
    CHECK(c.complex_pairs == 1);
    for (long p : {2L, 3L, 5L, 97L}) {
      auto l = local_at(c, p);
      REQUIRE(l);
      CHECK(l->inertia == InertiaClass::unramified);
    }
    CHECK(local_at(c, 43)->inertia == InertiaClass::transposition);
    REQUIRE(c.galois);
    CHECK(c.galois->s5);
  }
  CHECK(kernels.size() == 3);
  CHECK(*corollary_cert(1).kernel == BigInt("-32871663164598100879"));
  CHECK(*corollary_cert(7).kernel == BigInt("-454986141624858511399381354687"));
  CHECK(*corollary_cert(11).kernel == BigInt("-103165362957526379975122048283719"));
  CHECK(local_at(corollary_cert(7), 5)->residual_pattern.to_string() == "{1,4}");
  CHECK(local_at(corollary_cert(7), 7)->inertia == InertiaClass::unramified);
  CHECK(local_at(corollary_cert(11), 11)->inertia == InertiaClass::unramified);
}

TEST_CASE("certified specializations are consistent with their kernel")
{
  for (long u : {1L, 7L, 11L}) {
    auto const& c = corollary_cert(u);
    REQUIRE(c.status == CertStatus::certified);
    BigInt k = abs(*c.kernel);
    CHECK(mod(k, BigInt(2)) == 1);
    BigInt ramified = 1;
    for (auto const& l : c.locals) {
      if (l.inertia == InertiaClass::transposition) {
        ramified *= l.p;
        CHECK((l.residual_pattern.to_string() == "{1,1,1}" || l.residual_pattern.to_string() == "{3}"));
      }
    }
    CHECK(ramified == k);
  }
}

TEST_CASE("obstruction flag matches the transposition and even-residual shape")
{
  std::vector<SpecializationCertificate> certs{corollary_cert(1), corollary_cert(7),
                                              certify_specialization(WParam(1, 1), 2),
                                              certify_specialization(WParam(-2, 3), 54)};
  int seen = 0;
  for (auto const& c : certs)
    for (auto const& l : c.locals) {
      if (l.inertia == InertiaClass::other || l.inertia == InertiaClass::undetermined)
        continue;
      bool obstructed = l.inertia == InertiaClass::transposition && has_even_part(l.residual_pattern);
      CHECK(l.obstruction_free == !obstructed);
      ++seen;
    }
  CHECK(seen > 20);
}

TEST_CASE("certify_specialization edge cases")
{
  CHECK_THROWS_AS(certify_specialization(WParam(-2, 3), 0), Error);
  try {
    certify_specialization(WParam(-2, 3), 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::branch_point);
  }
  auto c = certify_specialization(WParam(-2, 3), 54);
  CHECK(c.t0 == 2);
  CHECK(c.status == CertStatus::failed);
  CHECK(local_at(c, 43)->inertia == InertiaClass::other);

  // a budget too small to split the u = 11 kernel leaves the verdict open
  CertifyConfig tiny;
  tiny.budget.rho_iterations = 5;
  tiny.budget.trial_bound = 1000;
  auto open = certify_specialization(WParam(-2, 3), corollary_s(11), tiny);
  CHECK(open.status == CertStatus::uncertified);
  CHECK_FALSE(open.disc_factors.complete);
}
