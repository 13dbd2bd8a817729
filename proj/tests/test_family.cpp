#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "qcert/error.hpp"
#include "qcert/family.hpp"
#include "qcert/modpoly.hpp"

using namespace qcert;

namespace {

UniPoly X() { return UniPoly({0, 1}); }

BigInt disc_kernel(const UniPoly& f)
{
  BigRat d = discriminant(f);
  return squarefree_kernel(d.get_num() * d.get_den()).kernel;
}

}  // namespace

TEST_CASE("WParam normalization and derived parameters")
{
  WParam w(4, -6);
  CHECK(w.w1() == -2);
  CHECK(w.w2() == 3);
  CHECK(WParam::parse("-2/3") == WParam(-2, 3));
  CHECK(WParam::parse("-0.5") == WParam(-1, 2));
  CHECK_THROWS_AS(WParam(1, 0), Error);
  WParam m(-2, 3);
  CHECK(m.a() == make_rat(8, 9));
  CHECK(m.c() == make_rat(86, 81));
  CHECK(m.condition_product() == 43);
}

TEST_CASE("condition product equals w2^4 c / 2 for 100 random w")
{
  std::mt19937_64 rng(100);
  std::uniform_int_distribution<long> num(-500, 500), den(1, 500);
  for (int i = 0; i < 100; ++i) {
    long a = num(rng);
    if (a == 0)
      a = 1;
    WParam w(a, den(rng));
    BigRat w2 = w.w2();
    REQUIRE(BigRat(w.condition_product()) == w2 * w2 * w2 * w2 * w.c() / 2);
    BigRat v = w.value();
    REQUIRE(w.c() == 2 * (27 - 50 * v * v) * (10 * v * v + 8 * v + 1));
  }
}

TEST_CASE("check_conditions")
{
  auto r = check_conditions(WParam(-2, 3));
  CHECK(r.product == 43);
  REQUIRE(r.kernel);
  CHECK(*r.kernel == 43);
  CHECK(r.kernel_primes == std::vector<BigInt>{43});
  REQUIRE(r.a_ok);
  CHECK(*r.a_ok);
  CHECK(r.b_ok);
  CHECK(r.bprime_ok);
  CHECK(r.c_positive);

  auto h = check_conditions(WParam(1, 2));
  CHECK(h.product == 1740);
  CHECK(*h.kernel == 435);
  CHECK_FALSE(*h.a_ok);
  CHECK(h.b_ok);
  CHECK_FALSE(h.bprime_ok);

  auto z = check_conditions(WParam(0, 1));
  CHECK_FALSE(z.b_ok);
  CHECK_FALSE(z.bprime_ok);
}

TEST_CASE("window endpoints are closed decimals")
{
  CHECK(check_conditions(WParam::parse("-0.7348")).b_ok);
  CHECK(check_conditions(WParam::parse("-0.7348")).bprime_ok);
  CHECK(check_conditions(WParam::parse("-0.645")).b_ok);
  CHECK(check_conditions(WParam::parse("-0.155")).b_ok);
  CHECK(check_conditions(WParam::parse("0.7348")).bprime_ok);
  CHECK_FALSE(check_conditions(WParam::parse("-0.73481")).b_ok);
  CHECK_FALSE(check_conditions(WParam::parse("-0.6449")).b_ok);
  // 10w^2 + 8w + 1 vanishes near -0.64495, just outside the window
  CHECK_FALSE(check_conditions(WParam::parse("-0.6449")).c_positive);
  CHECK(check_conditions(WParam::parse("-0.645")).c_positive);
  CHECK_FALSE(check_conditions(WParam::parse("0.6449")).bprime_ok);
  CHECK_FALSE(check_conditions(WParam::parse("0.74")).b_ok);
}

TEST_CASE("conditions report invariants on random w")
{
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-80, 80), den(1, 80);
  for (int i = 0; i < 200; ++i) {
    WParam w(num(rng), den(rng));
    auto r = check_conditions(w);
    if (r.bprime_ok)
      REQUIRE(r.b_ok);
    if (r.a_ok && *r.a_ok) {
      REQUIRE(*r.kernel > 0);
      for (auto const& p : r.kernel_primes)
        REQUIRE(mod(p, BigInt(3)) == 1);
    }
  }
}

TEST_CASE("build_poly")
{
  UniPoly base = X() * X() * pow(X() - UniPoly({1}), 3);
  WParam w(-2, 3);
  for (long t : {1L, 2L, -5L}) {
    UniPoly f = build_poly(w, 27 * t);
    CHECK(f == base - BigRat(86 * t * t) * UniPoly({-8, 9}));
    CHECK(f == family_in_t(w).at(t));
  }
  CHECK(build_poly(WParam(1, 2), make_rat(3, 7)).degree() == 5);
  CHECK(family_in_s(WParam(1, 5)).at(make_rat(2, 3)) == build_poly(WParam(1, 5), make_rat(2, 3)));
  CHECK(s_from_t(w, 2) == 54);
  CHECK(t_from_s(w, 54) == 2);
  CHECK_THROWS_AS(build_poly(w, 0), Error);
  try {
    build_poly(w, 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::degenerate_parameter);
  }
}

TEST_CASE("specialization plans")
{
  auto m = specialization_plan(WParam(-2, 3));
  REQUIRE(m.candidates.size() == 1);
  CHECK(m.candidates[0].s0 == 54);
  CHECK(m.corollary_family);
  CHECK_FALSE(m.needs_mod4_selection);

  auto h = specialization_plan(WParam(1, 2));
  REQUIRE(h.candidates.size() == 1);
  CHECK(h.candidates[0].s0 == 2);
  CHECK_FALSE(h.corollary_family);

  auto o = specialization_plan(WParam(1, 3));
  REQUIRE(o.candidates.size() == 2);
  CHECK(o.candidates[0].s0 == 54);
  CHECK(o.candidates[1].s0 == 162);
  CHECK(o.needs_mod4_selection);
  auto sel = select_plan_candidate(WParam(1, 3), o);
  REQUIRE(sel);
  CHECK(sel->s0 == 54);
}

TEST_CASE("both-odd selections give an odd kernel 1 mod 4")
{
  for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 1}, {-1, 1}, {1, 3}, {-1, 3}, {3, 5}, {1, 5}, {5, 7}, {3, 7}}) {
    WParam w(a, b);
    auto plan = specialization_plan(w);
    REQUIRE(plan.needs_mod4_selection);
    auto sel = select_plan_candidate(w, plan);
    REQUIRE(sel);
    BigInt k = disc_kernel(build_poly(w, sel->s0));
    REQUIRE(mod(k, BigInt(4)) == 1);
  }
}

TEST_CASE("mod-2 identity for the parity plan")
{
  for (auto [a, b] : std::vector<std::pair<long, long>>{{-2, 3}, {1, 1}, {1, 3}}) {
    WParam w(a, b);
    BigRat w2 = w.w2();
    UniPoly g = shift_scale(build_poly(w, 2 * w2 * w2 * w2), 1, -2, 8);
    REQUIRE(g.has_integer_coeffs());
    CHECK(ModPoly::reduce(g, 2) == ModPoly::reduce(UniPoly({1, 0, 0, 1}), 2));
  }
}

TEST_CASE("corollary discriminant")
{
  CHECK(corollary_quad_disc(1) == -43 * BigInt("764457282897630253"));
  for (long u : {1L, 7L, 11L}) {
    UniPoly f = build_poly(WParam(-2, 3), 27 * 86 * u * u * u);
    CHECK(disc_kernel(f) == squarefree_kernel(corollary_quad_disc(u)).kernel);
  }
  for (long u = 1; u < 200; ++u)
    if (gcd(BigInt(u), BigInt(30)) == 1)
      REQUIRE(corollary_quad_disc(u) < 0);
  for (long u : {0L, 2L, 3L, 5L, 6L, 10L})
    CHECK_THROWS_AS(corollary_quad_disc(u), Error);
  CHECK(corollary_quad_disc(-1) == corollary_quad_disc(1));
}

TEST_CASE("branch quadratic")
{
  // X^2 (X-1)^3 - t (X - 8/9): disc in t is -t^3 (1679616 t^2 - 232229 t + 7776) / 6561
  UniPoly q = branch_quadratic(WParam(-2, 3));
  CHECK(q.degree() == 2);
  CHECK(q.monic() == UniPoly({make_rat(7776, 1679616), make_rat(-232229, 1679616), 1}));
  CHECK(branch_conjugacy(WParam(-2, 3)));
  CHECK(branch_conjugacy(WParam(1, 5)));
  UniPoly y = X() * X() * pow(X() - UniPoly({1}), 3);
  PolyInT F({UniPoly({0, make_rat(8, 9)}), UniPoly({0, -1}), y.coeff(2) * UniPoly({1}), y.coeff(3) * UniPoly({1}),
             y.coeff(4) * UniPoly({1}), y.coeff(5) * UniPoly({1})});
  UniPoly d = discriminant_in_t(F);
  auto [quot, rem] = divmod(d, pow(X(), 3));
  CHECK(rem.is_zero());
  CHECK(quot.monic() == q.monic());
}

TEST_CASE("curve search on the condition quartic")
{
  UniPoly q = condition_quartic();
  auto small = curve_search(43, q, 3);
  CHECK(std::find(small.begin(), small.end(), CurvePoint{make_rat(-2, 3), make_rat(1, 9)}) != small.end());
  CHECK(std::find(small.begin(), small.end(), CurvePoint{make_rat(-2, 3), make_rat(-1, 9)}) != small.end());
  CHECK(curve_search(43, q, 1).empty());

  auto pts = curve_search(43, q, 300);
  CHECK(pts.size() == 20);
  CHECK(distinct_w_count(pts) == 10);
  for (auto const& p : pts) {
    REQUIRE(43 * p.Y * p.Y == q(p.W));
    REQUIRE(abs(p.W.get_num()) <= 300);
    REQUIRE(p.W.get_den() <= 300);
  }
  CHECK(std::is_sorted(pts.begin(), pts.end(), [](auto const& a, auto const& b) {
    return a.W < b.W || (a.W == b.W && a.Y < b.Y);
  }));
}

TEST_CASE("integral points on the rank-0 cubic")
{
  auto pts = integral_points(rank0_cubic(), -1000, 1'000'000);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0] == CurvePoint{0, 0});
  CHECK(pts[1] == CurvePoint{15, 0});
  CHECK(pts[2] == CurvePoint{24, 0});
}

TEST_CASE("totally real scan")
{
  auto hits = totally_real_scan(WParam(-2, 3));
  REQUIRE_FALSE(hits.empty());
  for (auto const& h : hits) {
    CHECK(h.real_roots == 5);
    CHECK(sturm_count(build_poly(WParam(-2, 3), h.s0)) == 5);
    CHECK(oracle::float_real_roots(build_poly(WParam(-2, 3), h.s0)) == 5);
  }
  CHECK(sturm_count(build_poly(WParam(-2, 3), make_rat(1, 4))) == 5);

  auto half = signature_samples(WParam(1, 2));
  REQUIRE_FALSE(half.empty());
  for (auto const& s : half)
    CHECK(s.real_roots < 5);
  CHECK_THROWS_AS(totally_real_scan(WParam(1, 2)), Error);
}

TEST_CASE("real root count is constant on the outer tail")
{
  WParam w(-2, 3);
  auto samples = signature_samples(w);
  REQUIRE_FALSE(samples.empty());
  auto const& last = samples.back();
  REQUIRE(last.hi_infinite);
  BigRat far1 = last.lo + 1000, far2 = last.lo + 123456;
  CHECK(sturm_count(build_poly(w, far1)) == last.real_roots);
  CHECK(sturm_count(build_poly(w, far2)) == last.real_roots);
}
