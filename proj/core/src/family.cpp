#include "qcert/family.hpp"

#include <algorithm>
#include <cmath>

namespace qcert {

WParam::WParam(const BigInt& num, const BigInt& den)
{
  if (den == 0)
    throw Error(ErrorCode::invalid_argument, "w has zero denominator");
  BigRat w = make_rat(num, den);
  w1_ = w.get_num();
  w2_ = w.get_den();
}

WParam::WParam(const BigRat& w)
: WParam(w.get_num(), w.get_den())
{}

WParam WParam::parse(std::string_view text) { return WParam(parse_rational(text)); }

BigRat WParam::a() const
{
  BigRat w = value();
  return 2 * w * w;
}

BigRat WParam::c() const
{
  BigRat w = value();
  BigRat w2 = w * w;
  return 2 * (27 - 50 * w2) * (10 * w2 + 8 * w + 1);
}

BigInt WParam::condition_product() const
{
  BigInt a = -50 * w1_ * w1_ + 27 * w2_ * w2_;
  BigInt b = 10 * w1_ * w1_ + 8 * w1_ * w2_ + w2_ * w2_;
  return a * b;
}

namespace {

bool in_closed(const BigRat& x, const char* lo, const char* hi)
{
  return parse_rational(lo) <= x && x <= parse_rational(hi);
}

}  // namespace

ConditionReport check_conditions(const WParam& w, const FactorBudget& budget)
{
  ConditionReport r;
  r.product = w.condition_product();
  BigRat x = w.value();
  r.c_positive = w.c() > 0;
  r.b_ok = x != 0 && (in_closed(x, "-0.7348", "-0.645") || in_closed(x, "-0.155", "0.7348"));
  BigRat ax = abs(x);
  r.bprime_ok = in_closed(ax, "0.645", "0.7348");

  if (r.product == 0) {
    r.a_ok = false;
    return r;
  }
  auto f = factorize(r.product, budget);
  try {
    auto sq = squarefree_kernel(f);
    r.kernel = sq.kernel;
    for (auto const& [p, e] : f.factors)
      if (e % 2 == 1)
        r.kernel_primes.push_back(p);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::incomplete_factorization)
      throw;
    return r;
  }
  if (*r.kernel < 0) {
    r.a_ok = false;
    return r;
  }
  r.a_ok = all_primes_1_mod_3(f);
  return r;
}

UniPoly build_poly(const WParam& w, const BigRat& s)
{
  if (s == 0)
    throw Error(ErrorCode::degenerate_parameter, "s = 0 gives X^2 (X-1)^3");
  BigRat c = w.c();
  if (c == 0)
    throw Error(ErrorCode::degenerate_parameter, "c(w) = 0 for w = " + w.to_string());
  // 2 (50 w^2 - 27)(10 w^2 + 8 w + 1) = -c
  UniPoly base = pow(UniPoly({0, 1}), 2) * pow(UniPoly({-1, 1}), 3);
  return base - (c * s * s) * UniPoly({-w.a(), 1});
}

PolyInT family_in_t(const WParam& w)
{
  BigInt P = -w.condition_product();
  BigInt w1sq = w.w1() * w.w1();
  BigInt w2sq = w.w2() * w.w2();
  std::vector<UniPoly> cx(6);
  cx[0] = UniPoly::monomial(BigRat(-4 * P * w1sq), 2);
  cx[1] = UniPoly::monomial(BigRat(2 * P * w2sq), 2);
  cx[2] = UniPoly::constant(-1);
  cx[3] = UniPoly::constant(3);
  cx[4] = UniPoly::constant(-3);
  cx[5] = UniPoly::constant(1);
  return PolyInT(std::move(cx));
}

PolyInT family_in_s(const WParam& w) { return family_in_t(w).rescale_t(make_rat(1, pow(w.w2(), 3))); }

BigRat s_from_t(const WParam& w, const BigRat& t) { return t * BigRat(pow(w.w2(), 3)); }

BigRat t_from_s(const WParam& w, const BigRat& s) { return s / BigRat(pow(w.w2(), 3)); }

SpecializationPlan specialization_plan(const WParam& w)
{
  SpecializationPlan plan;
  BigInt cube = pow(w.w2(), 3);
  bool w1_odd = mpz_odd_p(w.w1().get_mpz_t());
  bool w2_odd = mpz_odd_p(w.w2().get_mpz_t());
  if (w1_odd && !w2_odd) {
    plan.candidates.push_back({make_rat(cube, 4), "w2^3/4"});
  } else if (!w1_odd && w2_odd) {
    plan.candidates.push_back({BigRat(2 * cube), "2*w2^3"});
  } else {
    plan.candidates.push_back({BigRat(2 * cube), "2*w2^3"});
    plan.candidates.push_back({BigRat(6 * cube), "6*w2^3"});
    plan.needs_mod4_selection = true;
  }
  plan.corollary_family = w == WParam(-2, 3);
  return plan;
}

std::optional<PlanCandidate> select_plan_candidate(const WParam& w, const SpecializationPlan& plan,
                                                   const FactorBudget& budget)
{
  for (auto const& cand : plan.candidates) {
    BigRat d = discriminant(build_poly(w, cand.s0));
    if (d == 0)
      continue;
    // kernel of a rational equals the kernel of num * den
    auto sq = squarefree_kernel(BigInt(d.get_num() * d.get_den()), budget);
    if (mpz_odd_p(sq.kernel.get_mpz_t()) && mod(sq.kernel, 4) == 1)
      return cand;
  }
  return std::nullopt;
}

BigInt corollary_quad_disc(const BigInt& u)
{
  if (gcd(u, 30) != 1)
    throw Error(ErrorCode::not_coprime, "u = " + to_string(u) + " is not coprime to 30");
  BigInt u6 = pow(u, 6);
  BigInt n = pow(BigInt(2), 11) * pow(BigInt(3), 10) * pow(BigInt(43), 6) * u6 * u6 -
             pow(BigInt(43), 3) * 263 * 883 * u6 + 108;
  return -43 * n;
}

UniPoly branch_quadratic(const WParam& w)
{
  BigRat a = w.a();
  std::vector<UniPoly> cx(6);
  cx[0] = UniPoly({0, a});
  cx[1] = UniPoly({0, -1});
  cx[2] = UniPoly::constant(-1);
  cx[3] = UniPoly::constant(3);
  cx[4] = UniPoly::constant(-3);
  cx[5] = UniPoly::constant(1);
  UniPoly d = discriminant_in_t(PolyInT(std::move(cx)));
  while (!d.is_zero() && d.coeff(0) == 0)
    d = divmod(d, UniPoly({0, 1})).first;
  return d;
}

bool branch_conjugacy(const WParam& w)
{
  UniPoly q = branch_quadratic(w);
  if (q.degree() != 2)
    return false;
  BigRat disc = q.coeff(1) * q.coeff(1) - 4 * q.coeff(0) * q.coeff(2);
  if (disc < 0)
    return true;
  return !(is_square(disc.get_num()) && is_square(disc.get_den()));
}

namespace {

// Rationals u^3 / v^2 in (lo, hi), v <= max_v, ordered by (v, |u|).
std::optional<BigRat> cube_over_square(const std::optional<BigRat>& lo, const std::optional<BigRat>& hi,
                                       unsigned max_v)
{
  for (unsigned v = 1; v <= max_v; ++v) {
    BigInt v2 = BigInt(v) * v;
    // rough bracket for u, then exact filtering
    double dl = lo ? std::cbrt(lo->get_d() * v2.get_d()) : -1e300;
    double dh = hi ? std::cbrt(hi->get_d() * v2.get_d()) : 1e300;
    if (!lo)
      dl = dh - 2;
    if (!hi)
      dh = dl + 2;
    long ul = static_cast<long>(std::floor(dl)) - 1;
    long uh = static_cast<long>(std::ceil(dh)) + 1;
    std::optional<BigRat> best;
    for (long u = ul; u <= uh; ++u) {
      if (u == 0)
        continue;
      BigRat x = make_rat(BigInt(u) * u * u, v2);
      if ((lo && x <= *lo) || (hi && x >= *hi))
        continue;
      if (!best || abs(x) < abs(*best))
        best = x;
    }
    if (best)
      return best;
  }
  return std::nullopt;
}

}  // namespace

std::vector<SignatureSample> signature_samples(const WParam& w, unsigned max_v)
{
  UniPoly delta = squarefree_part(discriminant_in_t(family_in_s(w)));
  auto roots = isolate_real_roots(delta, make_rat(1, BigInt(1) << 24));
  std::vector<SignatureSample> out;
  for (std::size_t i = 0; i <= roots.size(); ++i) {
    std::optional<BigRat> lo, hi;
    if (i > 0)
      lo = roots[i - 1].second;
    if (i < roots.size())
      hi = roots[i].first;
    if (lo && hi && *lo >= *hi)
      continue;
    SignatureSample smp;
    smp.lo_infinite = !lo;
    smp.hi_infinite = !hi;
    if (lo)
      smp.lo = *lo;
    if (hi)
      smp.hi = *hi;
    auto s0 = cube_over_square(lo, hi, max_v);
    if (!s0) {
      if (lo && hi)
        s0 = (*lo + *hi) / 2;
      else if (lo)
        s0 = *lo + 1;
      else
        s0 = *hi - 1;
    }
    // the interval ends may be roots; the interior sample never is
    if (*s0 == 0 || delta(*s0) == 0)
      continue;
    smp.s0 = *s0;
    smp.real_roots = sturm_count(build_poly(w, *s0));
    out.push_back(smp);
  }
  return out;
}

std::vector<SignatureSample> totally_real_scan(const WParam& w, unsigned max_v)
{
  std::vector<SignatureSample> hits;
  for (auto const& smp : signature_samples(w, max_v))
    if (smp.real_roots == 5)
      hits.push_back(smp);
  if (hits.empty())
    throw Error(ErrorCode::window_empty, "no totally real specialization found for w = " + w.to_string());
  return hits;
}

}  // namespace qcert
