#include "qcert/local_certify.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "qcert/local_field.hpp"
#include "qcert/perm_group.hpp"

namespace qcert {

const char* to_string(InertiaClass c)
{
  switch (c) {
    case InertiaClass::unramified: return "unramified";
    case InertiaClass::transposition: return "transposition";
    case InertiaClass::other: return "other";
    case InertiaClass::undetermined: return "undetermined";
  }
  return "?";
}

const char* to_string(CertMethod m)
{
  switch (m) {
    case CertMethod::valuation_one: return "valuation-one";
    case CertMethod::dedekind_tame: return "dedekind-tame";
    case CertMethod::scaled_reduction: return "scaled-reduction";
    case CertMethod::separability: return "separability";
    case CertMethod::none: return "none";
  }
  return "?";
}

const char* to_string(CertStatus s)
{
  switch (s) {
    case CertStatus::certified: return "certified";
    case CertStatus::uncertified: return "uncertified";
    case CertStatus::failed: return "failed";
  }
  return "?";
}

namespace {

void require_monic_integer(const UniPoly& f)
{
  if (f.degree() < 2 || !f.has_integer_coeffs() || f.leading() != 1)
    throw Error(ErrorCode::invalid_argument, "expected a monic integer polynomial of degree >= 2");
}

DegreePattern with_extra_linear(const DegreePattern& pat, unsigned count)
{
  auto parts = pat.parts();
  for (unsigned i = 0; i < count; ++i)
    parts.emplace_back(1u, 1u);
  std::sort(parts.begin(), parts.end());
  return DegreePattern(std::move(parts));
}

void set_unramified(LocalCertificate& c, DegreePattern pattern, CertMethod method)
{
  c.inertia = InertiaClass::unramified;
  c.residual_pattern = std::move(pattern);
  c.decomposition_cyclic = true;
  c.obstruction_free = true;
  c.method = method;
  c.tame = true;
}

void set_transposition(LocalCertificate& c, DegreePattern residual, CertMethod method)
{
  c.inertia = InertiaClass::transposition;
  c.decomposition_cyclic = !residual.has_even_degree();
  c.obstruction_free = *c.decomposition_cyclic;
  c.residual_pattern = std::move(residual);
  c.method = method;
  c.tame = c.p != 2;
}

bool p_integral(const UniPoly& g, const BigInt& p)
{
  return std::all_of(g.coeffs().begin(), g.coeffs().end(),
                     [&](const BigRat& c) { return mpz_divisible_p(c.get_den_mpz_t(), p.get_mpz_t()) == 0; });
}

// A separable reduction of degree m >= n - 2 puts m roots in an unramified
// extension, so the inertia group lies in the group of the remaining pair.
bool try_plan(LocalCertificate& c, const UniPoly& f, const ReductionPlan& plan, const LocalInputs& in)
{
  const BigInt& p = c.p;
  UniPoly g = shift_scale(f, plan.shift, plan.scale, plan.normalizer);
  if (!p_integral(g, p))
    return false;
  ModPoly gbar = ModPoly::reduce(g, p);
  int n = f.degree();
  int m = gbar.degree();
  if (gbar.is_zero() || m < n - 2 || m < 1 || !is_separable(gbar))
    return false;
  DegreePattern pat = degree_pattern(gbar, in.seed);
  if (m >= n - 1) {
    set_unramified(c, with_extra_linear(pat, static_cast<unsigned>(n - m)), CertMethod::scaled_reduction);
    c.plan = plan;
    return true;
  }
  // inertia is trivial or a transposition; the transposition is odd, so it
  // shows up exactly when p ramifies in the quadratic subfield
  bool ramified;
  if (p != 2) {
    ramified = c.v_disc % 2 == 1;
  } else {
    if (!in.fundamental_disc)
      return false;
    ramified = mpz_even_p(in.fundamental_disc->get_mpz_t()) != 0;
  }
  if (ramified)
    set_transposition(c, pat, CertMethod::scaled_reduction);
  else
    set_unramified(c, pat, CertMethod::scaled_reduction);
  c.plan = plan;
  return true;
}

}  // namespace

LocalCertificate analyze_prime(const UniPoly& f, const BigInt& p, const LocalInputs& in)
{
  require_monic_integer(f);
  BigRat disc = discriminant(f);
  if (disc == 0)
    throw Error(ErrorCode::invalid_argument, "polynomial is not squarefree");
  LocalCertificate c;
  c.p = p;
  c.v_disc = valuation(disc.get_num(), p);

  auto factors = factor_mod_p(ModPoly::reduce(f, p), in.seed);
  if (c.v_disc == 0) {
    set_unramified(c, degree_pattern(factors), CertMethod::separability);
    return c;
  }
  if (c.v_disc == 1) {
    // f = (x - r)^2 * separable cofactor mod p
    std::vector<ModFactor> rest;
    for (auto const& fac : factors)
      if (fac.multiplicity == 1)
        rest.push_back(fac);
    set_transposition(c, degree_pattern(rest), CertMethod::valuation_one);
    return c;
  }
  for (auto const& plan : in.plans)
    if (plan.p == p && try_plan(c, f, plan, in))
      return c;
  if (p != 2 && dedekind_index_test(f, p, in.seed)) {
    // v_p of the field discriminant is v_disc >= 2, which a tame
    // transposition (contributing exactly 1) cannot produce
    c.inertia = InertiaClass::other;
    c.method = CertMethod::dedekind_tame;
    c.obstruction_free = false;
    c.tame = p > 5;
    return c;
  }
  if (auto split = local_splitting(f, p, in.seed)) {
    c.detail = split->to_string();
    if (split->unramified()) {
      set_unramified(c, split->unramified_pattern(), CertMethod::scaled_reduction);
    } else if (split->transposition_inertia()) {
      set_transposition(c, split->unramified_pattern(), CertMethod::scaled_reduction);
    } else {
      c.inertia = InertiaClass::other;
      c.method = CertMethod::scaled_reduction;
      c.obstruction_free = false;
      c.tame = split->tame_disc_valuation(p).has_value();
    }
    return c;
  }
  c.inertia = InertiaClass::undetermined;
  c.obstruction_free = false;
  return c;
}

LocalCertificate certify_prime(const UniPoly& f, const BigInt& p, const LocalInputs& in)
{
  if (p <= 5)
    throw Error(ErrorCode::wild_prime, "certify_prime needs p > 5, got " + to_string(p));
  return analyze_prime(f, p, in);
}

LocalCertificate certify_wild(const UniPoly& f, const BigInt& p, const LocalInputs& in)
{
  if (p != 2 && p != 3 && p != 5)
    throw Error(ErrorCode::invalid_argument, "certify_wild takes p in {2, 3, 5}");
  auto c = analyze_prime(f, p, in);
  if (c.inertia == InertiaClass::undetermined)
    throw Error(ErrorCode::inconclusive_reduction, "no reduction test settles p = " + to_string(p));
  return c;
}

bool generation_fact_32()
{
  static const bool fact = verify_32_generation();
  return fact;
}

GaloisCertificate galois_s5(const UniPoly& f, unsigned long bound, std::uint64_t seed)
{
  require_monic_integer(f);
  if (f.degree() != 5)
    throw Error(ErrorCode::invalid_argument, "galois_s5 takes a quintic");
  BigInt disc = discriminant(f).get_num();
  const DegreePattern p23({{2, 1}, {3, 1}});
  const DegreePattern p5({{5, 1}});
  const DegreePattern p41({{1, 1}, {4, 1}});

  std::optional<FrobeniusWitness> w23, w5or41;
  std::optional<BigInt> irreducible;
  bool seen41 = false;
  for (unsigned long q = 2; q < bound; ++q) {
    BigInt p = q;
    if (!is_prime(p) || mpz_divisible_p(disc.get_mpz_t(), p.get_mpz_t()))
      continue;
    DegreePattern pat = degree_pattern(ModPoly::reduce(f, p), seed);
    if (pat == p23 && !w23)
      w23 = FrobeniusWitness{p, pat};
    if ((pat == p5 || pat == p41) && !w5or41)
      w5or41 = FrobeniusWitness{p, pat};
    if (pat == p41)
      seen41 = true;
    if (pat == p5 && !irreducible)
      irreducible = p;
    if (w23 && w5or41 && irreducible)
      break;
  }
  if (!w23 || !w5or41)
    throw Error(ErrorCode::witness_not_found,
                "no cycle types (3,2) and (5) or (4,1) among primes below " + std::to_string(bound));
  GaloisCertificate g;
  g.witnesses = {*w23, *w5or41};
  g.irreducible_witness = irreducible;
  if (irreducible)
    g.irreducibility_method = "irreducible-mod-p";
  else if (seen41)
    // rational factor degrees must refine into both {2,3} and {4,1}
    g.irreducibility_method = "incompatible-patterns";
  g.generation_fact = generation_fact_32();
  g.s5 = g.generation_fact && !g.irreducibility_method.empty();
  return g;
}

namespace {

UniPoly primitive_integer(const UniPoly& f)
{
  UniPoly g = f * BigRat(f.denominator_lcm());
  BigInt content = 0;
  for (auto const& c : g.coeffs())
    content = gcd(content, c.get_num());
  if (content != 0)
    g *= make_rat(1, content);
  return g;
}

unsigned distinct_roots_mod(const UniPoly& f, const BigInt& p)
{
  unsigned n = 0;
  for (auto const& fac : factor_mod_p(ModPoly::reduce(f, p)))
    n += static_cast<unsigned>(fac.factor.degree());
  return n;
}

void add_prime_divisors(ExceptionalSet& out, const BigInt& n, const FactorBudget& budget)
{
  if (n == 0)
    return;
  auto fi = factorize(n, budget);
  for (auto const& [p, e] : fi.factors)
    out.primes.insert(p);
  if (!fi.complete)
    out.complete = false;
}

}  // namespace

ExceptionalSet exceptional_set(const PolyInT& F, unsigned long group_order, const FactorBudget& budget)
{
  if (!F.has_integer_coeffs())
    throw Error(ErrorCode::invalid_argument, "exceptional_set needs integer coefficients");
  UniPoly delta = discriminant_in_t(F);
  if (delta.is_zero())
    throw Error(ErrorCode::invalid_argument, "discriminant in t vanishes identically");
  delta *= BigRat(delta.denominator_lcm());

  ExceptionalSet out;
  add_prime_divisors(out, BigInt(group_order), budget);
  add_prime_divisors(out, delta.leading().get_num(), budget);

  // distinct roots can only merge at primes dividing disc of the radical
  UniPoly radical = primitive_integer(squarefree_part(delta));
  unsigned roots = static_cast<unsigned>(radical.degree());
  ExceptionalSet candidates;
  if (radical.degree() >= 2)
    add_prime_divisors(candidates, discriminant(radical).get_num(), budget);
  add_prime_divisors(candidates, radical.leading().get_num(), budget);
  if (!candidates.complete)
    out.complete = false;
  for (auto const& p : candidates.primes) {
    if (out.primes.count(p))
      continue;
    if (distinct_roots_mod(delta, p) < roots)
      out.primes.insert(p);
  }
  return out;
}

unsigned intersection_multiplicity(const std::optional<UniPoly>& minpoly, const BigRat& t0, const BigInt& p)
{
  const BigInt& a = t0.get_num();
  const BigInt& b = t0.get_den();
  BigInt value;
  if (!minpoly) {
    value = b;
  } else {
    if (!minpoly->has_integer_coeffs())
      throw Error(ErrorCode::invalid_argument, "minimal polynomial must have integer coefficients");
    int d = minpoly->degree();
    value = 0;
    for (int i = 0; i <= d; ++i)
      value += minpoly->coeffs()[i].get_num() * pow(a, i) * pow(b, d - i);
  }
  if (value == 0)
    throw Error(ErrorCode::branch_point, "t0 = " + to_string(t0) + " is the branch point");
  return valuation(value, p);
}

std::vector<ReductionPlan> builtin_plans(const WParam& w, const BigRat& s0)
{
  std::vector<ReductionPlan> plans;
  plans.push_back({BigInt(2), BigRat(1), BigRat(-2), BigRat(8), "mod-2 shift 1-2X"});
  BigRat t = t_from_s(w, s0);
  if (w == WParam(-2, 3) && t.get_den() == 1 && t != 0 && mpz_divisible_ui_p(t.get_num_mpz_t(), 86)) {
    BigInt q = t.get_num() / 86;
    unsigned v = valuation(q, BigInt(43));
    if (v % 3 == 0) {
      unsigned long d = v / 3;
      plans.push_back({BigInt(43), BigRat(1), BigRat(-pow(BigInt(43), 2 * d + 1)), BigRat(pow(BigInt(43), 6 * d + 3)),
                       "mod-43 shift 1-43^" + std::to_string(2 * d + 1) + "X"});
    }
  }
  return plans;
}

IntegralModel integral_model(const UniPoly& f, const FactorBudget& budget)
{
  if (f.leading() != 1)
    throw Error(ErrorCode::invalid_argument, "integral_model needs a monic polynomial");
  int n = f.degree();
  BigInt d = 1;
  for (int i = 0; i < n; ++i) {
    const BigInt& den = f.coeffs()[i].get_den();
    if (den == 1)
      continue;
    auto fi = factorize(den, budget);
    if (!fi.complete) {
      d = f.denominator_lcm();
      break;
    }
    for (auto const& [q, e] : fi.factors) {
      unsigned need = (e + (n - i) - 1) / (n - i);
      if (valuation(d, q) < need)
        d *= pow(q, need - valuation(d, q));
    }
  }
  std::vector<BigRat> g(n + 1);
  for (int i = 0; i <= n; ++i)
    g[i] = f.coeffs()[i] * BigRat(pow(d, n - i));
  return {d, UniPoly(std::move(g))};
}

ReductionPlan transport_plan(const ReductionPlan& plan, const IntegralModel& model, int degree)
{
  ReductionPlan out = plan;
  BigRat d(model.scale);
  out.shift = plan.shift * d;
  out.scale = plan.scale * d;
  out.normalizer = plan.normalizer * pow(d, degree);
  return out;
}

namespace {

const ExceptionalSet& cached_exceptional_set(const WParam& w, const FactorBudget& budget)
{
  static std::mutex mu;
  static std::map<std::pair<BigInt, BigInt>, ExceptionalSet> cache;
  std::lock_guard lock(mu);
  auto key = std::pair(w.w1(), w.w2());
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, exceptional_set(family_in_t(w), 120, budget)).first;
  return it->second;
}

}  // namespace

SpecializationCertificate certify_specialization(const WParam& w, const BigRat& s0, const CertifyConfig& config)
{
  if (s0 == 0)
    throw Error(ErrorCode::branch_point, "s0 = 0 is a branch point");
  FactorBudget budget = config.budget;
  budget.seed = config.seed;

  SpecializationCertificate cert;
  cert.w = w;
  cert.s0 = s0;
  cert.t0 = t_from_s(w, s0);
  cert.seed = config.seed;
  cert.f = build_poly(w, s0);
  cert.disc = discriminant(cert.f);
  if (cert.disc == 0)
    throw Error(ErrorCode::branch_point, "disc f vanishes at s0 = " + to_string(s0));

  cert.model = integral_model(cert.f, budget);
  const UniPoly& g = cert.model.poly;
  int n = g.degree();
  cert.disc_factors = factorize(discriminant(g).get_num(), budget);
  try {
    cert.kernel = squarefree_kernel(cert.disc_factors).kernel;
    cert.fundamental_disc = fundamental_discriminant(*cert.kernel);
    cert.two_ramified_in_quadratic = mpz_even_p(cert.fundamental_disc->get_mpz_t()) != 0;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::incomplete_factorization)
      throw;
  }
  cert.real_roots = sturm_count(cert.f);
  cert.complex_pairs = (n - cert.real_roots) / 2;

  std::vector<std::string> failures, gaps;
  if (!cert.disc_factors.complete)
    gaps.push_back("discriminant not fully factored");

  try {
    cert.galois = galois_s5(g, config.witness_bound, config.seed);
    cert.irreducible_witness = cert.galois->irreducible_witness;
    cert.irreducibility_method = cert.galois->irreducibility_method;
    if (!cert.galois->s5)
      gaps.push_back("S5 not established");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::witness_not_found)
      throw;
    gaps.push_back(e.what());
  }

  std::set<BigInt> primes{BigInt(2), BigInt(3), BigInt(5)};
  auto const& exc = cached_exceptional_set(w, budget);
  primes.insert(exc.primes.begin(), exc.primes.end());
  for (auto const& [p, e] : cert.disc_factors.factors)
    primes.insert(p);

  LocalInputs in;
  in.fundamental_disc = cert.fundamental_disc;
  in.seed = config.seed;
  for (auto const& plan : builtin_plans(w, s0))
    in.plans.push_back(transport_plan(plan, cert.model, n));
  for (auto const& plan : config.extra_plans)
    in.plans.push_back(transport_plan(plan, cert.model, n));

  for (auto const& p : primes) {
    LocalCertificate lc = analyze_prime(g, p, in);
    std::string at = " at " + to_string(p);
    switch (lc.inertia) {
      case InertiaClass::undetermined: gaps.push_back("inertia undetermined" + at); break;
      case InertiaClass::other: failures.push_back("inertia not generated by a transposition" + at); break;
      case InertiaClass::transposition:
        if (!lc.tame)
          failures.push_back("wild transposition inertia" + at);
        if (lc.decomposition_cyclic != true)
          failures.push_back("decomposition group C2 x C2" + at);
        break;
      case InertiaClass::unramified: break;
    }
    cert.locals.push_back(std::move(lc));
  }

  auto join = [](const std::vector<std::string>& parts) {
    std::string s;
    for (auto const& x : parts)
      s += (s.empty() ? "" : "; ") + x;
    return s;
  };
  if (!failures.empty()) {
    cert.status = CertStatus::failed;
    cert.reason = join(failures);
  } else if (!gaps.empty()) {
    cert.status = CertStatus::uncertified;
    cert.reason = join(gaps);
  } else {
    cert.status = CertStatus::certified;
  }
  return cert;
}

}  // namespace qcert
