#include "qcert/modpoly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace qcert {

ModPoly::ModPoly(BigInt p, std::vector<BigInt> coeffs)
: p_(std::move(p)), c_(std::move(coeffs))
{
  normalize();
}

void ModPoly::normalize()
{
  for (auto& c : c_)
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p_.get_mpz_t());
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

ModPoly ModPoly::reduce(const UniPoly& f, const BigInt& p)
{
  std::vector<BigInt> v;
  v.reserve(f.coeffs().size());
  for (auto const& q : f.coeffs()) {
    BigInt den = q.get_den(), inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw Error(ErrorCode::invalid_argument, "coefficient not " + qcert::to_string(p) + "-integral");
    v.push_back(q.get_num() * inv);
  }
  return ModPoly(p, std::move(v));
}

ModPoly ModPoly::x(const BigInt& p) { return ModPoly(p, {BigInt(0), BigInt(1)}); }

ModPoly ModPoly::constant(const BigInt& p, const BigInt& c) { return ModPoly(p, {c}); }

ModPoly ModPoly::monic() const
{
  if (is_zero())
    return *this;
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), leading().get_mpz_t(), p_.get_mpz_t());
  std::vector<BigInt> v = c_;
  for (auto& c : v)
    c *= inv;
  return ModPoly(p_, std::move(v));
}

ModPoly ModPoly::derivative() const
{
  if (c_.size() <= 1)
    return ModPoly(p_);
  std::vector<BigInt> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    v[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return ModPoly(p_, std::move(v));
}

UniPoly ModPoly::lift() const
{
  std::vector<BigRat> v(c_.begin(), c_.end());
  return UniPoly(std::move(v));
}

ModPoly& ModPoly::operator+=(const ModPoly& o)
{
  if (o.c_.size() > c_.size())
    c_.resize(o.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] += o.c_[i];
  normalize();
  return *this;
}

ModPoly& ModPoly::operator-=(const ModPoly& o)
{
  if (o.c_.size() > c_.size())
    c_.resize(o.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] -= o.c_[i];
  normalize();
  return *this;
}

ModPoly& ModPoly::operator*=(const ModPoly& o)
{
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  normalize();
  return *this;
}

bool operator<(const ModPoly& a, const ModPoly& b)
{
  if (a.degree() != b.degree())
    return a.degree() < b.degree();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::string ModPoly::to_string(const std::string& var) const
{
  return lift().to_string(var);
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b)
{
  if (b.is_zero())
    throw Error(ErrorCode::invalid_argument, "ModPoly division by zero");
  const BigInt& p = a.p();
  if (a.degree() < b.degree())
    return {ModPoly(p), a};
  std::vector<BigInt> rem = a.coeffs();
  std::vector<BigInt> quot(a.degree() - b.degree() + 1, BigInt(0));
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), b.leading().get_mpz_t(), p.get_mpz_t());
  int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    BigInt q = rem[i] * inv % p;
    if (q == 0)
      continue;
    quot[i - db] = q;
    for (int j = 0; j <= db; ++j) {
      rem[i - db + j] -= q * b.coeffs()[j];
      mpz_mod(rem[i - db + j].get_mpz_t(), rem[i - db + j].get_mpz_t(), p.get_mpz_t());
    }
  }
  rem.resize(db);
  return {ModPoly(p, std::move(quot)), ModPoly(p, std::move(rem))};
}

ModPoly gcd(const ModPoly& a, const ModPoly& b)
{
  ModPoly x = a, y = b;
  while (!y.is_zero()) {
    ModPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ModPoly powmod(const ModPoly& base, const BigInt& e, const ModPoly& modulus)
{
  ModPoly result = ModPoly::constant(base.p(), 1);
  ModPoly b = divmod(base, modulus).second;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, modulus).second;
    if (mpz_tstbit(e.get_mpz_t(), i))
      result = divmod(result * b, modulus).second;
  }
  return divmod(result, modulus).second;
}

bool is_separable(const ModPoly& f)
{
  if (f.degree() <= 0)
    return true;
  return gcd(f, f.derivative()).degree() == 0;
}

namespace {

std::vector<unsigned> prime_divisors(unsigned n)
{
  std::vector<unsigned> out;
  for (unsigned q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0)
        n /= q;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

// X^(p^k) mod f by repeated p-th powering.
ModPoly frobenius_power(const ModPoly& f, unsigned k)
{
  ModPoly h = divmod(ModPoly::x(f.p()), f).second;
  for (unsigned i = 0; i < k; ++i)
    h = powmod(h, f.p(), f);
  return h;
}

}  // namespace

bool is_irreducible(const ModPoly& f_in)
{
  if (f_in.degree() <= 0)
    return false;
  ModPoly f = f_in.monic();
  unsigned n = static_cast<unsigned>(f.degree());
  if (n == 1)
    return true;
  ModPoly x = ModPoly::x(f.p());
  if (!(frobenius_power(f, n) == divmod(x, f).second))
    return false;
  for (unsigned q : prime_divisors(n)) {
    ModPoly h = frobenius_power(f, n / q) - x;
    if (gcd(f, h).degree() != 0)
      return false;
  }
  return true;
}

// factorization

namespace {

// p-th root of a polynomial whose derivative vanishes: f = g(X^p) and
// a^(1/p) = a on F_p.
ModPoly pth_root(const ModPoly& f)
{
  unsigned long p = f.p().get_ui();
  std::vector<BigInt> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p)
    v.push_back(f.coeffs()[i]);
  return ModPoly(f.p(), std::move(v));
}

void squarefree_decomposition(const ModPoly& f, unsigned scale, std::vector<ModFactor>& out)
{
  if (f.degree() <= 0)
    return;
  ModPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree_decomposition(pth_root(f), scale * static_cast<unsigned>(f.p().get_ui()), out);
    return;
  }
  ModPoly c = gcd(f, d);
  ModPoly w = divmod(f, c).first.monic();
  unsigned i = 1;
  while (w.degree() > 0) {
    ModPoly y = gcd(w, c);
    ModPoly fac = divmod(w, y).first.monic();
    if (fac.degree() > 0)
      out.push_back({fac, i * scale});
    w = y;
    c = divmod(c, y).first.monic();
    ++i;
  }
  if (c.degree() > 0)
    squarefree_decomposition(pth_root(c), scale * static_cast<unsigned>(f.p().get_ui()), out);
}

ModPoly random_poly(const BigInt& p, int degree_below, std::mt19937_64& rng)
{
  std::vector<BigInt> v(static_cast<std::size_t>(degree_below));
  for (auto& c : v) {
    BigInt r = BigInt(static_cast<unsigned long>(rng())) * BigInt(static_cast<unsigned long>(rng())) +
               BigInt(static_cast<unsigned long>(rng()));
    c = r % p;
  }
  return ModPoly(p, std::move(v));
}

// Splits squarefree g, all of whose irreducible factors have degree d.
void equal_degree_split(const ModPoly& g, unsigned d, std::mt19937_64& rng, std::vector<ModPoly>& out)
{
  if (static_cast<unsigned>(g.degree()) == d) {
    out.push_back(g.monic());
    return;
  }
  const BigInt& p = g.p();
  for (;;) {
    ModPoly a = random_poly(p, g.degree(), rng);
    if (a.degree() <= 0)
      continue;
    ModPoly b(p);
    if (p == 2) {
      ModPoly term = a;
      b = a;
      for (unsigned i = 1; i < d; ++i) {
        term = divmod(term * term, g).second;
        b += term;
      }
    } else {
      BigInt e = (pow(p, d) - 1) / 2;
      b = powmod(a, e, g) - ModPoly::constant(p, 1);
    }
    ModPoly h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree_split(h, d, rng, out);
      equal_degree_split(divmod(g, h).first.monic(), d, rng, out);
      return;
    }
  }
}

void distinct_degree_split(const ModPoly& f_in, std::mt19937_64& rng, std::vector<ModPoly>& out)
{
  ModPoly f = f_in.monic();
  ModPoly x = ModPoly::x(f.p());
  ModPoly h = divmod(x, f).second;
  for (unsigned d = 1; f.degree() >= 2 * static_cast<int>(d); ++d) {
    h = powmod(h, f.p(), f);
    ModPoly g = gcd(f, h - x);
    if (g.degree() > 0) {
      equal_degree_split(g, d, rng, out);
      f = divmod(f, g).first.monic();
      h = divmod(h, f).second;
    }
  }
  if (f.degree() > 0)
    out.push_back(f);
}

}  // namespace

std::vector<ModFactor> factor_mod_p(const ModPoly& f, std::uint64_t seed)
{
  if (f.is_zero())
    throw Error(ErrorCode::invalid_argument, "factor_mod_p of zero");
  std::vector<ModFactor> sqf;
  squarefree_decomposition(f.monic(), 1, sqf);

  std::seed_seq seq{seed, static_cast<std::uint64_t>(f.degree()), static_cast<std::uint64_t>(mpz_get_ui(f.p().get_mpz_t()))};
  std::mt19937_64 rng(seq);

  std::vector<ModFactor> out;
  for (auto const& [part, mult] : sqf) {
    std::vector<ModPoly> irreducibles;
    distinct_degree_split(part, rng, irreducibles);
    for (auto& q : irreducibles)
      out.push_back({std::move(q), mult});
  }
  std::sort(out.begin(), out.end(), [](const ModFactor& a, const ModFactor& b) {
    if (a.factor == b.factor)
      return a.multiplicity < b.multiplicity;
    return a.factor < b.factor;
  });
  return out;
}

// DegreePattern

DegreePattern::DegreePattern(std::vector<std::pair<unsigned, unsigned>> parts)
: parts_(std::move(parts))
{
  std::sort(parts_.begin(), parts_.end());
}

unsigned DegreePattern::total_degree() const
{
  unsigned n = 0;
  for (auto [d, m] : parts_)
    n += d * m;
  return n;
}

bool DegreePattern::separable() const
{
  return std::all_of(parts_.begin(), parts_.end(), [](auto const& dm) { return dm.second == 1; });
}

bool DegreePattern::has_even_degree() const
{
  return std::any_of(parts_.begin(), parts_.end(), [](auto const& dm) { return dm.first % 2 == 0; });
}

std::vector<unsigned> DegreePattern::degrees() const
{
  std::vector<unsigned> out;
  for (auto [d, m] : parts_)
    for (unsigned i = 0; i < m; ++i)
      out.push_back(d);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::string DegreePattern::to_string() const
{
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto [d, m] : parts_) {
    if (!first)
      os << ",";
    first = false;
    os << d;
    if (m > 1)
      os << "^" << m;
  }
  os << "}";
  return os.str();
}

DegreePattern degree_pattern(const std::vector<ModFactor>& factors)
{
  std::vector<std::pair<unsigned, unsigned>> parts;
  for (auto const& f : factors)
    parts.emplace_back(static_cast<unsigned>(f.factor.degree()), f.multiplicity);
  return DegreePattern(std::move(parts));
}

DegreePattern degree_pattern(const ModPoly& f, std::uint64_t seed)
{
  return degree_pattern(factor_mod_p(f, seed));
}

bool dedekind_index_test(const UniPoly& f, const BigInt& p, std::uint64_t seed)
{
  if (!f.has_integer_coeffs() || f.leading() != 1)
    throw Error(ErrorCode::invalid_argument, "dedekind_index_test needs a monic integer polynomial");
  auto factors = factor_mod_p(ModPoly::reduce(f, p), seed);
  UniPoly g = UniPoly::constant(1), h = UniPoly::constant(1);
  for (auto const& [phi, e] : factors) {
    UniPoly lifted = phi.lift();
    g *= lifted;
    h *= pow(lifted, e - 1);
  }
  UniPoly m = f - g * h;
  for (auto const& c : m.coeffs())
    if (c.get_num() % p != 0)
      throw Error(ErrorCode::invalid_argument, "internal: f - gh not divisible by p");
  m *= make_rat(1, p);
  ModPoly common = gcd(gcd(ModPoly::reduce(g, p), ModPoly::reduce(h, p)), ModPoly::reduce(m, p));
  return common.degree() == 0;
}

}  // namespace qcert
