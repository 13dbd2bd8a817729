#include "qcert/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace qcert {

UniPoly::UniPoly(std::initializer_list<BigRat> coeffs)
: coeffs_(coeffs)
{
  trim();
}

UniPoly::UniPoly(std::vector<BigRat> coeffs)
: coeffs_(std::move(coeffs))
{
  trim();
}

UniPoly UniPoly::constant(const BigRat& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const BigRat& c, unsigned degree)
{
  std::vector<BigRat> v(degree + 1, BigRat(0));
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const BigRat& r) { return UniPoly({-r, BigRat(1)}); }

void UniPoly::trim()
{
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

BigRat UniPoly::coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : BigRat(0); }

BigRat UniPoly::leading() const { return coeffs_.empty() ? BigRat(0) : coeffs_.back(); }

BigRat UniPoly::operator()(const BigRat& x) const
{
  BigRat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const
{
  if (coeffs_.size() <= 1)
    return {};
  std::vector<BigRat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const
{
  if (is_zero())
    return {};
  UniPoly r = *this;
  BigRat inv = 1 / leading();
  for (auto& c : r.coeffs_)
    c *= inv;
  return r;
}

bool UniPoly::has_integer_coeffs() const
{
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRat& c) { return c.get_den() == 1; });
}

BigInt UniPoly::denominator_lcm() const
{
  BigInt l = 1;
  for (auto const& c : coeffs_)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

UniPoly& UniPoly::operator+=(const UniPoly& o)
{
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size(), BigRat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o)
{
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size(), BigRat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o)
{
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRat> r(coeffs_.size() + o.coeffs_.size() - 1, BigRat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const BigRat& c)
{
  for (auto& x : coeffs_)
    x *= c;
  trim();
  return *this;
}

UniPoly UniPoly::operator-() const
{
  UniPoly r = *this;
  for (auto& c : r.coeffs_)
    c = -c;
  return r;
}

std::string UniPoly::to_string(const std::string& var) const
{
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    BigRat c = coeffs_[i];
    if (c == 0)
      continue;
    bool neg = c < 0;
    BigRat a = neg ? BigRat(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool unit = a == 1;
    if (i == 0 || !unit)
      os << qcert::to_string(a);
    if (i > 0) {
      if (!unit)
        os << "*";
      os << var;
      if (i > 1)
        os << "^" << i;
    }
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b)
{
  if (b.is_zero())
    throw Error(ErrorCode::invalid_argument, "polynomial division by zero");
  if (a.degree() < b.degree())
    return {UniPoly{}, a};
  std::vector<BigRat> rem = a.coeffs();
  std::vector<BigRat> quot(a.degree() - b.degree() + 1, BigRat(0));
  BigRat inv = 1 / b.leading();
  int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    BigRat q = rem[i] * inv;
    if (q == 0)
      continue;
    quot[i - db] = q;
    for (int j = 0; j <= db; ++j)
      rem[i - db + j] -= q * b.coeffs()[j];
  }
  rem.resize(db);
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly pow(const UniPoly& f, unsigned e)
{
  UniPoly r = UniPoly::constant(1), base = f;
  while (e) {
    if (e & 1u)
      r *= base;
    e >>= 1u;
    if (e)
      base *= base;
  }
  return r;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b)
{
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly squarefree_part(const UniPoly& f)
{
  if (f.degree() <= 0)
    return f.monic();
  return divmod(f, gcd(f, f.derivative())).first.monic();
}

UniPoly compose(const UniPoly& f, const UniPoly& g)
{
  UniPoly acc;
  for (int i = f.degree(); i >= 0; --i) {
    acc *= g;
    acc += UniPoly::constant(f.coeffs()[i]);
  }
  return acc;
}

UniPoly shift_scale(const UniPoly& f, const BigRat& shift, const BigRat& scale, const BigRat& normalizer)
{
  if (scale == 0 || normalizer == 0)
    throw Error(ErrorCode::invalid_argument, "shift_scale needs nonzero scale and normalizer");
  return compose(f, UniPoly({shift, scale})) * BigRat(1 / normalizer);
}

BigRat resultant(const UniPoly& f_in, const UniPoly& g_in)
{
  if (f_in.is_zero() || g_in.is_zero())
    return 0;
  UniPoly f = f_in, g = g_in;
  BigRat acc = 1;
  for (;;) {
    int m = f.degree(), n = g.degree();
    if (n == 0)
      return acc * pow(g.leading(), static_cast<unsigned long>(m));
    if (m == 0)
      return acc * pow(f.leading(), static_cast<unsigned long>(n));
    if (m < n) {
      if ((m * n) % 2)
        acc = -acc;
      std::swap(f, g);
      continue;
    }
    UniPoly r = divmod(f, g).second;
    if (r.is_zero())
      return 0;
    int k = r.degree();
    if ((m * n) % 2)
      acc = -acc;
    acc *= pow(g.leading(), static_cast<unsigned long>(m - k));
    f = std::move(g);
    g = std::move(r);
  }
}

BigRat discriminant(const UniPoly& f)
{
  int d = f.degree();
  if (d < 1)
    throw Error(ErrorCode::invalid_argument, "discriminant needs degree >= 1");
  BigRat r = resultant(f, f.derivative()) / f.leading();
  return (d * (d - 1) / 2) % 2 ? BigRat(-r) : r;
}

// Sturm sequences

namespace {

std::vector<UniPoly> sturm_chain(const UniPoly& f)
{
  std::vector<UniPoly> chain;
  UniPoly g = squarefree_part(f);
  chain.push_back(g);
  chain.push_back(g.derivative());
  while (!chain.back().is_zero()) {
    UniPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

int variations(const std::vector<int>& signs)
{
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0)
      continue;
    if (last != 0 && s != last)
      ++v;
    last = s;
  }
  return v;
}

int variations_at(const std::vector<UniPoly>& chain, const RealBound& x, bool minus_infinity)
{
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (auto const& p : chain) {
    if (x) {
      signs.push_back(sgn(p(*x)));
    } else {
      int s = sgn(p.leading());
      if (minus_infinity && p.degree() % 2)
        s = -s;
      signs.push_back(s);
    }
  }
  return variations(signs);
}

BigRat cauchy_bound(const UniPoly& f)
{
  BigRat m = 0;
  BigRat lc = abs(f.leading());
  for (int i = 0; i < f.degree(); ++i)
    m = std::max(m, BigRat(abs(f.coeffs()[i]) / lc));
  return m + 1;
}

}  // namespace

int sturm_count(const UniPoly& f, const RealBound& lo, const RealBound& hi)
{
  if (f.is_zero())
    throw Error(ErrorCode::invalid_argument, "sturm_count of the zero polynomial");
  if (f.degree() == 0)
    return 0;
  if (lo && hi && *lo >= *hi)
    return 0;
  auto chain = sturm_chain(f);
  return variations_at(chain, lo, true) - variations_at(chain, hi, false);
}

std::vector<std::pair<BigRat, BigRat>> isolate_real_roots(const UniPoly& f, const BigRat& width)
{
  std::vector<std::pair<BigRat, BigRat>> out;
  if (f.degree() <= 0)
    return out;
  auto chain = sturm_chain(f);
  auto count = [&](const BigRat& a, const BigRat& b) {
    return variations_at(chain, a, true) - variations_at(chain, b, false);
  };
  BigRat bound = cauchy_bound(squarefree_part(f));
  std::vector<std::pair<BigRat, BigRat>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int c = count(a, b);
    if (c == 0)
      continue;
    if (c == 1 && b - a <= width) {
      out.emplace_back(a, b);
      continue;
    }
    BigRat mid = (a + b) / 2;
    stack.emplace_back(mid, b);
    stack.emplace_back(a, mid);
  }
  std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) { return x.first < y.first; });
  return out;
}

// PolyInT

PolyInT::PolyInT(std::vector<UniPoly> coeffs)
: coeffs_(std::move(coeffs))
{
  while (!coeffs_.empty() && coeffs_.back().is_zero())
    coeffs_.pop_back();
}

int PolyInT::degree_t() const
{
  int d = -1;
  for (auto const& c : coeffs_)
    d = std::max(d, c.degree());
  return d;
}

bool PolyInT::has_integer_coeffs() const
{
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const UniPoly& c) { return c.has_integer_coeffs(); });
}

UniPoly PolyInT::at(const BigRat& t0) const
{
  std::vector<BigRat> v;
  v.reserve(coeffs_.size());
  for (auto const& c : coeffs_)
    v.push_back(c(t0));
  return UniPoly(std::move(v));
}

PolyInT PolyInT::rescale_t(const BigRat& factor) const
{
  std::vector<UniPoly> v;
  for (auto const& c : coeffs_)
    v.push_back(compose(c, UniPoly({BigRat(0), factor})));
  return PolyInT(std::move(v));
}

PolyInT PolyInT::derivative_x() const
{
  std::vector<UniPoly> v;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    v.push_back(coeffs_[i] * BigRat(static_cast<unsigned long>(i)));
  return PolyInT(std::move(v));
}

namespace {

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b)
{
  auto [q, r] = divmod(a, b);
  if (!r.is_zero())
    throw Error(ErrorCode::invalid_argument, "inexact division in fraction-free elimination");
  return q;
}

// Bareiss elimination; every division is exact in Q[t].
UniPoly bareiss_determinant(std::vector<std::vector<UniPoly>> m)
{
  std::size_t n = m.size();
  if (n == 0)
    return UniPoly::constant(1);
  bool negate = false;
  UniPoly prev = UniPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t i = k + 1;
      while (i < n && m[i][k].is_zero())
        ++i;
      if (i == n)
        return {};
      std::swap(m[i], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = UniPoly{};
    }
    prev = m[k][k];
  }
  UniPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace

UniPoly discriminant_in_t(const PolyInT& F)
{
  int n = F.degree_x();
  if (n < 2)
    throw Error(ErrorCode::invalid_argument, "discriminant_in_t needs X-degree >= 2");
  PolyInT G = F.derivative_x();
  int m = n - 1;
  std::size_t size = static_cast<std::size_t>(n + m);
  std::vector<std::vector<UniPoly>> syl(size, std::vector<UniPoly>(size));
  // rows 0..m-1 shift F, rows m..m+n-1 shift F_X; columns by descending X power
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i)
      syl[r][r + (n - i)] = F.coeff(i);
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i)
      if (i <= G.degree_x())
        syl[m + r][r + (m - i)] = G.coeff(i);
  UniPoly res = bareiss_determinant(std::move(syl));
  UniPoly disc = exact_quotient(res, F.coeff(n));
  return (n * (n - 1) / 2) % 2 ? -disc : disc;
}

}  // namespace qcert
