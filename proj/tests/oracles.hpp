// Independent reference implementations used only by the tests. They are
// deliberately naive: dense determinants, trial division, brute force.
#ifndef QCERT_TESTS_ORACLES_HPP
#define QCERT_TESTS_ORACLES_HPP

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "qcert/exact_arith.hpp"
#include "qcert/modpoly.hpp"
#include "qcert/polynomial.hpp"

namespace oracle {

using qcert::BigInt;
using qcert::BigRat;
using qcert::UniPoly;

/// Determinant by Gaussian elimination over Q.
inline BigRat determinant(std::vector<std::vector<BigRat>> m)
{
  std::size_t n = m.size();
  BigRat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0)
      ++piv;
    if (piv == n)
      return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      BigRat factor = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k)
        m[r][k] -= factor * m[c][k];
    }
  }
  return det;
}

/// Sylvester matrix determinant, rows of f first (highest coefficient left).
inline BigRat sylvester_resultant(const UniPoly& f, const UniPoly& g)
{
  int m = f.degree(), n = g.degree();
  std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<BigRat>> s(size, std::vector<BigRat>(size, BigRat(0)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i)
      s[r][r + i] = f.coeff(static_cast<unsigned>(m - i));
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i)
      s[n + r][r + i] = g.coeff(static_cast<unsigned>(n - i));
  return determinant(s);
}

inline BigRat sylvester_discriminant(const UniPoly& f)
{
  int d = f.degree();
  BigRat r = sylvester_resultant(f, f.derivative()) / f.leading();
  return ((d * (d - 1) / 2) % 2) ? BigRat(-r) : r;
}

/// Prime factorization of |n| by trial division, n small.
inline std::map<std::uint64_t, unsigned> trial_factor(std::uint64_t n)
{
  std::map<std::uint64_t, unsigned> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  if (n > 1)
    ++out[n];
  return out;
}

inline bool trial_is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0)
      return false;
  return true;
}

/// Real roots of f counted from Durand-Kerner iterates in double precision:
/// a root is real when its imaginary part is below tol.
inline int float_real_roots(const UniPoly& f, double tol = 1e-6)
{
  int d = f.degree();
  std::vector<std::complex<double>> a(static_cast<std::size_t>(d + 1));
  double lc = f.leading().get_d();
  for (int i = 0; i <= d; ++i)
    a[static_cast<std::size_t>(i)] = f.coeff(static_cast<unsigned>(i)).get_d() / lc;
  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc = 0;
    for (int i = d; i >= 0; --i)
      acc = acc * x + a[static_cast<std::size_t>(i)];
    return acc;
  };
  std::vector<std::complex<double>> z(static_cast<std::size_t>(d));
  const std::complex<double> seed(0.4, 0.9);
  for (int i = 0; i < d; ++i)
    z[static_cast<std::size_t>(i)] = std::pow(seed, i);
  for (int iter = 0; iter < 5000; ++iter) {
    double moved = 0;
    for (int i = 0; i < d; ++i) {
      std::complex<double> denom = 1;
      for (int j = 0; j < d; ++j)
        if (j != i)
          denom *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      std::complex<double> step = eval(z[static_cast<std::size_t>(i)]) / denom;
      z[static_cast<std::size_t>(i)] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-14)
      break;
  }
  int real = 0;
  for (auto const& r : z)
    if (std::abs(r.imag()) < tol * std::max(1.0, std::abs(r)))
      ++real;
  return real;
}

/// Value of a mod-p polynomial at x, with p small.
inline std::uint64_t eval_mod(const qcert::ModPoly& f, std::uint64_t x)
{
  std::uint64_t p = f.p().get_ui();
  std::uint64_t acc = 0;
  for (int i = f.degree(); i >= 0; --i)
    acc = (acc * x + f.coeffs()[static_cast<std::size_t>(i)].get_ui()) % p;
  return acc;
}

/// Brute-force irreducibility for small p^(deg/2): no root, and no monic
/// factor of degree 2..deg/2 divides f. Returns false when f has a root.
inline bool brute_irreducible(const qcert::ModPoly& f)
{
  int d = f.degree();
  std::uint64_t p = f.p().get_ui();
  if (d <= 0)
    return false;
  if (d == 1)
    return true;
  for (std::uint64_t x = 0; x < p; ++x)
    if (eval_mod(f, x) == 0)
      return false;
  for (int k = 2; k <= d / 2; ++k) {
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i)
      count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<BigInt> c(static_cast<std::size_t>(k + 1));
      std::uint64_t rest = code;
      for (int i = 0; i < k; ++i) {
        c[static_cast<std::size_t>(i)] = rest % p;
        rest /= p;
      }
      c[static_cast<std::size_t>(k)] = 1;
      qcert::ModPoly g(f.p(), c);
      if (divmod(f, g).second.is_zero())
        return false;
    }
  }
  return true;
}

inline UniPoly random_poly(std::mt19937_64& rng, int degree, long lo, long hi, bool monic)
{
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<BigRat> c(static_cast<std::size_t>(degree + 1));
  for (auto& x : c)
    x = dist(rng);
  if (monic)
    c.back() = 1;
  while (c.back() == 0)
    c.back() = dist(rng);
  return UniPoly(std::move(c));
}

}  // namespace oracle

#endif
