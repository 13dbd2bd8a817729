#ifndef QCERT_POLYNOMIAL_HPP
#define QCERT_POLYNOMIAL_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcert/exact_arith.hpp"

namespace qcert {

/// Dense univariate polynomial with exact rational coefficients, stored
/// low degree first. The zero polynomial has no coefficients and degree -1.
class UniPoly {
public:
  UniPoly() = default;
  UniPoly(std::initializer_list<BigRat> coeffs);
  explicit UniPoly(std::vector<BigRat> coeffs);

  static UniPoly constant(const BigRat& c);
  static UniPoly monomial(const BigRat& c, unsigned degree);
  /// X - r
  static UniPoly linear_root(const BigRat& r);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of X^i, zero past the degree.
  BigRat coeff(unsigned i) const;
  BigRat leading() const;
  const std::vector<BigRat>& coeffs() const { return coeffs_; }

  BigRat operator()(const BigRat& x) const;

  UniPoly derivative() const;
  UniPoly monic() const;
  bool has_integer_coeffs() const;
  /// Positive lcm of coefficient denominators.
  BigInt denominator_lcm() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const BigRat& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const BigRat& c) { return a *= c; }
  friend UniPoly operator*(const BigRat& c, UniPoly a) { return a *= c; }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "X") const;

private:
  void trim();
  std::vector<BigRat> coeffs_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly pow(const UniPoly& f, unsigned e);
/// Monic gcd (zero only if both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// f / gcd(f, f'), made monic.
UniPoly squarefree_part(const UniPoly& f);
/// f(g(X))
UniPoly compose(const UniPoly& f, const UniPoly& g);

/// normalizer^-1 * f(shift + scale X).
UniPoly shift_scale(const UniPoly& f, const BigRat& shift, const BigRat& scale, const BigRat& normalizer);

/// Resultant with the Sylvester-determinant convention
/// res(f, g) = lc(f)^deg g * prod g(roots of f).
BigRat resultant(const UniPoly& f, const UniPoly& g);

/// (-1)^(d(d-1)/2) res(f, f') / lc(f); disc(X^2 + 1) = -4.
BigRat discriminant(const UniPoly& f);

/// Bound for sturm_count; an empty bound is -infinity (lo) or +infinity (hi).
using RealBound = std::optional<BigRat>;

/// Number of distinct real roots in (lo, hi]. Works for any nonzero f;
/// the Sturm chain is built on the squarefree part.
int sturm_count(const UniPoly& f, const RealBound& lo = std::nullopt, const RealBound& hi = std::nullopt);

/// Disjoint rational intervals (lo, hi], each containing exactly one real
/// root of f and of width at most `width`, in increasing order.
std::vector<std::pair<BigRat, BigRat>> isolate_real_roots(const UniPoly& f, const BigRat& width);

/// Polynomial in X whose coefficients are polynomials in a parameter t:
/// coeffs()[i] is the coefficient of X^i.
class PolyInT {
public:
  PolyInT() = default;
  explicit PolyInT(std::vector<UniPoly> coeffs);

  int degree_x() const { return static_cast<int>(coeffs_.size()) - 1; }
  int degree_t() const;
  const std::vector<UniPoly>& coeffs() const { return coeffs_; }
  const UniPoly& coeff(unsigned i) const { return coeffs_.at(i); }
  bool has_integer_coeffs() const;

  /// Specializes t = t0.
  UniPoly at(const BigRat& t0) const;
  /// Substitutes t -> factor * t.
  PolyInT rescale_t(const BigRat& factor) const;
  PolyInT derivative_x() const;

private:
  std::vector<UniPoly> coeffs_;
};

/// Discriminant with respect to X, as a polynomial in t, computed by a
/// fraction-free determinant of the Sylvester matrix over Q[t].
UniPoly discriminant_in_t(const PolyInT& F);

}  // namespace qcert

#endif
