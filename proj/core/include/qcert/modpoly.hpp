#ifndef QCERT_MODPOLY_HPP
#define QCERT_MODPOLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcert/exact_arith.hpp"
#include "qcert/polynomial.hpp"

namespace qcert {

/// Polynomial over the prime field F_p, coefficients in [0, p), low degree first.
class ModPoly {
public:
  ModPoly(BigInt p, std::vector<BigInt> coeffs);
  explicit ModPoly(BigInt p)
  : p_(std::move(p))
  {}

  /// Reduction of a p-integral rational polynomial; throws if some
  /// denominator is divisible by p.
  static ModPoly reduce(const UniPoly& f, const BigInt& p);
  static ModPoly x(const BigInt& p);
  static ModPoly constant(const BigInt& p, const BigInt& c);

  const BigInt& p() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(unsigned i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  BigInt leading() const { return c_.empty() ? BigInt(0) : c_.back(); }

  ModPoly monic() const;
  ModPoly derivative() const;
  /// Coefficients as integers in [0, p).
  UniPoly lift() const;

  ModPoly& operator+=(const ModPoly& o);
  ModPoly& operator-=(const ModPoly& o);
  ModPoly& operator*=(const ModPoly& o);
  friend ModPoly operator+(ModPoly a, const ModPoly& b) { return a += b; }
  friend ModPoly operator-(ModPoly a, const ModPoly& b) { return a -= b; }
  friend ModPoly operator*(ModPoly a, const ModPoly& b) { return a *= b; }
  friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  friend bool operator<(const ModPoly& a, const ModPoly& b);

  std::string to_string(const std::string& var = "X") const;

private:
  void normalize();
  BigInt p_;
  std::vector<BigInt> c_;
};

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
ModPoly gcd(const ModPoly& a, const ModPoly& b);
/// base^e mod modulus.
ModPoly powmod(const ModPoly& base, const BigInt& e, const ModPoly& modulus);

bool is_separable(const ModPoly& f);
/// Rabin's test: X^(p^n) = X mod f and gcd(X^(p^(n/q)) - X, f) = 1 for prime q | n.
bool is_irreducible(const ModPoly& f);

struct ModFactor {
  ModPoly factor;
  unsigned multiplicity;
};

/// Complete factorization into monic irreducibles: squarefree decomposition,
/// distinct-degree splitting, then seeded Cantor-Zassenhaus. Factors are
/// sorted by (degree, coefficients); the unit lc(f) is dropped.
std::vector<ModFactor> factor_mod_p(const ModPoly& f, std::uint64_t seed = 0);

/// Multiset of (irreducible degree, multiplicity) pairs, sorted.
class DegreePattern {
public:
  DegreePattern() = default;
  explicit DegreePattern(std::vector<std::pair<unsigned, unsigned>> parts);

  const std::vector<std::pair<unsigned, unsigned>>& parts() const { return parts_; }
  unsigned total_degree() const;
  bool separable() const;
  bool has_even_degree() const;
  /// Irreducible degrees with multiplicity expanded, descending; for a
  /// separable pattern this is a Frobenius cycle type.
  std::vector<unsigned> degrees() const;
  /// "{2,3}" for separable patterns, "{1^2,3}" when multiplicities appear.
  std::string to_string() const;

  friend bool operator==(const DegreePattern&, const DegreePattern&) = default;

private:
  std::vector<std::pair<unsigned, unsigned>> parts_;
};

DegreePattern degree_pattern(const std::vector<ModFactor>& factors);
DegreePattern degree_pattern(const ModPoly& f, std::uint64_t seed = 0);

/// Dedekind criterion for a monic integer polynomial: true when p does
/// not divide [O_K : Z[theta]].
bool dedekind_index_test(const UniPoly& f, const BigInt& p, std::uint64_t seed = 0);

}  // namespace qcert

#endif
