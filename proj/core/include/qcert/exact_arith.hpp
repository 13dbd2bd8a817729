#ifndef QCERT_EXACT_ARITH_HPP
#define QCERT_EXACT_ARITH_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "qcert/error.hpp"

namespace qcert {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
BigRat make_rat(const BigInt& num, const BigInt& den = 1);

/// Accepts "p", "p/q" and finite decimals such as "-0.7348".
BigRat parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

std::string to_string(const BigInt& n);
std::string to_string(const BigRat& q);

int sign(const BigInt& n);
int sign(const BigRat& q);

/// Limits for factorize(). Exhausting any of them leaves an unfactored
/// composite cofactor and sets FactoredInteger::complete to false.
struct FactorBudget {
  std::uint64_t trial_bound = 1'000'000;
  std::uint64_t rho_iterations = 50'000'000;
  std::chrono::milliseconds wall_time{120'000};
  std::uint64_t seed = 0x51c0ffee;
};

struct FactoredInteger {
  int sign = 1;
  std::map<BigInt, unsigned> factors;
  BigInt cofactor = 1;
  bool complete = true;
  /// Prime keys above the deterministic Miller-Rabin range.
  std::set<BigInt> probable;

  BigInt value() const;
  unsigned exponent(const BigInt& p) const;
};

FactoredInteger factorize(const BigInt& n, const FactorBudget& budget = {});

enum class Primality { composite, prime, probable_prime };

/// Miller-Rabin on the first 13 prime bases, which is a proof below
/// 3.3e24 (so in particular for every n < 2^64). Larger inputs that pass
/// all bases plus 20 further fixed bases are reported as probable primes.
Primality primality(const BigInt& n);
bool is_prime(const BigInt& n);

/// Exponent of p in n; n != 0, p prime.
unsigned valuation(const BigInt& n, const BigInt& p);
/// v_p of a nonzero rational, possibly negative.
long valuation(const BigRat& q, const BigInt& p);

/// n = kernel * root^2 with kernel squarefree and sign(kernel) = sign(n).
struct SquarefreeDecomposition {
  BigInt kernel;
  BigInt root;
};

SquarefreeDecomposition squarefree_kernel(const FactoredInteger& f);
SquarefreeDecomposition squarefree_kernel(const BigInt& n, const FactorBudget& budget = {});

/// True iff every prime of the (positive) squarefree kernel is 1 mod 3.
/// Throws NegativeKernel when the kernel is negative.
bool all_primes_1_mod_3(const FactoredInteger& kernel);

/// Discriminant of Q(sqrt(kernel)): kernel if kernel = 1 mod 4, else 4 kernel.
BigInt fundamental_discriminant(const BigInt& squarefree_kernel);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned long e);
BigRat pow(const BigRat& base, unsigned long e);
bool is_square(const BigInt& n);
BigInt isqrt(const BigInt& n);
/// Least nonnegative residue.
BigInt mod(const BigInt& a, const BigInt& m);

}  // namespace qcert

#endif
