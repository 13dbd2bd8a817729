#include "qcert/exact_arith.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <memory>
#include <mutex>
#include <random>
#include <vector>

namespace qcert {

const char* to_string(ErrorCode code)
{
  switch (code) {
  case ErrorCode::invalid_argument: return "InvalidArgument";
  case ErrorCode::incomplete_factorization: return "IncompleteFactorization";
  case ErrorCode::negative_kernel: return "NegativeKernel";
  case ErrorCode::wild_prime: return "WildPrime";
  case ErrorCode::inconclusive_reduction: return "InconclusiveReduction";
  case ErrorCode::element_not_in_group: return "ElementNotInGroup";
  case ErrorCode::witness_not_found: return "WitnessNotFound";
  case ErrorCode::degenerate_parameter: return "DegenerateParameter";
  case ErrorCode::branch_point: return "BranchPoint";
  case ErrorCode::not_coprime: return "NotCoprime";
  case ErrorCode::window_empty: return "WindowEmpty";
  }
  return "Unknown";
}

BigRat make_rat(const BigInt& num, const BigInt& den)
{
  if (den == 0)
    throw Error(ErrorCode::invalid_argument, "zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s)
{
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
}

}  // namespace

BigInt parse_integer(std::string_view text)
{
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body))
    throw Error(ErrorCode::invalid_argument, "not an integer: '" + std::string(text) + "'");
  BigInt n(std::string(body), 10);
  return negative ? BigInt(-n) : n;
}

BigRat parse_rational(std::string_view text)
{
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text))
      throw Error(ErrorCode::invalid_argument, "bad denominator in '" + std::string(text) + "'");
    BigInt den = parse_integer(den_text);
    if (den == 0)
      throw Error(ErrorCode::invalid_argument, "zero denominator in '" + std::string(text) + "'");
    return make_rat(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (!frac.empty() && !all_digits(frac))
      throw Error(ErrorCode::invalid_argument, "bad decimal '" + std::string(text) + "'");
    bool negative = !int_part.empty() && int_part.front() == '-';
    std::string digits(int_part);
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
      digits.erase(0, 1);
    if (digits.empty())
      digits = "0";
    if (!all_digits(digits))
      throw Error(ErrorCode::invalid_argument, "bad decimal '" + std::string(text) + "'");
    digits += frac;
    BigInt num(digits, 10);
    BigInt den = pow(BigInt(10), frac.size());
    return make_rat(negative ? BigInt(-num) : num, den);
  }
  return BigRat(parse_integer(text));
}

std::string to_string(const BigInt& n) { return n.get_str(10); }

std::string to_string(const BigRat& q)
{
  if (q.get_den() == 1)
    return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

int sign(const BigInt& n) { return sgn(n); }
int sign(const BigRat& q) { return sgn(q); }

BigInt gcd(const BigInt& a, const BigInt& b)
{
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt pow(const BigInt& base, unsigned long e)
{
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigRat pow(const BigRat& base, unsigned long e)
{
  return make_rat(pow(base.get_num(), e), pow(base.get_den(), e));
}

bool is_square(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

BigInt isqrt(const BigInt& n)
{
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

BigInt mod(const BigInt& a, const BigInt& m)
{
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt FactoredInteger::value() const
{
  BigInt v = cofactor;
  for (auto const& [p, e] : factors)
    v *= pow(p, e);
  return sign * v;
}

unsigned FactoredInteger::exponent(const BigInt& p) const
{
  auto it = factors.find(p);
  return it == factors.end() ? 0u : it->second;
}

// primality

namespace {

constexpr std::array<unsigned, 13> kDeterministicBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
constexpr std::array<unsigned, 20> kExtraBases = {43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
                                                  89, 97, 101, 103, 107, 109, 113, 127, 131, 137};

bool strong_probable_prime(const BigInt& n, const BigInt& d, unsigned s, unsigned base)
{
  BigInt a(base);
  BigInt x;
  BigInt n1 = n - 1;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n1)
    return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n1)
      return true;
    if (x == 1)
      return false;
  }
  return false;
}

// 3317044064679887385961981, the bound below which the first 13 prime
// bases are a proof.
BigInt const& deterministic_limit()
{
  static const BigInt limit("3317044064679887385961981", 10);
  return limit;
}

}  // namespace

Primality primality(const BigInt& n_in)
{
  BigInt n = abs(n_in);
  if (n < 2)
    return Primality::composite;
  for (unsigned p : kDeterministicBases) {
    if (n == p)
      return Primality::prime;
    if (n % p == 0)
      return Primality::composite;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  for (unsigned base : kDeterministicBases)
    if (!strong_probable_prime(n, d, s, base))
      return Primality::composite;
  if (n < deterministic_limit())
    return Primality::prime;
  for (unsigned base : kExtraBases)
    if (!strong_probable_prime(n, d, s, base))
      return Primality::composite;
  return Primality::probable_prime;
}

bool is_prime(const BigInt& n) { return primality(n) != Primality::composite; }

unsigned valuation(const BigInt& n, const BigInt& p)
{
  if (n == 0)
    throw Error(ErrorCode::invalid_argument, "valuation of zero");
  if (p < 2)
    throw Error(ErrorCode::invalid_argument, "valuation base must be prime");
  BigInt m = n;
  unsigned e = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  return e;
}

long valuation(const BigRat& q, const BigInt& p)
{
  return static_cast<long>(valuation(q.get_num(), p)) - static_cast<long>(valuation(q.get_den(), p));
}

// factorization

namespace {

std::shared_ptr<const std::vector<std::uint32_t>> primes_up_to(std::uint64_t bound)
{
  static std::mutex mu;
  static std::uint64_t cached_bound = 0;
  static std::shared_ptr<const std::vector<std::uint32_t>> cached;
  std::lock_guard lock(mu);
  if (cached && bound <= cached_bound)
    return cached;
  std::vector<bool> composite(bound + 1, false);
  auto primes = std::make_shared<std::vector<std::uint32_t>>();
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i])
      continue;
    primes->push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i)
      composite[j] = true;
  }
  cached_bound = bound;
  cached = primes;
  return cached;
}

class RhoSearch {
public:
  RhoSearch(const FactorBudget& budget, std::chrono::steady_clock::time_point start)
  : budget_(budget), start_(start), rng_(budget.seed)
  {}

  /// Nontrivial divisor of composite n, or 0 once the budget is exhausted.
  BigInt divisor(const BigInt& n)
  {
    while (!exhausted()) {
      BigInt c = random_below(n - 3) + 1;
      BigInt y = random_below(n);
      BigInt g = brent(n, y, c);
      if (g != 0 && g != 1 && g != n)
        return g;
    }
    return 0;
  }

private:
  bool exhausted() const
  {
    return used_ >= budget_.rho_iterations ||
           std::chrono::steady_clock::now() - start_ > budget_.wall_time;
  }

  BigInt random_below(const BigInt& bound)
  {
    // bound fits comfortably; combine two 64-bit draws then reduce
    BigInt r = BigInt(static_cast<unsigned long>(rng_())) * BigInt(static_cast<unsigned long>(rng_())) +
               BigInt(static_cast<unsigned long>(rng_()));
    return bound > 0 ? BigInt(r % bound) : BigInt(0);
  }

  BigInt brent(const BigInt& n, BigInt y, const BigInt& c)
  {
    constexpr std::uint64_t batch = 128;
    BigInt x, ys, q = 1, g = 1, diff;
    std::uint64_t r = 1;
    auto step = [&](BigInt& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
      ++used_;
    };
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i)
        step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        std::uint64_t lim = std::min(batch, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          step(y);
          diff = x - y;
          q = q * abs(diff) % n;
        }
        g = gcd(q, n);
        k += batch;
        if (exhausted())
          return 0;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        step(ys);
        diff = x - ys;
        g = gcd(abs(diff), n);
      } while (g == 1);
    }
    return g;
  }

  const FactorBudget& budget_;
  std::chrono::steady_clock::time_point start_;
  std::mt19937_64 rng_;
  std::uint64_t used_ = 0;
};

// Returns (root, k) with n = root^k and k maximal.
std::pair<BigInt, unsigned> perfect_power(const BigInt& n)
{
  if (!mpz_perfect_power_p(n.get_mpz_t()))
    return {n, 1};
  unsigned bits = static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2));
  for (unsigned k = bits; k >= 2; --k) {
    BigInt root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0)
      return {root, k};
  }
  return {n, 1};
}

}  // namespace

FactoredInteger factorize(const BigInt& n, const FactorBudget& budget)
{
  if (n == 0)
    throw Error(ErrorCode::invalid_argument, "factorize(0)");
  auto start = std::chrono::steady_clock::now();
  FactoredInteger out;
  out.sign = sgn(n);
  BigInt m = abs(n);

  auto primes = primes_up_to(budget.trial_bound);
  for (std::uint32_t p : *primes) {
    if (p > budget.trial_bound || mpz_cmp_ui(m.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0)
      break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      unsigned e = 0;
      do {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
      out.factors[BigInt(p)] += e;
    }
  }

  RhoSearch rho(budget, start);
  std::vector<std::pair<BigInt, unsigned>> pending;
  if (m > 1)
    pending.emplace_back(m, 1);
  while (!pending.empty()) {
    auto [c, mult] = pending.back();
    pending.pop_back();
    Primality pr = primality(c);
    if (pr != Primality::composite) {
      out.factors[c] += mult;
      if (pr == Primality::probable_prime)
        out.probable.insert(c);
      continue;
    }
    if (auto [root, k] = perfect_power(c); k > 1) {
      pending.emplace_back(root, mult * k);
      continue;
    }
    BigInt d = rho.divisor(c);
    if (d == 0) {
      out.cofactor *= pow(c, mult);
      out.complete = false;
      continue;
    }
    BigInt other = c / d;
    pending.emplace_back(d, mult);
    pending.emplace_back(other, mult);
  }

  // merge factors that were split out as a prime and also found again
  // through a composite; the map keyed by prime already does that
  return out;
}

SquarefreeDecomposition squarefree_kernel(const FactoredInteger& f)
{
  BigInt kernel = f.sign, root = 1;
  for (auto const& [p, e] : f.factors) {
    if (e % 2)
      kernel *= p;
    root *= pow(p, e / 2);
  }
  if (!f.complete) {
    if (!is_square(f.cofactor))
      throw Error(ErrorCode::incomplete_factorization,
                  "cofactor " + to_string(f.cofactor) + " not certified squarefree");
    root *= isqrt(f.cofactor);
  }
  return {kernel, root};
}

SquarefreeDecomposition squarefree_kernel(const BigInt& n, const FactorBudget& budget)
{
  return squarefree_kernel(factorize(n, budget));
}

bool all_primes_1_mod_3(const FactoredInteger& kernel)
{
  if (kernel.sign < 0)
    throw Error(ErrorCode::negative_kernel, "squarefree kernel is negative");
  if (!kernel.complete)
    throw Error(ErrorCode::incomplete_factorization, "kernel not completely factored");
  return std::all_of(kernel.factors.begin(), kernel.factors.end(), [](auto const& pe) {
    return pe.second % 2 == 0 || pe.first % 3 == 1;
  });
}

BigInt fundamental_discriminant(const BigInt& kernel)
{
  return mod(kernel, 4) == 1 ? kernel : BigInt(4 * kernel);
}

}  // namespace qcert
