#ifndef QCERT_FAMILY_HPP
#define QCERT_FAMILY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcert/exact_arith.hpp"
#include "qcert/polynomial.hpp"

namespace qcert {

/// w = w1 / w2 with gcd(w1, w2) = 1 and w2 > 0.
class WParam {
public:
  WParam(const BigInt& num, const BigInt& den);
  explicit WParam(const BigRat& w);
  static WParam parse(std::string_view text);

  const BigInt& w1() const { return w1_; }
  const BigInt& w2() const { return w2_; }
  BigRat value() const { return make_rat(w1_, w2_); }

  /// a = 2 w^2
  BigRat a() const;
  /// c = 2 (27 - 50 w^2)(10 w^2 + 8 w + 1)
  BigRat c() const;
  /// (-50 w1^2 + 27 w2^2)(10 w1^2 + 8 w1 w2 + w2^2), which equals w2^4 c / 2.
  BigInt condition_product() const;

  std::string to_string() const { return qcert::to_string(value()); }
  friend bool operator==(const WParam&, const WParam&) = default;

private:
  BigInt w1_, w2_;
};

struct ConditionReport {
  BigInt product;
  std::optional<BigInt> kernel;  // empty if the product could not be factored
  std::vector<BigInt> kernel_primes;
  std::optional<bool> a_ok;      // empty when undetermined
  bool b_ok = false;
  bool bprime_ok = false;
  bool c_positive = false;
};

ConditionReport check_conditions(const WParam& w, const FactorBudget& budget = {});

/// X^2 (X-1)^3 + 2 s^2 (50 w^2 - 27)(10 w^2 + 8 w + 1)(X - 2 w^2).
/// Throws DegenerateParameter when s = 0 or c(w) = 0.
UniPoly build_poly(const WParam& w, const BigRat& s);

/// The family with s = w2^3 t, which has integer coefficients in t:
/// X^2 (X-1)^3 + 2 P t^2 (w2^2 X - 2 w1^2) with P = -condition_product().
/// For w = -2/3 this is X^2 (X-1)^3 - 86 t^2 (9 X - 8).
PolyInT family_in_t(const WParam& w);
/// Same family with s itself as the parameter.
PolyInT family_in_s(const WParam& w);
/// s = w2^3 t
BigRat s_from_t(const WParam& w, const BigRat& t);
BigRat t_from_s(const WParam& w, const BigRat& s);

struct PlanCandidate {
  BigRat s0;
  std::string rule;
};

struct SpecializationPlan {
  std::vector<PlanCandidate> candidates;
  /// Set when several candidates compete: pick the first whose squarefree
  /// discriminant kernel is odd and 1 mod 4.
  bool needs_mod4_selection = false;
  /// s0 = 86 u^3 in t-form, u coprime to 30; only for w = -2/3.
  bool corollary_family = false;
};

SpecializationPlan specialization_plan(const WParam& w);

/// Candidate selected by the mod-4 kernel test; empty if none passes.
std::optional<PlanCandidate> select_plan_candidate(const WParam& w, const SpecializationPlan& plan,
                                                   const FactorBudget& budget = {});

/// -43 (2^11 3^10 43^6 u^12 - 43^3 263 883 u^6 + 108). Throws NotCoprime
/// unless gcd(u, 30) = 1.
BigInt corollary_quad_disc(const BigInt& u);

/// Discriminant in t of X^2 (X-1)^3 - t (X - 2 w^2) with the powers of t removed.
UniPoly branch_quadratic(const WParam& w);
/// True iff branch_quadratic(w) has degree 2 and no rational root.
bool branch_conjugacy(const WParam& w);

struct CurvePoint {
  BigRat W;
  BigRat Y;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Points with D Y^2 = q(W), W = p/q of height <= bound, both signs of Y,
/// sorted by (W, Y). q has degree <= 4 and integer coefficients.
std::vector<CurvePoint> curve_search(const BigInt& D, const UniPoly& quartic, unsigned long height_bound);
/// (-50 W^2 + 27)(10 W^2 + 8 W + 1)
UniPoly condition_quartic();
/// Number of distinct W among the points.
std::size_t distinct_w_count(const std::vector<CurvePoint>& pts);

/// Points (X, Y) with Y^2 = cubic(X) for integers X in [lo, hi].
std::vector<CurvePoint> integral_points(const UniPoly& cubic, long lo, long hi);
/// X (X - 15)(X - 24)
UniPoly rank0_cubic();

/// One sample s0 taken between consecutive real branch points of the
/// family in s, with the real-root count of f_{w,s0}.
struct SignatureSample {
  // gap between adjacent branch points; an end is ignored when its flag is set
  BigRat lo, hi;
  bool lo_infinite = false, hi_infinite = false;
  BigRat s0;
  int real_roots = 0;
};

/// Samples every gap between real branch points, preferring s0 = u^3 / v^2
/// with v <= max_v, else the interval midpoint.
std::vector<SignatureSample> signature_samples(const WParam& w, unsigned max_v = 50);
/// Samples with five real roots; throws WindowEmpty when there are none.
std::vector<SignatureSample> totally_real_scan(const WParam& w, unsigned max_v = 50);

}  // namespace qcert

#endif
