#ifndef QCERT_LOCAL_CERTIFY_HPP
#define QCERT_LOCAL_CERTIFY_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qcert/exact_arith.hpp"
#include "qcert/family.hpp"
#include "qcert/modpoly.hpp"
#include "qcert/polynomial.hpp"

namespace qcert {

enum class InertiaClass { unramified, transposition, other, undetermined };
enum class CertMethod { valuation_one, dedekind_tame, scaled_reduction, separability, none };

const char* to_string(InertiaClass c);
const char* to_string(CertMethod m);

/// Substitution X -> shift + scale X followed by division by normalizer.
/// The plan applies when the result is p-integral and its reduction mod p
/// is separable of degree >= deg f - 2.
struct ReductionPlan {
  BigInt p;
  BigRat shift = 0;
  BigRat scale = 1;
  BigRat normalizer = 1;
  std::string source;
};

struct LocalCertificate {
  BigInt p;
  unsigned v_disc = 0;
  InertiaClass inertia = InertiaClass::undetermined;
  /// Frobenius pattern on the unramified part: the whole reduction when
  /// unramified, the cofactor of the double root for a transposition.
  DegreePattern residual_pattern;
  std::optional<bool> decomposition_cyclic;
  bool obstruction_free = false;
  CertMethod method = CertMethod::none;
  /// False when the inertia group may be wild (transposition inertia at 2).
  bool tame = true;
  std::optional<ReductionPlan> plan;
  /// Local splitting as e/f blocks when Newton polygons were used.
  std::string detail;
};

struct LocalInputs {
  /// Needed only at p = 2 to decide a transposition from the quadratic subfield.
  std::optional<BigInt> fundamental_disc;
  std::vector<ReductionPlan> plans;
  std::uint64_t seed = 0;
};

/// Local verdict at any prime; never throws on undetermined shapes.
/// f must be a monic integer polynomial with nonzero discriminant.
LocalCertificate analyze_prime(const UniPoly& f, const BigInt& p, const LocalInputs& in = {});
/// analyze_prime for p > 5; throws WildPrime otherwise.
LocalCertificate certify_prime(const UniPoly& f, const BigInt& p, const LocalInputs& in = {});
/// analyze_prime for p in {2, 3, 5}; throws InconclusiveReduction when undetermined.
LocalCertificate certify_wild(const UniPoly& f, const BigInt& p, const LocalInputs& in = {});

struct FrobeniusWitness {
  BigInt p;
  DegreePattern pattern;
};

struct GaloisCertificate {
  std::vector<FrobeniusWitness> witnesses;  // a {2,3} prime then a {5} or {4,1} prime
  std::optional<BigInt> irreducible_witness;
  std::string irreducibility_method;  // "irreducible-mod-p" or "incompatible-patterns"
  bool generation_fact = false;
  bool s5 = false;
};

/// Frobenius cycle types at primes below `bound` not dividing disc(f).
/// Throws WitnessNotFound if either cycle type is missing.
GaloisCertificate galois_s5(const UniPoly& f, unsigned long bound = 2000, std::uint64_t seed = 0);
/// verify_32_generation(), evaluated once per process.
bool generation_fact_32();

struct ExceptionalSet {
  std::set<BigInt> primes;
  bool complete = true;  // false if a candidate number could not be factored
};

/// Primes dividing group_order, the leading coefficient of the discriminant
/// in t, or at which that discriminant loses distinct roots mod p.
ExceptionalSet exceptional_set(const PolyInT& F, unsigned long group_order = 120, const FactorBudget& budget = {});

/// v_p of the homogenized minimal polynomial at (a, b), t0 = a/b; an empty
/// minpoly stands for the branch point at infinity, whose form is Y.
/// Throws BranchPoint when t0 is itself the branch point.
unsigned intersection_multiplicity(const std::optional<UniPoly>& minpoly, const BigRat& t0, const BigInt& p);

/// Plans shipped with the library: the mod-2 shift (1, -2, 8) for every w,
/// plus the mod-43 shift for w = -2/3 and t = 86 (43^d u')^3.
std::vector<ReductionPlan> builtin_plans(const WParam& w, const BigRat& s0);

struct IntegralModel {
  BigInt scale;  // d with d^n f(Y/d) integral
  UniPoly poly;
};
/// Monic integer model of a monic rational polynomial with the smallest d.
IntegralModel integral_model(const UniPoly& f, const FactorBudget& budget = {});
/// The same plan expressed on the integral model.
ReductionPlan transport_plan(const ReductionPlan& plan, const IntegralModel& model, int degree);

enum class CertStatus { certified, uncertified, failed };
const char* to_string(CertStatus s);

struct CertifyConfig {
  FactorBudget budget;
  unsigned long witness_bound = 2000;
  std::uint64_t seed = 0x51c0ffee;
  std::vector<ReductionPlan> extra_plans;
};

struct SpecializationCertificate {
  WParam w{BigInt(-2), BigInt(3)};
  BigRat s0;
  BigRat t0;  // s0 / w2^3
  UniPoly f;
  IntegralModel model;
  BigRat disc;
  FactoredInteger disc_factors;  // of the integral model's discriminant
  std::optional<BigInt> kernel;
  std::optional<BigInt> fundamental_disc;
  std::optional<bool> two_ramified_in_quadratic;
  int real_roots = 0;
  int complex_pairs = 0;
  std::optional<BigInt> irreducible_witness;
  std::string irreducibility_method;
  std::vector<LocalCertificate> locals;
  std::optional<GaloisCertificate> galois;
  CertStatus status = CertStatus::uncertified;
  std::string reason;
  std::uint64_t seed = 0;
};

/// Throws BranchPoint when s0 = 0 or disc(f_{w,s0}) = 0.
SpecializationCertificate certify_specialization(const WParam& w, const BigRat& s0, const CertifyConfig& config = {});

}  // namespace qcert

#endif
