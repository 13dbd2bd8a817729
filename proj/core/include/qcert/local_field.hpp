#ifndef QCERT_LOCAL_FIELD_HPP
#define QCERT_LOCAL_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcert/exact_arith.hpp"
#include "qcert/modpoly.hpp"
#include "qcert/polynomial.hpp"

namespace qcert {

/// One irreducible factor of f over Q_p, described by its ramification
/// index and residue degree.
struct LocalBlock {
  unsigned ramification = 1;
  unsigned residue_degree = 1;
  unsigned degree() const { return ramification * residue_degree; }
  friend bool operator==(const LocalBlock&, const LocalBlock&) = default;
};

struct LocalSplitting {
  std::vector<LocalBlock> blocks;

  bool unramified() const;
  /// Exactly one block with e = 2, f = 1 and every other block unramified:
  /// the inertia group is generated by a single transposition.
  bool transposition_inertia() const;
  /// Residue degrees of the unramified blocks, as a pattern.
  DegreePattern unramified_pattern() const;
  /// Sum of (e - 1) f, or nullopt when some block is wildly ramified at p.
  std::optional<unsigned> tame_disc_valuation(const BigInt& p) const;
  std::string to_string() const;
};

/// Splits a monic integer polynomial over Q_p via Newton polygons of the
/// shifted polynomial at each repeated root of f mod p, recentering on
/// repeated residual roots. Succeeds when every residual polynomial met
/// along the way is separable or has only repeated linear factors on
/// integer slopes; returns nullopt otherwise. f must be squarefree.
std::optional<LocalSplitting> local_splitting(const UniPoly& f, const BigInt& p, std::uint64_t seed = 0,
                                              unsigned max_depth = 32);

/// Tame valuation of the field discriminant at p > 5: 0 or 1 straight from
/// v_p(disc f); v_p(disc f) when the Dedekind criterion holds; otherwise
/// the value from local_splitting, or nullopt (undetermined).
/// Throws WildPrime for p <= 5.
std::optional<unsigned> tame_disc_valuation(const UniPoly& f, const BigInt& p, std::uint64_t seed = 0);

}  // namespace qcert

#endif
