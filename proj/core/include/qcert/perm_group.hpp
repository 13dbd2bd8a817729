#ifndef QCERT_PERM_GROUP_HPP
#define QCERT_PERM_GROUP_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qcert {

/// Permutation of {1..n}, n <= 7. Composition (a * b) applies b first.
class Perm {
public:
  static constexpr unsigned max_degree = 7;

  explicit Perm(unsigned n = 0);
  /// Images of 1..n, one-based.
  Perm(unsigned n, const std::vector<unsigned>& images);
  /// Cycle notation such as "(1,2)(3,4,5)"; "()" is the identity.
  static Perm parse(unsigned n, std::string_view cycles);
  static Perm cycle(unsigned n, const std::vector<unsigned>& points);

  unsigned degree() const { return n_; }
  /// Image of point i (one-based).
  unsigned operator[](unsigned i) const { return img_[i - 1] + 1u; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;
  unsigned order() const;
  /// Cycle lengths > 1, descending: (1,2)(3,4,5) -> {3, 2}.
  std::vector<unsigned> cycle_type() const;
  /// Position in the lexicographic enumeration of S_n.
  unsigned rank() const;
  static Perm unrank(unsigned n, unsigned rank);

  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, max_degree> img_{};
};

/// Finite permutation group held as its explicit sorted element list.
class PermGroup {
public:
  PermGroup() = default;

  unsigned degree() const { return n_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<Perm>& elements() const { return elems_; }
  bool contains(const Perm& x) const;

  friend bool operator==(const PermGroup&, const PermGroup&) = default;

private:
  friend PermGroup closure(unsigned n, const std::vector<Perm>& gens);
  friend PermGroup from_elements(unsigned n, std::vector<Perm> elems);
  unsigned n_ = 0;
  std::vector<Perm> elems_;
};

PermGroup closure(unsigned n, const std::vector<Perm>& gens);
/// Trusts that `elems` is closed; sorts and deduplicates.
PermGroup from_elements(unsigned n, std::vector<Perm> elems);
PermGroup symmetric_group(unsigned n);

/// All elements of S_n with the given cycle type (lengths > 1, descending).
std::vector<Perm> elements_of_type(unsigned n, const std::vector<unsigned>& type);

bool is_cyclic(const PermGroup& g);
bool is_abelian(const PermGroup& g);
bool is_transitive(const PermGroup& g);
/// Throws ElementNotInGroup when x is not in g.
PermGroup centralizer(const PermGroup& g, const Perm& x);
PermGroup conjugate(const PermGroup& g, const Perm& by);
bool conjugate_in(const PermGroup& ambient, const PermGroup& a, const PermGroup& b);
std::vector<std::vector<Perm>> conjugacy_classes(const PermGroup& g);

/// Outcome of an exhaustive scan over pairs (x, y) drawn from two cycle types.
struct PairScan {
  std::size_t pairs = 0;
  std::size_t generating = 0;
  bool all_generate() const { return pairs == generating; }
};

/// Pairs x of type `x_type` and y of one of `y_types` in S_n, counting the
/// pairs that generate all of S_n.
PairScan scan_pair_generation(unsigned n, const std::vector<unsigned>& x_type,
                              const std::vector<std::vector<unsigned>>& y_types);

/// Every pair of a (3,2)-element with a 5-cycle or a 4-cycle generates S_5.
bool verify_32_generation();

struct TranspositionScan {
  std::size_t subsets = 0;
  std::size_t transitive = 0;
  std::size_t transitive_full = 0;
  bool holds() const { return transitive == transitive_full; }
};

/// Every set of transpositions generating a transitive subgroup of S_n generates S_n.
TranspositionScan scan_transposition_generation(unsigned n);
bool verify_transposition_generation(unsigned n);

/// True iff <gens> is S_6-conjugate to <(1,2)>, <(1,2),(3,4)(5,6)> or <(1,2),(3,4,5)>.
bool s6_admissible(const std::vector<Perm>& gens);

/// Order 12, nonabelian, an element of order 6 and a central involution.
bool looks_like_c2_x_s3(const PermGroup& g);

}  // namespace qcert

#endif
