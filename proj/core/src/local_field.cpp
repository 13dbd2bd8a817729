#include "qcert/local_field.hpp"

#include <algorithm>
#include <sstream>

namespace qcert {

bool LocalSplitting::unramified() const
{
  return std::all_of(blocks.begin(), blocks.end(), [](const LocalBlock& b) { return b.ramification == 1; });
}

bool LocalSplitting::transposition_inertia() const
{
  unsigned ramified = 0;
  for (auto const& b : blocks) {
    if (b.ramification == 1)
      continue;
    if (b.ramification != 2 || b.residue_degree != 1)
      return false;
    ++ramified;
  }
  return ramified == 1;
}

DegreePattern LocalSplitting::unramified_pattern() const
{
  std::vector<std::pair<unsigned, unsigned>> parts;
  for (auto const& b : blocks)
    if (b.ramification == 1)
      parts.emplace_back(b.residue_degree, 1u);
  return DegreePattern(std::move(parts));
}

std::optional<unsigned> LocalSplitting::tame_disc_valuation(const BigInt& p) const
{
  unsigned v = 0;
  for (auto const& b : blocks) {
    if (b.ramification > 1 && b.ramification % p == 0)
      return std::nullopt;
    v += (b.ramification - 1) * b.residue_degree;
  }
  return v;
}

std::string LocalSplitting::to_string() const
{
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < blocks.size(); ++i)
    os << (i ? "," : "") << "e" << blocks[i].ramification << "f" << blocks[i].residue_degree;
  os << "]";
  return os.str();
}

namespace {

struct HullPoint {
  long i;
  long v;
};

std::vector<BigInt> shifted_integer_coeffs(const UniPoly& f, const BigInt& center)
{
  UniPoly h = compose(f, UniPoly({BigRat(center), BigRat(1)}));
  std::vector<BigInt> out(static_cast<std::size_t>(f.degree() + 1), BigInt(0));
  for (int i = 0; i <= h.degree(); ++i)
    out[i] = h.coeffs()[i].get_num();
  return out;
}

std::vector<HullPoint> lower_hull(const std::vector<HullPoint>& pts)
{
  std::vector<HullPoint> hull;
  for (auto const& c : pts) {
    while (hull.size() >= 2) {
      auto const& a = hull[hull.size() - 2];
      auto const& b = hull.back();
      // drop b when it lies on or above segment a-c
      if ((b.v - a.v) * (c.i - a.i) >= (c.v - a.v) * (b.i - a.i))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(c);
  }
  return hull;
}

class ClusterAnalysis {
public:
  ClusterAnalysis(const UniPoly& f, const BigInt& p, std::uint64_t seed, unsigned max_depth)
  : f_(f), p_(p), seed_(seed), max_depth_(max_depth)
  {}

  // Accounts for the `expected` roots rho with v(rho - center) > min_slope.
  bool run(const BigInt& center, const BigRat& min_slope, unsigned expected, unsigned depth,
           std::vector<LocalBlock>& out)
  {
    if (depth > max_depth_)
      return false;
    auto h = shifted_integer_coeffs(f_, center);
    unsigned found = 0;
    std::size_t start = 0;
    while (start < h.size() && h[start] == 0) {
      out.push_back({1, 1});
      ++found;
      ++start;
    }
    std::vector<HullPoint> pts;
    for (std::size_t i = start; i < h.size(); ++i)
      if (h[i] != 0)
        pts.push_back({static_cast<long>(i), static_cast<long>(valuation(h[i], p_))});
    auto hull = lower_hull(pts);

    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
      auto const& a = hull[s];
      auto const& b = hull[s + 1];
      BigRat slope = make_rat(a.v - b.v, b.i - a.i);
      if (slope <= min_slope)
        break;
      if (!segment(h, center, a, b, slope, depth, out))
        return false;
      found += static_cast<unsigned>(b.i - a.i);
    }
    return found == expected;
  }

private:
  bool segment(const std::vector<BigInt>& h, const BigInt& center, const HullPoint& a, const HullPoint& b,
               const BigRat& slope, unsigned depth, std::vector<LocalBlock>& out)
  {
    long num = slope.get_num().get_si();
    long den = slope.get_den().get_si();
    long k = (b.i - a.i) / den;
    std::vector<BigInt> residual(static_cast<std::size_t>(k + 1), BigInt(0));
    for (long j = 0; j <= k; ++j) {
      BigInt const& c = h[static_cast<std::size_t>(a.i + j * den)];
      long want = a.v - j * num;
      if (c == 0 || static_cast<long>(valuation(c, p_)) != want)
        continue;
      residual[static_cast<std::size_t>(j)] = c / pow(p_, static_cast<unsigned long>(want));
    }
    auto factors = factor_mod_p(ModPoly(p_, std::move(residual)), seed_);
    bool separable = std::all_of(factors.begin(), factors.end(), [](auto const& f) { return f.multiplicity == 1; });
    if (separable) {
      for (auto const& f : factors)
        out.push_back({static_cast<unsigned>(den), static_cast<unsigned>(f.factor.degree())});
      return true;
    }
    if (den != 1)
      return false;
    for (auto const& [psi, mult] : factors) {
      if (mult == 1) {
        out.push_back({1, static_cast<unsigned>(psi.degree())});
        continue;
      }
      if (psi.degree() != 1)
        return false;
      BigInt z = mod(-psi.coeff(0), p_);
      BigInt next = center + pow(p_, static_cast<unsigned long>(num)) * z;
      if (!run(next, BigRat(num), mult, depth + 1, out))
        return false;
    }
    return true;
  }

  const UniPoly& f_;
  BigInt p_;
  std::uint64_t seed_;
  unsigned max_depth_;
};

}  // namespace

std::optional<LocalSplitting> local_splitting(const UniPoly& f, const BigInt& p, std::uint64_t seed,
                                              unsigned max_depth)
{
  if (!f.has_integer_coeffs() || f.leading() != 1)
    throw Error(ErrorCode::invalid_argument, "local_splitting needs a monic integer polynomial");
  LocalSplitting out;
  ClusterAnalysis analysis(f, p, seed, max_depth);
  for (auto const& [phi, mult] : factor_mod_p(ModPoly::reduce(f, p), seed)) {
    if (mult == 1) {
      out.blocks.push_back({1, static_cast<unsigned>(phi.degree())});
      continue;
    }
    if (phi.degree() != 1)
      return std::nullopt;
    BigInt root = mod(-phi.coeff(0), p);
    if (!analysis.run(root, BigRat(0), mult, 0, out.blocks))
      return std::nullopt;
  }
  std::sort(out.blocks.begin(), out.blocks.end(), [](const LocalBlock& a, const LocalBlock& b) {
    return std::pair(a.ramification, a.residue_degree) < std::pair(b.ramification, b.residue_degree);
  });
  return out;
}

std::optional<unsigned> tame_disc_valuation(const UniPoly& f, const BigInt& p, std::uint64_t seed)
{
  if (p <= 5)
    throw Error(ErrorCode::wild_prime, "tame_disc_valuation needs p > 5, got " + to_string(p));
  BigRat disc = discriminant(f);
  if (disc == 0)
    throw Error(ErrorCode::invalid_argument, "polynomial is not squarefree");
  unsigned v = valuation(disc.get_num(), p);
  if (v <= 1)
    return v;
  if (dedekind_index_test(f, p, seed))
    return v;
  if (auto split = local_splitting(f, p, seed))
    return split->tame_disc_valuation(p);
  return std::nullopt;
}

}  // namespace qcert
