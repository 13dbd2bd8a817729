#include "qcert/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qcert/error.hpp"

namespace qcert {

namespace {

constexpr unsigned factorial(unsigned n) { return n <= 1 ? 1u : n * factorial(n - 1); }

void check_degree(unsigned n)
{
  if (n > Perm::max_degree)
    throw Error(ErrorCode::invalid_argument, "permutation degree above 7");
}

}  // namespace

Perm::Perm(unsigned n)
: n_(static_cast<std::uint8_t>(n))
{
  check_degree(n);
  for (unsigned i = 0; i < n; ++i)
    img_[i] = static_cast<std::uint8_t>(i);
}

Perm::Perm(unsigned n, const std::vector<unsigned>& images)
: n_(static_cast<std::uint8_t>(n))
{
  check_degree(n);
  if (images.size() != n)
    throw Error(ErrorCode::invalid_argument, "image list has wrong length");
  std::array<bool, max_degree> seen{};
  for (unsigned i = 0; i < n; ++i) {
    unsigned v = images[i];
    if (v < 1 || v > n || seen[v - 1])
      throw Error(ErrorCode::invalid_argument, "image list is not a bijection");
    seen[v - 1] = true;
    img_[i] = static_cast<std::uint8_t>(v - 1);
  }
}

Perm Perm::cycle(unsigned n, const std::vector<unsigned>& points)
{
  std::vector<unsigned> images(n);
  std::iota(images.begin(), images.end(), 1u);
  for (std::size_t k = 0; k < points.size(); ++k) {
    unsigned from = points[k];
    unsigned to = points[(k + 1) % points.size()];
    if (from < 1 || from > n)
      throw Error(ErrorCode::invalid_argument, "cycle point out of range");
    images[from - 1] = to;
  }
  return Perm(n, images);
}

Perm Perm::parse(unsigned n, std::string_view text)
{
  Perm result(n);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(')
      throw Error(ErrorCode::invalid_argument, "bad cycle notation: " + std::string(text));
    auto close = text.find(')', pos);
    if (close == std::string_view::npos)
      throw Error(ErrorCode::invalid_argument, "unbalanced cycle notation: " + std::string(text));
    std::vector<unsigned> pts;
    std::string_view body = text.substr(pos + 1, close - pos - 1);
    std::size_t s = 0;
    while (s < body.size()) {
      auto comma = body.find(',', s);
      auto tok = body.substr(s, comma == std::string_view::npos ? std::string_view::npos : comma - s);
      if (!tok.empty())
        pts.push_back(static_cast<unsigned>(std::stoul(std::string(tok))));
      if (comma == std::string_view::npos)
        break;
      s = comma + 1;
    }
    // cycles written left to right are applied right to left
    if (!pts.empty())
      result = result * cycle(n, pts);
    pos = close + 1;
  }
  return result;
}

Perm Perm::operator*(const Perm& rhs) const
{
  Perm r(n_);
  for (unsigned i = 0; i < n_; ++i)
    r.img_[i] = img_[rhs.img_[i]];
  return r;
}

Perm Perm::inverse() const
{
  Perm r(n_);
  for (unsigned i = 0; i < n_; ++i)
    r.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

bool Perm::is_identity() const
{
  for (unsigned i = 0; i < n_; ++i)
    if (img_[i] != i)
      return false;
  return true;
}

std::vector<unsigned> Perm::cycle_type() const
{
  std::vector<unsigned> out;
  std::array<bool, max_degree> seen{};
  for (unsigned i = 0; i < n_; ++i) {
    if (seen[i])
      continue;
    unsigned len = 0;
    for (unsigned j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len > 1)
      out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

unsigned Perm::order() const
{
  unsigned o = 1;
  for (unsigned len : cycle_type())
    o = std::lcm(o, len);
  return o;
}

unsigned Perm::rank() const
{
  // Lehmer code
  unsigned r = 0;
  for (unsigned i = 0; i < n_; ++i) {
    unsigned smaller = 0;
    for (unsigned j = i + 1; j < n_; ++j)
      if (img_[j] < img_[i])
        ++smaller;
    r = r * (n_ - i) + smaller;
  }
  return r;
}

Perm Perm::unrank(unsigned n, unsigned rank)
{
  std::vector<unsigned> digits(n);
  for (unsigned i = n; i-- > 0;) {
    digits[i] = rank % (n - i);
    rank /= (n - i);
  }
  std::vector<unsigned> pool(n);
  std::iota(pool.begin(), pool.end(), 1u);
  std::vector<unsigned> images;
  for (unsigned i = 0; i < n; ++i) {
    images.push_back(pool[digits[i]]);
    pool.erase(pool.begin() + digits[i]);
  }
  return Perm(n, images);
}

std::string Perm::to_string() const
{
  std::ostringstream os;
  std::array<bool, max_degree> seen{};
  for (unsigned i = 0; i < n_; ++i) {
    if (seen[i] || img_[i] == i)
      continue;
    os << "(";
    bool first = true;
    for (unsigned j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      os << (first ? "" : ",") << j + 1;
      first = false;
    }
    os << ")";
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

bool PermGroup::contains(const Perm& x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

PermGroup closure(unsigned n, const std::vector<Perm>& gens)
{
  check_degree(n);
  for (auto const& g : gens)
    if (g.degree() != n)
      throw Error(ErrorCode::invalid_argument, "generator degree mismatch");
  std::vector<bool> seen(factorial(n), false);
  std::vector<Perm> elems{Perm(n)};
  seen[Perm(n).rank()] = true;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (auto const& g : gens) {
      Perm next = elems[k] * g;
      unsigned r = next.rank();
      if (!seen[r]) {
        seen[r] = true;
        elems.push_back(next);
      }
    }
  }
  return from_elements(n, std::move(elems));
}

PermGroup from_elements(unsigned n, std::vector<Perm> elems)
{
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  PermGroup g;
  g.n_ = n;
  g.elems_ = std::move(elems);
  return g;
}

PermGroup symmetric_group(unsigned n)
{
  check_degree(n);
  std::vector<Perm> all;
  for (unsigned r = 0; r < factorial(n); ++r)
    all.push_back(Perm::unrank(n, r));
  return from_elements(n, std::move(all));
}

std::vector<Perm> elements_of_type(unsigned n, const std::vector<unsigned>& type)
{
  std::vector<unsigned> want = type;
  std::sort(want.rbegin(), want.rend());
  std::vector<Perm> out;
  for (unsigned r = 0; r < factorial(n); ++r) {
    Perm p = Perm::unrank(n, r);
    if (p.cycle_type() == want)
      out.push_back(p);
  }
  return out;
}

bool is_cyclic(const PermGroup& g)
{
  return std::any_of(g.elements().begin(), g.elements().end(),
                     [&](const Perm& x) { return x.order() == g.order(); });
}

bool is_abelian(const PermGroup& g)
{
  for (auto const& a : g.elements())
    for (auto const& b : g.elements())
      if (!(a * b == b * a))
        return false;
  return true;
}

bool is_transitive(const PermGroup& g)
{
  unsigned n = g.degree();
  if (n <= 1)
    return true;
  std::vector<bool> hit(n, false);
  for (auto const& x : g.elements())
    hit[x[1] - 1] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

PermGroup centralizer(const PermGroup& g, const Perm& x)
{
  if (!g.contains(x))
    throw Error(ErrorCode::element_not_in_group, "element " + x.to_string() + " not in group");
  std::vector<Perm> out;
  for (auto const& y : g.elements())
    if (y * x == x * y)
      out.push_back(y);
  return from_elements(g.degree(), std::move(out));
}

PermGroup conjugate(const PermGroup& g, const Perm& by)
{
  Perm inv = by.inverse();
  std::vector<Perm> out;
  out.reserve(g.order());
  for (auto const& y : g.elements())
    out.push_back(by * y * inv);
  return from_elements(g.degree(), std::move(out));
}

bool conjugate_in(const PermGroup& ambient, const PermGroup& a, const PermGroup& b)
{
  if (a.order() != b.order())
    return false;
  return std::any_of(ambient.elements().begin(), ambient.elements().end(),
                     [&](const Perm& c) { return conjugate(a, c) == b; });
}

std::vector<std::vector<Perm>> conjugacy_classes(const PermGroup& g)
{
  std::vector<std::vector<Perm>> classes;
  std::vector<bool> done(g.order(), false);
  auto index = [&](const Perm& x) {
    return static_cast<std::size_t>(std::lower_bound(g.elements().begin(), g.elements().end(), x) -
                                    g.elements().begin());
  };
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (done[i])
      continue;
    const Perm& x = g.elements()[i];
    std::vector<Perm> cls;
    for (auto const& c : g.elements()) {
      Perm y = c * x * c.inverse();
      std::size_t j = index(y);
      if (!done[j]) {
        done[j] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

PairScan scan_pair_generation(unsigned n, const std::vector<unsigned>& x_type,
                              const std::vector<std::vector<unsigned>>& y_types)
{
  auto xs = elements_of_type(n, x_type);
  std::vector<Perm> ys;
  for (auto const& t : y_types) {
    auto more = elements_of_type(n, t);
    ys.insert(ys.end(), more.begin(), more.end());
  }
  std::size_t full = factorial(n);
  PairScan scan;
  for (auto const& x : xs) {
    for (auto const& y : ys) {
      ++scan.pairs;
      if (closure(n, {x, y}).order() == full)
        ++scan.generating;
    }
  }
  return scan;
}

bool verify_32_generation()
{
  auto scan = scan_pair_generation(5, {3, 2}, {{5}, {4}});
  return scan.pairs == 20 * 54 && scan.all_generate();
}

TranspositionScan scan_transposition_generation(unsigned n)
{
  std::vector<std::pair<unsigned, unsigned>> edges;
  for (unsigned a = 1; a <= n; ++a)
    for (unsigned b = a + 1; b <= n; ++b)
      edges.emplace_back(a, b);
  std::size_t full = factorial(n);
  std::size_t count = std::size_t{1} << edges.size();
  // full_group[mask] records closure(mask) = S_n; masks run in increasing
  // order, so every proper subset has been decided already
  std::vector<bool> full_group(count, false);
  TranspositionScan scan;
  for (std::size_t mask = 0; mask < count; ++mask) {
    ++scan.subsets;
    // transitive iff the edges connect all n points
    std::vector<unsigned> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](unsigned x) {
      while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
      return x;
    };
    unsigned components = n;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (!(mask & (std::size_t{1} << k)))
        continue;
      unsigned a = find(edges[k].first), b = find(edges[k].second);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    if (components != 1)
      continue;
    ++scan.transitive;
    bool is_full = false;
    for (std::size_t k = 0; k < edges.size() && !is_full; ++k)
      if ((mask & (std::size_t{1} << k)) && full_group[mask ^ (std::size_t{1} << k)])
        is_full = true;  // a subgroup already equals S_n
    if (!is_full) {
      std::vector<Perm> gens;
      for (std::size_t k = 0; k < edges.size(); ++k)
        if (mask & (std::size_t{1} << k))
          gens.push_back(Perm::cycle(n, {edges[k].first, edges[k].second}));
      is_full = closure(n, gens).order() == full;
    }
    full_group[mask] = is_full;
    if (is_full)
      ++scan.transitive_full;
  }
  return scan;
}

bool verify_transposition_generation(unsigned n) { return scan_transposition_generation(n).holds(); }

bool s6_admissible(const std::vector<Perm>& gens)
{
  static const PermGroup s6 = symmetric_group(6);
  static const std::vector<PermGroup> shapes = {
    closure(6, {Perm::parse(6, "(1,2)")}),
    closure(6, {Perm::parse(6, "(1,2)"), Perm::parse(6, "(3,4)(5,6)")}),
    closure(6, {Perm::parse(6, "(1,2)"), Perm::parse(6, "(3,4,5)")}),
  };
  PermGroup g = closure(6, gens);
  return std::any_of(shapes.begin(), shapes.end(), [&](const PermGroup& h) { return conjugate_in(s6, h, g); });
}

bool looks_like_c2_x_s3(const PermGroup& g)
{
  if (g.order() != 12 || is_abelian(g))
    return false;
  bool has_order_6 = false, central_involution = false;
  for (auto const& x : g.elements()) {
    if (x.order() == 6)
      has_order_6 = true;
    if (x.order() == 2 && centralizer(g, x).order() == g.order())
      central_involution = true;
  }
  return has_order_6 && central_involution;
}

}  // namespace qcert
