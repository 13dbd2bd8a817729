#include "qcert/family.hpp"

#include <algorithm>
#include <set>

namespace qcert {

UniPoly condition_quartic() { return UniPoly({27, 0, -50}) * UniPoly({1, 8, 10}); }

UniPoly rank0_cubic() { return UniPoly({0, 1}) * UniPoly({-15, 1}) * UniPoly({-24, 1}); }

namespace {

std::vector<BigInt> integer_coeffs(const UniPoly& f, const char* what)
{
  if (!f.has_integer_coeffs())
    throw Error(ErrorCode::invalid_argument, std::string(what) + " must have integer coefficients");
  std::vector<BigInt> c;
  for (auto const& x : f.coeffs())
    c.push_back(x.get_num());
  return c;
}

}  // namespace

std::vector<CurvePoint> curve_search(const BigInt& D, const UniPoly& quartic, unsigned long height_bound)
{
  if (height_bound < 1)
    throw Error(ErrorCode::invalid_argument, "height bound must be at least 1");
  if (D == 0)
    throw Error(ErrorCode::invalid_argument, "D must be nonzero");
  if (quartic.degree() > 4)
    throw Error(ErrorCode::invalid_argument, "curve_search takes a polynomial of degree <= 4");
  auto c = integer_coeffs(quartic, "curve polynomial");
  c.resize(5, BigInt(0));

  std::vector<CurvePoint> out;
  BigInt h = height_bound;
  std::vector<BigInt> ppow(5), qpow(5);
  for (BigInt q = 1; q <= h; ++q) {
    qpow[0] = 1;
    for (int i = 1; i <= 4; ++i)
      qpow[i] = qpow[i - 1] * q;
    for (BigInt p = -h; p <= h; ++p) {
      if (gcd(p, q) != 1)
        continue;
      ppow[0] = 1;
      for (int i = 1; i <= 4; ++i)
        ppow[i] = ppow[i - 1] * p;
      // q^4 quartic(p/q)
      BigInt Q = 0;
      for (int i = 0; i <= 4; ++i)
        Q += c[i] * ppow[i] * qpow[4 - i];
      // D Y^2 = Q / q^4 has a rational Y iff Q D is a square
      BigInt QD = Q * D;
      if (QD < 0 || !is_square(QD))
        continue;
      BigRat W = make_rat(p, q);
      BigRat Y = make_rat(isqrt(QD), D * qpow[2]);
      out.push_back({W, Y});
      if (Y != 0)
        out.push_back({W, -Y});
    }
  }
  std::sort(out.begin(), out.end(), [](const CurvePoint& a, const CurvePoint& b) {
    return a.W != b.W ? a.W < b.W : a.Y < b.Y;
  });
  return out;
}

std::size_t distinct_w_count(const std::vector<CurvePoint>& pts)
{
  std::set<BigRat> ws;
  for (auto const& pt : pts)
    ws.insert(pt.W);
  return ws.size();
}

std::vector<CurvePoint> integral_points(const UniPoly& cubic, long lo, long hi)
{
  auto c = integer_coeffs(cubic, "cubic");
  std::vector<CurvePoint> out;
  BigInt val, y;
  for (long x = lo; x <= hi; ++x) {
    val = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
      val = val * x + *it;
    if (val < 0 || !is_square(val))
      continue;
    y = isqrt(val);
    out.push_back({BigRat(x), BigRat(y)});
    if (y != 0)
      out.push_back({BigRat(x), BigRat(-y)});
  }
  std::sort(out.begin(), out.end(), [](const CurvePoint& a, const CurvePoint& b) {
    return a.W != b.W ? a.W < b.W : a.Y < b.Y;
  });
  return out;
}

}  // namespace qcert
