#pragma once

#include "eph/cliffalg/multivector.hpp"

#include <vector>

namespace eph::moebius {

using cliff::MetricSpec;
using cliff::Multivector;
using sym::Expr;

// [[a, b], [c, d]] with entries over one metric.
class CMat2 {
public:
  CMat2(Multivector a, Multivector b, Multivector c, Multivector d);
  // Scalar entries times ONE.
  static CMat2 scalars(const MetricSpec &metric, const Expr &a, const Expr &b,
                       const Expr &c, const Expr &d);
  static CMat2 identity(const MetricSpec &metric);

  const Multivector &a() const { return a_; }
  const Multivector &b() const { return b_; }
  const Multivector &c() const { return c_; }
  const Multivector &d() const { return d_; }
  const MetricSpec &metric() const { return a_.metric(); }

  friend bool operator==(const CMat2 &x, const CMat2 &y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

private:
  Multivector a_, b_, c_, d_;
};

CMat2 mat_mul(const CMat2 &m1, const CMat2 &m2);
inline CMat2 operator*(const CMat2 &m1, const CMat2 &m2) {
  return mat_mul(m1, m2);
}
CMat2 operator*(const Expr &s, const CMat2 &m);
// normal() on every coefficient of every entry.
CMat2 normal(const CMat2 &m);

// v -> (a V + b)(c V + d)^{-1} with V = sum v_k e_k; components are returned
// in normal form.
std::vector<Expr> clifford_moebius_map(const CMat2 &m, const std::vector<Expr> &v,
                                       const MetricSpec &metric);
std::vector<Expr> clifford_moebius_map(const Multivector &a, const Multivector &b,
                                       const Multivector &c, const Multivector &d,
                                       const std::vector<Expr> &v,
                                       const MetricSpec &metric);

} // namespace eph::moebius
