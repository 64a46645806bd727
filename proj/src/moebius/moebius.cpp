#include "eph/moebius/moebius.hpp"

#include "eph/symexpr/normal.hpp"

namespace eph::moebius {

CMat2::CMat2(Multivector a, Multivector b, Multivector c, Multivector d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_.metric() != b_.metric() || a_.metric() != c_.metric() ||
      a_.metric() != d_.metric())
    throw cliff::MetricMismatch("CMat2: entries over different metrics");
}

CMat2 CMat2::scalars(const MetricSpec &metric, const Expr &a, const Expr &b,
                     const Expr &c, const Expr &d) {
  return CMat2(Multivector::scalar(metric, a), Multivector::scalar(metric, b),
               Multivector::scalar(metric, c), Multivector::scalar(metric, d));
}

CMat2 CMat2::identity(const MetricSpec &metric) {
  return scalars(metric, 1, 0, 0, 1);
}

CMat2 mat_mul(const CMat2 &m1, const CMat2 &m2) {
  if (m1.metric() != m2.metric())
    throw cliff::MetricMismatch("mat_mul: matrices over different metrics");
  return CMat2(m1.a() * m2.a() + m1.b() * m2.c(), m1.a() * m2.b() + m1.b() * m2.d(),
               m1.c() * m2.a() + m1.d() * m2.c(), m1.c() * m2.b() + m1.d() * m2.d());
}

CMat2 operator*(const Expr &s, const CMat2 &m) {
  return CMat2(s * m.a(), s * m.b(), s * m.c(), s * m.d());
}

CMat2 normal(const CMat2 &m) {
  return CMat2(cliff::normal(m.a()), cliff::normal(m.b()), cliff::normal(m.c()),
               cliff::normal(m.d()));
}

std::vector<Expr> clifford_moebius_map(const Multivector &a, const Multivector &b,
                                       const Multivector &c, const Multivector &d,
                                       const std::vector<Expr> &v,
                                       const MetricSpec &metric) {
  if (v.size() != metric.dimension())
    throw cliff::LengthMismatch("clifford_moebius_map: point has " +
                                std::to_string(v.size()) + " components");
  if (a.metric() != metric)
    throw cliff::MetricMismatch("clifford_moebius_map: matrix over another metric");
  std::vector<Multivector> units;
  for (std::size_t k = 0; k < metric.dimension(); ++k)
    units.push_back(cliff::clifford_unit(k, metric));
  const Multivector V = cliff::lst_to_clifford(v, units);
  const Multivector den = cliff::normal(c * V + d);
  const Multivector num = a * V + b;
  const Multivector image = cliff::normal(num * cliff::clifford_inverse(den));
  std::vector<Expr> out = cliff::clifford_to_lst(image, units);
  for (auto &e : out)
    e = sym::normal(e);
  return out;
}

std::vector<Expr> clifford_moebius_map(const CMat2 &m, const std::vector<Expr> &v,
                                       const MetricSpec &metric) {
  return clifford_moebius_map(m.a(), m.b(), m.c(), m.d(), v, metric);
}

} // namespace eph::moebius
