#include "eph/ephgeom/geometry.hpp"

#include "eph/symexpr/normal.hpp"

#include <mutex>
#include <stdexcept>

namespace eph::geom {

using cliff::clifford_unit;
using cliff::Multivector;
using sym::make_rational;

namespace symbols {
const Expr &x() {
  static const Expr s = Expr::symbol("x");
  return s;
}
const Expr &y() {
  static const Expr s = Expr::symbol("y");
  return s;
}
const Expr &t() {
  static const Expr s = Expr::symbol("t");
  return s;
}
const Expr &tr_u() {
  static const Expr s = Expr::symbol("U");
  return s;
}
const Expr &tr_v() {
  static const Expr s = Expr::symbol("V");
  return s;
}
} // namespace symbols

const MetricSpec &metric_for(MetricKind kind) {
  static const std::array<MetricSpec, 3> metrics{
      MetricSpec::diagonal({-1, -1}), MetricSpec::diagonal({-1, 0}),
      MetricSpec::diagonal({-1, 1})};
  return metrics[index(kind)];
}

CayleyMatrices cayley_matrices(MetricKind kind) {
  const MetricSpec &m = metric_for(kind);
  const Multivector one = Multivector::one(m);
  const Multivector e0 = clifford_unit(0, m), e1 = clifford_unit(1, m);
  CMat2 T(one, e0, e0, one);
  CMat2 TI(one, -e0, -e0, one);
  if (kind == MetricKind::Parabolic) {
    const Multivector h = Expr(make_rational(1, 2)) * e1;
    return {CMat2(one, -h, -h, one), CMat2(one, h, h, one),
            CMat2(one, -h, h, one),  CMat2(one, h, -h, one),
            T,                       TI};
  }
  const Expr s(sigma(kind));
  CMat2 C(one, -e1, s * e1, one);
  CMat2 CI(one, e1, -s * e1, one);
  return {C, CI, C * T, TI * CI, T, TI};
}

CMat2 subgroup_exp(Subgroup sub, const Expr &t, MetricKind kind) {
  const MetricSpec &m = metric_for(kind);
  const Multivector one = Multivector::one(m);
  const Multivector e0 = clifford_unit(0, m);
  switch (sub) {
  case Subgroup::A:
    return CMat2::scalars(m, sym::exp(t), 0, 0, sym::exp(-t));
  case Subgroup::N:
    return CMat2(one, t * e0, Multivector(m), one);
  case Subgroup::K:
    return CMat2(sym::cos(t) * one, sym::sin(t) * e0, sym::sin(t) * e0,
                 sym::cos(t) * one);
  }
  throw std::invalid_argument("subgroup_exp: unknown subgroup");
}

Families build_families(MetricKind kind) {
  const MetricSpec &m = metric_for(kind);
  const CayleyMatrices cm = cayley_matrices(kind);
  const std::vector<Expr> point{symbols::x(), symbols::y()};
  Families out;
  for (Subgroup sub : all_subgroups) {
    const CMat2 e = subgroup_exp(sub, symbols::t(), kind);
    const std::array<CMat2, 5> maps{e,
                                    moebius::normal(cm.C * e * cm.CI),
                                    moebius::normal(cm.C1 * e * cm.C1I),
                                    cm.C * e,
                                    moebius::normal(cm.C1 * e)};
    for (int ty = 0; ty < 5; ++ty) {
      const auto type = static_cast<TransformType>(ty);
      try {
        auto uv = moebius::clifford_moebius_map(maps[ty], point, m);
        out[index(sub)][ty] = MoebiusFamily{sub, type, uv[0], uv[1]};
      } catch (const std::exception &err) {
        throw std::runtime_error(std::string("family (") + letter(sub) + ", " +
                                 name(type) + ", " + name(kind) +
                                 "): " + err.what());
      }
    }
  }
  return out;
}

VectorFields vector_fields(const Families &families) {
  using namespace symbols;
  const sym::Binding at_zero{{t(), Expr(0)}};
  VectorFields out;
  for (int s = 0; s < 3; ++s)
    for (int stream = 0; stream < 3; ++stream) {
      const MoebiusFamily &flow = families[s][stream];
      const MoebiusFamily &pts = families[s][stream ? stream + 2 : 0];
      FieldData f;
      f.dV = {sym::normal(sym::subs(sym::diff(flow.u, t()), at_zero)),
              sym::normal(sym::subs(sym::diff(flow.v, t()), at_zero))};
      const std::array<Expr, 2> comp{pts.u, pts.v};
      for (int r = 0; r < 2; ++r) {
        f.jacobian[r] = {sym::normal(sym::diff(comp[r], x())),
                         sym::normal(sym::diff(comp[r], y()))};
        f.trans_dir[r] =
            sym::normal(f.jacobian[r][0] * tr_u() + f.jacobian[r][1] * tr_v());
      }
      out[s][stream] = std::move(f);
    }
  return out;
}

Curvature curvature(const Families &families, TransformType type) {
  using namespace symbols;
  if (index(type) > 2)
    throw std::invalid_argument("curvature: point families have no flow");
  const MoebiusFamily &k = families[index(Subgroup::K)][index(type)];
  const sym::Binding at_zero{{t(), Expr(0)}};
  auto d = [&](const Expr &e, unsigned order) {
    return sym::normal(sym::subs(sym::diff(e, t(), order), at_zero));
  };
  const Expr du = d(k.u, 1), dv = d(k.v, 1), ddu = d(k.u, 2), ddv = d(k.v, 2);
  Curvature c;
  c.k = sym::normal((ddu * dv - du * ddv) /
                    sym::pow(du * du + dv * dv, make_rational(3, 2)));
  c.on_v_axis = sym::normal(sym::subs(c.k, {{x(), Expr(0)}}));
  return c;
}

Geometry build_geometry(MetricKind kind) {
  Geometry g{kind, build_families(kind), {}, {}};
  g.fields = vector_fields(g.families);
  for (int ty = 0; ty < 3; ++ty)
    g.curvatures[ty] = curvature(g.families, static_cast<TransformType>(ty));
  return g;
}

const Geometry &geometry(MetricKind kind) {
  static std::array<std::once_flag, 3> once;
  static std::array<std::unique_ptr<Geometry>, 3> cache;
  std::call_once(once[index(kind)], [&] {
    cache[index(kind)] = std::make_unique<Geometry>(build_geometry(kind));
  });
  return *cache[index(kind)];
}

} // namespace eph::geom
