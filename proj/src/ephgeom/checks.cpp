#include "eph/ephgeom/checks.hpp"

#include "eph/symexpr/lsolve.hpp"

#include <cmath>
#include <numbers>

namespace eph::geom {

std::string KOrbitReport::formula() const {
  switch (kind) {
  case MetricKind::Elliptic:
    return "Distance to center is:";
  case MetricKind::Parabolic:
    return "Directrice is:";
  case MetricKind::Hyperbolic:
    return "Difference to foci is:";
  }
  return "";
}

KOrbitReport verify_k_orbit(MetricKind kind, double v0,
                            const std::vector<std::pair<double, double>> &samples) {
  KOrbitReport r;
  r.kind = kind;
  r.v0 = v0;
  if (kind == MetricKind::Hyperbolic) {
    r.p = (v0 * v0 + 1) / v0 / std::sqrt(2.0);
    const double s = std::sqrt(std::max(0.0, r.p * r.p / 2 - 1));
    r.focus = v0 < 1 ? r.p - s : r.p + s;
  }
  for (auto [u, v] : samples) {
    double value = 0;
    switch (kind) {
    case MetricKind::Elliptic:
      value = std::hypot(u, v - (v0 + 1 / v0) / 2);
      break;
    case MetricKind::Parabolic:
      value = std::hypot(u, v - (v0 + 1 / v0 / 4)) - v;
      break;
    case MetricKind::Hyperbolic:
      value = std::hypot(u, v - r.focus) - std::hypot(u, v - r.focus + 2 * r.p);
      break;
    }
    if (!std::isfinite(value))
      continue;
    if (!r.values.empty() && (value < 0) != (r.values.back() < 0))
      ++r.sign_flips;
    r.values.push_back(value);
  }
  if (r.values.empty())
    return r;
  switch (kind) {
  case MetricKind::Elliptic:
    r.expected = std::abs(v0 - 1 / v0) / 2;
    break;
  case MetricKind::Parabolic:
    r.expected = r.values.front();
    break;
  case MetricKind::Hyperbolic:
    r.expected = std::abs(r.values.front());
    break;
  }
  for (double value : r.values) {
    const double got = kind == MetricKind::Hyperbolic ? std::abs(value) : value;
    r.max_residual = std::max(r.max_residual, std::abs(got - r.expected));
    if (kind == MetricKind::Hyperbolic)
      r.gap_to_2p = std::max(r.gap_to_2p, std::abs(std::abs(value) - 2 * r.p));
  }
  return r;
}

KOrbitReport verify_k_orbit(MetricKind kind, float v0, const TuningTables &tables) {
  const Geometry &g = geometry(kind);
  const MoebiusFamily &fam = g.family(Subgroup::K, TransformType::Direct);
  const int fs = tables.fstep(Subgroup::K, kind);
  std::vector<std::pair<double, double>> samples;
  for (int j = -fs + 1; j < fs; ++j) {
    const double t = sweep_value(Subgroup::K, kind, j, tables) * std::numbers::pi;
    sym::NumericEnv env{{"t", t}, {"x", 0.0}, {"y", double(v0)}};
    samples.emplace_back(sym::evalf(fam.u, env), sym::evalf(fam.v, env));
  }
  return verify_k_orbit(kind, double(v0), samples);
}

Parabola fit_parabola(const std::array<std::pair<double, double>, 3> &pts) {
  const Expr a = Expr::symbol("a"), b = Expr::symbol("b"), c = Expr::symbol("c");
  std::vector<sym::Equation> eqns;
  for (auto [u, v] : pts) {
    const Expr U(sym::rational_from_double(u));
    eqns.push_back({a * U * U + b * U + c, Expr(sym::rational_from_double(v))});
  }
  const sym::Binding s = sym::lsolve(eqns, {a, b, c});
  const sym::Rational A = s.at("a").value(), B = s.at("b").value(),
                      C = s.at("c").value();
  Parabola p{A.get_d(), B.get_d(), C.get_d(), 0, 0, 0};
  if (A != 0) {
    p.vertex_u = sym::Rational(-B / (2 * A)).get_d();
    p.vertex_v = sym::Rational(C - B * B / (4 * A)).get_d();
    p.focal_length = sym::Rational(1 / (4 * A)).get_d();
  } else {
    p.vertex_u = p.vertex_v = p.focal_length = NAN;
  }
  return p;
}

VertexReport verify_parabolic_vertices(Subgroup sub, const TuningTables &tables) {
  if (sub == Subgroup::K)
    throw std::invalid_argument("verify_parabolic_vertices: subgroup A or N only");
  const MetricKind kind = MetricKind::Parabolic;
  const Geometry &g = geometry(kind);
  VertexReport rep;
  rep.subgroup = sub;
  const int vil = tables.vilimit(sub, kind), fs = tables.fstep(sub, kind);
  for (int vi = 0; vi < vil; ++vi)
    for (int stream = 1; stream <= 2; ++stream) {
      const MoebiusFamily &fam =
          g.family(sub, stream == 1 ? TransformType::CayleyPoint
                                    : TransformType::Cayley1Point);
      std::vector<std::pair<double, double>> window;
      for (int j = -fs; j <= fs; ++j) {
        const NodeBinding nb =
            node_binding(sub, kind, vi, sweep_value(sub, kind, j, tables), tables);
        sym::NumericEnv env{{"t", nb.t}, {"x", nb.x}, {"y", nb.y}};
        const double u = sym::evalf(fam.u, env), v = sym::evalf(fam.v, env);
        if (!std::isfinite(u) || !std::isfinite(v)) {
          window.clear();
          continue;
        }
        window.emplace_back(u, v);
        if (window.size() < 3)
          continue;
        if (window.size() > 3)
          window.erase(window.begin());
        Parabola p;
        try {
          p = fit_parabola({window[0], window[1], window[2]});
        } catch (const sym::SingularSystem &) {
          ++rep.singular;
          continue;
        }
        if (p.a == 0) {
          ++rep.degenerate;
          continue;
        }
        const double sq = p.vertex_u * p.vertex_u;
        VertexFit fit{vi, stream, j, p.a, p.b, p.c, p.vertex_u, p.vertex_v,
                      p.focal_length,
                      stream == 1 ? p.vertex_v + sq : p.vertex_v - sq,
                      stream == 1 ? 2 * p.vertex_v + sq : 2 * p.vertex_v - sq};
        rep.max_law_error = std::max(rep.max_law_error, std::abs(fit.law + 1));
        rep.max_scaled_law_error =
            std::max(rep.max_scaled_law_error, std::abs(fit.scaled_law + 1));
        rep.fits.push_back(fit);
      }
    }
  return rep;
}

} // namespace eph::geom
