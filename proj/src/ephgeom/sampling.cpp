#include "eph/ephgeom/sampling.hpp"

#include "eph/symexpr/normal.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace eph::geom {

namespace {

using sym::NumericEnv;

struct Builder {
  Polyline current;
  Stream stream;

  void start(double grade, double pen) {
    current = Polyline{grade, pen, {}};
  }
  void add(const Node &n) { current.nodes.push_back(n); }
  void renew() {
    if (!current.nodes.empty())
      stream.lines.push_back(current);
    current.nodes.clear();
  }
};

double finite_or_zero(double d) { return std::isfinite(d) ? d : 0.0; }

std::pair<double, double> field_at(const std::array<Expr, 2> &f, double u,
                                   double v) {
  NumericEnv env{{"x", u}, {"y", v}};
  return {finite_or_zero(sym::evalf(f[0], env)),
          finite_or_zero(sym::evalf(f[1], env))};
}

// Tangent of a transverse line through the image of a node.
std::pair<double, double> transverse_tangent(const std::array<Expr, 2> &dir,
                                             const NodeBinding &nb) {
  NumericEnv env{{"t", nb.t}, {"x", nb.x}, {"y", nb.y}};
  double uf = sym::evalf(dir[0], env), vf = sym::evalf(dir[1], env);
  if (uf == INFINITY)
    return {1, 0};
  if (uf == -INFINITY)
    return {-1, 0};
  if (vf == INFINITY)
    return {0, 1};
  if (vf == -INFINITY)
    return {0, -1};
  if (std::isnan(uf) || std::isnan(vf))
    return {0, 0};
  if (std::abs(uf) + std::abs(vf) > 100) {
    double r = std::sqrt(uf * uf + vf * vf);
    uf /= r;
    vf /= r;
  }
  return {uf, vf};
}

constexpr std::array<TransformType, 3> stream_types{
    TransformType::Direct, TransformType::CayleyPoint,
    TransformType::Cayley1Point};

// One sampled stream of curves: orbits (`direct`) or transverses.
class StreamSampler {
public:
  StreamSampler(const Geometry &g, Subgroup sub, bool direct,
                const TuningTables &tables)
      : g_(g), sub_(sub), direct_(direct), tables_(tables) {
    if (!direct_) {
      using namespace symbols;
      sym::Binding seed = sub == Subgroup::A
                              ? sym::Binding{{tr_u(), -y()}, {tr_v(), x()}}
                              : sym::Binding{{tr_u(), Expr(0)}, {tr_v(), Expr(1)}};
      for (int s = 0; s < 3; ++s)
        for (int r = 0; r < 2; ++r)
          seeded_[s][r] =
              sym::normal(sym::subs(g_.field(sub_, s).trans_dir[r], seed));
    }
    for (int s = 0; s < 3; ++s)
      builders_[s].stream.transform = stream_types[s];
  }

  void start(double grade) {
    for (auto &b : builders_)
      b.start(grade, direct_ ? pen_direct : pen_default);
  }

  void node(const NodeBinding &nb) {
    NumericEnv env{{"t", nb.t}, {"x", nb.x}, {"y", nb.y}};
    for (int s = 0; s < 3; ++s) {
      const MoebiusFamily &fam = g_.family(sub_, stream_types[s]);
      const double u = sym::evalf(fam.u, env), v = sym::evalf(fam.v, env);
      ClipContext ctx{g_.kind, s != 0, false, tables_.ulim, tables_.vlim};
      if (!std::isfinite(u) || !std::isfinite(v) || !in_limits(ctx, u, v)) {
        builders_[s].renew();
        continue;
      }
      auto [du, dv] = direct_ ? field_at(g_.field(sub_, s).dV, u, v)
                              : transverse_tangent(seeded_[s], nb);
      builders_[s].add(Node{u, v, du, dv});
    }
  }

  void finish() {
    for (auto &b : builders_)
      b.renew();
  }

  CurveSet result(CurveKind kind) {
    CurveSet out{kind, g_.kind, sub_, {}};
    for (int s = 0; s < 3; ++s)
      out.streams[s] = std::move(builders_[s].stream);
    return out;
  }

private:
  const Geometry &g_;
  Subgroup sub_;
  bool direct_;
  const TuningTables &tables_;
  std::array<std::array<Expr, 2>, 3> seeded_;
  std::array<Builder, 3> builders_;
};

} // namespace

std::string name(CurveKind k) {
  switch (k) {
  case CurveKind::Orbit:
    return "orbit";
  case CurveKind::Transverse:
    return "transverse";
  case CurveKind::Arrow:
    return "arrow";
  case CurveKind::FuturePast:
    return "future_past";
  }
  return "?";
}

bool in_limits(const ClipContext &ctx, double u, double v) {
  if (!(std::abs(u) <= ctx.ulim && std::abs(v) <= ctx.vlim))
    return false;
  if (ctx.metric != MetricKind::Hyperbolic || ctx.inversion)
    return true;
  if (!ctx.cayley)
    return v >= 0;
  return !(-u * u + v * v - 1.001 > 0);
}

float sweep_value(Subgroup sub, MetricKind metric, int j,
                  const TuningTables &tables) {
  const float prod = tables.flimit(sub, metric) * static_cast<float>(j);
  return prod / static_cast<float>(tables.fstep(sub, metric));
}

NodeBinding node_binding(Subgroup sub, MetricKind metric, int vi, float f,
                         const TuningTables &tables) {
  const int vil = tables.vilimit(sub, metric);
  const float *vpoints = tables.vpoints[index(metric)];
  switch (sub) {
  case Subgroup::A: {
    double vval = 1.0 * vi / (vil - 1);
    if (metric == MetricKind::Hyperbolic)
      vval *= 2;
    return {f, std::cos(std::numbers::pi * vval),
            std::sin(std::numbers::pi * vval), vval};
  }
  case Subgroup::K: {
    double vval = vpoints[vi];
    return {f * std::numbers::pi, 0, vval, vval};
  }
  case Subgroup::N: {
    double vval;
    if (metric == MetricKind::Hyperbolic) {
      const int off = vi - vil / 2;
      vval = (off < 0 ? -1 : 1) * static_cast<double>(vpoints[std::abs(off)]);
    } else {
      vval = vpoints[vi];
    }
    return {f, 0, vval, vval};
  }
  }
  throw std::invalid_argument("node_binding: unknown subgroup");
}

CurveSet sample_orbits(MetricKind metric, Subgroup sub,
                       const TuningTables &tables) {
  StreamSampler sampler(geometry(metric), sub, true, tables);
  const int vil = tables.vilimit(sub, metric), fs = tables.fstep(sub, metric);
  for (int vi = 0; vi < vil; ++vi) {
    sampler.start(1.2 * vi / vil);
    for (int j = -fs; j <= fs; ++j)
      sampler.node(node_binding(sub, metric, vi, sweep_value(sub, metric, j, tables),
                                tables));
    sampler.finish();
  }
  return sampler.result(CurveKind::Orbit);
}

CurveSet sample_transverses(MetricKind metric, Subgroup sub,
                            const TuningTables &tables) {
  StreamSampler sampler(geometry(metric), sub, false, tables);
  const int vil = tables.vilimit(sub, metric), fs = tables.fstep(sub, metric);
  for (int j = -fs; j <= fs; ++j) {
    const float f = sweep_value(sub, metric, j, tables);
    sampler.start(1.2);
    for (int vi = 0; vi < vil; ++vi)
      sampler.node(node_binding(sub, metric, vi, f, tables));
    sampler.finish();
  }
  return sampler.result(CurveKind::Transverse);
}

Stream sample_arrows(MetricKind metric, Subgroup sub) {
  const auto &dV = geometry(metric).field(sub, 0).dV;
  Stream out;
  out.transform = TransformType::Direct;
  for (int k = -10; k < 10; ++k)
    for (int j = 0; j < 11; ++j) {
      const double u = k / 3.0, v = j / 3.0;
      auto [du, dv] = field_at(dV, u, v);
      out.lines.push_back(Polyline{arrow_grade, pen_default, {Node{u, v, du, dv}}});
    }
  return out;
}

float future_past_parameter(int j) {
  const float exp_scale = 1.3f;
  return j > 0 ? static_cast<float>(std::exp(double(j / exp_scale - 3))) : 0.0f;
}

std::pair<float, float> future_past_seed(int k, int l) {
  static const float rad[] = {1.0 / 5, 1.0 / 4, 1 / 3.5, 1.0 / 3, 1 / 2.5, 1.0 / 2,
                              1 / 1.5, 1,       1.5,     2,       2.5,     3,
                              3.5,     4,       4.5,     5};
  const float node_scale = 4.0f;
  const float arg = l / node_scale;
  return {rad[k] * std::cosh(arg), rad[k] * std::sinh(arg)};
}

std::vector<Stream> sample_future_past() {
  using namespace symbols;
  const MetricKind metric = MetricKind::Hyperbolic;
  const MetricSpec &m = metric_for(metric);
  const Expr a = Expr::symbol("a");
  const cliff::Multivector one = cliff::Multivector::one(m);
  const cliff::Multivector e1 = cliff::clifford_unit(1, m);
  const auto fut = moebius::clifford_moebius_map(one, -a * e1, a * e1, one,
                                                 {x(), y()}, m);
  const int nodes = 40;
  const ClipContext ctx{metric, false, true, future_past_lim, future_past_lim};

  std::vector<Stream> frames;
  for (int j = 0; j < future_past_frames; ++j) {
    const sym::Binding at{{a, Expr(sym::rational_from_double(future_past_parameter(j)))}};
    const Expr fu = sym::normal(sym::subs(fut[0], at));
    const Expr fv = sym::normal(sym::subs(fut[1], at));
    Builder b;
    b.stream.transform = TransformType::Direct;
    for (int k = 0; k < future_past_curves; ++k) {
      b.start(k / future_past_frames, pen_inversion);
      for (int l = -nodes / 2; l <= nodes / 2; ++l) {
        auto [sx, sy] = future_past_seed(k, l);
        NumericEnv env{{"x", sx}, {"y", sy}};
        const double u = sym::evalf(fu, env), v = sym::evalf(fv, env);
        if (!std::isfinite(u) || !std::isfinite(v) || !in_limits(ctx, u, v)) {
          b.renew();
          continue;
        }
        b.add(Node{u, v, 0, 0});
      }
      b.renew();
    }
    frames.push_back(std::move(b.stream));
  }
  return frames;
}

} // namespace eph::geom
