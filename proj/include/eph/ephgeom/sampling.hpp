#pragma once

#include "eph/ephgeom/geometry.hpp"

#include <array>
#include <vector>

namespace eph::geom {

enum class CurveKind { Orbit, Transverse, Arrow, FuturePast };
std::string name(CurveKind k);

inline constexpr double pen_direct = 1.5;
inline constexpr double pen_inversion = 1.0;
inline constexpr double pen_default = 0.5;
inline constexpr double arrow_grade = 0.6;

struct Node {
  double u, v;
  double du, dv;
};

// A run of accepted points; clipped or singular points end it.
struct Polyline {
  double color_grade = 0;
  double pen_width = pen_default;
  std::vector<Node> nodes;
};

struct Stream {
  TransformType transform = TransformType::Direct;
  std::vector<Polyline> lines;
};

// Orbits or transverses of one (metric, subgroup): direct points and the two
// Cayley images.
struct CurveSet {
  CurveKind kind;
  MetricKind metric;
  Subgroup subgroup;
  std::array<Stream, 3> streams;
};

struct ClipContext {
  MetricKind metric;
  bool cayley = false;
  bool inversion = false;
  float ulim = 25;
  float vlim = 25;
};

bool in_limits(const ClipContext &ctx, double u, double v);

// Group parameter and origin of orbit `vi` at sweep value f.
struct NodeBinding {
  double t, x, y;
  double vval;
};
NodeBinding node_binding(Subgroup sub, MetricKind metric, int vi, float f,
                         const TuningTables &tables);

// flimits * j / fsteps, in single precision.
float sweep_value(Subgroup sub, MetricKind metric, int j,
                  const TuningTables &tables);

CurveSet sample_orbits(MetricKind metric, Subgroup sub,
                       const TuningTables &tables = TuningTables::standard());
CurveSet sample_transverses(MetricKind metric, Subgroup sub,
                            const TuningTables &tables = TuningTables::standard());
// Direct vector field on the grid u = k/3, v = j/3; one single-node line per
// arrow, (du, dv) being the field.
Stream sample_arrows(MetricKind metric, Subgroup sub);

inline constexpr int future_past_frames = 8;
inline constexpr int future_past_curves = 15;
inline constexpr float future_past_lim = 8.5f;

// Future-to-past frames of the hyperbolic map [[1, -a e1], [a e1, 1]].
std::vector<Stream> sample_future_past();
// The map's frame parameter a for frame j.
float future_past_parameter(int j);
// Seed of node l on curve k.
std::pair<float, float> future_past_seed(int k, int l);

} // namespace eph::geom
