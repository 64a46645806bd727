#pragma once

#include "eph/ephgeom/sampling.hpp"

#include <vector>

namespace eph::plot {

using geom::CurveKind;
using geom::TransformType;

// One plotted point. Consecutive records sharing curve_id form a polyline.
struct CurveRecord {
  int curve_id = 0;
  CurveKind kind = CurveKind::Orbit;
  TransformType transform = TransformType::Direct;
  double u = 0, v = 0;
  double du = 0, dv = 0;
  double color_grade = 0;
  double pen_width_hint = geom::pen_default;

  bool operator==(const CurveRecord &) const = default;
};

// Flattens a stream; curve ids count polylines from 0.
std::vector<CurveRecord> to_records(const geom::Stream &stream, CurveKind kind);

} // namespace eph::plot
