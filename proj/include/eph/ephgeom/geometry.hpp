#pragma once

#include "eph/ephgeom/types.hpp"
#include "eph/moebius/moebius.hpp"

#include <array>

namespace eph::geom {

using cliff::MetricSpec;
using moebius::CMat2;
using sym::Expr;

// Shared symbols: point (x, y), group parameter t, transverse seed (U, V).
namespace symbols {
const Expr &x();
const Expr &y();
const Expr &t();
const Expr &tr_u();
const Expr &tr_v();
} // namespace symbols

// diag(-1, sigma); one shared instance per kind.
const MetricSpec &metric_for(MetricKind kind);

struct CayleyMatrices {
  CMat2 C, CI, C1, C1I, T, TI;
};
CayleyMatrices cayley_matrices(MetricKind kind);

CMat2 subgroup_exp(Subgroup sub, const Expr &t, MetricKind kind);

struct MoebiusFamily {
  Subgroup subgroup;
  TransformType type;
  Expr u, v; // in x, y, t
};

using Families = std::array<std::array<MoebiusFamily, 5>, 3>;

Families build_families(MetricKind kind);

struct FieldData {
  std::array<Expr, 2> dV;                      // d/dt at t = 0, in x, y
  std::array<std::array<Expr, 2>, 2> jacobian; // rows (u, v), columns (x, y)
  std::array<Expr, 2> trans_dir;               // jacobian * (U, V)
};

// [subgroup][stream]; stream 0, 1, 2 takes dV from Direct, CayleyOp and
// Cayley1Op, and the Jacobian from Direct, CayleyPoint and Cayley1Point.
using VectorFields = std::array<std::array<FieldData, 3>, 3>;

VectorFields vector_fields(const Families &families);

struct Curvature {
  Expr k;         // (ddu dv - du ddv) / (du^2 + dv^2)^(3/2) at t = 0
  Expr on_v_axis; // k with x = 0
};

// K-subgroup curvature for type Direct, CayleyOp or Cayley1Op.
Curvature curvature(const Families &families, TransformType type);

// Everything the sampling layer needs for one metric.
struct Geometry {
  MetricKind kind;
  Families families;
  VectorFields fields;
  std::array<Curvature, 3> curvatures;

  const MoebiusFamily &family(Subgroup s, TransformType t) const {
    return families[index(s)][index(t)];
  }
  const FieldData &field(Subgroup s, int stream) const {
    return fields[index(s)][stream];
  }
};

Geometry build_geometry(MetricKind kind);
// Built once per kind on first use; safe to call concurrently.
const Geometry &geometry(MetricKind kind);

} // namespace eph::geom
