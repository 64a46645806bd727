#pragma once

#include "eph/ephgeom/sampling.hpp"

#include <string>
#include <utility>
#include <vector>

namespace eph::geom {

// Focal property of one K-orbit, evaluated at every interior sweep node.
//   elliptic:   distance to (0, (v0 + 1/v0)/2) against radius |v0 - 1/v0|/2
//   parabolic:  sqrt(u^2 + (v - (v0 + 1/(4 v0)))^2) - v, constant along the orbit
//   hyperbolic: |PF1| - |PF2| with F1 = (0, f), F2 = (0, f - 2p), constant up
//               to sign
struct KOrbitReport {
  MetricKind kind;
  double v0 = 0;
  std::vector<double> values;
  double expected = 0;     // radius, or |values[0]| for the constancy checks
  double max_residual = 0; // max |value - expected| (|value| when hyperbolic)
  int sign_flips = 0;
  // hyperbolic only
  double p = 0;
  double focus = 0;
  double gap_to_2p = 0; // max ||value| - 2p|

  std::string formula() const;
};

KOrbitReport verify_k_orbit(MetricKind kind, double v0,
                            const std::vector<std::pair<double, double>> &samples);
// Samples the K orbit from (0, v0) with the standard sweep, end points
// excluded.
KOrbitReport verify_k_orbit(MetricKind kind, float v0,
                            const TuningTables &tables = TuningTables::standard());

struct VertexFit {
  int orbit = 0;
  int stream = 1; // 1: C image, 2: C1 image
  int j = 0;      // sweep index of the last node of the triple
  double a = 0, b = 0, c = 0;
  double vertex_u = 0, vertex_v = 0;
  double focal_length = 0;
  double law = 0;        // vertex_v + vertex_u^2 (C), vertex_v - vertex_u^2 (C1)
  double scaled_law = 0; // 2 vertex_v + vertex_u^2 (C), 2 vertex_v - vertex_u^2 (C1)
};

struct VertexReport {
  Subgroup subgroup;
  std::vector<VertexFit> fits;
  int singular = 0;   // triples with repeated abscissae
  int degenerate = 0; // collinear triples (a = 0)
  double max_law_error = 0;        // max |law + 1|
  double max_scaled_law_error = 0; // max |scaled_law + 1|
};

// Fits v = a u^2 + b u + c through consecutive node triples of the parabolic
// Cayley-image orbits of subgroup A or N.
VertexReport verify_parabolic_vertices(
    Subgroup sub, const TuningTables &tables = TuningTables::standard());

struct Parabola {
  double a, b, c;
  double vertex_u, vertex_v, focal_length;
};
// Exact fit through three points; throws SingularSystem for repeated u.
Parabola fit_parabola(const std::array<std::pair<double, double>, 3> &pts);

} // namespace eph::geom
