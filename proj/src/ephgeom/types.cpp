#include "eph/ephgeom/types.hpp"

#include <stdexcept>

namespace eph::geom {

std::string name(MetricKind k) {
  switch (k) {
  case MetricKind::Elliptic:
    return "elliptic";
  case MetricKind::Parabolic:
    return "parabolic";
  case MetricKind::Hyperbolic:
    return "hyperbolic";
  }
  return "?";
}

std::string name(TransformType t) {
  static const char *names[] = {"direct", "cayley_op", "cayley1_op",
                                "cayley_point", "cayley1_point"};
  return names[index(t)];
}

MetricKind parse_metric(char c) {
  switch (c) {
  case 'e':
    return MetricKind::Elliptic;
  case 'p':
    return MetricKind::Parabolic;
  case 'h':
    return MetricKind::Hyperbolic;
  }
  throw std::invalid_argument(std::string("unknown metric '") + c + "'");
}

Subgroup parse_subgroup(char c) {
  switch (c) {
  case 'A':
    return Subgroup::A;
  case 'N':
    return Subgroup::N;
  case 'K':
    return Subgroup::K;
  }
  throw std::invalid_argument(std::string("unknown subgroup '") + c + "'");
}

const TuningTables &TuningTables::standard() {
  static const TuningTables t{
      {{10, 20, 30}, {10, 10, 19}, {10, 10, 10}},
      {{15, 15, 20}, {15, 10, 20}, {12, 15, 15}},
      {{2.0, 2.0, 4.0}, {10.0, 4.0, 4.0}, {0.5, 0.5, 0.5}},
      {{0, 1.0 / 8, 1.0 / 4, 1.0 / 2, 1.0, 2.0, 3.0, 5.0, 8.0, 16.0},
       {0, 1.0 / 8, 1.0 / 4, 1.0 / 2, 1, 2.0, 3.0, 6.0, 10.0, 20.0},
       {0, 1.0 / 8, 1.0 / 4, 1.0 / 2, 1.0, 2.0, 3.0, 5.0, 10.0, 100}},
      25,
      25};
  return t;
}

} // namespace eph::geom
