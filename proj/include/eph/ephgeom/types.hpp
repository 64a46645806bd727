#pragma once

#include <array>
#include <string>

namespace eph::geom {

enum class MetricKind { Elliptic = 0, Parabolic = 1, Hyperbolic = 2 };
enum class Subgroup { A = 0, N = 1, K = 2 };
enum class TransformType {
  Direct = 0,
  CayleyOp = 1,
  Cayley1Op = 2,
  CayleyPoint = 3,
  Cayley1Point = 4,
};

inline constexpr std::array<MetricKind, 3> all_metrics{
    MetricKind::Elliptic, MetricKind::Parabolic, MetricKind::Hyperbolic};
inline constexpr std::array<Subgroup, 3> all_subgroups{Subgroup::A, Subgroup::N,
                                                       Subgroup::K};

inline int index(MetricKind k) { return static_cast<int>(k); }
inline int index(Subgroup s) { return static_cast<int>(s); }
inline int index(TransformType t) { return static_cast<int>(t); }

// e1^2
inline int sigma(MetricKind k) { return index(k) - 1; }

inline char letter(MetricKind k) { return "eph"[index(k)]; }
inline char letter(Subgroup s) { return "ANK"[index(s)]; }
std::string name(MetricKind k);
std::string name(TransformType t);

MetricKind parse_metric(char c);
Subgroup parse_subgroup(char c);

// Iteration constants, indexed [subgroup][metric] except vpoints, which is
// [metric][point].
struct TuningTables {
  int vilimits[3][3];
  int fsteps[3][3];
  float flimits[3][3];
  float vpoints[3][10];
  float ulim;
  float vlim;

  static const TuningTables &standard();

  int vilimit(Subgroup s, MetricKind m) const {
    return vilimits[index(s)][index(m)];
  }
  int fstep(Subgroup s, MetricKind m) const { return fsteps[index(s)][index(m)]; }
  float flimit(Subgroup s, MetricKind m) const {
    return flimits[index(s)][index(m)];
  }
};

} // namespace eph::geom
