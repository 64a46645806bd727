#include "eph/plotcli/records.hpp"

namespace eph::plot {

std::vector<CurveRecord> to_records(const geom::Stream &stream, CurveKind kind) {
  std::vector<CurveRecord> out;
  int id = 0;
  for (const auto &line : stream.lines) {
    if (line.nodes.empty())
      continue;
    for (const auto &n : line.nodes)
      out.push_back({id, kind, stream.transform, n.u, n.v, n.du, n.dv,
                     line.color_grade, line.pen_width});
    ++id;
  }
  return out;
}

} // namespace eph::plot
