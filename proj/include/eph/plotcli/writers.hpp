#pragma once

#include "eph/plotcli/records.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace eph::plot {

enum class Format { Jsonl, Svg };

std::string extension(Format f);
Format parse_format(const std::string &s);

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// "orbit-A-e.jsonl" style names.
std::string file_name(const std::string &stem, geom::Subgroup sub,
                      geom::MetricKind metric, Format f);
// "future-past-03.svg"
std::string frame_file_name(int frame, Format f);

// %.9g rendering used by both sinks.
std::string format_number(double x);

std::string to_jsonl(const std::vector<CurveRecord> &records);

struct SvgView {
  double ulim = 25;
  double vlim = 25;
};
std::string to_svg(const std::vector<CurveRecord> &records, const SvgView &view = {});

void write_curves(const std::vector<CurveRecord> &records,
                  const std::filesystem::path &path, Format format,
                  const SvgView &view = {});

} // namespace eph::plot
