#include "eph/plotcli/writers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace eph::plot {

std::string extension(Format f) { return f == Format::Svg ? ".svg" : ".jsonl"; }

Format parse_format(const std::string &s) {
  if (s == "jsonl")
    return Format::Jsonl;
  if (s == "svg")
    return Format::Svg;
  throw std::invalid_argument("unknown format '" + s + "'");
}

std::string file_name(const std::string &stem, geom::Subgroup sub,
                      geom::MetricKind metric, Format f) {
  return stem + '-' + geom::letter(sub) + '-' + geom::letter(metric) + extension(f);
}

std::string frame_file_name(int frame, Format f) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "future-past-%02d", frame);
  return buf + extension(f);
}

std::string format_number(double x) {
  if (x == 0)
    return "0"; // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string to_jsonl(const std::vector<CurveRecord> &records) {
  std::string s;
  s.reserve(records.size() * 160);
  for (const auto &r : records) {
    s += "{\"curve_id\":" + std::to_string(r.curve_id);
    s += ",\"kind\":\"" + geom::name(r.kind) + '"';
    s += ",\"transform\":\"" + geom::name(r.transform) + '"';
    s += ",\"u\":" + format_number(r.u);
    s += ",\"v\":" + format_number(r.v);
    s += ",\"du\":" + format_number(r.du);
    s += ",\"dv\":" + format_number(r.dv);
    s += ",\"color_grade\":" + format_number(r.color_grade);
    s += ",\"pen_width_hint\":" + format_number(r.pen_width_hint);
    s += "}\n";
  }
  return s;
}

namespace {

std::string gray(double grade) {
  const int level =
      static_cast<int>(std::lround(255 * 0.6 * std::clamp(grade, 0.0, 1.0)));
  char buf[32];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", level, level, level);
  return buf;
}

std::string point(double u, double v) {
  return format_number(u) + ',' + format_number(-v);
}

} // namespace

std::string to_svg(const std::vector<CurveRecord> &records, const SvgView &view) {
  const double w = 2 * view.ulim, h = 2 * view.vlim;
  const double unit = view.ulim / 250; // one pen unit in user coordinates
  const double arrow_len = 2.5 * unit;
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"500\" "
       "height=\"" +
       format_number(500 * h / w) + "\" viewBox=\"" + format_number(-view.ulim) +
       ' ' + format_number(-view.vlim) + ' ' + format_number(w) + ' ' +
       format_number(h) + "\">\n";
  s += "<defs><clipPath id=\"view\"><rect x=\"" + format_number(-view.ulim) +
       "\" y=\"" + format_number(-view.vlim) + "\" width=\"" + format_number(w) +
       "\" height=\"" + format_number(h) + "\"/></clipPath></defs>\n";
  s += "<g clip-path=\"url(#view)\" fill=\"none\" stroke-linecap=\"round\" "
       "stroke-linejoin=\"round\">\n";

  std::size_t i = 0;
  while (i < records.size()) {
    std::size_t end = i + 1;
    while (end < records.size() && records[end].curve_id == records[i].curve_id)
      ++end;
    const CurveRecord &first = records[i];
    const std::string color = gray(first.color_grade);
    const std::string width = format_number(first.pen_width_hint * unit);
    if (first.kind == CurveKind::Arrow) {
      for (std::size_t k = i; k < end; ++k) {
        const auto &r = records[k];
        const double len = std::hypot(r.du, r.dv);
        if (!(len > 0))
          continue;
        const double cu = r.du / len, cv = r.dv / len;
        const double tu = r.u + arrow_len * cu, tv = r.v + arrow_len * cv;
        const double head = 0.4 * arrow_len;
        const double bu = tu - head * cu, bv = tv - head * cv;
        s += "<line x1=\"" + format_number(r.u) + "\" y1=\"" + format_number(-r.v) +
             "\" x2=\"" + format_number(tu) + "\" y2=\"" + format_number(-tv) +
             "\" stroke=\"" + color + "\" stroke-width=\"" + width + "\"/>\n";
        s += "<polygon points=\"" + point(tu, tv) + ' ' +
             point(bu - 0.4 * head * cv, bv + 0.4 * head * cu) + ' ' +
             point(bu + 0.4 * head * cv, bv - 0.4 * head * cu) + "\" fill=\"" +
             color + "\" stroke=\"none\"/>\n";
      }
    } else {
      s += "<path d=\"M" + point(first.u, first.v);
      for (std::size_t k = i + 1; k < end; ++k)
        s += " L" + point(records[k].u, records[k].v);
      s += "\" stroke=\"" + color + "\" stroke-width=\"" + width + "\"/>\n";
    }
    i = end;
  }
  s += "</g>\n</svg>\n";
  return s;
}

void write_curves(const std::vector<CurveRecord> &records,
                  const std::filesystem::path &path, Format format,
                  const SvgView &view) {
  const std::string body =
      format == Format::Svg ? to_svg(records, view) : to_jsonl(records);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f)
    throw IoError("cannot open " + path.string() + " for writing");
  f.write(body.data(), static_cast<std::streamsize>(body.size()));
  f.close();
  if (!f)
    throw IoError("write failed for " + path.string());
}

} // namespace eph::plot
