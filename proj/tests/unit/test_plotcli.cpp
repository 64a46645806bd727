#include "eph/plotcli/cli.hpp"
#include "eph/plotcli/jobs.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

namespace fs = std::filesystem;
using namespace eph::plot;
using eph::geom::MetricKind;
using eph::geom::Subgroup;

namespace {

fs::path scratch(const std::string &name) {
  auto p = fs::temp_directory_path() / ("ephplot-test-" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path &p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

int run(std::vector<std::string> args, std::string *out = nullptr) {
  std::ostringstream o, e;
  int code = cli_main(args, o, e);
  if (out)
    *out = o.str() + e.str();
  return code;
}

// Checks tag nesting so the document is well-formed at the element level.
bool balanced_xml(const std::string &doc, std::map<std::string, int> &counts) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  while ((pos = doc.find('<', pos)) != std::string::npos) {
    std::size_t end = doc.find('>', pos);
    if (end == std::string::npos)
      return false;
    std::string tag = doc.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.empty())
      return false;
    if (tag[0] == '?')
      continue;
    if (tag[0] == '/') {
      if (stack.empty() || stack.back() != tag.substr(1))
        return false;
      stack.pop_back();
      continue;
    }
    const bool self_closing = tag.back() == '/';
    std::string name = tag.substr(0, tag.find_first_of(" /"));
    ++counts[name];
    if (std::count(tag.begin(), tag.end(), '"') % 2)
      return false;
    if (!self_closing)
      stack.push_back(name);
  }
  return stack.empty();
}

} // namespace

TEST(Names, Stems) {
  EXPECT_EQ(file_name("orbit", Subgroup::A, MetricKind::Elliptic, Format::Jsonl),
            "orbit-A-e.jsonl");
  EXPECT_EQ(file_name("cayley-t", Subgroup::K, MetricKind::Hyperbolic, Format::Svg),
            "cayley-t-K-h.svg");
  EXPECT_EQ(frame_file_name(7, Format::Jsonl), "future-past-07.jsonl");
}

TEST(Numbers, NineDigits) {
  EXPECT_EQ(format_number(1.0 / 3), "0.333333333");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(2.5), "2.5");
  EXPECT_EQ(format_number(123456789012.0), "1.23456789e+11");
}

TEST(Records, Flatten) {
  eph::geom::Stream s;
  s.transform = eph::geom::TransformType::CayleyPoint;
  s.lines.push_back({0.5, 1.5, {{1, 2, 3, 4}, {5, 6, 7, 8}}});
  s.lines.push_back({0.1, 1.5, {}});
  s.lines.push_back({0.7, 1.5, {{9, 10, 0, 0}}});
  auto r = to_records(s, CurveKind::Orbit);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].curve_id, 0);
  EXPECT_EQ(r[1].curve_id, 0);
  EXPECT_EQ(r[2].curve_id, 1);
  EXPECT_EQ(r[2].color_grade, 0.7);
  EXPECT_EQ(r[0].transform, eph::geom::TransformType::CayleyPoint);
}

TEST(Jsonl, EmptyAndSchema) {
  auto dir = scratch("empty");
  fs::create_directories(dir);
  write_curves({}, dir / "x.jsonl", Format::Jsonl);
  EXPECT_TRUE(fs::exists(dir / "x.jsonl"));
  EXPECT_EQ(fs::file_size(dir / "x.jsonl"), 0u);

  CurveRecord rec{3, CurveKind::Arrow, eph::geom::TransformType::Direct,
                  0.1, -2, 1.0 / 7, 0, 0.6, 0.5};
  std::string line = to_jsonl({rec});
  EXPECT_EQ(line, "{\"curve_id\":3,\"kind\":\"arrow\",\"transform\":\"direct\","
                  "\"u\":0.1,\"v\":-2,\"du\":0.142857143,\"dv\":0,"
                  "\"color_grade\":0.6,\"pen_width_hint\":0.5}\n");
  auto j = nlohmann::json::parse(line);
  EXPECT_EQ(j["kind"], "arrow");
}

TEST(Jsonl, IoErrorNamesPath) {
  try {
    write_curves({}, "/nonexistent-dir/zz/out.jsonl", Format::Jsonl);
    FAIL();
  } catch (const IoError &e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/zz/out.jsonl"),
              std::string::npos);
  }
}

TEST(Cli, OrbitsEmit27Files) {
  auto dir = scratch("orbits");
  ASSERT_EQ(run({"orbits", "--metric", "all", "--subgroup", "all", "--out", dir}), 0);
  std::set<std::string> names;
  for (auto &e : fs::directory_iterator(dir))
    names.insert(e.path().filename().string());
  EXPECT_EQ(names.size(), 27u);
  for (const char *stem : {"orbit", "cayley", "cayl-a"})
    for (char s : {'A', 'N', 'K'})
      for (char m : {'e', 'p', 'h'})
        EXPECT_TRUE(names.count(std::string(stem) + '-' + s + '-' + m + ".jsonl"));
}

TEST(Cli, RecordsRespectClipAndSchema) {
  auto dir = scratch("schema");
  ASSERT_EQ(run({"transverses", "--metric", "h", "--out", dir}), 0);
  for (auto &e : fs::directory_iterator(dir)) {
    std::ifstream f(e.path());
    std::string line;
    int prev_id = -1;
    const bool cayley = e.path().filename().string().rfind("orbit", 0) != 0;
    while (std::getline(f, line)) {
      auto j = nlohmann::json::parse(line);
      std::vector<std::string> keys;
      for (auto it = j.begin(); it != j.end(); ++it)
        keys.push_back(it.key());
      ASSERT_EQ(keys.size(), 9u);
      double u = j["u"], v = j["v"];
      EXPECT_LE(std::abs(u), 25);
      EXPECT_LE(std::abs(v), 25);
      if (cayley)
        EXPECT_LE(-u * u + v * v - 1.001, 1e-7);
      else
        EXPECT_GE(v, 0);
      int id = j["curve_id"];
      EXPECT_GE(id, prev_id);
      prev_id = id;
    }
  }
}

TEST(Cli, FuturePastFrames) {
  auto dir = scratch("fp");
  ASSERT_EQ(run({"future-past", "--out", dir}), 0);
  for (int j = 0; j < 8; ++j)
    EXPECT_TRUE(fs::exists(dir / frame_file_name(j, Format::Jsonl)));
  EXPECT_FALSE(fs::exists(dir / frame_file_name(8, Format::Jsonl)));
}

TEST(Cli, Deterministic) {
  auto a = scratch("det-a"), b = scratch("det-b");
  ASSERT_EQ(run({"all", "--out", a, "--jobs", "1"}), 1); // vertex law check fails
  ASSERT_EQ(run({"all", "--out", b, "--jobs", "4"}), 1);
  std::size_t n = 0;
  for (auto &e : fs::directory_iterator(a)) {
    ++n;
    EXPECT_EQ(slurp(e.path()), slurp(b / e.path().filename())) << e.path();
  }
  EXPECT_EQ(n, 27u + 27u + 9u + 8u);
}

TEST(Cli, SvgWellFormed) {
  auto dir = scratch("svg");
  ASSERT_EQ(run({"orbits", "--metric", "e", "--subgroup", "K", "--format", "svg",
                 "--out", dir}),
            0);
  ASSERT_EQ(run({"arrows", "--metric", "p", "--subgroup", "N", "--format", "svg",
                 "--out", dir}),
            0);
  auto orbit = eph::geom::sample_orbits(MetricKind::Elliptic, Subgroup::K);
  std::map<std::string, int> counts;
  ASSERT_TRUE(balanced_xml(slurp(dir / "orbit-K-e.svg"), counts));
  EXPECT_EQ(counts["svg"], 1);
  EXPECT_EQ(counts["clipPath"], 1);
  EXPECT_EQ(std::size_t(counts["path"]), orbit.streams[0].lines.size());

  std::map<std::string, int> arrows;
  ASSERT_TRUE(balanced_xml(slurp(dir / "arrows-N-p.svg"), arrows));
  EXPECT_EQ(arrows["line"], 220);
  EXPECT_EQ(arrows["polygon"], 220);
}

TEST(Cli, FlagsAndExitCodes) {
  std::string out;
  EXPECT_EQ(run({"orbits", "--metric", "x"}), 2);
  EXPECT_EQ(run({"orbits", "--format", "pdf"}), 2);
  EXPECT_EQ(run({}), 2);
  EXPECT_EQ(run({"bogus"}), 2);
  EXPECT_EQ(run({"--help"}, &out), 0);
  EXPECT_NE(out.find("future-past"), std::string::npos);
}

TEST(Cli, VerifyEllipticK) {
  std::string out;
  EXPECT_EQ(run({"verify", "--metric", "e", "--subgroup", "K"}, &out), 0);
  EXPECT_NE(out.find("Distance to center is: 0.750"), std::string::npos);
  EXPECT_EQ(out.find("FAIL"), std::string::npos);
  EXPECT_EQ(run({"verify", "--metric", "h", "--subgroup", "K"}, &out), 0);
  EXPECT_NE(out.find("Difference to foci is:"), std::string::npos);
  EXPECT_EQ(run({"verify", "--metric", "p", "--subgroup", "K"}, &out), 0);
  EXPECT_NE(out.find("Directrice is:"), std::string::npos);
}

TEST(Cli, VerifyReportsVertexLaw) {
  std::string out;
  EXPECT_EQ(run({"verify", "--metric", "p", "--subgroup", "A"}, &out), 1);
  EXPECT_NE(out.find("Check vertices: "), std::string::npos);
  EXPECT_NE(out.find("Parab (A/ 7/ 0.368)"), std::string::npos);
  EXPECT_EQ(run({"verify", "--metric", "p", "--subgroup", "N"}, &out), 0);
}
