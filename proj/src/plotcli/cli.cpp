#include "eph/plotcli/cli.hpp"

#include "eph/plotcli/jobs.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace eph::plot {

namespace {

std::vector<geom::MetricKind> metrics_from(const std::string &s) {
  if (s == "all")
    return {geom::all_metrics.begin(), geom::all_metrics.end()};
  return {geom::parse_metric(s[0])};
}

std::vector<geom::Subgroup> subgroups_from(const std::string &s) {
  if (s == "all")
    return {geom::all_subgroups.begin(), geom::all_subgroups.end()};
  return {geom::parse_subgroup(s[0])};
}

} // namespace

int cli_main(const std::vector<std::string> &args, std::ostream &out,
             std::ostream &err) {
  CLI::App app{"EPH geometry curve generator"};
  app.require_subcommand(1, 1);

  std::string metric = "all", subgroup = "all", format = "jsonl", dir = ".";
  unsigned jobs = 1;
  app.add_option("--metric", metric, "metric kind")
      ->check(CLI::IsMember({"e", "p", "h", "all"}))
      ->capture_default_str();
  app.add_option("--subgroup", subgroup, "subgroup")
      ->check(CLI::IsMember({"A", "N", "K", "all"}))
      ->capture_default_str();
  app.add_option("--out", dir, "output directory")->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"jsonl", "svg"}))
      ->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  auto *orbits = app.add_subcommand("orbits", "orbits and their Cayley images");
  auto *transverses =
      app.add_subcommand("transverses", "transverses and their Cayley images");
  auto *arrows = app.add_subcommand("arrows", "vector field arrows");
  auto *future = app.add_subcommand("future-past", "future-to-past frames");
  auto *verify = app.add_subcommand("verify", "focal-property checks");
  auto *all = app.add_subcommand("all", "every pipeline, then verify");
  for (auto *sub : app.get_subcommands({}))
    sub->fallthrough();

  std::vector<const char *> argv{"ephplot"};
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return 2;
  }

  JobConfig cfg;
  cfg.metrics = metrics_from(metric);
  cfg.subgroups = subgroups_from(subgroup);
  cfg.out = dir;
  cfg.format = parse_format(format);
  cfg.jobs = jobs;
  if (orbits->parsed())
    cfg.pipelines = {Pipeline::Orbits};
  else if (transverses->parsed())
    cfg.pipelines = {Pipeline::Transverses};
  else if (arrows->parsed())
    cfg.pipelines = {Pipeline::Arrows};
  else if (future->parsed())
    cfg.pipelines = {Pipeline::FuturePast};
  else if (all->parsed())
    cfg.pipelines = {Pipeline::Orbits, Pipeline::Transverses, Pipeline::Arrows,
                     Pipeline::FuturePast};

  try {
    if (!cfg.pipelines.empty()) {
      auto files = run_job(cfg);
      out << "wrote " << files.size() << " files to " << cfg.out.string() << '\n';
    }
    if (verify->parsed() || all->parsed())
      return run_verify(cfg, out) ? 0 : 1;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int cli_main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_main(args, std::cout, std::cerr);
}

} // namespace eph::plot
