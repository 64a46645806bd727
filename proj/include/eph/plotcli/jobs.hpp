#pragma once

#include "eph/plotcli/writers.hpp"

#include <iosfwd>

namespace eph::plot {

enum class Pipeline { Orbits, Transverses, Arrows, FuturePast };

struct JobConfig {
  std::vector<geom::MetricKind> metrics{geom::all_metrics.begin(),
                                        geom::all_metrics.end()};
  std::vector<geom::Subgroup> subgroups{geom::all_subgroups.begin(),
                                        geom::all_subgroups.end()};
  std::filesystem::path out = ".";
  Format format = Format::Jsonl;
  std::vector<Pipeline> pipelines;
  unsigned jobs = 1;
};

// Writes every file of the selected pipelines and returns their paths in a
// fixed order (independent of `jobs`).
std::vector<std::filesystem::path> run_job(const JobConfig &config);

struct VerifyOptions {
  double abs_tol = 1e-6;
  double rel_tol = 1e-3;
};

// Prints the focal-property report for the selected metrics and subgroups.
// Returns false if any check exceeds tolerance.
bool run_verify(const JobConfig &config, std::ostream &out,
                const VerifyOptions &opts = {});

} // namespace eph::plot
