#include "eph/plotcli/jobs.hpp"

#include "eph/ephgeom/checks.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

namespace eph::plot {

using geom::CurveKind;
using geom::MetricKind;
using geom::Subgroup;

namespace {

constexpr const char *orbit_stems[] = {"orbit", "cayley", "cayl-a"};
constexpr const char *transverse_stems[] = {"orbit-t", "cayley-t", "cayl-a-t"};

struct Task {
  std::vector<std::filesystem::path> files; // filled by run
  std::function<std::vector<std::filesystem::path>()> run;
};

std::vector<std::filesystem::path> write_set(const geom::CurveSet &cs,
                                             const char *const stems[3],
                                             const JobConfig &cfg) {
  std::vector<std::filesystem::path> files;
  for (int s = 0; s < 3; ++s) {
    auto path = cfg.out / file_name(stems[s], cs.subgroup, cs.metric, cfg.format);
    write_curves(to_records(cs.streams[s], cs.kind), path, cfg.format);
    files.push_back(path);
  }
  return files;
}

} // namespace

std::vector<std::filesystem::path> run_job(const JobConfig &cfg) {
  if (cfg.pipelines.empty())
    throw std::invalid_argument("no pipeline selected");
  std::error_code ec;
  std::filesystem::create_directories(cfg.out, ec);
  if (ec)
    throw IoError("cannot create " + cfg.out.string() + ": " + ec.message());

  std::vector<Task> tasks;
  for (Pipeline p : cfg.pipelines) {
    if (p == Pipeline::FuturePast) {
      tasks.push_back({{}, [&cfg] {
                         std::vector<std::filesystem::path> files;
                         auto frames = geom::sample_future_past();
                         const SvgView view{geom::future_past_lim, geom::future_past_lim};
                         for (std::size_t j = 0; j < frames.size(); ++j) {
                           auto path = cfg.out / frame_file_name(int(j), cfg.format);
                           write_curves(to_records(frames[j], CurveKind::FuturePast),
                                        path, cfg.format, view);
                           files.push_back(path);
                         }
                         return files;
                       }});
      continue;
    }
    for (MetricKind m : cfg.metrics)
      for (Subgroup s : cfg.subgroups) {
        switch (p) {
        case Pipeline::Orbits:
          tasks.push_back({{}, [&cfg, m, s] {
                             return write_set(geom::sample_orbits(m, s), orbit_stems, cfg);
                           }});
          break;
        case Pipeline::Transverses:
          tasks.push_back({{}, [&cfg, m, s] {
                             return write_set(geom::sample_transverses(m, s),
                                              transverse_stems, cfg);
                           }});
          break;
        case Pipeline::Arrows:
          tasks.push_back({{}, [&cfg, m, s] {
                             auto path = cfg.out / file_name("arrows", s, m, cfg.format);
                             write_curves(to_records(geom::sample_arrows(m, s),
                                                     CurveKind::Arrow),
                                          path, cfg.format);
                             return std::vector<std::filesystem::path>{path};
                           }});
          break;
        case Pipeline::FuturePast:
          break;
        }
      }
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      try {
        tasks[i].files = tasks[i].run();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(cfg.jobs, unsigned(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
  if (failure)
    std::rethrow_exception(failure);

  std::vector<std::filesystem::path> all;
  for (auto &t : tasks)
    all.insert(all.end(), t.files.begin(), t.files.end());
  return all;
}

namespace {

std::string fixed(double x, int prec = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", prec, x);
  return buf;
}

std::string sci(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// "=" for a value close to the previous one, the new value otherwise.
std::string running_line(const std::vector<double> &values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double d = std::abs(values[i] - (i ? values[i - 1] : 0));
    if (i && (d < 0.001 || d < 0.001 * (std::abs(values[i]) + std::abs(values[i - 1]))))
      s += '=';
    else
      s += ' ' + fixed(values[i]);
  }
  return s;
}

bool within(double residual, double scale, const VerifyOptions &o) {
  return residual <= o.abs_tol || residual <= o.rel_tol * std::abs(scale);
}

} // namespace

bool run_verify(const JobConfig &cfg, std::ostream &out, const VerifyOptions &opts) {
  const auto &tables = geom::TuningTables::standard();
  bool ok = true;
  auto has = [&](Subgroup s) {
    return std::find(cfg.subgroups.begin(), cfg.subgroups.end(), s) != cfg.subgroups.end();
  };

  for (MetricKind m : cfg.metrics) {
    if (has(Subgroup::K)) {
      out << "K-orbits, " << geom::name(m) << " metric\n";
      const auto &vp = tables.vpoints[geom::index(m)];
      for (std::size_t i = 1; i < std::size(vp); ++i) {
        auto r = geom::verify_k_orbit(m, vp[i], tables);
        const bool pass = within(r.max_residual, r.expected, opts);
        ok = ok && pass;
        out << r.formula() << running_line(r.values) << '\n';
        out << "  v0=" << format_number(r.v0) << " expected=" << fixed(r.expected, 6)
            << " residual=" << sci(r.max_residual);
        if (m == MetricKind::Hyperbolic)
          out << " flips=" << r.sign_flips << " 2p=" << fixed(2 * r.p, 6);
        out << (pass ? " ok" : " FAIL") << '\n';
      }
    }
    if (m != MetricKind::Parabolic)
      continue;
    for (Subgroup s : {Subgroup::A, Subgroup::N}) {
      if (!has(s))
        continue;
      auto rep = geom::verify_parabolic_vertices(s, tables);
      // one representative fit per orbit and image: the triple nearest t = 0
      std::map<std::pair<int, int>, const geom::VertexFit *> nearest;
      for (const auto &f : rep.fits) {
        auto &slot = nearest[{f.orbit, f.stream}];
        if (!slot || std::abs(f.j) < std::abs(slot->j))
          slot = &f;
      }
      const int vil = tables.vilimit(s, m);
      for (int vi = 0; vi < vil; ++vi) {
        auto c = nearest.find({vi, 1}), c1 = nearest.find({vi, 2});
        const double vval = geom::node_binding(s, m, vi, 0, tables).vval;
        out << "Parab (" << geom::letter(s) << "/ " << vi << "/ " << fixed(vval) << ")";
        if (c == nearest.end() || c1 == nearest.end()) {
          out << " no fit\n";
          continue;
        }
        const auto &p = *c->second, &q = *c1->second;
        out << "; vert=(" << fixed(p.vertex_u) << ", " << fixed(p.vertex_v)
            << "); l=" << fixed(p.focal_length, 4) << "; second vert=("
            << fixed(q.vertex_u) << ", " << fixed(q.vertex_v)
            << "); l=" << fixed(q.focal_length, 4) << '\n';
        if (s == Subgroup::A)
          out << "Check vertices: " << format_number(p.law) << " and "
              << format_number(q.law) << '\n';
      }
      out << "  fits=" << rep.fits.size() << " singular=" << rep.singular
          << " degenerate=" << rep.degenerate;
      if (s == Subgroup::A) {
        const bool pass = rep.max_law_error <= opts.abs_tol;
        ok = ok && pass;
        out << " max|law+1|=" << sci(rep.max_law_error)
            << " max|doubled-ordinate law+1|=" << sci(rep.max_scaled_law_error)
            << (pass ? " ok" : " FAIL");
      }
      out << '\n';
    }
  }
  return ok;
}

} // namespace eph::plot
