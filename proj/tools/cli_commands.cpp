#include "cli_commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zp/argtrack.hpp"
#include "zp/manifest.hpp"
#include "zp/parallel.hpp"
#include "zp/phaseplot.hpp"
#include "zp/records_csv.hpp"
#include "zp/stats.hpp"
#include "zp/zeros.hpp"
#include "zp/zeta.hpp"

namespace zp::cli {

namespace {

std::string fmt17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_complex(Complex z) {
  std::string out = fmt17(z.real());
  out += z.imag() < 0.0 ? " - " : " + ";
  out += fmt17(std::abs(z.imag()));
  out += "i";
  return out;
}

// Options shared by every subcommand.
struct CommonOpts {
  EvalConfig ecfg;
  PathConfig pcfg;
  int jobs = 1;
  std::string manifest_path;
};

void add_eval_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--em-factor", o.ecfg.em_terms_factor,
                  "Euler-Maclaurin cutoff multiplier")
      ->envname("ZP_EM_FACTOR");
  cmd->add_option("--bernoulli-depth", o.ecfg.bernoulli_depth,
                  "Bernoulli correction terms")
      ->envname("ZP_BERNOULLI_DEPTH");
  cmd->add_option("--dirichlet-sigma-min", o.ecfg.dirichlet_sigma_min,
                  "sigma threshold for the plain Dirichlet series")
      ->envname("ZP_DIRICHLET_SIGMA_MIN");
  cmd->add_option("--target", o.ecfg.target_abs_error,
                  "accuracy target for tail estimates")
      ->envname("ZP_TARGET");
  cmd->add_option("--manifest", o.manifest_path,
                  "run-manifest path (default: derived from --out)")
      ->envname("ZP_MANIFEST");
}

void add_path_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--dx", o.pcfg.dx, "horizontal grid step")->envname("ZP_DX");
  cmd->add_option("--sigma-start", o.pcfg.sigma_start,
                  "right edge of the horizontal leg")
      ->envname("ZP_SIGMA_START");
  cmd->add_option("--slip-threshold", o.pcfg.slip_threshold,
                  "phase step size that triggers refinement")
      ->envname("ZP_SLIP_THRESHOLD");
  cmd->add_option("--refine-depth", o.pcfg.max_refine_depth,
                  "maximum midpoint-halving rounds")
      ->envname("ZP_REFINE_DEPTH");
}

// Zero-source options (finder window or imported table).
struct SourceOpts {
  std::vector<double> find_range;  // t_lo t_hi
  std::string import_path;
  std::string format = "auto";
  std::int64_t first_index = 1;
  std::int64_t limit = 0;  // 0 = no limit
};

void add_source_flags(CLI::App* cmd, SourceOpts& s) {
  auto* find = cmd->add_option("--find", s.find_range,
                               "locate zeros with ordinates in (t_lo, t_hi)")
                   ->expected(2);
  auto* imp = cmd->add_option("--import", s.import_path,
                              "read a zero table instead of finding");
  find->excludes(imp);
  cmd->add_option("--format", s.format,
                  "import format: auto | plain | indexed")
      ->check(CLI::IsMember({"auto", "plain", "indexed"}));
  cmd->add_option("--first-index", s.first_index,
                  "index of the first imported plain-format ordinate");
  cmd->add_option("--limit", s.limit, "keep only the first N records");
}

// One token per data line = plain ordinates, two = "k gamma".  The first
// non-comment line decides; an explicit --format always wins.
ZeroFormat sniff_format(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream iss(line);
    std::string first, second;
    if (!(iss >> first) || first[0] == '#') continue;
    return (iss >> second) ? ZeroFormat::kIndexed : ZeroFormat::kPlain;
  }
  return ZeroFormat::kPlain;  // empty file; either parse accepts it
}

std::vector<ZeroRecord> load_zeros(const SourceOpts& s, const EvalConfig& ecfg,
                                   RunManifest& manifest) {
  std::vector<ZeroRecord> zeros;
  if (!s.import_path.empty()) {
    ZeroFormat format = s.format == "indexed" ? ZeroFormat::kIndexed
                        : s.format == "plain" ? ZeroFormat::kPlain
                                              : sniff_format(s.import_path);
    std::ifstream in(s.import_path);
    if (!in) throw IoError("cannot open " + s.import_path);
    zeros = import_zeros(in, format, s.first_index);
    manifest.inputs.push_back({s.import_path, fnv1a64_hex_file(s.import_path)});
  } else if (s.find_range.size() == 2) {
    zeros = find_zeros(s.find_range[0], s.find_range[1], ecfg);
  } else {
    throw DomainError("need a zero source: --find t_lo t_hi or --import file");
  }
  if (s.limit > 0 && std::int64_t(zeros.size()) > s.limit)
    zeros.resize(std::size_t(s.limit));
  return zeros;
}

class ManifestTimer {
 public:
  explicit ManifestTimer(RunManifest& m)
      : manifest_(m), start_(std::chrono::steady_clock::now()) {}

  void write(const std::string& path) {
    manifest_.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start_)
            .count();
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path);
    write_manifest(out, manifest_);
  }

 private:
  RunManifest& manifest_;
  std::chrono::steady_clock::time_point start_;
};

std::string manifest_path_for(const CommonOpts& o, const std::string& out) {
  if (!o.manifest_path.empty()) return o.manifest_path;
  if (!out.empty()) return out + ".manifest.json";
  return "zp-manifest.json";
}

// ---- subcommand bodies ------------------------------------------------------

struct EvalArgs {
  std::vector<double> s;
  std::optional<double> t;
  bool want_zeta = false, want_deriv = false, want_chi = false;
  bool want_theta = false, want_hardy = false;
};

int cmd_eval(const EvalArgs& a, CommonOpts& o, ManifestTimer& timer) {
  const bool any_selector = a.want_zeta || a.want_deriv || a.want_chi ||
                            a.want_theta || a.want_hardy;
  if (a.s.empty() && !a.t)
    throw DomainError("eval: need --s or --t");

  std::vector<std::string> lines;
  if (!a.s.empty()) {
    const Complex s(a.s[0], a.s.size() > 1 ? a.s[1] : 0.0);
    if (a.want_zeta || !any_selector)
      lines.push_back("zeta = " + fmt_complex(zeta(s, o.ecfg)));
    if (a.want_deriv)
      lines.push_back("zeta_deriv = " + fmt_complex(zeta_deriv(s, o.ecfg)));
    if (a.want_chi) lines.push_back("chi = " + fmt_complex(chi(s)));
  }
  if (a.t) {
    if (a.want_theta || !any_selector)
      lines.push_back("theta = " + fmt17(theta(*a.t).theta));
    if (a.want_hardy || !any_selector)
      lines.push_back("Z = " + fmt17(hardy_Z(*a.t, o.ecfg)));
  }
  for (const auto& line : lines) std::cout << line << "\n";
  timer.write(manifest_path_for(o, ""));
  return 0;
}

int cmd_zeros(const SourceOpts& src, const std::string& out_path,
              CommonOpts& o, RunManifest& manifest, ManifestTimer& timer) {
  const auto zeros = load_zeros(src, o.ecfg, manifest);
  manifest.record_count = std::int64_t(zeros.size());
  if (out_path.empty()) {
    export_zeros(std::cout, zeros);
  } else {
    std::ofstream out(out_path);
    if (!out) throw IoError("cannot open " + out_path);
    export_zeros(out, zeros);
    manifest.outputs.push_back(out_path);
  }
  timer.write(manifest_path_for(o, out_path));
  return 0;
}

int cmd_phase(const SourceOpts& src, const std::string& out_path,
              bool dx_check, CommonOpts& o, RunManifest& manifest,
              ManifestTimer& timer) {
  const auto zeros = load_zeros(src, o.ecfg, manifest);

  std::vector<RecordRow> rows(zeros.size());
  PathConfig half = o.pcfg;
  half.dx = o.pcfg.dx / 2.0;

  parallel_for(zeros.size(), o.jobs, [&](std::size_t i) {
    RecordRow row = make_record_row(phase_at_zero(zeros[i], o.pcfg, o.ecfg));
    if (dx_check) {
      const PhaseRecord rec_half = phase_at_zero(zeros[i], half, o.ecfg);
      row.winding_agrees = rec_half.winding == row.rec.winding ? 1 : 0;
    }
    rows[i] = row;
  });

  manifest.record_count = std::int64_t(rows.size());
  for (const auto& row : rows)
    if (row.rec.flags != 0) ++manifest.flagged_count;

  std::ofstream out(out_path);
  if (!out) throw IoError("cannot open " + out_path);
  write_records_csv(out, rows, dx_check);
  manifest.outputs.push_back(out_path);
  timer.write(manifest_path_for(o, out_path));
  return 0;
}

struct StatsArgs {
  std::string records_path;
  std::string kind = "ARG_PAPER";
  std::int64_t n_ref = 0;
  bool theorem_form = false;
  bool include_flagged = false;
  std::vector<double> hist;  // lo hi bins
  int chi2_bins = 16;
  std::string out_prefix;
};

int cmd_stats(const StatsArgs& a, CommonOpts& o, RunManifest& manifest,
              ManifestTimer& timer) {
  std::ifstream in(a.records_path);
  if (!in) throw IoError("cannot open " + a.records_path);
  const auto rows = read_records_csv(in);
  manifest.inputs.push_back(
      {a.records_path, fnv1a64_hex_file(a.records_path)});

  std::vector<NormalizedSample> samples;
  samples.reserve(rows.size());
  for (const auto& row : rows) {
    if (a.kind == "ARG_PAPER")
      samples.push_back(
          normalize_arg(row.rec, a.n_ref, a.theorem_form).first);
    else if (a.kind == "ARG_CONVENTION")
      samples.push_back(
          normalize_arg(row.rec, a.n_ref, a.theorem_form).second);
    else if (a.kind == "LOGMOD_HEJHAL")
      samples.push_back(normalize_logmod(row.rec, a.n_ref, a.theorem_form));
    else
      throw DomainError("stats: unknown kind " + a.kind);
  }

  std::vector<NormalizedSample> included;
  included.reserve(samples.size());
  for (const auto& s : samples)
    if (a.include_flagged || !s.excluded) included.push_back(s);

  const MomentsReport rep = moments(samples, !a.include_flagged);

  HistogramSpec spec;
  if (a.hist.size() == 3) {
    spec.lo = a.hist[0];
    spec.hi = a.hist[1];
    spec.bins = int(a.hist[2]);
  }
  const HistogramResult hist = histogram(included, spec);

  std::vector<double> wrapped;
  wrapped.reserve(included.size());
  for (const auto& row : rows) {
    if (!a.include_flagged && row.rec.flags != 0) continue;
    wrapped.push_back(std::arg(row.rec.zeta_prime));
  }

  nlohmann::json j;
  j["kind"] = a.kind;
  j["n_ref"] = a.n_ref;
  j["theorem_form"] = a.theorem_form;
  j["n"] = rep.n;
  j["mean"] = rep.mean;
  j["stdev"] = rep.stdev;
  j["m3"] = rep.m3;
  j["m4"] = rep.m4;
  j["m5"] = rep.m5;
  j["m6"] = rep.m6;
  j["excluded_count"] = std::int64_t(samples.size() - included.size());
  // The uniformity column needs ~5 samples per cell; on smaller runs it is
  // reported as null rather than failing an otherwise-valid moments run.
  try {
    const ChiSquareResult chi2 = chi_square_uniform(wrapped, a.chi2_bins);
    j["wrapped_arg_chi2"] = {{"statistic", chi2.statistic},
                             {"dof", chi2.dof},
                             {"p_value", chi2.p_value}};
  } catch (const TooFewSamples&) {
    j["wrapped_arg_chi2"] = nullptr;
  }
  const std::string moments_path = a.out_prefix + ".moments.json";
  {
    std::ofstream out(moments_path);
    if (!out) throw IoError("cannot open " + moments_path);
    out << j.dump(2) << "\n";
  }
  manifest.outputs.push_back(moments_path);

  const std::string hist_path = a.out_prefix + ".hist.csv";
  {
    std::ofstream out(hist_path);
    if (!out) throw IoError("cannot open " + hist_path);
    out << "bin_lo,bin_hi,count,density,gauss_ref\n";
    for (const auto& row : hist.rows)
      out << fmt17(row.lo) << ',' << fmt17(row.hi) << ',' << row.count << ','
          << fmt17(row.density) << ',' << fmt17(row.gauss_ref) << "\n";
    if (!out) throw IoError("write failed: " + hist_path);
  }
  manifest.outputs.push_back(hist_path);

  manifest.record_count = rep.n;
  manifest.flagged_count = std::int64_t(samples.size() - included.size());
  timer.write(manifest_path_for(o, a.out_prefix));
  return 0;
}

struct GapsArgs {
  std::vector<std::int64_t> k_range;  // k_lo k_hi
  std::size_t count = 7;
  double safety = 0.5;
  std::string out_prefix;
};

int cmd_gaps(const SourceOpts& src, const GapsArgs& a, CommonOpts& o,
             RunManifest& manifest, ManifestTimer& timer) {
  const auto zeros = load_zeros(src, o.ecfg, manifest);
  if (a.k_range.size() != 2)
    throw DomainError("gaps: need --k k_lo k_hi");
  const GapReport report =
      scan_min_gaps(zeros, a.k_range[0], a.k_range[1], a.count);
  const double dx = recommend_dx(report, a.safety);

  const std::string csv_path = a.out_prefix + ".gaps.csv";
  {
    std::ofstream out(csv_path);
    if (!out) throw IoError("cannot open " + csv_path);
    out << "k,delta\n";
    for (const auto& g : report.smallest)
      out << g.k << ',' << fmt17(g.delta) << "\n";
    if (!out) throw IoError("write failed: " + csv_path);
  }
  manifest.outputs.push_back(csv_path);

  const std::string json_path = a.out_prefix + ".gaps.json";
  {
    nlohmann::json j;
    j["k_lo"] = a.k_range[0];
    j["k_hi"] = a.k_range[1];
    j["count"] = a.count;
    j["bulk_floor"] = report.bulk_floor;
    j["safety"] = a.safety;
    j["recommended_dx"] = dx;
    std::ofstream out(json_path);
    if (!out) throw IoError("cannot open " + json_path);
    out << j.dump(2) << "\n";
  }
  manifest.outputs.push_back(json_path);

  manifest.record_count = std::int64_t(report.smallest.size());
  timer.write(manifest_path_for(o, a.out_prefix));
  return 0;
}

struct PlotArgs {
  std::vector<double> region;  // sigma_lo sigma_hi t_lo t_hi
  std::vector<int> px;         // width height
  std::string out_path;
};

int cmd_plot(const PlotArgs& a, CommonOpts& o, RunManifest& manifest,
             ManifestTimer& timer) {
  if (a.region.size() != 4 || a.px.size() != 2)
    throw DomainError("plot: need --region slo shi tlo thi and --px W H");
  RegionSpec region{a.region[0], a.region[1], a.region[2], a.region[3],
                    a.px[0], a.px[1]};
  const PhaseImage image = render_phase(region, o.ecfg, o.jobs);
  std::ofstream out(a.out_path, std::ios::binary);
  if (!out) throw IoError("cannot open " + a.out_path);
  write_ppm(out, image);
  manifest.outputs.push_back(a.out_path);
  manifest.record_count =
      std::int64_t(image.width) * std::int64_t(image.height);
  timer.write(manifest_path_for(o, a.out_path));
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"continuous-phase statistics of zeta' at the zeta zeros"};
  app.require_subcommand(1);

  CommonOpts common;
  RunManifest manifest;
  for (int i = 0; i < argc; ++i) manifest.argv.push_back(argv[i]);

  SourceOpts source;
  EvalArgs eval_args;
  StatsArgs stats_args;
  GapsArgs gaps_args;
  PlotArgs plot_args;
  std::string out_path;
  bool dx_check = false;

  auto* eval = app.add_subcommand("eval", "evaluate zeta-side functions");
  eval->add_option("--s", eval_args.s, "complex point: re [im]")
      ->expected(1, 2);
  eval->add_option("--t", eval_args.t, "real ordinate for theta/Z");
  eval->add_flag("--zeta", eval_args.want_zeta, "print zeta(s)");
  eval->add_flag("--zeta-deriv", eval_args.want_deriv, "print zeta'(s)");
  eval->add_flag("--chi", eval_args.want_chi, "print chi(s)");
  eval->add_flag("--theta", eval_args.want_theta, "print theta(t)");
  eval->add_flag("--Z", eval_args.want_hardy, "print Hardy Z(t)");
  add_eval_flags(eval, common);

  auto* zeros_cmd = app.add_subcommand("zeros", "find or import zeros");
  add_source_flags(zeros_cmd, source);
  zeros_cmd->add_option("--out", out_path, "output table (default stdout)");
  add_eval_flags(zeros_cmd, common);

  auto* phase = app.add_subcommand("phase", "track arg zeta' to each zero");
  add_source_flags(phase, source);
  phase->add_option("--out", out_path, "records CSV path")->required();
  phase->add_flag("--dx-check", dx_check,
                  "also run at dx/2 and emit winding_agrees");
  phase->add_option("--jobs", common.jobs, "worker threads")
      ->envname("ZP_JOBS");
  add_path_flags(phase, common);
  add_eval_flags(phase, common);

  auto* stats = app.add_subcommand("stats", "normalize records and report");
  stats->add_option("--records", stats_args.records_path, "records CSV")
      ->required();
  stats->add_option("--kind", stats_args.kind,
                    "ARG_PAPER | ARG_CONVENTION | LOGMOD_HEJHAL");
  stats->add_option("--N-ref", stats_args.n_ref, "normalization reference")
      ->required();
  stats->add_flag("--theorem-form", stats_args.theorem_form,
                  "use sqrt(log log N / 2) denominators");
  stats->add_flag("--include-flagged", stats_args.include_flagged,
                  "keep flagged records in the sample");
  stats->add_option("--hist", stats_args.hist, "histogram: lo hi bins")
      ->expected(3);
  stats->add_option("--chi2-bins", stats_args.chi2_bins,
                    "bins for the wrapped-arg uniformity test");
  stats->add_option("--out", stats_args.out_prefix, "output prefix")
      ->required();
  add_eval_flags(stats, common);

  auto* gaps = app.add_subcommand("gaps", "smallest consecutive zero gaps");
  add_source_flags(gaps, source);
  gaps->add_option("--k", gaps_args.k_range, "index range: k_lo k_hi")
      ->expected(2);
  gaps->add_option("--count", gaps_args.count, "gaps to report");
  gaps->add_option("--safety", gaps_args.safety, "recommend_dx safety factor");
  gaps->add_option("--out", gaps_args.out_prefix, "output prefix")->required();
  add_eval_flags(gaps, common);

  auto* plot = app.add_subcommand("plot", "domain-coloring phase portrait");
  plot->add_option("--region", plot_args.region,
                   "sigma_lo sigma_hi t_lo t_hi")
      ->expected(4);
  plot->add_option("--px", plot_args.px, "width height")->expected(2);
  plot->add_option("--out", plot_args.out_path, "PPM path")->required();
  plot->add_option("--jobs", common.jobs, "worker threads")
      ->envname("ZP_JOBS");
  add_eval_flags(plot, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    common.ecfg.validate();
    ManifestTimer timer(manifest);
    manifest.ecfg = common.ecfg;
    manifest.jobs = common.jobs;
    if (eval->parsed()) {
      manifest.subcommand = "eval";
      return cmd_eval(eval_args, common, timer);
    }
    if (zeros_cmd->parsed()) {
      manifest.subcommand = "zeros";
      return cmd_zeros(source, out_path, common, manifest, timer);
    }
    if (phase->parsed()) {
      common.pcfg.validate();
      manifest.subcommand = "phase";
      manifest.has_path_config = true;
      manifest.pcfg = common.pcfg;
      return cmd_phase(source, out_path, dx_check, common, manifest, timer);
    }
    if (stats->parsed()) {
      manifest.subcommand = "stats";
      return cmd_stats(stats_args, common, manifest, timer);
    }
    if (gaps->parsed()) {
      manifest.subcommand = "gaps";
      return cmd_gaps(source, gaps_args, common, manifest, timer);
    }
    if (plot->parsed()) {
      manifest.subcommand = "plot";
      return cmd_plot(plot_args, common, manifest, timer);
    }
    throw DomainError("no subcommand");
  } catch (const TooFewSamples& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("zp");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(int(argv.size()), argv.data());
}

}  // namespace zp::cli
