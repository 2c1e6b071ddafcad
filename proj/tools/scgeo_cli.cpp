#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scgeo/bisector.hpp"
#include "scgeo/certificate.hpp"
#include "scgeo/convex.hpp"
#include "scgeo/curves.hpp"
#include "scgeo/io.hpp"
#include "scgeo/norm.hpp"
#include "scgeo/svg.hpp"

using namespace scgeo;

namespace {

// Options actually used by a run, echoed verbatim into every report so the
// artifact pins its own reproduction (paths excluded: they do not affect
// values and would churn golden comparisons).
struct RunConfig {
  std::string subcommand;
  std::string norm;
  std::vector<std::pair<std::string, std::string>> options;

  void add(const std::string& k, double v) { options.emplace_back(k, format_g17(v)); }
  void add(const std::string& k, int v) { options.emplace_back(k, std::to_string(v)); }
  void add(const std::string& k, std::uint64_t v) { options.emplace_back(k, std::to_string(v)); }

  void emit(JsonWriter& w) const {
    w.key("config").begin_object();
    w.key("subcommand").value(subcommand);
    w.key("norm").value(norm);
    for (const auto& [k, v] : options) {
      w.key(k);
      w.raw_number(v);
    }
    w.end_object();
  }
};

NormModel parse_norm_or_exit(const std::string& spec_text) {
  std::string err;
  auto spec = NormSpec::parse(spec_text, err);
  if (!spec) {
    std::cerr << "error: " << err << "\n";
    std::exit(2);
  }
  return NormModel(*spec);
}

void deliver(const std::string& content, const std::string& out_path) {
  if (!out_path.empty()) atomic_write_file(out_path, content);
  std::fputs(content.c_str(), stdout);
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string tok = text.substr(pos, comma - pos);
    pos = comma + 1;
    if (tok.empty()) continue;
    const std::size_t dots = tok.find("..");
    try {
      if (dots == std::string::npos) {
        seeds.push_back(std::stoull(tok));
      } else {
        const std::uint64_t a = std::stoull(tok.substr(0, dots));
        const std::uint64_t b = std::stoull(tok.substr(dots + 2));
        if (b < a || b - a > 100000) throw std::invalid_argument("bad range");
        for (std::uint64_t s = a; s <= b; ++s) seeds.push_back(s);
      }
    } catch (const std::exception&) {
      std::cerr << "error: bad seed token '" << tok << "' (use N or A..B)\n";
      std::exit(2);
    }
  }
  if (seeds.empty()) {
    std::cerr << "error: no seeds given\n";
    std::exit(2);
  }
  return seeds;
}

void emit_bundle_fields(JsonWriter& w, const ConstantsBundle& b) {
  w.key("alpha0").value(b.alpha0);
  w.key("kappa").value(b.kappa);
  w.key("lambda").value(b.lambda);
  w.key("tau1").value(b.tau1);
  w.key("mu").value(b.mu);
  w.key("eps0").value(b.eps0);
  w.key("tau").value(b.tau);
  w.key("delta").value(b.delta);
  w.key("c0").value(b.c0);
  w.key("C").value(b.C);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar normed-geometry toolkit: norm bisectors, self-contracted "
               "curves, and certified length bounds"};
  app.require_subcommand(1);
  app.fallthrough();  // --norm may follow the subcommand name

  std::string norm_text = "euclid";
  app.add_option("--norm", norm_text, "norm spec: euclid | lp:P | alp:P:a11,a12,a21,a22")
      ->capture_default_str();

  // ---- norm-info ----
  auto* cmd_info = app.add_subcommand("norm-info", "alpha0, kappa and the constant chain");
  int info_grid = 4096, info_dir_grid = 256, info_t_grid = 256;
  std::string info_out;
  cmd_info->add_option("--grid", info_grid, "alpha0 direction grid")->capture_default_str();
  cmd_info->add_option("--dir-grid", info_dir_grid, "kappa direction grid")->capture_default_str();
  cmd_info->add_option("--t-grid", info_t_grid, "kappa offset grid")->capture_default_str();
  cmd_info->add_option("--out", info_out, "also write the JSON report here");

  // ---- alpha0 ----
  auto* cmd_alpha = app.add_subcommand("alpha0", "minimal radial-tangential angle of the norm");
  int alpha_grid = 4096;
  std::string alpha_out;
  cmd_alpha->add_option("--grid", alpha_grid, "direction grid")->capture_default_str();
  cmd_alpha->add_option("--out", alpha_out, "also write the JSON report here");

  // ---- kappa ----
  auto* cmd_kappa = app.add_subcommand("kappa", "bisector strip half-width estimate");
  int kappa_dir = 256, kappa_t = 256;
  std::string kappa_out;
  cmd_kappa->add_option("--dir-grid", kappa_dir, "direction grid")->capture_default_str();
  cmd_kappa->add_option("--t-grid", kappa_t, "offset grid")->capture_default_str();
  cmd_kappa->add_option("--out", kappa_out, "also write the JSON report here");

  // ---- bisector ----
  auto* cmd_bis = app.add_subcommand("bisector", "trace the norm bisector of a segment");
  double ax = 0, ay = 0, bx = 1, by = 0;
  int bis_samples = 512;
  std::string bis_trace_out, bis_report_out, bis_svg_out, bis_rs = "10,30,100,300,1000";
  cmd_bis->add_option("--ax", ax, "segment endpoint a, x")->capture_default_str();
  cmd_bis->add_option("--ay", ay, "segment endpoint a, y")->capture_default_str();
  cmd_bis->add_option("--bx", bx, "segment endpoint b, x")->capture_default_str();
  cmd_bis->add_option("--by", by, "segment endpoint b, y")->capture_default_str();
  cmd_bis->add_option("--samples", bis_samples, "trace sample count")->capture_default_str();
  cmd_bis->add_option("--trace-out", bis_trace_out, "write t,zx,zy,residual CSV here");
  cmd_bis->add_option("--report-out", bis_report_out, "also write the JSON report here");
  cmd_bis->add_option("--svg-out", bis_svg_out, "write an SVG figure here");
  cmd_bis->add_option("--deviation-rs", bis_rs, "radii for the asymptote deviation table")
      ->capture_default_str();

  // ---- generate ----
  auto* cmd_gen = app.add_subcommand("generate", "generate a self-contracted test curve");
  std::string gen_kind = "greedy", gen_out, gen_svg_out;
  int gen_n = 160;
  double gen_step = 1.0;
  std::uint64_t gen_seed = 42;
  double gd_qxx = 1, gd_qxy = 0, gd_qyy = 10, gd_x0x = 1, gd_x0y = 1;
  cmd_gen->add_option("--kind", gen_kind, "greedy | gd (explicit-Euler gradient descent)")
      ->capture_default_str();
  cmd_gen->add_option("--n", gen_n, "vertex budget")->capture_default_str();
  cmd_gen->add_option("--step", gen_step, "greedy: initial step; gd: Euler step")
      ->capture_default_str();
  cmd_gen->add_option("--seed", gen_seed, "greedy RNG seed")->capture_default_str();
  cmd_gen->add_option("--qxx", gd_qxx, "gd potential entry")->capture_default_str();
  cmd_gen->add_option("--qxy", gd_qxy, "gd potential entry")->capture_default_str();
  cmd_gen->add_option("--qyy", gd_qyy, "gd potential entry")->capture_default_str();
  cmd_gen->add_option("--x0x", gd_x0x, "gd start, x")->capture_default_str();
  cmd_gen->add_option("--x0y", gd_x0y, "gd start, y")->capture_default_str();
  cmd_gen->add_option("--out", gen_out, "write the curve CSV here")->required();
  cmd_gen->add_option("--svg-out", gen_svg_out, "write an SVG figure here");

  // ---- verify ----
  auto* cmd_ver = app.add_subcommand("verify", "self-contraction verdict for a curve CSV");
  std::string ver_in, ver_out;
  double ver_tol = 1e-12;
  bool ver_skip_cosine = false;
  cmd_ver->add_option("--in", ver_in, "curve CSV")->required();
  cmd_ver->add_option("--tol", ver_tol, "SC defect tolerance")->capture_default_str();
  cmd_ver->add_flag("--skip-cosine", ver_skip_cosine, "skip the triple-cosine bound check");
  cmd_ver->add_option("--out", ver_out, "also write the JSON report here");

  // ---- certify ----
  auto* cmd_cert = app.add_subcommand("certify", "constant chain + width-decrement certificate");
  std::string cert_in, cert_seeds, cert_out;
  std::uint64_t cert_seed = 42;
  int cert_n = 160, cert_stride = 1, cert_grid = 4096, cert_dir = 256, cert_t = 256;
  double cert_step = 1.0;
  cmd_cert->add_option("--in", cert_in, "curve CSV to certify");
  cmd_cert->add_option("--seed", cert_seed, "single greedy seed")->capture_default_str();
  cmd_cert->add_option("--seeds", cert_seeds, "greedy seeds, N or A..B, comma separated");
  cmd_cert->add_option("--n", cert_n, "greedy vertex budget")->capture_default_str();
  cmd_cert->add_option("--step", cert_step, "greedy initial step")->capture_default_str();
  cmd_cert->add_option("--stride", cert_stride, "pair sampling stride")->capture_default_str();
  cmd_cert->add_option("--grid", cert_grid, "alpha0 grid")->capture_default_str();
  cmd_cert->add_option("--dir-grid", cert_dir, "kappa direction grid")->capture_default_str();
  cmd_cert->add_option("--t-grid", cert_t, "kappa offset grid")->capture_default_str();
  cmd_cert->add_option("--out", cert_out, "also write the JSON report here");

  // ---- bound-report ----
  auto* cmd_bound = app.add_subcommand("bound-report", "length vs certified bound summary");
  std::string bound_in, bound_seeds, bound_out;
  int bound_n = 160, bound_grid = 4096, bound_dir = 256, bound_t = 256;
  double bound_step = 1.0;
  cmd_bound->add_option("--in", bound_in, "curve CSV");
  cmd_bound->add_option("--seeds", bound_seeds, "greedy seeds, N or A..B, comma separated");
  cmd_bound->add_option("--n", bound_n, "greedy vertex budget")->capture_default_str();
  cmd_bound->add_option("--step", bound_step, "greedy initial step")->capture_default_str();
  cmd_bound->add_option("--grid", bound_grid, "alpha0 grid")->capture_default_str();
  cmd_bound->add_option("--dir-grid", bound_dir, "kappa direction grid")->capture_default_str();
  cmd_bound->add_option("--t-grid", bound_t, "kappa offset grid")->capture_default_str();
  cmd_bound->add_option("--out", bound_out, "also write the JSON report here");

  // ---- plot ----
  auto* cmd_plot = app.add_subcommand("plot", "SVG figure for a curve CSV");
  std::string plot_in, plot_out;
  bool plot_hull = false;
  cmd_plot->add_option("--in", plot_in, "curve CSV")->required();
  cmd_plot->add_option("--out", plot_out, "SVG output path")->required();
  cmd_plot->add_flag("--hull", plot_hull, "overlay the convex hull");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*cmd_info) {
      const NormModel norm = parse_norm_or_exit(norm_text);
      const ConstantsBundle b = derive_constants_from(
          norm.alpha0(info_grid), kappa_estimate(norm, info_dir_grid, info_t_grid));
      RunConfig cfg{"norm-info", norm.spec().to_string(), {}};
      cfg.add("grid", info_grid);
      cfg.add("dir_grid", info_dir_grid);
      cfg.add("t_grid", info_t_grid);
      JsonWriter w;
      w.begin_object();
      w.key("norm").value(norm.spec().to_string());
      emit_bundle_fields(w, b);
      cfg.emit(w);
      w.end_object();
      deliver(w.str() + "\n", info_out);
      return 0;
    }

    if (*cmd_alpha) {
      const NormModel norm = parse_norm_or_exit(norm_text);
      const double a0 = norm.alpha0(alpha_grid);
      RunConfig cfg{"alpha0", norm.spec().to_string(), {}};
      cfg.add("grid", alpha_grid);
      JsonWriter w;
      w.begin_object();
      w.key("norm").value(norm.spec().to_string());
      w.key("alpha0").value(a0);
      cfg.emit(w);
      w.end_object();
      deliver(w.str() + "\n", alpha_out);
      return 0;
    }

    if (*cmd_kappa) {
      const NormModel norm = parse_norm_or_exit(norm_text);
      const double k = kappa_estimate(norm, kappa_dir, kappa_t);
      RunConfig cfg{"kappa", norm.spec().to_string(), {}};
      cfg.add("dir_grid", kappa_dir);
      cfg.add("t_grid", kappa_t);
      JsonWriter w;
      w.begin_object();
      w.key("norm").value(norm.spec().to_string());
      w.key("kappa").value(k);
      cfg.emit(w);
      w.end_object();
      deliver(w.str() + "\n", kappa_out);
      return 0;
    }

    if (*cmd_bis) {
      const NormModel norm = parse_norm_or_exit(norm_text);
      if (ax == bx && ay == by) {
        std::cerr << "error: segment endpoints coincide\n";
        return 2;
      }
      const Segment seg{{ax, ay}, {bx, by}};
      const BisectorTrace trace = trace_bisector(norm, seg, bis_samples);
      std::vector<double> rs;
      for (const std::string& tok : [&] {
             std::vector<std::string> toks;
             std::size_t pos = 0;
             while (pos <= bis_rs.size()) {
               std::size_t c = bis_rs.find(',', pos);
               if (c == std::string::npos) c = bis_rs.size();
               if (c > pos) toks.push_back(bis_rs.substr(pos, c - pos));
               pos = c + 1;
             }
             return toks;
           }())
        rs.push_back(std::stod(tok));
      const auto devs = asymptote_deviation(norm, seg, rs);

      if (!bis_trace_out.empty()) {
        std::string csv = "t,zx,zy,residual\n";
        for (std::size_t k = 0; k < trace.samples.size(); ++k) {
          csv += format_g17(trace.ts[k]) + "," + format_g17(trace.samples[k].x) + "," +
                 format_g17(trace.samples[k].y) + "," + format_g17(trace.residuals[k]) + "\n";
        }
        atomic_write_file(bis_trace_out, csv);
      }
      if (!bis_svg_out.empty()) atomic_write_file(bis_svg_out, plot_bisector_svg(norm, trace));

      double max_res = 0.0;
      for (double r : trace.residuals) max_res = std::max(max_res, r);
      RunConfig cfg{"bisector", norm.spec().to_string(), {}};
      cfg.add("ax", ax);
      cfg.add("ay", ay);
      cfg.add("bx", bx);
      cfg.add("by", by);
      cfg.add("samples", bis_samples);
      JsonWriter w;
      w.begin_object();
      w.key("norm").value(norm.spec().to_string());
      w.key("a").begin_array().value(ax).value(ay).end_array();
      w.key("b").begin_array().value(bx).value(by).end_array();
      w.key("n_samples").value(static_cast<int>(trace.samples.size()));
      w.key("kappa_used").value(trace.kappa_used);
      w.key("max_residual").value(max_res);
      w.key("asymptote").begin_object();
      w.key("point").begin_array().value(trace.asymptote.point.x).value(trace.asymptote.point.y);
      w.end_array();
      w.key("dir").begin_array().value(trace.asymptote.dir.x).value(trace.asymptote.dir.y);
      w.end_array();
      w.end_object();
      w.key("deviations").begin_array();
      for (const auto& [R, dev] : devs) {
        w.begin_object();
        w.key("R").value(R);
        w.key("deviation").value(dev);
        w.end_object();
      }
      w.end_array();
      cfg.emit(w);
      w.end_object();
      deliver(w.str() + "\n", bis_report_out);
      return 0;
    }

    if (*cmd_gen) {
      if (gen_kind != "greedy" && gen_kind != "gd") {
        std::cerr << "error: --kind must be greedy or gd\n";
        return 2;
      }
      const NormModel norm = parse_norm_or_exit(norm_text);
      TimedPolyline curve;
      RunConfig cfg{"generate", norm.spec().to_string(), {}};
      JsonWriter w;
      w.begin_object();
      w.key("norm").value(norm.spec().to_string());
      w.key("kind").value(gen_kind);
      if (gen_kind == "greedy") {
        const GreedyResult g = generate_greedy(norm, gen_n, gen_step, gen_seed);
        curve = g.curve;
        cfg.add("n", gen_n);
        cfg.add("step", gen_step);
        cfg.add("seed", gen_seed);
        w.key("seed").value(gen_seed);
        w.key("requested_n").value(gen_n);
        w.key("generated_n").value(static_cast<int>(curve.vertices.size()));
        w.key("truncated").value(g.truncated);
        w.key("halvings").value(g.halvings);
        w.key("proposals").value(g.proposals);
        w.key("accepted").value(g.accepted);
        w.key("acceptance_rate").value(
            g.proposals ? static_cast<double>(g.accepted) / static_cast<double>(g.proposals) : 0.0);
      } else {
        curve = generate_gradient_descent({gd_qxx, gd_qxy, gd_qyy}, {gd_x0x, gd_x0y}, gen_step,
                                          gen_n);
        cfg.add("n", gen_n);
        cfg.add("step", gen_step);
        cfg.add("qxx", gd_qxx);
        cfg.add("qxy", gd_qxy);
        cfg.add("qyy", gd_qyy);
        cfg.add("x0x", gd_x0x);
        cfg.add("x0y", gd_x0y);
        w.key("requested_n").value(gen_n);
        w.key("generated_n").value(static_cast<int>(curve.vertices.size()));
      }
      const SelfContractedReport sc = is_self_contracted(norm, curve.vertices);
      w.key("sc_verified").value(sc.is_sc);
      w.key("sc_defect").value(sc.defect);
      cfg.emit(w);
      w.end_object();
      atomic_write_file(gen_out, curve_to_csv(curve));
      if (!gen_svg_out.empty()) atomic_write_file(gen_svg_out, plot_curve_svg(curve.vertices, true));
      std::fputs((w.str() + "\n").c_str(), stdout);
      return 0;
    }

    if (*cmd_ver) {
      const NormModel norm = parse_norm_or_exit(norm_text);
      TimedPolyline curve;
      try {
        curve = curve_from_csv(read_file(ver_in));
      } catch (const CsvError& e) {
        std::cerr << "error: " << ver_in << ": " << e.what() << "\n";
        return 2;
      }
      const SelfContractedReport sc = is_self_contracted(norm, curve.vertices, ver_tol);
      RunConfig cfg{"verify", norm.spec().to_string(), {}};
      cfg.add("tol", ver_tol);
      JsonWriter w;
      w.begin_object();
      w.key("norm").value(norm.spec().to_string());
      w.key("n").value(static_cast<int>(curve.vertices.size()));
      w.key("is_sc").value(sc.is_sc);
      w.key("defect").value(sc.defect);
      w.key("worst_triple").begin_array();
      w.value(static_cast<std::uint64_t>(sc.i))
          .value(static_cast<std::uint64_t>(sc.j))
          .value(static_cast<std::uint64_t>(sc.k));
      w.end_array();
      w.key("checked_triples").value(static_cast<std::uint64_t>(sc.checked_triples));
      bool cos_ok = true;
      if (sc.is_sc && !ver_skip_cosine && curve.vertices.size() >= 3) {
        const double a0 = norm.alpha0();
        w.key("alpha0").value(a0);
        try {
          const double mc = triple_cosine_check(norm, curve.vertices, a0);
          w.key("min_triple_cosine").value(mc);
        } catch (const std::runtime_error&) {
          cos_ok = false;
        }
        w.key("cosine_bound_ok").value(cos_ok);
      }
      cfg.emit(w);
      w.end_object();
      deliver(w.str() + "\n", ver_out);
      return sc.is_sc && cos_ok ? 0 : 1;
    }

    if (*cmd_cert || *cmd_bound) {
      const bool certify = static_cast<bool>(*cmd_cert);
      const std::string in_path = certify ? cert_in : bound_in;
      const std::string seeds_text = certify ? cert_seeds : bound_seeds;
      const int nv = certify ? cert_n : bound_n;
      const double step = certify ? cert_step : bound_step;
      const int grid = certify ? cert_grid : bound_grid;
      const int dgrid = certify ? cert_dir : bound_dir;
      const int tgrid = certify ? cert_t : bound_t;
      const std::string out_path = certify ? cert_out : bound_out;

      const NormModel norm = parse_norm_or_exit(norm_text);
      struct Entry {
        std::int64_t seed;
        std::vector<Vec2> pts;
      };
      std::vector<Entry> entries;
      if (!in_path.empty()) {
        TimedPolyline curve;
        try {
          curve = curve_from_csv(read_file(in_path));
        } catch (const CsvError& e) {
          std::cerr << "error: " << in_path << ": " << e.what() << "\n";
          return 2;
        }
        entries.push_back({-1, curve.vertices});
      } else {
        std::vector<std::uint64_t> seeds;
        if (!seeds_text.empty())
          seeds = parse_seeds(seeds_text);
        else
          seeds.push_back(cert_seed);
        for (std::uint64_t s : seeds)
          entries.push_back({static_cast<std::int64_t>(s),
                             generate_greedy(norm, nv, step, s).curve.vertices});
      }
      for (const Entry& e : entries) {
        const SelfContractedReport sc = is_self_contracted(norm, e.pts);
        if (!sc.is_sc) {
          std::cerr << "error: input curve is not self-contracted (defect " << format_g17(sc.defect)
                    << " at triple " << sc.i << "," << sc.j << "," << sc.k << ")\n";
          return 1;
        }
      }

      const ConstantsBundle b =
          derive_constants_from(norm.alpha0(grid), kappa_estimate(norm, dgrid, tgrid));
      RunConfig cfg{certify ? "certify" : "bound-report", norm.spec().to_string(), {}};
      if (in_path.empty()) {
        cfg.add("n", nv);
        cfg.add("step", step);
      }
      cfg.add("grid", grid);
      cfg.add("dir_grid", dgrid);
      cfg.add("t_grid", tgrid);
      if (certify) cfg.add("stride", cert_stride);

      JsonWriter w;
      w.begin_object();
      w.key("norm").value(norm.spec().to_string());
      emit_bundle_fields(w, b);
      w.key("curves").begin_array();
      for (const Entry& e : entries) {
        const LengthBoundReport rep = length_bound_report(e.pts, norm, b);
        w.begin_object();
        w.key("seed");
        if (e.seed >= 0)
          w.value(static_cast<std::uint64_t>(e.seed));
        else
          w.value(-1);  // curve came from a file, not a seed
        w.key("n").value(static_cast<int>(e.pts.size()));
        w.key("length").value(rep.length);
        w.key("diam").value(rep.diam);
        w.key("mean_width").value(rep.mean_width);
        w.key("ratio").value(rep.ratio);
        if (certify) {
          const DecrementReport dec =
              width_decrement_check(e.pts, norm, b, static_cast<std::size_t>(cert_stride));
          w.key("min_decrement_slack").value(dec.min_slack);
        } else {
          w.key("telescoped_sum").value(rep.telescoped_sum);
          w.key("ratio_ok").value(rep.ratio_ok);
          w.key("telescoping_ok").value(rep.telescoping_ok);
        }
        w.end_object();
      }
      w.end_array();
      cfg.emit(w);
      w.end_object();
      deliver(w.str() + "\n", out_path);
      return 0;
    }

    if (*cmd_plot) {
      TimedPolyline curve;
      try {
        curve = curve_from_csv(read_file(plot_in));
      } catch (const CsvError& e) {
        std::cerr << "error: " << plot_in << ": " << e.what() << "\n";
        return 2;
      }
      atomic_write_file(plot_out, plot_curve_svg(curve.vertices, plot_hull));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
