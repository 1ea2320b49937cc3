// kop: apply the planar/circle operators, run verification suites, and emit
// bound reports as CSV or JSON.

#include <complex>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kop/bounds.hpp"
#include "kop/circle_ops.hpp"
#include "kop/plane_ops.hpp"
#include "kop/registry.hpp"
#include "kop/rng.hpp"
#include "kop/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitNumericDomain = 3;

struct OutputOptions {
  std::string format = "csv";
  std::string path;  // empty: stdout
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("-o,--output", out.path, "Output file (default: stdout)");
}

void write_text(const OutputOptions& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out.path);
  if (!f) throw std::runtime_error("cannot open output file: " + out.path);
  f << text;
}

std::string csv_table(const ordered_json& config, const std::string& header,
                      const std::vector<std::string>& rows) {
  std::ostringstream os;
  os << "# kop " << config.dump() << "\n" << header << "\n";
  for (const auto& r : rows) os << r << "\n";
  return os.str();
}

std::string json_table(const ordered_json& config, const char* key, const ordered_json& rows) {
  ordered_json j;
  j["config"] = config;
  j[key] = rows;
  return j.dump(2) + "\n";
}

struct ApplyArgs {
  std::string op;
  std::string family = "trigpoly";
  std::string coeffs;
  double gamma = 0.5;
  std::string backend = "quad";
  std::string radial = "exp";
  std::string angular = "const";
  std::string f1, f2, f;
  std::vector<std::string> points;  // "x1,x2" pairs, or plain x for hilbert-line
  double r = 1.0;
  int alpha_grid = 64;
  int grid = 64;
  int n = 2048;
  double big_r = 1000.0;
  std::string tail = "ignore";
  bool log_spacing = false;
};

kop::PVQuadratureConfig quad_config(const ApplyArgs& a) {
  kop::PVQuadratureConfig cfg;
  cfg.n = a.n;
  cfg.r = a.big_r;
  cfg.tail = a.tail == "power-extrapolate" ? kop::TailPolicy::power_extrapolate
                                           : kop::TailPolicy::ignore;
  cfg.log_spacing = a.log_spacing;
  cfg.validate();
  return cfg;
}

kop::PeriodicFunction periodic_input(const ApplyArgs& a) {
  if (a.family == "trigpoly") {
    if (a.coeffs.empty()) throw CLI::ValidationError("--coeffs is required with trigpoly");
    return kop::make_periodic("trigpoly:" + a.coeffs);
  }
  if (a.family == "holder-cusp")
    return kop::make_periodic("holder-cusp:" + std::to_string(a.gamma));
  return kop::make_periodic(a.family);
}

kop::PlanePoint parse_point(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--x expects 'x1,x2', got '" + s + "'");
  return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

ordered_json apply_config(const ApplyArgs& a) {
  ordered_json c;
  c["command"] = "apply";
  c["op"] = a.op;
  if (a.op == "k1" || a.op == "hilbert-circle" || a.op == "j") {
    c["family"] = a.family;
    if (!a.coeffs.empty()) c["coeffs"] = a.coeffs;
    if (a.family == "holder-cusp") c["gamma"] = a.gamma;
    if (a.op != "j") c["backend"] = a.backend;
  }
  if (a.op == "k2" || a.op == "calK") {
    c["radial"] = a.radial;
    c["angular"] = a.angular;
    if (!a.coeffs.empty()) c["coeffs"] = a.coeffs;
  }
  if (a.op == "calK") c["r"] = a.r;
  if (a.op == "k-est1" || a.op == "k-stepanov" || a.op == "k-radon") {
    c["f1"] = a.f1;
    c["f2"] = a.f2;
    c["x"] = a.points;
  }
  if (a.op == "hilbert-line") {
    c["f"] = a.f;
    c["x"] = a.points;
  }
  c["grid"] = (a.op == "calK" || a.op == "k2") ? a.alpha_grid : a.grid;
  c["n"] = a.n;
  c["R"] = a.big_r;
  c["tail"] = a.tail;
  c["log_spacing"] = a.log_spacing;
  return c;
}

std::vector<std::string> grid_rows_csv(const kop::CircleFunction& out, const char* prefix) {
  std::vector<std::string> rows;
  std::ostringstream os;
  os.precision(17);
  for (int j = 0; j < out.size(); ++j) {
    os.str("");
    os << prefix << out.node(j) << ',' << out.value(j).real() << ',' << out.value(j).imag();
    rows.push_back(os.str());
  }
  return rows;
}

ordered_json grid_rows_json(const kop::CircleFunction& out) {
  ordered_json rows = ordered_json::array();
  for (int j = 0; j < out.size(); ++j) {
    ordered_json row;
    row["alpha"] = out.node(j);
    row["value_re"] = out.value(j).real();
    row["value_im"] = out.value(j).imag();
    rows.push_back(row);
  }
  return rows;
}

int run_apply(const ApplyArgs& a, const OutputOptions& out) {
  const kop::PVQuadratureConfig cfg = quad_config(a);
  const ordered_json config = apply_config(a);

  auto emit_grid = [&](const kop::CircleFunction& values) {
    if (out.format == "json")
      write_text(out, json_table(config, "rows", grid_rows_json(values)));
    else
      write_text(out, csv_table(config, "alpha,value_re,value_im", grid_rows_csv(values, "")));
  };

  if (a.op == "k1" || a.op == "hilbert-circle") {
    kop::CircleFunction values = [&] {
      if (a.backend == "spectral") {
        if (a.family != "trigpoly")
          throw CLI::ValidationError("spectral backend requires --family trigpoly");
        const kop::FourierSpectrum spec = kop::parse_trig_coeffs(a.coeffs);
        return kop::synthesize(a.op == "k1" ? kop::k1_apply(spec) : kop::hilbert_circle(spec),
                               a.grid);
      }
      const kop::PeriodicFunction phi = periodic_input(a);
      return a.op == "k1" ? kop::k1_apply(phi, a.grid, a.n)
                          : kop::hilbert_circle(phi, a.grid, a.n);
    }();
    emit_grid(values);
    return 0;
  }
  if (a.op == "j") {
    kop::PeriodicFunction phi = periodic_input(a);
    if (!phi.holder_witness())
      phi.with_holder_witness(kop::holder_seminorm_estimate(phi, a.gamma, 1024));
    emit_grid(kop::j_apply(phi, a.grid));
    return 0;
  }
  if (a.op == "k2" || a.op == "calK") {
    kop::PolarTensorSum phi({kop::PolarTerm{
        kop::make_radial(a.radial),
        a.angular == "trigpoly" && !a.coeffs.empty()
            ? kop::make_periodic("trigpoly:" + a.coeffs)
            : kop::make_periodic(a.angular)}});
    const kop::CircleFunction values = a.op == "k2"
                                           ? kop::k2_apply(phi, a.alpha_grid, cfg)
                                           : kop::calK_apply(phi, a.r, a.alpha_grid, cfg);
    if (out.format == "json") {
      ordered_json rows = grid_rows_json(values);
      if (a.op == "calK")
        for (auto& row : rows) row["r"] = a.r;
      write_text(out, json_table(config, "rows", rows));
    } else if (a.op == "calK") {
      std::ostringstream pre;
      pre.precision(17);
      pre << a.r << ',';
      write_text(out, csv_table(config, "r,alpha,value_re,value_im",
                                grid_rows_csv(values, pre.str().c_str())));
    } else {
      write_text(out, csv_table(config, "alpha,value_re,value_im", grid_rows_csv(values, "")));
    }
    return 0;
  }
  if (a.op == "k-est1" || a.op == "k-stepanov" || a.op == "k-radon") {
    if (a.f1.empty() || a.f2.empty()) throw CLI::ValidationError(a.op + " needs --f1 and --f2");
    if (a.points.empty()) throw CLI::ValidationError(a.op + " needs at least one --x x1,x2");
    kop::Function1D f2 = kop::make_function1d(a.f2);
    const kop::PVQuadratureConfig ecfg =
        f2.is_power_type() ? kop::power_type_config(a.n) : cfg;
    const kop::TensorSum2D f(
        {kop::TensorTerm2D{kop::make_function1d(a.f1), std::move(f2)}}, 2.0, 2.0);
    std::optional<kop::RadonSliceCache> cache;
    if (a.op == "k-radon") cache.emplace(f.as_evaluable(), kop::tensor_box(f), ecfg);

    std::vector<std::string> rows;
    ordered_json jrows = ordered_json::array();
    std::ostringstream os;
    os.precision(17);
    for (const auto& ps : a.points) {
      const kop::PlanePoint x = parse_point(ps);
      double v;
      if (a.op == "k-est1") v = kop::k_apply_est1(f, x, ecfg);
      else if (a.op == "k-stepanov") v = kop::k_apply_stepanov(f, x, ecfg);
      else v = kop::k_apply_radon(*cache, x, ecfg);
      os.str("");
      os << x.x1 << ',' << x.x2 << ',' << v << ",0";
      rows.push_back(os.str());
      ordered_json row;
      row["x1"] = x.x1;
      row["x2"] = x.x2;
      row["value_re"] = v;
      row["value_im"] = 0.0;
      jrows.push_back(row);
    }
    if (out.format == "json") write_text(out, json_table(config, "rows", jrows));
    else write_text(out, csv_table(config, "x1,x2,value_re,value_im", rows));
    return 0;
  }
  if (a.op == "hilbert-line") {
    if (a.f.empty()) throw CLI::ValidationError("hilbert-line needs --f");
    if (a.points.empty()) throw CLI::ValidationError("hilbert-line needs --x values");
    const kop::Function1D g = kop::make_function1d(a.f);
    const kop::PVQuadratureConfig hcfg =
        g.is_power_type() ? kop::power_type_config(a.n) : cfg;
    std::vector<std::string> rows;
    ordered_json jrows = ordered_json::array();
    std::ostringstream os;
    os.precision(17);
    for (const auto& ps : a.points) {
      const double x = std::stod(ps);
      const kop::IntegralResult res = kop::pv_line_hilbert(g, x, hcfg);
      os.str("");
      os << x << ',' << res.value << ",0," << res.flags;
      rows.push_back(os.str());
      ordered_json row;
      row["x"] = x;
      row["value_re"] = res.value;
      row["value_im"] = 0.0;
      row["flags"] = res.flags;
      jrows.push_back(row);
    }
    if (out.format == "json") write_text(out, json_table(config, "rows", jrows));
    else write_text(out, csv_table(config, "x,value_re,value_im,flags", rows));
    return 0;
  }
  throw CLI::ValidationError("unknown apply operation '" + a.op + "'");
}

int run_verify(const std::string& suite, int cases, std::uint64_t seed, int kmax, int n,
               const OutputOptions& out) {
  kop::PVQuadratureConfig cfg;
  cfg.n = n;
  std::vector<kop::SuiteResult> results;
  if (suite == "homogeneity") results.push_back(kop::suite_kernel_homogeneity(cases, seed));
  else if (suite == "antisymmetry") results.push_back(kop::suite_antisymmetry(cases, seed));
  else if (suite == "radial-null") results.push_back(kop::suite_radial_null(16, 16, cfg));
  else if (suite == "spectral") results.push_back(kop::suite_spectral(kmax, n));
  else if (suite == "decomposition") results.push_back(kop::suite_decomposition(20, 32, seed));
  else if (suite == "representations") results.push_back(kop::suite_representations(cfg));
  else if (suite == "image-homogeneity") results.push_back(kop::suite_image_homogeneity(cfg));
  else if (suite == "all") results = kop::run_all_suites(seed);
  else throw CLI::ValidationError("unknown suite '" + suite + "'");

  ordered_json config;
  config["command"] = "verify";
  config["suite"] = suite;
  config["cases"] = cases;
  config["seed"] = seed;
  config["kmax"] = kmax;
  config["n"] = n;

  bool all_pass = true;
  ordered_json jres = ordered_json::array();
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    jres.push_back(r.to_json());
  }
  write_text(out, json_table(config, "suites", jres));
  for (const auto& r : results)
    std::cerr << (r.pass ? "[pass] " : "[FAIL] ") << r.suite
              << "  max_dev=" << r.max_deviation << "  tol=" << r.tolerance << "\n";
  return all_pass ? 0 : 1;
}

int run_bounds(const std::string& name, const std::string& p_list, const std::string& family,
               double gamma, const std::string& f_pair, const std::string& points_name,
               std::optional<double> hilbert_norm, int cases, std::uint64_t seed,
               const OutputOptions& out) {
  kop::PVQuadratureConfig cfg;
  std::vector<kop::BoundReport> reports;
  ordered_json config;
  config["command"] = "bounds";
  config["bound"] = name;

  if (name == "riesz-table") {
    config["p"] = p_list;
    std::vector<std::string> rows;
    ordered_json jrows = ordered_json::array();
    std::ostringstream os;
    os.precision(17);
    std::string tok;
    std::istringstream ps(p_list);
    while (std::getline(ps, tok, ',')) {
      const double p = std::stod(tok);
      const double c = kop::riesz_constant(p);
      os.str("");
      os << p << ',' << c;
      rows.push_back(os.str());
      ordered_json row;
      row["p"] = p;
      row["C_p"] = c;
      jrows.push_back(row);
    }
    if (out.format == "json") write_text(out, json_table(config, "rows", jrows));
    else write_text(out, csv_table(config, "p,C_p", rows));
    return 0;
  }

  if (name == "j") {
    config["family"] = family;
    config["gamma"] = gamma;
    kop::PeriodicFunction phi =
        family == "holder-cusp" ? kop::make_periodic("holder-cusp:" + std::to_string(gamma))
                                : kop::make_periodic(family);
    if (!phi.holder_witness() || std::abs(phi.holder_witness()->gamma - gamma) > 1e-12)
      phi.with_holder_witness(kop::holder_seminorm_estimate(phi, gamma, 2048));
    reports.push_back(kop::check_j_bound(phi, 64));
  } else if (name == "k1-holder") {
    config["family"] = family;
    config["gamma"] = gamma;
    if (hilbert_norm) config["hilbert_norm"] = *hilbert_norm;
    kop::PeriodicFunction phi = kop::make_periodic(family);
    phi.with_holder_witness(kop::holder_seminorm_estimate(phi, gamma, 2048));
    reports.push_back(kop::check_k1_even_holder(phi, 64, cfg.n, hilbert_norm));
  } else if (name == "est3") {
    const double p = p_list.empty() ? 2.0 : std::stod(p_list);
    config["p"] = p;
    config["f"] = f_pair;
    config["points"] = points_name;
    std::string left, right;
    const auto semi = f_pair.find(';');
    const auto comma = f_pair.find(',');
    if (semi != std::string::npos) {
      left = f_pair.substr(0, semi);
      right = f_pair.substr(semi + 1);
    } else if (comma != std::string::npos) {
      left = f_pair.substr(0, comma);
      right = f_pair.substr(comma + 1);
    } else {
      throw CLI::ValidationError(
          "--f expects two family specs separated by ',' or ';', e.g. gaussian,gaussian");
    }
    const double q = p / (p - 1.0);
    const kop::TensorSum2D f(
        {kop::TensorTerm2D{kop::make_function1d(left), kop::make_function1d(right)}}, q, p);
    std::vector<kop::PlanePoint> pts;
    if (points_name == "grid3") {
      for (double av : {0.5, 1.0, 2.0})
        for (double bv : {0.5, 1.0, 2.0}) pts.push_back({av, bv});
    } else {
      throw CLI::ValidationError("unknown point set '" + points_name + "' (try grid3)");
    }
    reports = kop::check_est3(f, pts, p, cfg);
  } else if (name == "k2") {
    config["cases"] = cases;
    config["seed"] = seed;
    kop::Rng rng(seed);
    for (int i = 0; i < cases; ++i) {
      std::vector<kop::PolarTerm> terms;
      const int nt = rng.uniform_int(1, 3);
      for (int t = 0; t < nt; ++t) {
        kop::Function1D radial =
            rng.uniform_int(0, 1) == 0
                ? kop::make_function1d("indicator:0," + std::to_string(rng.uniform(0.5, 2.0)))
                : kop::make_function1d("exp:" + std::to_string(rng.uniform(0.5, 2.0)));
        const int deg = rng.uniform_int(1, 8);
        kop::FourierSpectrum s(deg);
        for (int k = -deg; k <= deg; ++k)
          s.coeff(k) = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        terms.push_back({std::move(radial), kop::to_periodic(s)});
      }
      reports.push_back(kop::check_k2_bound(kop::PolarTensorSum(std::move(terms)), 64, cfg));
    }
  } else {
    throw CLI::ValidationError("unknown bound '" + name + "'");
  }

  bool all_pass = true;
  std::vector<std::string> rows;
  ordered_json jrows = ordered_json::array();
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass;
    rows.push_back(r.csv_row());
    jrows.push_back(r.to_json());
  }
  if (out.format == "json") write_text(out, json_table(config, "reports", jrows));
  else write_text(out, csv_table(config, kop::BoundReport::csv_header(), rows));
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerics for the antisymmetric GL+(2)-homogeneous plane operator and its "
               "polar companion"};
  app.require_subcommand(1);

  ApplyArgs a;
  OutputOptions apply_out;
  CLI::App* apply = app.add_subcommand("apply", "Apply an operator and tabulate values");
  apply->add_option("op", a.op,
                    "One of: k1, k2, calK, k-est1, k-stepanov, k-radon, hilbert-line, "
                    "hilbert-circle, j")
      ->required();
  apply->add_option("--family", a.family, "Periodic input family (k1/hilbert-circle/j)");
  apply->add_option("--coeffs", a.coeffs, "Trig coefficients, e.g. k=1:1,k=-5:0.5");
  apply->add_option("--gamma", a.gamma, "Holder exponent for holder-cusp / j");
  apply->add_option("--backend", a.backend, "quad or spectral (k1, hilbert-circle)")
      ->check(CLI::IsMember({"quad", "spectral"}));
  apply->add_option("--radial", a.radial, "Radial family (k2/calK)");
  apply->add_option("--angular", a.angular, "Angular family (k2/calK)");
  apply->add_option("--f1", a.f1, "First tensor factor (plane operators)");
  apply->add_option("--f2", a.f2, "Second tensor factor (plane operators)");
  apply->add_option("--f", a.f, "Input function (hilbert-line)");
  apply->add_option("--x", a.points,
                    "Evaluation point 'x1,x2' (repeatable; plain x for hilbert-line)");
  apply->add_option("--r", a.r, "Radius for calK");
  apply->add_option("--alpha-grid", a.alpha_grid, "Output grid size for k2/calK");
  apply->add_option("--grid", a.grid, "Output grid size for circle operators");
  apply->add_option("--n", a.n, "Quadrature node count");
  apply->add_option("--R", a.big_r, "Truncation radius for unbounded integrals");
  apply->add_option("--tail", a.tail, "Tail policy: ignore or power-extrapolate")
      ->check(CLI::IsMember({"ignore", "power-extrapolate"}));
  apply->add_flag("--log-spacing", a.log_spacing, "Force log-spaced panels toward 0");
  add_output_flags(apply, apply_out);

  std::string suite;
  int cases = 1000;
  std::uint64_t seed = 7;
  int kmax = 16, n = 2048;
  OutputOptions verify_out;
  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", suite,
                     "One of: homogeneity, antisymmetry, radial-null, spectral, "
                     "decomposition, representations, image-homogeneity, all")
      ->required();
  verify->add_option("--cases", cases, "Random cases for the sampled suites");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--kmax", kmax, "Max frequency for the spectral suite");
  verify->add_option("--n", n, "Quadrature node count");
  add_output_flags(verify, verify_out);

  std::string bound, p_list = "2", bfamily = "holder-cusp", f_pair = "gaussian,gaussian";
  std::string points_name = "grid3";
  double bgamma = 0.5;
  double hnorm = -1.0;
  int bcases = 10;
  std::uint64_t bseed = 3;
  OutputOptions bounds_out;
  CLI::App* bounds = app.add_subcommand("bounds", "Evaluate norm-bound reports");
  bounds->add_option("bound", bound, "One of: est3, k2, j, k1-holder, riesz-table")->required();
  bounds->add_option("--p", p_list, "Exponent (est3) or comma list (riesz-table)");
  bounds->add_option("--family", bfamily, "Periodic family (j, k1-holder)");
  bounds->add_option("--gamma", bgamma, "Holder exponent");
  bounds->add_option("--f", f_pair, "Tensor factors for est3, e.g. gaussian,gaussian");
  bounds->add_option("--points", points_name, "Point set name (grid3)");
  bounds->add_option("--hilbert-norm", hnorm,
                     "Supplied Holder norm of the circle Hilbert transform (k1-holder)");
  bounds->add_option("--cases", bcases, "Random tensors for the k2 bound");
  bounds->add_option("--seed", bseed, "RNG seed");
  add_output_flags(bounds, bounds_out);

  try {
    app.parse(argc, argv);
    if (apply->parsed()) return run_apply(a, apply_out);
    if (verify->parsed()) return run_verify(suite, cases, seed, kmax, n, verify_out);
    if (bounds->parsed())
      return run_bounds(bound, p_list, bfamily, bgamma, f_pair, points_name,
                        hnorm >= 0.0 ? std::optional<double>(hnorm) : std::nullopt, bcases,
                        bseed, bounds_out);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "numerical domain error: " << e.what() << "\n";
    return kExitNumericDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
