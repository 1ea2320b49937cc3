#include "kop/registry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace kop {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

double num(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("registry: bad number '") + s + "' in " + what);
  }
}

struct ParsedSpec {
  std::string family;
  std::vector<double> args;
  std::string raw_args;
};

ParsedSpec parse_spec(const std::string& spec) {
  ParsedSpec p;
  const auto colon = spec.find(':');
  p.family = spec.substr(0, colon);
  if (colon != std::string::npos) {
    p.raw_args = spec.substr(colon + 1);
    if (p.family != "trigpoly") {
      for (const auto& tok : split(p.raw_args, ','))
        if (!tok.empty()) p.args.push_back(num(tok, p.family.c_str()));
    }
  }
  return p;
}

double arg_or(const ParsedSpec& p, std::size_t i, double dflt) {
  return i < p.args.size() ? p.args[i] : dflt;
}

Function1D make_gaussian(double mu, double sigma, double amp) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian: sigma must be positive");
  Function1D f([mu, sigma, amp](double t) {
    const double u = (t - mu) / sigma;
    return amp * std::exp(-0.5 * u * u);
  },
               DecaySupport{std::numeric_limits<double>::infinity(), mu, 16.0 * sigma});
  f.with_known_integral(amp * sigma * std::sqrt(2.0 * kPi));
  // ||f||_p = |amp| (sigma sqrt(2 pi / p))^{1/p}
  for (double p : {1.0, 2.0})
    f.with_known_lp_norm(p, std::abs(amp) * std::pow(sigma * std::sqrt(2.0 * kPi / p), 1.0 / p));
  return f;
}

Function1D make_bump(double center, double width, double amp) {
  if (!(width > 0.0)) throw std::invalid_argument("bump: width must be positive");
  return Function1D([center, width, amp](double t) {
    const double u = (t - center) / width;
    if (std::abs(u) >= 1.0) return 0.0;
    return amp * std::exp(1.0 - 1.0 / (1.0 - u * u));
  },
                    CompactSupport{center - width, center + width});
}

Function1D make_power(double s, double amp) {
  return Function1D([s, amp](double t) {
    if (t == 0.0) return 0.0;
    return amp * (t > 0.0 ? 1.0 : -1.0) * std::pow(std::abs(t), -s);
  },
                     PowerSupport{s});
}

Function1D make_indicator(double a, double b) {
  if (!(a < b)) throw std::invalid_argument("indicator: need a < b");
  Function1D f([](double) { return 1.0; }, CompactSupport{a, b});
  f.with_known_integral(b - a);
  for (double p : {1.0, 2.0}) f.with_known_lp_norm(p, std::pow(b - a, 1.0 / p));
  return f;
}

Function1D make_exp(double lambda, double amp) {
  if (!(lambda > 0.0)) throw std::invalid_argument("exp: lambda must be positive");
  Function1D f([lambda, amp](double t) { return amp * std::exp(-lambda * t); },
               DecaySupport{std::numeric_limits<double>::infinity(), 0.0, 60.0 / lambda},
               Domain::half_line);
  f.with_known_integral(amp / lambda);
  for (double p : {1.0, 2.0})
    f.with_known_lp_norm(p, std::abs(amp) * std::pow(p * lambda, -1.0 / p));
  return f;
}

}  // namespace

FourierSpectrum parse_trig_coeffs(const std::string& spec) {
  std::string flat = spec;
  for (char& c : flat)
    if (c == ';') c = ',';
  // entries k=<int>:<re>[:<im>] must not be split on the ':' inside, so split
  // on ',' only
  struct Entry {
    int k;
    std::complex<double> c;
  };
  std::vector<Entry> entries;
  int k_max = 0;
  for (const auto& tok : split(flat, ',')) {
    if (tok.empty()) continue;
    std::string body = tok;
    if (body.rfind("k=", 0) == 0) body = body.substr(2);
    const auto parts = split(body, ':');
    if (parts.size() < 2 || parts.size() > 3)
      throw std::invalid_argument("trigpoly: entry '" + tok + "' is not k=<int>:<re>[:<im>]");
    const int k = static_cast<int>(num(parts[0], "trigpoly k"));
    const double re = num(parts[1], "trigpoly re");
    const double im = parts.size() == 3 ? num(parts[2], "trigpoly im") : 0.0;
    entries.push_back({k, {re, im}});
    k_max = std::max(k_max, std::abs(k));
  }
  if (entries.empty()) throw std::invalid_argument("trigpoly: empty coefficient list");
  FourierSpectrum spec_out(k_max);
  for (const auto& e : entries) spec_out.coeff(e.k) += e.c;
  return spec_out;
}

Function1D make_function1d(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') return make_function1d_json(nlohmann::json::parse(spec));
  const ParsedSpec p = parse_spec(spec);
  if (p.family == "gaussian")
    return make_gaussian(arg_or(p, 0, 0.0), arg_or(p, 1, 1.0), arg_or(p, 2, 1.0));
  if (p.family == "bump") return make_bump(arg_or(p, 0, 0.0), arg_or(p, 1, 1.0), arg_or(p, 2, 1.0));
  if (p.family == "power") {
    if (p.args.empty()) throw std::invalid_argument("power: exponent s is required");
    return make_power(p.args[0], arg_or(p, 1, 1.0));
  }
  if (p.family == "indicator") {
    if (p.args.size() < 2) throw std::invalid_argument("indicator: need a,b");
    return make_indicator(p.args[0], p.args[1]);
  }
  if (p.family == "exp") return make_exp(arg_or(p, 0, 1.0), arg_or(p, 1, 1.0));
  throw std::invalid_argument("registry: unknown line family '" + p.family + "'");
}

Function1D make_function1d_json(const nlohmann::json& j) {
  if (j.is_string()) return make_function1d(j.get<std::string>());
  if (!j.is_object() || !j.contains("family"))
    throw std::invalid_argument("registry: JSON spec needs a \"family\" key");
  std::string spec = j["family"].get<std::string>();
  if (j.contains("args")) {
    std::string sep = ":";
    for (const auto& a : j["args"]) {
      spec += sep + std::to_string(a.get<double>());
      sep = ",";
    }
  }
  return make_function1d(spec);
}

Function1D make_radial(const std::string& spec) { return make_function1d(spec); }

PeriodicFunction make_periodic(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') return make_periodic_json(nlohmann::json::parse(spec));
  const ParsedSpec p = parse_spec(spec);
  if (p.family == "const") {
    const double c = arg_or(p, 0, 1.0);
    PeriodicFunction f([c](double) { return std::complex<double>{c, 0.0}; });
    f.with_known_l2_norm(std::abs(c) * std::sqrt(2.0 * kPi));
    HolderWitness w;
    w.seminorm = 0.0;
    w.provenance = HolderWitness::Provenance::analytic;
    f.with_holder_witness(w);
    return f;
  }
  if (p.family == "holder-cusp") {
    const double gamma = arg_or(p, 0, 0.5);
    if (!(gamma > 0.0 && gamma < 1.0))
      throw std::invalid_argument("holder-cusp: gamma must lie in (0,1)");
    PeriodicFunction f([gamma](double t) {
      return std::complex<double>{std::pow(std::abs(std::sin(0.5 * t)), gamma), 0.0};
    });
    HolderWitness w;
    w.gamma = gamma;
    w.seminorm = std::pow(2.0, -gamma);  // attained as both samples approach the cusp
    w.provenance = HolderWitness::Provenance::analytic;
    f.with_holder_witness(w);
    f.with_kink_points({0.0});
    return f;
  }
  if (p.family == "trigpoly") {
    if (p.raw_args.empty()) throw std::invalid_argument("trigpoly: coefficients required");
    return to_periodic(parse_trig_coeffs(p.raw_args));
  }
  throw std::invalid_argument("registry: unknown periodic family '" + p.family + "'");
}

PeriodicFunction make_periodic_json(const nlohmann::json& j) {
  if (j.is_string()) return make_periodic(j.get<std::string>());
  if (!j.is_object() || !j.contains("family"))
    throw std::invalid_argument("registry: JSON spec needs a \"family\" key");
  const std::string family = j["family"].get<std::string>();
  if (family == "trigpoly") {
    if (j.contains("coeffs") && j["coeffs"].is_string())
      return make_periodic("trigpoly:" + j["coeffs"].get<std::string>());
    throw std::invalid_argument("registry: trigpoly JSON needs a \"coeffs\" string");
  }
  std::string spec = family;
  if (j.contains("args")) {
    std::string sep = ":";
    for (const auto& a : j["args"]) {
      spec += sep + std::to_string(a.get<double>());
      sep = ",";
    }
  }
  return make_periodic(spec);
}

}  // namespace kop
