#pragma once

#include <string>

#include "json.hpp"
#include "kop/circle.hpp"
#include "kop/function1d.hpp"
#include "kop/periodic.hpp"

namespace kop {

/// Named line families, parsed from "family[:arg1,arg2,...]" or an inline
/// JSON object {"family": "...", "args": [...]}:
///   gaussian[:mu,sigma[,amp]]   amp exp(-(t-mu)^2 / (2 sigma^2))
///   bump[:center,width[,amp]]   amp exp(1 - 1/(1-u^2)), u = (t-center)/width
///   power:s[,amp]               amp sgn(t) |t|^{-s}, s in (0,1)
///   indicator:a,b               1 on [a,b]
///   exp[:lambda[,amp]]          amp exp(-lambda t) on t >= 0 (half-line)
/// Gaussian, indicator and exp carry their exact integrals and L1/L2 norms.
Function1D make_function1d(const std::string& spec);
Function1D make_function1d_json(const nlohmann::json& j);

/// Named 2pi-periodic families:
///   const[:c]                   the constant c
///   holder-cusp[:gamma]         |sin(t/2)|^gamma with its analytic witness
///   trigpoly:<coeffs>           sum c_k e_k, coeffs as in parse_trig_coeffs
/// Radial factors are plain line families; the half-line integrators only
/// ever see (0, inf) of them.
Function1D make_radial(const std::string& spec);
PeriodicFunction make_periodic(const std::string& spec);
PeriodicFunction make_periodic_json(const nlohmann::json& j);

/// Coefficient lists "k=1:1", "k=2:0:-1,k=-5:0.5" (entries split on ',' or
/// ';', each k=<int>:<re>[:<im>]).
FourierSpectrum parse_trig_coeffs(const std::string& spec);

}  // namespace kop
