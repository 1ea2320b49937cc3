#include "kop/function1d.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace kop {

Function1D::Function1D(Eval eval, Support support, Domain domain)
    : eval_(std::move(eval)), support_(support), domain_(domain) {
  if (!eval_) throw std::invalid_argument("Function1D: empty evaluation contract");
  if (const auto* c = std::get_if<CompactSupport>(&support_)) {
    if (!(c->a <= c->b)) throw std::invalid_argument("Function1D: compact support needs a <= b");
  }
  if (const auto* p = std::get_if<PowerSupport>(&support_)) {
    if (!(p->s > 0.0 && p->s < 1.0))
      throw std::invalid_argument("Function1D: power exponent s must lie in (0,1)");
  }
  if (const auto* d = std::get_if<DecaySupport>(&support_)) {
    if (!(d->beta > 0.0)) throw std::invalid_argument("Function1D: decay exponent beta must be > 0");
    if (!(d->radius > 0.0)) throw std::invalid_argument("Function1D: decay radius must be > 0");
  }
}

double Function1D::operator()(double t) const {
  if (domain_ == Domain::half_line && t < 0.0) return 0.0;
  if (const auto* c = std::get_if<CompactSupport>(&support_)) {
    if (t < c->a || t > c->b) return 0.0;
  }
  return eval_(t);
}

double Function1D::center() const {
  if (const auto* c = std::get_if<CompactSupport>(&support_)) return 0.5 * (c->a + c->b);
  if (const auto* d = std::get_if<DecaySupport>(&support_)) return d->center;
  return 0.0;
}

double Function1D::radius() const {
  if (const auto* c = std::get_if<CompactSupport>(&support_)) return 0.5 * (c->b - c->a);
  if (const auto* d = std::get_if<DecaySupport>(&support_)) return d->radius;
  return std::numeric_limits<double>::infinity();
}

std::optional<double> Function1D::known_lp_norm(double p) const {
  for (const auto& [q, v] : lp_norms_)
    if (std::abs(q - p) < 1e-12) return v;
  return std::nullopt;
}

Function1D& Function1D::with_known_integral(double v) {
  integral_ = v;
  return *this;
}

Function1D& Function1D::with_known_lp_norm(double p, double v) {
  lp_norms_[p] = v;
  return *this;
}

Function1D Function1D::scaled(double c) const {
  Eval base = eval_;
  Function1D out([base, c](double t) { return c * base(t); }, support_, domain_);
  if (integral_) out.integral_ = c * *integral_;
  for (const auto& [p, v] : lp_norms_) out.lp_norms_[p] = std::abs(c) * v;
  return out;
}

Function1D Function1D::translated(double a) const {
  if (is_power_type())
    throw std::invalid_argument("Function1D: translation not defined for power-type descriptors");
  Support s = support_;
  if (auto* c = std::get_if<CompactSupport>(&s)) {
    c->a += a;
    c->b += a;
  } else if (auto* d = std::get_if<DecaySupport>(&s)) {
    d->center += a;
  }
  Eval base = eval_;
  Function1D out([base, a](double t) { return base(t - a); }, s, Domain::real_line);
  if (integral_) out.integral_ = *integral_;
  out.lp_norms_ = lp_norms_;
  return out;
}

Function1D Function1D::reflected() const {
  Support s = support_;
  if (auto* c = std::get_if<CompactSupport>(&s)) {
    const double a = -c->b, b = -c->a;
    c->a = a;
    c->b = b;
  } else if (auto* d = std::get_if<DecaySupport>(&s)) {
    d->center = -d->center;
  }
  Eval base = eval_;
  Function1D out([base](double t) { return base(-t); }, s, Domain::real_line);
  if (integral_) out.integral_ = *integral_;
  out.lp_norms_ = lp_norms_;
  return out;
}

Function1D Function1D::zero() {
  return Function1D([](double) { return 0.0; }, CompactSupport{0.0, 0.0})
      .with_known_integral(0.0);
}

}  // namespace kop
