#include "qprop/propensity.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qprop/errors.hpp"

namespace qprop::propensity {

namespace {

const double kInvSqrtTwoPi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

double normal_pdf(double x, double mu, double sigma) {
  const double z = (x - mu) / sigma;
  return kInvSqrtTwoPi / sigma * std::exp(-0.5 * z * z);
}

void require_gaussian(const PropensityCurve& c, const char* what) {
  if (!c.is_gaussian()) {
    throw PointMassError(std::string(what) + " is undefined for a point-mass curve");
  }
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(name) + " must be positive and finite");
  }
}

void require_density(const PropensityCurve& c, double x) {
  if (!(density(c, x) >= kDensityFloor)) {
    throw ZeroDensityError("propensity density underflows at x = " + std::to_string(x));
  }
}

}  // namespace

PropensityCurve PropensityCurve::gaussian(double mu, double sigma) {
  if (!std::isfinite(mu)) throw DomainError("curve mean must be finite");
  require_positive(sigma, "curve sigma");
  return {CurveKind::Gaussian, mu, sigma};
}

PropensityCurve PropensityCurve::point_mass(double location) {
  if (!std::isfinite(location)) throw DomainError("fixed price must be finite");
  return {CurveKind::PointMass, location, 0.0};
}

EntropicScale EntropicScale::from_oscillator(double omega, double hbar) {
  require_positive(omega, "omega");
  require_positive(hbar, "hbar");
  return {hbar * omega / 2.0, ScaleSource::OscillatorHalfHBarOmega};
}

EntropicScale EntropicScale::direct(double gamma) {
  require_positive(gamma, "gamma");
  return {gamma, ScaleSource::Direct};
}

double density(const PropensityCurve& c, double x) {
  require_gaussian(c, "density");
  return normal_pdf(x, c.mu(), c.sigma());
}

double entropic_force(const PropensityCurve& c, double x, const EntropicScale& scale) {
  require_gaussian(c, "entropic force");
  require_density(c, x);
  const double k = scale.gamma() / (c.sigma() * c.sigma());
  return -k * (x - c.mu());
}

OscillatorParams oscillator_from_curve(const PropensityCurve& c, double omega, double hbar) {
  require_gaussian(c, "oscillator mapping");
  require_positive(omega, "omega");
  require_positive(hbar, "hbar");
  const double variance = c.sigma() * c.sigma();
  const double gamma = hbar * omega / 2.0;
  return {
      .hbar = hbar,
      .omega = omega,
      .sigma = c.sigma(),
      .mass = hbar / (2.0 * omega * variance),
      .force_constant = gamma / variance,
      .gamma = gamma,
  };
}

double ground_state_density(const OscillatorParams& p, double mu, double x) {
  const double variance = p.hbar / (2.0 * p.mass * p.omega);
  return normal_pdf(x, mu, std::sqrt(variance));
}

JointPropensity joint_propensity(const PropensityCurve& buyer, const PropensityCurve& seller) {
  require_gaussian(buyer, "Gaussian product");
  require_gaussian(seller, "Gaussian product");
  const double vb = buyer.sigma() * buyer.sigma();
  const double vs = seller.sigma() * seller.sigma();
  const double variance = vb * vs / (vb + vs);
  const double mu = variance * (buyer.mu() / vb + seller.mu() / vs);
  const double scale = normal_pdf(buyer.mu() - seller.mu(), 0.0, std::sqrt(vb + vs));
  return {buyer, seller, PropensityCurve::gaussian(mu, std::sqrt(variance)), scale};
}

JointPropensity fixed_price_joint(const PropensityCurve& counterparty, double price) {
  require_gaussian(counterparty, "fixed-price joint");
  const PropensityCurve fixed = PropensityCurve::point_mass(price);
  return {counterparty, fixed, fixed, density(counterparty, price)};
}

double transaction_force(const JointPropensity& j, double x, const EntropicScale& scale) {
  if (j.joint.is_gaussian()) return entropic_force(j.joint, x, scale);
  return entropic_force(j.buyer, x, scale);
}

double work(const PropensityCurve& c, double x1, double x2, const EntropicScale& scale) {
  require_gaussian(c, "work");
  require_density(c, x1);
  require_density(c, x2);
  // ln P(x2) - ln P(x1) without forming the ratio of two small numbers.
  const double z1 = (x1 - c.mu()) / c.sigma();
  const double z2 = (x2 - c.mu()) / c.sigma();
  return scale.gamma() * 0.5 * (z1 * z1 - z2 * z2);
}

ReversalEnergy reversal_energy(double omega, double hbar) {
  require_positive(omega, "omega");
  require_positive(hbar, "hbar");
  const double base = hbar * omega / 2.0;
  return {base * std::log(3.0), base, std::log(3.0) - 1.0};
}

std::vector<double> sample_prices(const JointPropensity& j, std::size_t n, RandomStream& rng) {
  if (n == 0) throw DomainError("sample count must be at least 1");
  std::vector<double> out(n, j.joint.mu());
  if (j.joint.is_gaussian()) {
    for (double& x : out) x = j.joint.mu() + j.joint.sigma() * rng.normal();
  }
  return out;
}

}  // namespace qprop::propensity
