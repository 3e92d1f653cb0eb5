#pragma once

// Propensity curves over log-price x = ln(price), their entropic forces,
// and the harmonic-oscillator parameter mapping.

#include <cstddef>
#include <vector>

#include "qprop/random.hpp"

namespace qprop::propensity {

// Densities below this are treated as underflow by work and entropic_force.
inline constexpr double kDensityFloor = 1e-300;

enum class CurveKind { Gaussian, PointMass };

class PropensityCurve {
 public:
  // Throws DomainError unless mu is finite and sigma is positive and finite.
  static PropensityCurve gaussian(double mu, double sigma);
  // Infinitely thin curve at a fixed log-price.
  static PropensityCurve point_mass(double location);

  CurveKind kind() const { return kind_; }
  bool is_gaussian() const { return kind_ == CurveKind::Gaussian; }
  // Mean for a Gaussian, the fixed log-price for a point mass.
  double mu() const { return mu_; }
  // 0 for a point mass.
  double sigma() const { return sigma_; }

 private:
  PropensityCurve(CurveKind kind, double mu, double sigma) : kind_(kind), mu_(mu), sigma_(sigma) {}

  CurveKind kind_;
  double mu_;
  double sigma_;
};

enum class ScaleSource { OscillatorHalfHBarOmega, Direct };

// Energy scale gamma multiplying P'(x)/P(x).
class EntropicScale {
 public:
  // gamma = hbar * omega / 2.
  static EntropicScale from_oscillator(double omega = 1.0, double hbar = 1.0);
  // User-supplied gamma, e.g. k_B T.
  static EntropicScale direct(double gamma);

  double gamma() const { return gamma_; }
  ScaleSource source() const { return source_; }

 private:
  EntropicScale(double gamma, ScaleSource source) : gamma_(gamma), source_(source) {}

  double gamma_;
  ScaleSource source_;
};

struct OscillatorParams {
  double hbar;
  double omega;
  double sigma;
  double mass;            // hbar / (2 omega sigma^2)
  double force_constant;  // gamma / sigma^2
  double gamma;           // hbar omega / 2

  EntropicScale scale() const { return EntropicScale::from_oscillator(omega, hbar); }
};

struct JointPropensity {
  PropensityCurve buyer;
  PropensityCurve seller;
  PropensityCurve joint;  // renormalized product, or the fixed price
  double scale;           // mass of the raw product before renormalizing
};

// Gaussian density. Throws PointMassError for a point mass.
double density(const PropensityCurve& c, double x);

// gamma P'(x) / P(x) = -k (x - mu) with k = gamma / sigma^2.
// Throws PointMassError for a point mass and ZeroDensityError when the
// density at x underflows.
double entropic_force(const PropensityCurve& c, double x, const EntropicScale& scale);

// Throws DomainError for non-positive omega or hbar, PointMassError for a
// point mass.
OscillatorParams oscillator_from_curve(const PropensityCurve& c, double omega = 1.0,
                                       double hbar = 1.0);

// |psi_0(x)|^2 of the oscillator ground state: normal with mean mu and
// variance hbar / (2 m omega).
double ground_state_density(const OscillatorParams& p, double mu, double x);

// Closed-form product of two Gaussian curves. Throws PointMassError if
// either side is a point mass; use fixed_price_joint instead.
JointPropensity joint_propensity(const PropensityCurve& buyer, const PropensityCurve& seller);

// Seller fixes the price: the joint collapses onto `price` and its scale is
// the counterparty density there.
JointPropensity fixed_price_joint(const PropensityCurve& counterparty, double price);

// Force driving a transaction: the joint curve's force, or the
// counterparty's alone when the joint is a fixed price.
double transaction_force(const JointPropensity& j, double x, const EntropicScale& scale);

// Delta E = gamma ln(P(x2) / P(x1)). Positive when x2 is more probable than
// x1, i.e. when moving toward the mean. Throws ZeroDensityError if either
// density underflows.
double work(const PropensityCurve& c, double x1, double x2, const EntropicScale& scale);

struct ReversalEnergy {
  double exact;        // (hbar omega / 2) ln 3
  double approximate;  // (hbar omega / 2) ln e = hbar omega / 2
  double relative_gap;  // exact / approximate - 1 = ln 3 - 1
};

// Energy to shift propensity by the reversal factor of 3.
ReversalEnergy reversal_energy(double omega = 1.0, double hbar = 1.0);

// n independent log-price draws from the joint curve.
std::vector<double> sample_prices(const JointPropensity& j, std::size_t n, RandomStream& rng);

}  // namespace qprop::propensity
