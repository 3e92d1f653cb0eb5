#include "qprop/cognition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qprop/errors.hpp"

namespace qprop::cognition {

namespace {

constexpr double kSummaryTolerance = 1e-12;

void require_finite(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) {
    throw DomainError("decision angles must be finite");
  }
}

void require_single_qubit(const Gate& a, const Gate& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw DimensionError("decision gates A and B must be single-qubit (2x2)");
  }
}

EventDistribution from_state(const StateVector& s) {
  std::array<double, 4> joint{};
  for (std::size_t i = 0; i < 4; ++i) joint[i] = std::norm(s[i]);
  return EventDistribution(joint);
}

Marginals marginals_of(const EventDistribution& d) {
  return {d.a_yes(), d.a_no(), d.b_yes(), d.b_no()};
}

double max_gap(const Marginals& x, const Marginals& y) {
  return std::max({std::abs(x.a_yes - y.a_yes), std::abs(x.a_no - y.a_no),
                   std::abs(x.b_yes - y.b_yes), std::abs(x.b_no - y.b_no)});
}

}  // namespace

std::string_view to_string(QuestionOrder order) {
  return order == QuestionOrder::AThenB ? "ab" : "ba";
}

std::string_view event_label(Event e) {
  switch (e) {
    case Event::YesYes: return "A+B+";
    case Event::YesNo: return "A+B-";
    case Event::NoYes: return "A-B+";
    case Event::NoNo: return "A-B-";
  }
  return "?";
}

EventDistribution::EventDistribution(const std::array<double, 4>& joint) : joint_(joint) {
  double sum = 0.0;
  for (double& p : joint_) {
    if (!(p >= 0.0 && p <= 1.0 + kNormTolerance)) {
      throw DomainError("event probability outside [0, 1]");
    }
    p = std::min(p, 1.0);
    sum += p;
  }
  if (std::abs(sum - 1.0) > kNormTolerance) {
    throw DomainError("event probabilities do not sum to 1");
  }
}

double EventDistribution::max_abs_deviation(const EventDistribution& other) const {
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(joint_[i] - other.joint_[i]));
  return worst;
}

EventDistribution order_effect_circuit(const DecisionScenario& s) {
  require_finite(s.theta, s.phi);
  const StateVector start = initial_state(2);
  if (s.order == QuestionOrder::AThenB) {
    const Gate layer = tensor(rotation_gate(s.theta), rotation_gate(s.phi));
    return from_state(apply(cnot(1), apply(layer, start)));
  }
  const Gate layer = tensor(rotation_gate(s.phi), rotation_gate(s.theta - s.phi));
  return from_state(apply(cnot(2), apply(layer, start)));
}

std::array<double, 4> closed_form_joint(double theta, double phi) {
  const double c2t = std::pow(std::cos(theta), 2);
  const double s2t = std::pow(std::sin(theta), 2);
  const double c2p = std::pow(std::cos(phi), 2);
  const double s2p = std::pow(std::sin(phi), 2);
  return {c2t * c2p, c2t * s2p, s2t * s2p, s2t * c2p};
}

OrderEffectSummary closed_form_marginals(double theta, double phi) {
  const double c2t = std::pow(std::cos(theta), 2);
  const double s2t = std::pow(std::sin(theta), 2);
  const double c2p = std::pow(std::cos(phi), 2);
  const double s2p = std::pow(std::sin(phi), 2);
  const double c2d = std::pow(std::cos(theta - phi), 2);
  const double s2d = std::pow(std::sin(theta - phi), 2);
  return {
      .a_then_b = {c2t, s2t, c2t * c2p + s2t * s2p, c2t * s2p + s2t * c2p},
      .b_then_a = {c2d * c2p + s2d * s2p, c2d * s2p + s2d * c2p, c2d, s2d},
  };
}

OrderEffectSummary order_effect_summary(double theta, double phi) {
  const OrderEffectSummary circuit{
      marginals_of(order_effect_circuit({theta, phi, QuestionOrder::AThenB})),
      marginals_of(order_effect_circuit({theta, phi, QuestionOrder::BThenA})),
  };
  const OrderEffectSummary closed = closed_form_marginals(theta, phi);
  const double gap =
      std::max(max_gap(circuit.a_then_b, closed.a_then_b), max_gap(circuit.b_then_a, closed.b_then_a));
  if (gap > kSummaryTolerance) {
    throw std::logic_error("circuit marginals deviate from closed forms by " + std::to_string(gap));
  }
  return circuit;
}

double order_effect_magnitude(double theta, double phi) {
  const EventDistribution ab = order_effect_circuit({theta, phi, QuestionOrder::AThenB});
  const EventDistribution ba = order_effect_circuit({theta, phi, QuestionOrder::BThenA});
  return ab.b_yes() - ba.b_yes();
}

double interference_term(double theta, double phi) {
  require_finite(theta, phi);
  return 0.5 * std::sin(2.0 * theta) * std::sin(2.0 * phi);
}

DisjunctionProtocols simulate_disjunction(double theta, double phi) {
  require_finite(theta, phi);
  const Gate prepare = rotation_gate(theta);
  const Gate to_b_basis = rotation_gate(-phi);
  const StateVector prepared = apply(prepare, initial_state(1));

  const double unmeasured = probabilities(apply(to_b_basis, prepared))[0];

  // Total probability over the collapsed A outcome.
  double measured = 0.0;
  for (std::size_t a = 0; a < 2; ++a) {
    const double p_a = std::norm(prepared[a]);
    const StateVector collapsed = a == 0 ? StateVector{1.0, 0.0} : StateVector{0.0, 1.0};
    measured += p_a * probabilities(apply(to_b_basis, collapsed))[0];
  }
  return {unmeasured, measured};
}

EventDistribution sequential_measurement(const Gate& a, const Gate& b) {
  require_single_qubit(a, b);
  const double a11 = std::norm(a(0, 0));
  const double a21 = std::norm(a(1, 0));
  return EventDistribution({a11 * std::norm(b(0, 0)), a11 * std::norm(b(1, 0)),
                            a21 * std::norm(b(0, 1)), a21 * std::norm(b(1, 1))});
}

EventDistribution entangled_circuit(const Gate& a, const Gate& b) {
  require_single_qubit(a, b);
  return from_state(apply(cnot(1), apply(tensor(a, b), initial_state(2))));
}

double EventCounts::frequency(Event e) const {
  if (trials == 0) return 0.0;
  return static_cast<double>(counts[static_cast<std::size_t>(e)]) / static_cast<double>(trials);
}

double EventCounts::b_yes_frequency() const {
  return frequency(Event::YesYes) + frequency(Event::NoYes);
}

EventCounts sample_sequential_measurement(const Gate& a, const Gate& b, std::uint64_t trials,
                                          RandomStream& rng) {
  require_single_qubit(a, b);
  EventCounts out;
  out.trials = trials;
  const StateVector after_a = apply(a, initial_state(1));
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Measurement first = measure_collapse(after_a, rng);
    const Measurement second = measure_collapse(apply(b, first.state), rng);
    ++out.counts[2 * first.outcome + second.outcome];
  }
  return out;
}

EquivalenceReport equivalence_check(const Gate& a, const Gate& b, double tol) {
  if (!(tol > 0.0)) {
    throw DomainError("equivalence tolerance must be positive; the check compares "
                      "floating-point results and does not require exact equality");
  }
  EventDistribution sequential = sequential_measurement(a, b);
  EventDistribution entangled = entangled_circuit(a, b);
  const double deviation = sequential.max_abs_deviation(entangled);
  return {sequential, entangled, deviation, tol, deviation <= tol};
}

ReversalDecision preference_reversal_switch(double x1, double x2) {
  if (!(x1 > 0.0) || !(x2 > 0.0) || !std::isfinite(x1) || !std::isfinite(x2)) {
    throw DomainError("option costs must be positive and finite");
  }
  const double ratio = x2 / x1;
  return {ratio, ratio > kReversalThreshold};
}

}  // namespace qprop::cognition
