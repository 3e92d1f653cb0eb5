#pragma once

// Two-question decision circuits.
//
// Qubit 1 always carries the answer to question A and qubit 2 the answer to
// question B, whichever is asked first. Bit 0 means "yes", bit 1 "no", so
// the basis states |00>, |01>, |10>, |11> map to the events A+B+, A+B-,
// A-B+, A-B-.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "qprop/qcore.hpp"
#include "qprop/random.hpp"

namespace qprop::cognition {

enum class QuestionOrder { AThenB, BThenA };

std::string_view to_string(QuestionOrder order);

enum class Event : std::size_t { YesYes = 0, YesNo = 1, NoYes = 2, NoNo = 3 };

inline constexpr std::array<Event, 4> kEvents{Event::YesYes, Event::YesNo, Event::NoYes,
                                              Event::NoNo};

// "A+B+", "A+B-", "A-B+", "A-B-".
std::string_view event_label(Event e);

struct DecisionScenario {
  double theta;  // angle of the state to the A axes
  double phi;    // rotation of the B axes relative to the A axes
  QuestionOrder order = QuestionOrder::AThenB;
};

// Joint distribution over the four answer events.
class EventDistribution {
 public:
  // Throws DomainError unless each probability is in [0, 1] and they sum to
  // 1 within 1e-12.
  explicit EventDistribution(const std::array<double, 4>& joint);

  double operator[](Event e) const { return joint_[static_cast<std::size_t>(e)]; }
  const std::array<double, 4>& joint() const { return joint_; }

  double a_yes() const { return joint_[0] + joint_[1]; }
  double a_no() const { return joint_[2] + joint_[3]; }
  double b_yes() const { return joint_[0] + joint_[2]; }
  double b_no() const { return joint_[1] + joint_[3]; }

  double max_abs_deviation(const EventDistribution& other) const;

 private:
  std::array<double, 4> joint_;
};

struct Marginals {
  double a_yes;
  double a_no;
  double b_yes;
  double b_no;
};

struct OrderEffectSummary {
  Marginals a_then_b;
  Marginals b_then_a;
};

// A then B: CNOT(control 1) (R_theta x R_phi) |00>.
// B then A: CNOT(control 2) (R_phi x R_(theta - phi)) |00>.
EventDistribution order_effect_circuit(const DecisionScenario& s);

// Closed-form joint probabilities for A then B:
// (cos^2 t cos^2 p, cos^2 t sin^2 p, sin^2 t sin^2 p, sin^2 t cos^2 p).
std::array<double, 4> closed_form_joint(double theta, double phi);

// Closed-form marginals for both question orders.
OrderEffectSummary closed_form_marginals(double theta, double phi);

// Marginals for both orders computed from the circuits. Throws
// std::logic_error if they disagree with closed_form_marginals by more
// than 1e-12.
OrderEffectSummary order_effect_summary(double theta, double phi);

// P(B yes | A then B) - P(B yes | B then A), from the two circuits.
double order_effect_magnitude(double theta, double phi);

// cos^2(theta - phi) - (cos^2 theta cos^2 phi + sin^2 theta sin^2 phi),
// evaluated as 0.5 sin(2 theta) sin(2 phi).
double interference_term(double theta, double phi);

struct DisjunctionProtocols {
  double unmeasured_b_yes;  // no intermediate collapse on A
  double measured_b_yes;    // A collapsed, then B asked
};

// Runs both protocols through the statevector engine. B is measured in a
// basis rotated by phi, i.e. R_phi^dagger is applied before readout.
DisjunctionProtocols simulate_disjunction(double theta, double phi);

// One-qubit circuit with two measurement stages: A|0>, measure, B, measure.
// Uses the analytic event table |a11 b11|^2, |a11 b21|^2, |a21 b12|^2,
// |a21 b22|^2. Gates must be 2x2.
EventDistribution sequential_measurement(const Gate& a, const Gate& b);

// CNOT(control 1) (A x B) |00> through the statevector engine.
EventDistribution entangled_circuit(const Gate& a, const Gate& b);

struct EventCounts {
  std::array<std::uint64_t, 4> counts{};
  std::uint64_t trials = 0;

  double frequency(Event e) const;
  double b_yes_frequency() const;
};

// Collapse-and-continue Monte Carlo of the sequential circuit.
EventCounts sample_sequential_measurement(const Gate& a, const Gate& b, std::uint64_t trials,
                                          RandomStream& rng);

struct EquivalenceReport {
  EventDistribution sequential;
  EventDistribution entangled;
  double max_abs_deviation;
  double tolerance;
  bool passed;
};

// Throws DomainError unless tol > 0.
EquivalenceReport equivalence_check(const Gate& a, const Gate& b, double tol);

inline constexpr double kReversalThreshold = 3.0;

struct ReversalDecision {
  double ratio;
  bool switches;
};

// x1: cost of the less attractive option, x2: cost of the more attractive
// one. Switches iff x2 / x1 > 3 (strict). Throws DomainError for
// non-positive or non-finite costs.
ReversalDecision preference_reversal_switch(double x1, double x2);

}  // namespace qprop::cognition
