#include "qprop/qcore.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "qprop/errors.hpp"
#include "support/oracles.hpp"

namespace qprop {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

void expect_state_near(const StateVector& s, const std::vector<Complex>& expected,
                       double tol = 1e-12) {
  ASSERT_EQ(s.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(s[i].real(), expected[i].real(), tol) << "i=" << i << " (real)";
    EXPECT_NEAR(s[i].imag(), expected[i].imag(), tol) << "i=" << i << " (imag)";
  }
}

StateVector basis(int n_qubits, std::size_t index) {
  std::vector<Complex> amps(std::size_t{1} << n_qubits, 0.0);
  amps[index] = 1.0;
  return StateVector(amps);
}

// Random normalized two-qubit state with complex amplitudes.
StateVector random_state(RandomStream& rng) {
  std::vector<Complex> amps(4);
  double norm = 0.0;
  for (auto& a : amps) {
    a = {rng.normal(), rng.normal()};
    norm += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return StateVector(amps);
}

// Random 4x4 unitary built from the 2x2 sampler and both C-NOTs.
Gate random_unitary_4x4(RandomStream& rng) {
  const Gate layer1 = tensor(random_unitary_2x2(rng), random_unitary_2x2(rng));
  const Gate layer2 = tensor(random_unitary_2x2(rng), random_unitary_2x2(rng));
  return layer2 * cnot(2) * layer1 * cnot(1);
}

TEST(InitialState, OneQubitIsKetZero) { expect_state_near(initial_state(1), {1.0, 0.0}); }

TEST(InitialState, TwoQubitsIsKetZeroZero) {
  expect_state_near(initial_state(2), {1.0, 0.0, 0.0, 0.0});
}

TEST(InitialState, RejectsUnsupportedCounts) {
  EXPECT_THROW(initial_state(3), DomainError);
  EXPECT_THROW(initial_state(0), DomainError);
}

TEST(RotationGate, ZeroIsIdentity) {
  const Gate r = rotation_gate(0.0);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(r(i, j), Complex(i == j ? 1.0 : 0.0));
}

TEST(RotationGate, QuarterPiGivesBalancedSuperposition) {
  const StateVector s = apply(rotation_gate(kPi / 4), initial_state(1));
  const double h = std::sqrt(2.0) / 2.0;
  expect_state_near(s, {h, h});
  const OutcomeDistribution d = probabilities(s);
  EXPECT_NEAR(d[0], 0.5, 1e-12);
  EXPECT_NEAR(d[1], 0.5, 1e-12);
}

TEST(RotationGate, HalfPiSendsZeroToOne) {
  const StateVector s = apply(rotation_gate(kPi / 2), initial_state(1));
  EXPECT_NEAR(std::abs(s[0]), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s[1]), 1.0, 1e-12);
}

TEST(RotationGate, RejectsNonFiniteAngle) {
  EXPECT_THROW(rotation_gate(std::numeric_limits<double>::quiet_NaN()), DomainError);
  EXPECT_THROW(rotation_gate(std::numeric_limits<double>::infinity()), DomainError);
}

TEST(Hadamard, EqualSuperposition) {
  const OutcomeDistribution d = probabilities(apply(hadamard(), initial_state(1)));
  EXPECT_NEAR(d[0], 0.5, 1e-12);
  EXPECT_NEAR(d[1], 0.5, 1e-12);
}

TEST(Hadamard, TwiceInterferesBackToZero) {
  const StateVector s = apply(hadamard(), apply(hadamard(), initial_state(1)));
  expect_state_near(s, {1.0, 0.0}, 1e-12);
}

TEST(Hadamard, IsUnitaryAndSelfInverse) {
  EXPECT_TRUE(is_unitary(hadamard(), 1e-12));
  const Gate hh = hadamard() * hadamard();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      EXPECT_NEAR(std::abs(hh(i, j) - Complex(i == j ? 1.0 : 0.0)), 0.0, 1e-15);
}

TEST(Cnot, ControlOneFlipsSecondQubitOfTen) {
  expect_state_near(apply(cnot(1), basis(2, 0b10)), {0.0, 0.0, 0.0, 1.0});
}

TEST(Cnot, ControlOneLeavesZeroZero) {
  expect_state_near(apply(cnot(1), basis(2, 0b00)), {1.0, 0.0, 0.0, 0.0});
}

TEST(Cnot, ControlTwoFlipsFirstQubitOfZeroOne) {
  expect_state_near(apply(cnot(2), basis(2, 0b01)), {0.0, 0.0, 0.0, 1.0});
}

TEST(Cnot, TruthTableMatchesBitFlipDefinition) {
  for (int control : {1, 2}) {
    const Gate g = cnot(control);
    for (std::size_t in = 0; in < 4; ++in) {
      const unsigned q1 = (in >> 1) & 1U;
      const unsigned q2 = in & 1U;
      const unsigned c = control == 1 ? q1 : q2;
      const unsigned out_q1 = control == 2 ? (q1 ^ c) : q1;
      const unsigned out_q2 = control == 1 ? (q2 ^ c) : q2;
      const std::size_t expected = 2 * out_q1 + out_q2;
      const StateVector s = apply(g, basis(2, in));
      for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_EQ(s[k], Complex(k == expected ? 1.0 : 0.0))
            << "control=" << control << " in=" << basis_label(2, in);
      }
    }
  }
}

TEST(Cnot, RejectsInvalidControl) {
  EXPECT_THROW(cnot(0), DomainError);
  EXPECT_THROW(cnot(3), DomainError);
}

TEST(Cnot, IsUnitary) {
  EXPECT_TRUE(is_unitary(cnot(1), 1e-15));
  EXPECT_TRUE(is_unitary(cnot(2), 1e-15));
}

TEST(Tensor, IdentityTimesIdentity) {
  const Gate g = tensor(Gate::identity(2), Gate::identity(2));
  ASSERT_EQ(g.dim(), 4U);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(g(i, j), Complex(i == j ? 1.0 : 0.0));
}

TEST(Tensor, RotationsOnZeroZeroExpandAsKronecker) {
  const double t = 0.37, p = -1.21;
  const StateVector s = apply(tensor(rotation_gate(t), rotation_gate(p)), initial_state(2));
  expect_state_near(s, {std::cos(t) * std::cos(p), std::cos(t) * std::sin(p),
                        std::sin(t) * std::cos(p), std::sin(t) * std::sin(p)});
}

TEST(Tensor, RejectsNonSingleQubitFactors) {
  EXPECT_THROW(tensor(cnot(1), hadamard()), DimensionError);
}

TEST(Apply, IdentityLeavesStateUnchanged) {
  const StateVector s{0.5, Complex(0.0, 0.5), -0.5, Complex(0.5, 0.0)};
  expect_state_near(apply(Gate::identity(4), s), {0.5, Complex(0.0, 0.5), -0.5, 0.5}, 0.0);
}

TEST(Apply, CnotSwapsLastTwoAmplitudes) {
  const Complex a = 0.5, b = 0.5 * kI, c = -0.5, d = Complex(0.3, 0.4);
  const StateVector s{a, b, c, d};
  expect_state_near(apply(cnot(1), s), {a, b, d, c}, 0.0);
}

TEST(Apply, RejectsDimensionMismatch) {
  EXPECT_THROW(apply(hadamard(), initial_state(2)), DimensionError);
  EXPECT_THROW(apply(cnot(1), initial_state(1)), DimensionError);
}

TEST(Apply, PreservesNormUnderRandomUnitaries) {
  RandomStream rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const StateVector s = random_state(rng);
    EXPECT_NEAR(apply(random_unitary_4x4(rng), s).norm_squared(), 1.0, 1e-12);
    const StateVector one = apply(random_unitary_2x2(rng), initial_state(1));
    EXPECT_NEAR(one.norm_squared(), 1.0, 1e-12);
  }
}

TEST(Probabilities, BasisStateIsCertain) {
  const OutcomeDistribution d = probabilities(initial_state(1));
  EXPECT_EQ(d[0], 1.0);
  EXPECT_EQ(d[1], 0.0);
  EXPECT_EQ(d.labels()[0], "|0>");
}

TEST(Probabilities, SquaredModuliOfComplexAmplitudes) {
  const OutcomeDistribution d = probabilities(StateVector{0.6, 0.8 * kI});
  EXPECT_NEAR(d[0], 0.36, 1e-15);
  EXPECT_NEAR(d[1], 0.64, 1e-15);
}

TEST(Probabilities, DecisionCircuitAtSixthAndQuarterPi) {
  const Gate layer = tensor(rotation_gate(kPi / 6), rotation_gate(kPi / 4));
  const OutcomeDistribution d = probabilities(apply(cnot(1), apply(layer, initial_state(2))));
  EXPECT_NEAR(d.probability("|00>"), 0.375, 1e-12);
  EXPECT_NEAR(d.probability("|01>"), 0.375, 1e-12);
  EXPECT_NEAR(d.probability("|10>"), 0.125, 1e-12);
  EXPECT_NEAR(d.probability("|11>"), 0.125, 1e-12);
}

TEST(Probabilities, LabelsFollowBasisOrder) {
  const OutcomeDistribution d = probabilities(initial_state(2));
  const std::vector<std::string> expected{"|00>", "|01>", "|10>", "|11>"};
  EXPECT_TRUE(std::equal(expected.begin(), expected.end(), d.labels().begin()));
}

TEST(StateVectorValidation, RejectsBadInput) {
  EXPECT_THROW(StateVector({1.0, 1.0}), NotNormalizedError);
  EXPECT_THROW(StateVector({1.0, 0.0, 0.0}), DimensionError);
  EXPECT_THROW(StateVector({std::numeric_limits<double>::quiet_NaN(), 1.0}), DomainError);
}

TEST(OutcomeDistributionValidation, RejectsBadProbabilities) {
  EXPECT_THROW(OutcomeDistribution({"a", "b"}, {0.5, 0.6}), DomainError);
  EXPECT_THROW(OutcomeDistribution({"a", "b"}, {1.5, -0.5}), DomainError);
  EXPECT_THROW(OutcomeDistribution({"a"}, {0.5, 0.5}), DomainError);
}

TEST(MeasureCollapse, BasisStateAlwaysGivesItsLabel) {
  RandomStream rng(1);
  for (int i = 0; i < 100; ++i) {
    const Measurement m = measure_collapse(initial_state(1), rng);
    EXPECT_EQ(m.outcome, 0U);
    expect_state_near(m.state, {1.0, 0.0}, 0.0);
  }
}

TEST(MeasureCollapse, HadamardFrequencyWithinThreeStandardErrors) {
  RandomStream rng(12345);
  const StateVector plus = apply(hadamard(), initial_state(1));
  constexpr int n = 100000;
  int zeros = 0;
  for (int i = 0; i < n; ++i) zeros += measure_collapse(plus, rng).outcome == 0 ? 1 : 0;
  EXPECT_NEAR(static_cast<double>(zeros) / n, 0.5, 3.0 * std::sqrt(0.25 / n));
}

TEST(MeasureCollapse, CollapsedStateIsTheMeasuredBasisState) {
  RandomStream rng(9);
  const StateVector s = random_state(rng);
  for (int i = 0; i < 50; ++i) {
    const Measurement m = measure_collapse(s, rng);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(m.state[k], Complex(k == m.outcome ? 1.0 : 0.0));
  }
}

TEST(MeasureCollapse, EmpiricalFrequenciesMatchEveryOutcome) {
  RandomStream rng(77);
  for (int trial = 0; trial < 5; ++trial) {
    const StateVector s = random_state(rng);
    const OutcomeDistribution d = probabilities(s);
    constexpr int n = 40000;
    std::array<int, 4> counts{};
    for (int i = 0; i < n; ++i) ++counts[measure_collapse(s, rng).outcome];
    for (std::size_t k = 0; k < 4; ++k) {
      EXPECT_NEAR(static_cast<double>(counts[k]) / n, d[k],
                  3.0 * oracle::binomial_se(d[k], n) + 1e-12);
    }
  }
}

TEST(ProjectQubit, FirstQubitZeroKeepsRenormalizedFirstPair) {
  const Complex a = 0.1, b = Complex(0.0, 0.3), c = 0.5, d = Complex(-0.2, std::sqrt(0.61));
  const StateVector s{a, b, c, d};
  const QubitProjection p = project_qubit(s, 1, 0);
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  EXPECT_NEAR(p.probability, 0.1, 1e-12);
  expect_state_near(p.remaining, {a / n, b / n});
}

TEST(ProjectQubit, SecondQubitOneKeepsOddAmplitudes) {
  const Complex a = 0.1, b = Complex(0.0, 0.3), c = 0.5, d = Complex(-0.2, std::sqrt(0.61));
  const QubitProjection p = project_qubit(StateVector{a, b, c, d}, 2, 1);
  const double n = std::sqrt(std::norm(b) + std::norm(d));
  expect_state_near(p.remaining, {b / n, d / n});
}

TEST(ProjectQubit, RejectsZeroProbabilityAndBadArguments) {
  EXPECT_THROW(project_qubit(initial_state(2), 1, 1), DomainError);
  EXPECT_THROW(project_qubit(initial_state(2), 3, 0), DomainError);
  EXPECT_THROW(project_qubit(initial_state(1), 1, 0), DimensionError);
}

TEST(MeasureQubit, BellStateOutcomesAreCorrelated) {
  const StateVector bell = apply(cnot(1), apply(tensor(hadamard(), Gate::identity(2)),
                                                initial_state(2)));
  RandomStream rng(5);
  int zeros = 0;
  constexpr int n = 20000;
  for (int i = 0; i < n; ++i) {
    const QubitProjection m = measure_qubit(bell, 1, rng);
    // The partner qubit is left in the same basis state.
    EXPECT_NEAR(std::norm(m.remaining[static_cast<std::size_t>(m.bit)]), 1.0, 1e-12);
    zeros += m.bit == 0;
  }
  EXPECT_NEAR(static_cast<double>(zeros) / n, 0.5, 3.0 * std::sqrt(0.25 / n));
}

TEST(IsUnitary, RotationsAreUnitary) {
  for (double t = -7.0; t < 7.0; t += 0.37) EXPECT_TRUE(is_unitary(rotation_gate(t), 1e-12));
}

TEST(IsUnitary, ShearIsNot) {
  const Matrix shear(2, {1.0, 1.0, 0.0, 1.0});
  EXPECT_FALSE(is_unitary(shear, 1e-10));
  EXPECT_THROW(Gate{shear}, NonUnitaryError);
}

TEST(IsUnitary, RejectsNonPositiveTolerance) {
  EXPECT_THROW(is_unitary(hadamard(), 0.0), DomainError);
  EXPECT_THROW(is_unitary(hadamard(), -1.0), DomainError);
}

TEST(IsUnitary, ProductsAndTensorsOfUnitariesStayUnitary) {
  RandomStream rng(31);
  for (int i = 0; i < 500; ++i) {
    const Gate a = random_unitary_2x2(rng);
    const Gate b = random_unitary_2x2(rng);
    EXPECT_TRUE(is_unitary(a * b, 1e-10));
    EXPECT_TRUE(is_unitary(tensor(a, b), 1e-10));
    EXPECT_TRUE(is_unitary(random_unitary_4x4(rng), 1e-10));
  }
}

TEST(Entanglement, HadamardThenCnotGivesBellProbabilities) {
  const StateVector s = apply(cnot(1), apply(tensor(hadamard(), Gate::identity(2)),
                                             initial_state(2)));
  const OutcomeDistribution d = probabilities(s);
  EXPECT_NEAR(d[0], 0.5, 1e-12);
  EXPECT_NEAR(d[1], 0.0, 1e-12);
  EXPECT_NEAR(d[2], 0.0, 1e-12);
  EXPECT_NEAR(d[3], 0.5, 1e-12);
}

TEST(RandomUnitary, AlwaysUnitary) {
  RandomStream rng(404);
  for (int i = 0; i < 1000; ++i) EXPECT_TRUE(is_unitary(random_unitary_2x2(rng), 1e-10));
}

TEST(RandomUnitary, DeterministicForFixedSeed) {
  RandomStream first(99), second(99);
  for (int i = 0; i < 10; ++i) {
    const Gate a = random_unitary_2x2(first);
    const Gate b = random_unitary_2x2(second);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) EXPECT_EQ(a(r, c), b(r, c));
  }
}

TEST(RandomUnitary, ModuliIdentitiesHold) {
  RandomStream rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Gate b = random_unitary_2x2(rng);
    EXPECT_NEAR(std::norm(b(0, 1)), std::norm(b(1, 0)), 1e-12);
    EXPECT_NEAR(std::norm(b(0, 0)), std::norm(b(1, 1)), 1e-12);
  }
}

TEST(RandomUnitary, CarriesNonTrivialPhases) {
  RandomStream rng(8);
  int complex_entries = 0;
  for (int i = 0; i < 100; ++i) {
    const Gate g = random_unitary_2x2(rng);
    complex_entries += std::abs(g(0, 0).imag()) > 1e-6;
  }
  EXPECT_GT(complex_entries, 50);
}

TEST(BasisLabel, QubitOneIsLeftmost) {
  EXPECT_EQ(basis_label(2, 2), "|10>");
  EXPECT_EQ(basis_label(2, 1), "|01>");
  EXPECT_EQ(basis_label(1, 1), "|1>");
  EXPECT_THROW(basis_label(2, 4), DomainError);
}

}  // namespace
}  // namespace qprop
