#pragma once

// Exact dense statevector engine for one and two qubits.
//
// Basis ordering: index = 2 * (qubit 1 bit) + (qubit 2 bit), where qubit 1
// is the top wire of a circuit diagram. Labels are written with qubit 1
// leftmost, so index 2 is |10>.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qprop/random.hpp"

namespace qprop {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kUnitaryTolerance = 1e-10;

// "|0>", "|1>" for one qubit; "|00>" ... "|11>" for two.
std::string basis_label(int n_qubits, std::size_t index);

// Square complex matrix of dimension 2 or 4, row-major. Carries no
// unitarity guarantee; Gate adds that.
class Matrix {
 public:
  Matrix(std::size_t dim, std::span<const Complex> row_major);
  Matrix(std::size_t dim, std::initializer_list<Complex> row_major);

  static Matrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  Matrix adjoint() const;
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

 private:
  explicit Matrix(std::size_t dim);

  std::size_t dim_;
  std::array<Complex, 16> entries_{};
};

// True iff every entry of U^dagger U - I is within tol in modulus.
// Throws DomainError unless tol > 0.
bool is_unitary(const Matrix& m, double tol);

// Unitary 2x2 or 4x4 operator. Construction rejects matrices that fail
// is_unitary at kUnitaryTolerance.
class Gate {
 public:
  explicit Gate(Matrix m);

  static Gate identity(std::size_t dim) { return Gate(Matrix::identity(dim)); }

  std::size_t dim() const { return m_.dim(); }
  Complex operator()(std::size_t row, std::size_t col) const { return m_(row, col); }
  const Matrix& matrix() const { return m_; }

  Gate adjoint() const { return Gate(m_.adjoint()); }
  friend Gate operator*(const Gate& lhs, const Gate& rhs) {
    return Gate(lhs.m_ * rhs.m_);
  }

 private:
  Matrix m_;
};

inline bool is_unitary(const Gate& g, double tol) { return is_unitary(g.matrix(), tol); }

// Normalized amplitude vector over 2^n basis states, n in {1, 2}.
class StateVector {
 public:
  // Throws DimensionError for a size other than 2 or 4, DomainError for
  // non-finite amplitudes and NotNormalizedError if the squared norm
  // differs from 1 by more than kNormTolerance.
  explicit StateVector(std::span<const Complex> amplitudes);
  StateVector(std::initializer_list<Complex> amplitudes);

  int qubits() const { return n_qubits_; }
  std::size_t size() const { return std::size_t{1} << n_qubits_; }
  std::span<const Complex> amplitudes() const { return {amps_.data(), size()}; }
  Complex operator[](std::size_t i) const { return amps_[i]; }
  std::string label(std::size_t i) const { return basis_label(n_qubits_, i); }

  double norm_squared() const;

 private:
  struct Unchecked {};
  StateVector(Unchecked, int n_qubits, const std::array<Complex, 4>& amps);

  int n_qubits_;
  std::array<Complex, 4> amps_{};

  friend StateVector apply(const Gate& g, const StateVector& s);
  friend struct StateAccess;
};

// Labeled probability distribution over measurement outcomes.
class OutcomeDistribution {
 public:
  // Throws DomainError unless every probability lies in [0, 1], they sum to
  // 1 within kNormTolerance and there is one label per probability.
  OutcomeDistribution(std::vector<std::string> labels, std::vector<double> probabilities);

  std::size_t size() const { return probabilities_.size(); }
  std::span<const std::string> labels() const { return labels_; }
  std::span<const double> probabilities() const { return probabilities_; }
  double operator[](std::size_t i) const { return probabilities_[i]; }
  // Throws std::out_of_range for an unknown label.
  double probability(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<double> probabilities_;
};

StateVector initial_state(int n_qubits);

// Real rotation [[cos a, -sin a], [sin a, cos a]].
Gate rotation_gate(double angle);
Gate hadamard();
Gate pauli_x();
// C-NOT on two qubits. control = 1 permutes |10> <-> |11>; control = 2
// permutes |01> <-> |11>.
Gate cnot(int control);
// Kronecker product; g1 acts on qubit 1.
Gate tensor(const Gate& g1, const Gate& g2);

StateVector apply(const Gate& g, const StateVector& s);
OutcomeDistribution probabilities(const StateVector& s);

struct Measurement {
  std::size_t outcome;
  StateVector state;  // basis state |outcome>
};

// Full computational-basis measurement.
Measurement measure_collapse(const StateVector& s, RandomStream& rng);

struct QubitProjection {
  int bit;
  double probability;
  StateVector remaining;  // one-qubit state of the unmeasured qubit
};

// Projects qubit `qubit` (1 or 2) of a two-qubit state onto `bit` and
// renormalizes the other qubit. Throws DomainError when the outcome has
// zero probability.
QubitProjection project_qubit(const StateVector& s, int qubit, int bit);

// Measures one qubit of a two-qubit state, collapsing onto the sampled bit.
QubitProjection measure_qubit(const StateVector& s, int qubit, RandomStream& rng);

// diag(e^{i alpha}, 1) R_theta diag(e^{i beta}, 1) e^{i delta} with
// theta = asin(sqrt(u)), u ~ U[0, 1], phases ~ U[0, 2 pi).
Gate random_unitary_2x2(RandomStream& rng);

}  // namespace qprop
