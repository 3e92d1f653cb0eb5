#include "qprop/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qprop/errors.hpp"

namespace qprop {

namespace {

void require_dim(std::size_t dim) {
  if (dim != 2 && dim != 4) {
    throw DimensionError("matrix dimension must be 2 or 4, got " + std::to_string(dim));
  }
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

std::string basis_label(int n_qubits, std::size_t index) {
  if (n_qubits < 1 || n_qubits > 2 || index >= (std::size_t{1} << n_qubits)) {
    throw DomainError("no basis label for index " + std::to_string(index));
  }
  std::string out = "|";
  for (int q = n_qubits - 1; q >= 0; --q) out += ((index >> q) & 1U) ? '1' : '0';
  out += '>';
  return out;
}

// Matrix

Matrix::Matrix(std::size_t dim) : dim_(dim) { require_dim(dim); }

Matrix::Matrix(std::size_t dim, std::span<const Complex> row_major) : Matrix(dim) {
  if (row_major.size() != dim * dim) {
    throw DimensionError("expected " + std::to_string(dim * dim) + " entries, got " +
                         std::to_string(row_major.size()));
  }
  for (std::size_t i = 0; i < row_major.size(); ++i) {
    if (!finite(row_major[i])) throw DomainError("matrix entry is not finite");
    entries_[i] = row_major[i];
  }
}

Matrix::Matrix(std::size_t dim, std::initializer_list<Complex> row_major)
    : Matrix(dim, std::span<const Complex>(row_major.begin(), row_major.size())) {}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.entries_[i * dim + i] = 1.0;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out.entries_[c * dim_ + r] = std::conj((*this)(r, c));
  return out;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.dim_ != rhs.dim_) throw DimensionError("matrix product dimension mismatch");
  const std::size_t n = lhs.dim_;
  Matrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += lhs(r, k) * rhs(k, c);
      out.entries_[r * n + c] = acc;
    }
  return out;
}

bool is_unitary(const Matrix& m, double tol) {
  if (!(tol > 0.0)) throw DomainError("unitarity tolerance must be positive");
  const Matrix product = m.adjoint() * m;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) {
      const Complex expected = (r == c) ? 1.0 : 0.0;
      if (!(std::abs(product(r, c) - expected) <= tol)) return false;
    }
  return true;
}

// Gate

Gate::Gate(Matrix m) : m_(std::move(m)) {
  if (!is_unitary(m_, kUnitaryTolerance)) {
    throw NonUnitaryError("matrix is not unitary within " + std::to_string(kUnitaryTolerance));
  }
}

// StateVector

StateVector::StateVector(std::span<const Complex> amplitudes) {
  if (amplitudes.size() == 2) {
    n_qubits_ = 1;
  } else if (amplitudes.size() == 4) {
    n_qubits_ = 2;
  } else {
    throw DimensionError("state must have 2 or 4 amplitudes, got " +
                         std::to_string(amplitudes.size()));
  }
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    if (!finite(amplitudes[i])) throw DomainError("amplitude is not finite");
    amps_[i] = amplitudes[i];
  }
  if (std::abs(norm_squared() - 1.0) > kNormTolerance) {
    throw NotNormalizedError("state is not normalized: squared norm " +
                             std::to_string(norm_squared()));
  }
}

StateVector::StateVector(std::initializer_list<Complex> amplitudes)
    : StateVector(std::span<const Complex>(amplitudes.begin(), amplitudes.size())) {}

StateVector::StateVector(Unchecked, int n_qubits, const std::array<Complex, 4>& amps)
    : n_qubits_(n_qubits), amps_(amps) {}

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const Complex& a : amplitudes()) sum += std::norm(a);
  return sum;
}

// Internal access to the unchecked constructor for helpers in this file.
struct StateAccess {
  static StateVector make(int n_qubits, const std::array<Complex, 4>& amps) {
    return StateVector(StateVector::Unchecked{}, n_qubits, amps);
  }
};

// OutcomeDistribution

OutcomeDistribution::OutcomeDistribution(std::vector<std::string> labels,
                                         std::vector<double> probabilities)
    : labels_(std::move(labels)), probabilities_(std::move(probabilities)) {
  if (labels_.size() != probabilities_.size()) {
    throw DomainError("outcome labels and probabilities differ in length");
  }
  double sum = 0.0;
  for (double& p : probabilities_) {
    if (!(p >= 0.0 && p <= 1.0 + kNormTolerance)) throw DomainError("probability outside [0, 1]");
    p = std::min(p, 1.0);
    sum += p;
  }
  if (std::abs(sum - 1.0) > kNormTolerance) throw DomainError("probabilities do not sum to 1");
}

double OutcomeDistribution::probability(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::out_of_range("unknown outcome label " + std::string(label));
  return probabilities_[static_cast<std::size_t>(it - labels_.begin())];
}

// Operations

StateVector initial_state(int n_qubits) {
  if (n_qubits != 1 && n_qubits != 2) {
    throw DomainError("unsupported qubit count " + std::to_string(n_qubits) +
                      "; only 1 or 2 qubits are modelled");
  }
  std::array<Complex, 4> amps{};
  amps[0] = 1.0;
  return StateAccess::make(n_qubits, amps);
}

Gate rotation_gate(double angle) {
  if (!std::isfinite(angle)) throw DomainError("rotation angle must be finite");
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return Gate(Matrix(2, {c, -s, s, c}));
}

Gate hadamard() {
  const double h = std::numbers::sqrt2 / 2.0;
  return Gate(Matrix(2, {h, h, h, -h}));
}

Gate pauli_x() { return Gate(Matrix(2, {0.0, 1.0, 1.0, 0.0})); }

Gate cnot(int control) {
  if (control == 1) {
    return Gate(Matrix(4, {1, 0, 0, 0,  //
                           0, 1, 0, 0,  //
                           0, 0, 0, 1,  //
                           0, 0, 1, 0}));
  }
  if (control == 2) {
    return Gate(Matrix(4, {1, 0, 0, 0,  //
                           0, 0, 0, 1,  //
                           0, 0, 1, 0,  //
                           0, 1, 0, 0}));
  }
  throw DomainError("C-NOT control must be qubit 1 or 2, got " + std::to_string(control));
}

Gate tensor(const Gate& g1, const Gate& g2) {
  if (g1.dim() != 2 || g2.dim() != 2) {
    throw DimensionError("tensor product is defined for two single-qubit gates");
  }
  std::array<Complex, 16> out{};
  for (std::size_t r1 = 0; r1 < 2; ++r1)
    for (std::size_t r2 = 0; r2 < 2; ++r2)
      for (std::size_t c1 = 0; c1 < 2; ++c1)
        for (std::size_t c2 = 0; c2 < 2; ++c2)
          out[(2 * r1 + r2) * 4 + (2 * c1 + c2)] = g1(r1, c1) * g2(r2, c2);
  return Gate(Matrix(4, out));
}

StateVector apply(const Gate& g, const StateVector& s) {
  if (g.dim() != s.size()) {
    throw DimensionError("gate of dimension " + std::to_string(g.dim()) +
                         " applied to state of size " + std::to_string(s.size()));
  }
  std::array<Complex, 4> out{};
  double norm = 0.0;
  for (std::size_t r = 0; r < s.size(); ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < s.size(); ++c) acc += g(r, c) * s[c];
    out[r] = acc;
    norm += std::norm(acc);
  }
  // Gates are unitary only to kUnitaryTolerance; fold the residual back.
  const double scale = 1.0 / std::sqrt(norm);
  if (scale != 1.0)
    for (auto& a : out) a *= scale;
  return StateVector(StateVector::Unchecked{}, s.qubits(), out);
}

OutcomeDistribution probabilities(const StateVector& s) {
  std::vector<std::string> labels;
  std::vector<double> probs;
  for (std::size_t i = 0; i < s.size(); ++i) {
    labels.push_back(s.label(i));
    probs.push_back(std::norm(s[i]));
  }
  return OutcomeDistribution(std::move(labels), std::move(probs));
}

namespace {

// Inverse-CDF draw over the given weights, which sum to 1.
std::size_t sample_index(std::span<const double> weights, RandomStream& rng) {
  const double u = rng.uniform();
  double cumulative = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    last_nonzero = i;
    cumulative += weights[i];
    if (u < cumulative) return i;
  }
  return last_nonzero;
}

}  // namespace

Measurement measure_collapse(const StateVector& s, RandomStream& rng) {
  const OutcomeDistribution dist = probabilities(s);
  const std::size_t outcome = sample_index(dist.probabilities(), rng);
  std::array<Complex, 4> amps{};
  amps[outcome] = 1.0;
  return {outcome, StateAccess::make(s.qubits(), amps)};
}

QubitProjection project_qubit(const StateVector& s, int qubit, int bit) {
  if (s.qubits() != 2) throw DimensionError("partial measurement needs a two-qubit state");
  if (qubit != 1 && qubit != 2) throw DomainError("qubit index must be 1 or 2");
  if (bit != 0 && bit != 1) throw DomainError("measured bit must be 0 or 1");

  // Indices of the kept amplitudes, ordered by the remaining qubit's bit.
  std::array<std::size_t, 2> idx{};
  if (qubit == 1) {
    idx = {static_cast<std::size_t>(2 * bit), static_cast<std::size_t>(2 * bit + 1)};
  } else {
    idx = {static_cast<std::size_t>(bit), static_cast<std::size_t>(2 + bit)};
  }
  const double p = std::norm(s[idx[0]]) + std::norm(s[idx[1]]);
  if (!(p > 0.0)) throw DomainError("projection onto a zero-probability outcome");
  const double inv = 1.0 / std::sqrt(p);
  std::array<Complex, 4> amps{};
  amps[0] = s[idx[0]] * inv;
  amps[1] = s[idx[1]] * inv;
  return {bit, std::min(p, 1.0), StateAccess::make(1, amps)};
}

QubitProjection measure_qubit(const StateVector& s, int qubit, RandomStream& rng) {
  if (s.qubits() != 2) throw DimensionError("partial measurement needs a two-qubit state");
  if (qubit != 1 && qubit != 2) throw DomainError("qubit index must be 1 or 2");
  const double p0 = (qubit == 1) ? std::norm(s[0]) + std::norm(s[1])
                                 : std::norm(s[0]) + std::norm(s[2]);
  const std::array<double, 2> weights{p0, 1.0 - p0};
  const int bit = static_cast<int>(sample_index(weights, rng));
  return project_qubit(s, qubit, bit);
}

Gate random_unitary_2x2(RandomStream& rng) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double theta = std::asin(std::sqrt(rng.uniform()));
  const double alpha = rng.uniform(0.0, two_pi);
  const double beta = rng.uniform(0.0, two_pi);
  const double delta = rng.uniform(0.0, two_pi);

  const Complex ea = std::polar(1.0, alpha);
  const Complex eb = std::polar(1.0, beta);
  const Complex ed = std::polar(1.0, delta);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  // diag(ea, 1) * [[c, -s], [s, c]] * diag(eb, 1) * ed
  return Gate(Matrix(2, {ea * c * eb * ed, -ea * s * ed,  //
                         s * eb * ed, c * ed}));
}

}  // namespace qprop
