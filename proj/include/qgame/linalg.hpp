// Copyright 2026 The qgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QGAME_LINALG_HPP_
#define QGAME_LINALG_HPP_

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

// Dense complex linear algebra for registers of at most four qubits.
//
// Qubit 1 is the leftmost tensor factor, i.e. the most significant bit of a
// basis index: |j_1 j_2 ... j_n> has index sum_k j_k 2^(n-k).

namespace qgame {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr int kMaxQubits = 4;

class CVector {
 public:
  CVector() = default;
  explicit CVector(std::size_t dim) : entries_(dim, Complex{0.0, 0.0}) {}
  explicit CVector(std::vector<Complex> entries) : entries_(std::move(entries)) {}

  // Computational basis ket |index> of the given dimension.
  static CVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  Complex& operator[](std::size_t i) { return entries_[i]; }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Complex> entries() const { return entries_; }

  double norm_squared() const;
  // Sum of |a_j|^2 equals one within `tol`.
  bool is_state(double tol = 1e-12) const;

 private:
  std::vector<Complex> entries_;
};

class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

  static CMatrix identity(std::size_t dim);
  static CMatrix diagonal(std::span<const double> entries);
  static CMatrix pauli_x();

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  Complex determinant() const;  // 2x2 only

  bool is_unitary(double tol = 1e-12) const;
  bool is_hermitian(double tol = 1e-12) const;

  // Largest entrywise modulus of (this - other); infinity on shape mismatch.
  double max_abs_diff(const CMatrix& other) const;

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CVector operator*(const CMatrix& a, const CVector& v);
  friend CMatrix operator*(Complex s, const CMatrix& m);
  friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator-(const CMatrix& a, const CMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

// One player's SU(2) strategy angles. Construction rejects theta outside
// [0, pi] and reduces alpha, beta into [0, 2pi).
class SU2Params {
 public:
  SU2Params() = default;
  SU2Params(double theta, double alpha, double beta);

  double theta() const { return theta_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  friend bool operator==(const SU2Params&, const SU2Params&) = default;

 private:
  double theta_ = 0.0;
  double alpha_ = 0.0;
  double beta_ = 0.0;
};

// Reduces an angle into [0, 2pi).
double normalize_angle(double angle);

// Distance between two angles on the circle.
double angle_distance(double a, double b);

// U(theta, alpha, beta) =
//   [[ e^{i alpha} cos(theta/2),   i e^{i beta} sin(theta/2) ],
//    [ i e^{-i beta} sin(theta/2), e^{-i alpha} cos(theta/2) ]]
CMatrix su2(const SU2Params& p);

// Kronecker product in the given order. Throws std::invalid_argument on an
// empty list.
CMatrix tensor(std::span<const CMatrix> factors);
CMatrix tensor(std::initializer_list<CMatrix> factors);

// J = (1^{(x)n} + i sigma_x^{(x)n}) / sqrt(2), 1 <= n <= 4.
CMatrix entangler(int n);

// Permutation of qubit positions. perm[k] is the (0-based) position that the
// factor at position k is moved to.
class QubitPermutation {
 public:
  QubitPermutation() = default;
  explicit QubitPermutation(std::vector<int> perm);

  static QubitPermutation identity(int n);

  int size() const { return static_cast<int>(perm_.size()); }
  int operator[](int k) const { return perm_[k]; }
  const std::vector<int>& map() const { return perm_; }

  QubitPermutation inverse() const;
  // (this o other)(k) = this(other(k)).
  QubitPermutation compose(const QubitPermutation& other) const;

 private:
  std::vector<int> perm_;
};

// S with S (U_1 (x) ... (x) U_n) S^dagger = (x)_i U_{perm^-1(i)}: the factor
// at position k lands at position perm[k]. On kets, S|j_1..j_n> = |j'> with
// j'_{perm(k)} = j_k.
CMatrix permutation_operator(const QubitPermutation& q);

// Maps a basis index through the qubit permutation as described above.
std::size_t permute_basis_index(const QubitPermutation& q, std::size_t index);

// <psi|obs|psi>. Throws std::invalid_argument if obs is not Hermitian or the
// dimensions disagree.
double expectation(const CVector& state, const CMatrix& obs);

}  // namespace qgame

#endif  // QGAME_LINALG_HPP_
