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

#include "qgame/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qgame {

CVector CVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::invalid_argument("basis index out of range");
  CVector v(dim);
  v[index] = 1.0;
  return v;
}

double CVector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : entries_) s += std::norm(a);
  return s;
}

bool CVector::is_state(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix data size does not match shape");
  }
}

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> entries) {
  CMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

CMatrix CMatrix::pauli_x() { return CMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}); }

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Complex CMatrix::determinant() const {
  if (rows_ != 2 || cols_ != 2) {
    throw std::invalid_argument("determinant is only implemented for 2x2");
  }
  return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
}

bool CMatrix::is_unitary(double tol) const {
  if (rows_ != cols_) return false;
  return (adjoint() * *this).max_abs_diff(identity(rows_)) <= tol;
}

bool CMatrix::is_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  return max_abs_diff(adjoint()) <= tol;
}

double CMatrix::max_abs_diff(const CMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    return std::numeric_limits<double>::infinity();
  }
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    m = std::max(m, std::abs(data_[i] - other.data_[i]));
  }
  return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  CMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex x = a(r, k);
      if (x == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
    }
  }
  return out;
}

CVector operator*(const CMatrix& a, const CVector& v) {
  if (a.cols_ != v.dim()) throw std::invalid_argument("matrix-vector shape mismatch");
  CVector out(a.rows_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    Complex s{};
    for (std::size_t c = 0; c < a.cols_; ++c) s += a(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

CMatrix operator*(Complex s, const CMatrix& m) {
  CMatrix out = m;
  for (auto& x : out.data_) x *= s;
  return out;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("matrix sum shape mismatch");
  }
  CMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  return a + Complex{-1.0, 0.0} * b;
}

double normalize_angle(double angle) {
  if (!std::isfinite(angle)) throw std::invalid_argument("angle must be finite");
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round back up to exactly 2pi.
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

double angle_distance(double a, double b) {
  const double d = normalize_angle(a - b);
  return std::min(d, kTwoPi - d);
}

SU2Params::SU2Params(double theta, double alpha, double beta)
    : theta_(theta), alpha_(normalize_angle(alpha)), beta_(normalize_angle(beta)) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw std::invalid_argument("theta must lie in [0, pi], got " + std::to_string(theta));
  }
}

CMatrix su2(const SU2Params& p) {
  const double c = std::cos(p.theta() / 2.0);
  const double s = std::sin(p.theta() / 2.0);
  const Complex i{0.0, 1.0};
  return CMatrix(2, 2,
                 {std::polar(c, p.alpha()), i * std::polar(s, p.beta()),
                  i * std::polar(s, -p.beta()), std::polar(c, -p.alpha())});
}

CMatrix tensor(std::span<const CMatrix> factors) {
  if (factors.empty()) throw std::invalid_argument("tensor of an empty list");
  CMatrix acc = factors.front();
  for (std::size_t f = 1; f < factors.size(); ++f) {
    const CMatrix& b = factors[f];
    CMatrix out(acc.rows() * b.rows(), acc.cols() * b.cols());
    for (std::size_t r1 = 0; r1 < acc.rows(); ++r1)
      for (std::size_t c1 = 0; c1 < acc.cols(); ++c1)
        for (std::size_t r2 = 0; r2 < b.rows(); ++r2)
          for (std::size_t c2 = 0; c2 < b.cols(); ++c2)
            out(r1 * b.rows() + r2, c1 * b.cols() + c2) = acc(r1, c1) * b(r2, c2);
    acc = std::move(out);
  }
  return acc;
}

CMatrix tensor(std::initializer_list<CMatrix> factors) {
  return tensor(std::span<const CMatrix>(factors.begin(), factors.size()));
}

CMatrix entangler(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("entangler supports 1..4 qubits, got " + std::to_string(n));
  }
  const std::vector<CMatrix> xs(static_cast<std::size_t>(n), CMatrix::pauli_x());
  const CMatrix x_all = tensor(xs);
  const CMatrix id = CMatrix::identity(x_all.rows());
  return Complex{1.0 / std::sqrt(2.0), 0.0} * (id + Complex{0.0, 1.0} * x_all);
}

QubitPermutation::QubitPermutation(std::vector<int> perm) : perm_(std::move(perm)) {
  std::vector<bool> seen(perm_.size(), false);
  for (int p : perm_) {
    if (p < 0 || p >= size() || seen[static_cast<std::size_t>(p)]) {
      throw std::invalid_argument("qubit permutation is not a bijection");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
}

QubitPermutation QubitPermutation::identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) p[static_cast<std::size_t>(k)] = k;
  return QubitPermutation(std::move(p));
}

QubitPermutation QubitPermutation::inverse() const {
  std::vector<int> inv(perm_.size());
  for (int k = 0; k < size(); ++k) inv[static_cast<std::size_t>(perm_[k])] = k;
  return QubitPermutation(std::move(inv));
}

QubitPermutation QubitPermutation::compose(const QubitPermutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> out(perm_.size());
  for (int k = 0; k < size(); ++k) out[static_cast<std::size_t>(k)] = perm_[other[k]];
  return QubitPermutation(std::move(out));
}

std::size_t permute_basis_index(const QubitPermutation& q, std::size_t index) {
  const int n = q.size();
  std::size_t out = 0;
  for (int k = 0; k < n; ++k) {
    const std::size_t bit = (index >> (n - 1 - k)) & 1u;
    out |= bit << (n - 1 - q[k]);
  }
  return out;
}

CMatrix permutation_operator(const QubitPermutation& q) {
  const int n = q.size();
  if (n < 1 || n > kMaxQubits) throw std::invalid_argument("permutation over 1..4 qubits");
  const std::size_t dim = std::size_t{1} << n;
  CMatrix s(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) s(permute_basis_index(q, j), j) = 1.0;
  return s;
}

double expectation(const CVector& state, const CMatrix& obs) {
  if (obs.rows() != state.dim() || obs.cols() != state.dim()) {
    throw std::invalid_argument("observable and state dimensions differ");
  }
  if (!obs.is_hermitian()) throw std::invalid_argument("observable is not Hermitian");
  const CVector mv = obs * state;
  Complex s{};
  for (std::size_t i = 0; i < state.dim(); ++i) s += std::conj(state[i]) * mv[i];
  return s.real();
}

}  // namespace qgame
