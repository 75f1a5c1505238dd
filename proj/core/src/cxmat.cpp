// Copyright 2026 The ptnc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ptnc/cxmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>

#include "ptnc/errors.hpp"

namespace ptnc {
namespace {

void require_valid_dim(std::size_t dim) {
  if (dim != 2 && dim != 4) {
    throw DimensionError("matrix dimension must be 2 or 4, got " + std::to_string(dim));
  }
}

void require_dim(const ComplexMatrix& m, std::size_t dim, const char* what) {
  if (m.dim() != dim) {
    throw DimensionError(std::string(what) + ": expected " + std::to_string(dim) + "x" +
                         std::to_string(dim) + " matrix, got " + std::to_string(m.dim()) + "x" +
                         std::to_string(m.dim()));
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("matrix dimensions differ: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double off_diagonal_norm2(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) {
      if (r != c) s += std::norm(a(r, c));
    }
  }
  return s;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) { require_valid_dim(dim); }

ComplexMatrix::ComplexMatrix(std::size_t dim, std::initializer_list<Complex> row_major)
    : dim_(dim) {
  require_valid_dim(dim);
  if (row_major.size() != dim * dim) {
    throw DimensionError("expected " + std::to_string(dim * dim) + " entries, got " +
                         std::to_string(row_major.size()));
  }
  std::copy(row_major.begin(), row_major.end(), data_.begin());
  if (!is_finite()) throw DomainError("matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t k = 0; k < dim; ++k) m(k, k) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> entries) {
  ComplexMatrix m(entries.size());
  std::size_t k = 0;
  for (Complex z : entries) {
    m(k, k) = z;
    ++k;
  }
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> entries) {
  ComplexMatrix m(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) m(k, k) = entries[k];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket) { return outer(ket, ket); }

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket, std::span<const Complex> bra) {
  if (ket.size() != bra.size()) throw DimensionError("outer product of kets of different length");
  ComplexMatrix m(ket.size());
  for (std::size_t r = 0; r < ket.size(); ++r) {
    for (std::size_t c = 0; c < bra.size(); ++c) m(r, c) = ket[r] * std::conj(bra[c]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(*this);
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
  ComplexMatrix out = (*this + adjoint());
  out *= 0.5;
  return out;
}

Complex ComplexMatrix::trace() const noexcept {
  Complex t = 0.0;
  for (std::size_t k = 0; k < dim_; ++k) t += (*this)(k, k);
  return t;
}

double ComplexMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (std::size_t k = 0; k < dim_ * dim_; ++k) s += std::norm(data_[k]);
  return std::sqrt(s);
}

bool ComplexMatrix::is_finite() const noexcept {
  return std::all_of(data_.begin(), data_.begin() + dim_ * dim_, finite);
}

bool ComplexMatrix::is_hermitian(double tol) const noexcept {
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c) {
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
    }
  }
  return is_finite();
}

bool ComplexMatrix::is_unitary(double tol) const {
  return max_abs_diff(*this * adjoint(), identity(dim_)) <= tol;
}

bool ComplexMatrix::is_psd(double tol) const {
  if (!is_hermitian(tol)) return false;
  const auto eig = eig_hermitian(hermitian_part(), tol);
  return eig.values.back() >= -tol;
}

bool ComplexMatrix::trace_one(double tol) const noexcept {
  return std::abs(trace() - Complex(1.0)) <= tol;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t k = 0; k < dim_ * dim_; ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t k = 0; k < dim_ * dim_; ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) noexcept {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs);
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(r, k);
      if (a == Complex(0.0)) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const ComplexMatrix& m) {
  for (std::size_t r = 0; r < m.dim(); ++r) {
    os << (r == 0 ? "[[" : " [");
    for (std::size_t c = 0; c < m.dim(); ++c) {
      os << m(r, c) << (c + 1 < m.dim() ? ", " : "");
    }
    os << (r + 1 < m.dim() ? "]\n" : "]]");
  }
  return os;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  double worst = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  }
  return worst;
}

template <std::size_t N>
static Ket<N> multiply_impl(const ComplexMatrix& m, const Ket<N>& ket) {
  require_dim(m, N, "apply");
  Ket<N> out{};
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) out[r] += m(r, c) * ket[c];
  }
  return out;
}

Ket2 multiply(const ComplexMatrix& m, const Ket2& ket) { return multiply_impl<2>(m, ket); }
Ket4 multiply(const ComplexMatrix& m, const Ket4& ket) { return multiply_impl<4>(m, ket); }

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_dim(a, 2, "tensor");
  require_dim(b, 2, "tensor");
  ComplexMatrix out(4);
  for (std::size_t ar = 0; ar < 2; ++ar) {
    for (std::size_t ac = 0; ac < 2; ++ac) {
      for (std::size_t br = 0; br < 2; ++br) {
        for (std::size_t bc = 0; bc < 2; ++bc) out(2 * ar + br, 2 * ac + bc) = a(ar, ac) * b(br, bc);
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Subsystem keep) {
  require_dim(m, 4, "partial_trace");
  ComplexMatrix out(2);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      for (std::size_t k = 0; k < 2; ++k) {
        out(r, c) += keep == Subsystem::A ? m(2 * r + k, 2 * c + k) : m(2 * k + r, 2 * k + c);
      }
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, Subsystem on) {
  require_dim(m, 4, "partial_transpose");
  ComplexMatrix out(4);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t ap = 0; ap < 2; ++ap) {
        for (std::size_t bp = 0; bp < 2; ++bp) {
          // <a b| rho^T_X |a' b'>
          out(2 * a + b, 2 * ap + bp) = on == Subsystem::A ? m(2 * ap + b, 2 * a + bp)
                                                           : m(2 * a + bp, 2 * ap + b);
        }
      }
    }
  }
  return out;
}

HermitianEigen eig_hermitian(const ComplexMatrix& m, double tol) {
  if (!m.is_hermitian(tol)) throw DomainError("eig_hermitian: matrix is not Hermitian");
  const std::size_t n = m.dim();
  ComplexMatrix a = m.hermitian_part();
  ComplexMatrix v = ComplexMatrix::identity(n);

  constexpr int kMaxSweeps = 64;
  const double scale = std::max(a.frobenius_norm(), 1e-300);
  const double stop = std::pow(1e-15 * scale, 2);

  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm2(a) > stop; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= 1e-300) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Rotate apq onto the real axis, then apply the real Jacobi rotation.
        const Complex phase = apq / r;
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // G = [[c, s], [-s phase*, c phase*]] on (p, q); A <- G^dag A G, V <- V G.
        const Complex gqp = -s * std::conj(phase);
        const Complex gqq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * c + akq * gqp;
          a(k, q) = akp * s + akq * gqq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * c + vkq * gqp;
          v(k, q) = vkp * s + vkq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + std::conj(gqp) * aqk;
          a(q, k) = s * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
    for (std::size_t k = 0; k < n; ++k) a(k, k) = a(k, k).real();
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.values[k] = a(src, src).real();
    Complex fix = 1.0;
    for (std::size_t r = 0; r < n; ++r) {
      const Complex z = v(r, src);
      if (std::abs(z) > 1e-8) {
        fix = std::conj(z) / std::abs(z);
        break;
      }
    }
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, src) * fix;
  }
  return out;
}

ComplexMatrix hermitian_function(const HermitianEigen& eig, const std::function<Complex(double)>& f) {
  const std::size_t n = eig.vectors.dim();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex fk = f(eig.values[k]);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        out(r, c) += eig.vectors(r, k) * fk * std::conj(eig.vectors(c, k));
      }
    }
  }
  return out;
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m, double floor) {
  const auto eig = eig_hermitian(m);
  if (eig.values.back() < -floor) {
    throw DomainError("sqrt_psd: eigenvalue " + std::to_string(eig.values.back()) +
                      " is below the PSD floor");
  }
  return hermitian_function(eig, [floor](double x) { return Complex(x > floor ? std::sqrt(x) : 0.0); })
      .hermitian_part();
}

double trace_norm_hermitian(const ComplexMatrix& m, double tol) {
  const auto eig = eig_hermitian(m, tol);
  double s = 0.0;
  for (double x : eig.values) s += std::abs(x);
  return s;
}

ComplexMatrix unitary_evolution(const ComplexMatrix& hamiltonian, double t) {
  return hermitian_function(eig_hermitian(hamiltonian),
                            [t](double e) { return std::exp(Complex(0.0, -e * t)); });
}

namespace pauli {
ComplexMatrix x() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix y() { return ComplexMatrix(2, {0.0, -kI, kI, 0.0}); }
ComplexMatrix z() { return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}); }
}  // namespace pauli

}  // namespace ptnc
