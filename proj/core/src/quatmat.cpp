#include "magsq/quatmat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "magsq/errors.hpp"

namespace magsq {

namespace {
const Complex kI(0.0, 1.0);
}

Quaternion Quaternion::operator+(const Quaternion& o) const {
  return {a + o.a, b + o.b, c + o.c, d + o.d};
}

Quaternion Quaternion::operator-(const Quaternion& o) const {
  return {a - o.a, b - o.b, c - o.c, d - o.d};
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
  // Hamilton product; i j = k and cyclic.
  return {a * o.a - b * o.b - c * o.c - d * o.d,
          a * o.b + b * o.a + c * o.d - d * o.c,
          a * o.c - b * o.d + c * o.a + d * o.b,
          a * o.d + b * o.c - c * o.b + d * o.a};
}

Quaternion Quaternion::operator*(double s) const { return {a * s, b * s, c * s, d * s}; }

bool approx_equal(const Quaternion& x, const Quaternion& y, double tol) {
  return std::abs(x.a - y.a) <= tol && std::abs(x.b - y.b) <= tol &&
         std::abs(x.c - y.c) <= tol && std::abs(x.d - y.d) <= tol;
}

Mat2C Mat2C::operator*(const Mat2C& o) const {
  return {(*this)(0, 0) * o(0, 0) + (*this)(0, 1) * o(1, 0),
          (*this)(0, 0) * o(0, 1) + (*this)(0, 1) * o(1, 1),
          (*this)(1, 0) * o(0, 0) + (*this)(1, 1) * o(1, 0),
          (*this)(1, 0) * o(0, 1) + (*this)(1, 1) * o(1, 1)};
}

Mat2C Mat2C::operator+(const Mat2C& o) const {
  return {(*this)(0, 0) + o(0, 0), (*this)(0, 1) + o(0, 1),
          (*this)(1, 0) + o(1, 0), (*this)(1, 1) + o(1, 1)};
}

Mat2C Mat2C::operator-(const Mat2C& o) const { return *this + (-o); }

Mat2C Mat2C::operator*(Complex s) const {
  return {(*this)(0, 0) * s, (*this)(0, 1) * s, (*this)(1, 0) * s, (*this)(1, 1) * s};
}

Mat2C Mat2C::dagger() const {
  return {std::conj((*this)(0, 0)), std::conj((*this)(1, 0)),
          std::conj((*this)(0, 1)), std::conj((*this)(1, 1))};
}

double max_abs_diff(const Mat2C& x, const Mat2C& y) {
  double m = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m = std::max(m, std::abs(x(i, j) - y(i, j)));
  return m;
}

bool approx_equal(const Mat2C& x, const Mat2C& y, double tol) {
  return max_abs_diff(x, y) <= tol;
}

Mat2C lambda_embed(const Quaternion& x) {
  return {Complex(x.a, x.b), Complex(-x.c, -x.d),
          Complex(x.c, -x.d), Complex(x.a, -x.b)};
}

std::optional<Quaternion> try_quaternion_from_matrix(const Mat2C& m, double tol) {
  if (std::abs(m(0, 0) - std::conj(m(1, 1))) > tol) return std::nullopt;
  if (std::abs(m(0, 1) + std::conj(m(1, 0))) > tol) return std::nullopt;
  return Quaternion{m(0, 0).real(), m(0, 0).imag(), m(1, 0).real(), -m(1, 0).imag()};
}

Mat2C pauli(int index) {
  switch (index) {
    case 1: return {0.0, 1.0, 1.0, 0.0};
    case 2: return {0.0, -kI, kI, 0.0};
    case 3: return {1.0, 0.0, 0.0, -1.0};
    default: throw InvalidInput("pauli index must be 1, 2 or 3");
  }
}

Mat2C pauli_blade(std::uint32_t mask) {
  if (mask > 7u) throw InvalidInput("pauli_blade mask must use bits 0..2");
  Mat2C out = Mat2C::identity();
  for (int i = 0; i < 3; ++i)
    if (mask & (1u << i)) out = out * pauli(i + 1);
  return out;
}

Mat2C su2_to_matrix(const Su2Vector& v) {
  return {Complex(0.0, v.x1), Complex(-v.x2, -v.x3),
          Complex(v.x2, -v.x3), Complex(0.0, -v.x1)};
}

Su2Vector matrix_to_su2(const Mat2C& m, double tol) {
  if (max_abs_diff(m.dagger(), -m) > tol || std::abs(m.trace()) > tol)
    throw NotSkewHermitianTraceless("matrix is not in the su(2) model");
  // Average the redundant entries; the check above bounds their disagreement.
  return {0.5 * (m(0, 0).imag() - m(1, 1).imag()),
          0.5 * (m(1, 0).real() - m(0, 1).real()),
          -0.5 * (m(0, 1).imag() + m(1, 0).imag())};
}

bool is_unitary(const Mat2C& m, double tol) {
  return max_abs_diff(m * m.dagger(), Mat2C::identity()) <= tol;
}

bool is_special_unitary(const Mat2C& m, double tol) {
  return is_unitary(m, tol) && std::abs(m.det() - 1.0) <= tol;
}

bool is_unimodular_unitary(const Mat2C& m, double tol) {
  if (!is_unitary(m, tol)) return false;
  const Complex d = m.det();
  return std::min(std::abs(d - 1.0), std::abs(d + 1.0)) <= tol;
}

RealMatrix rho_tilde(const Mat2C& a, double tol) {
  if (!is_unimodular_unitary(a, tol))
    throw NotUnimodularUnitary("rho_tilde requires a unitary matrix with det +/-1");
  const Complex d = a.det();
  const Mat2C ainv = a.dagger();
  RealMatrix out(3, 3);
  const Su2Vector basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int k = 0; k < 3; ++k) {
    const Mat2C image = (a * su2_to_matrix(basis[k]) * ainv) * d;
    // Extract coordinates directly; unitarity keeps the image in su(2).
    const double x1 = 0.5 * (image(0, 0).imag() - image(1, 1).imag());
    const double x2 = 0.5 * (image(1, 0).real() - image(0, 1).real());
    const double x3 = -0.5 * (image(0, 1).imag() + image(1, 0).imag());
    out(0, static_cast<std::size_t>(k)) = x1;
    out(1, static_cast<std::size_t>(k)) = x2;
    out(2, static_cast<std::size_t>(k)) = x3;
  }
  return out;
}

bool is_complex_reflection(const Mat2C& m, double tol) {
  return is_unitary(m, tol) && std::abs(m.trace()) <= tol &&
         std::abs(m.det() + 1.0) <= tol;
}

Mat2C reflection_from_unit_vector(double alpha, double beta, double gamma,
                                  double tol) {
  if (std::abs(alpha * alpha + beta * beta + gamma * gamma - 1.0) > tol)
    throw NotUnitVector("reflection parameter must be a unit vector");
  return {Complex(alpha, 0.0), Complex(beta, gamma),
          Complex(beta, -gamma), Complex(-alpha, 0.0)};
}

Mat2C reflection_for_mirror_normal(const Vec& n, double tol) {
  if (n.size() != 3) throw DimensionMismatch("mirror normal must have 3 coordinates");
  return reflection_from_unit_vector(n[0], -n[2], n[1], tol);
}

bool is_real_reflection(const RealMatrix& m, double tol) {
  if (m.rows() != 3 || m.cols() != 3) return false;
  if (max_abs_diff(m.transposed() * m, RealMatrix::identity(3)) > tol) return false;
  return std::abs(m.trace() - 1.0) <= tol && std::abs(m.det() + 1.0) <= tol;
}

bool reflection_correspondence_check(const Mat2C& a, double tol) {
  return is_complex_reflection(a, tol) == is_real_reflection(rho_tilde(a, tol), tol);
}

std::pair<Quaternion, Quaternion> split_quaternion_pair(const Mat2C& m) {
  // Writing m = lambda(h) + lambda(hi) i with lambda(x) = [[w, -z], [conj z,
  // conj w]] gives linear equations per entry pair; solve them directly.
  const Complex w1 = 0.5 * (m(0, 0) + std::conj(m(1, 1)));
  const Complex w2 = -kI * 0.5 * (m(0, 0) - std::conj(m(1, 1)));
  const Complex z1 = 0.5 * (std::conj(m(1, 0)) - m(0, 1));
  const Complex z2 = kI * 0.5 * (m(0, 1) + std::conj(m(1, 0)));
  const Quaternion h{w1.real(), w1.imag(), z1.real(), z1.imag()};
  const Quaternion hi{w2.real(), w2.imag(), z2.real(), z2.imag()};
  return {h, hi};
}

Quaternion rotation_quaternion(const RealMatrix& r, double tol) {
  if (r.rows() != 3 || r.cols() != 3 ||
      max_abs_diff(r.transposed() * r, RealMatrix::identity(3)) > tol ||
      std::abs(r.det() - 1.0) > tol)
    throw InvalidInput("rotation_quaternion requires a 3x3 special orthogonal matrix");
  const double cos_t = std::clamp((r.trace() - 1.0) / 2.0, -1.0, 1.0);
  const double t = std::acos(cos_t);
  if (t < 1e-7) return {1.0, 0.0, 0.0, 0.0};
  Vec axis(3);
  if (std::numbers::pi - t > 1e-7) {
    const double inv = 1.0 / (2.0 * std::sin(t));
    axis = {(r(2, 1) - r(1, 2)) * inv, (r(0, 2) - r(2, 0)) * inv,
            (r(1, 0) - r(0, 1)) * inv};
  } else {
    // Half turn: r = 2 u u^T - I. Take the strongest column of (r + I)/2.
    const RealMatrix p = (r + RealMatrix::identity(3)) * 0.5;
    std::size_t j = 0;
    for (std::size_t k = 1; k < 3; ++k)
      if (p(k, k) > p(j, j)) j = k;
    const double pj = std::sqrt(std::max(p(j, j), 0.0));
    axis = {p(0, j) / pj, p(1, j) / pj, p(2, j) / pj};
    for (std::size_t k = 0; k < 3; ++k) {  // deterministic sign
      if (std::abs(axis[k]) > 1e-7) {
        if (axis[k] < 0.0)
          for (auto& x : axis) x = -x;
        break;
      }
    }
  }
  const double half = 0.5 * t;
  return {std::cos(half), std::sin(half) * axis[0], std::sin(half) * axis[1],
          std::sin(half) * axis[2]};
}

Vec reflection_mirror_normal(const RealMatrix& m, double tol) {
  if (!is_real_reflection(m, tol))
    throw InvalidInput("reflection_mirror_normal requires a 3x3 real reflection");
  // m = I - 2 n n^T, so (I - m)/2 = n n^T; read n off the strongest column.
  const RealMatrix p = (RealMatrix::identity(3) - m) * 0.5;
  std::size_t j = 0;
  for (std::size_t k = 1; k < 3; ++k)
    if (p(k, k) > p(j, j)) j = k;
  const double pj = std::sqrt(std::max(p(j, j), 0.0));
  Vec n = {p(0, j) / pj, p(1, j) / pj, p(2, j) / pj};
  for (std::size_t k = 0; k < 3; ++k) {
    if (std::abs(n[k]) > 1e-7) {
      if (n[k] < 0.0)
        for (auto& x : n) x = -x;
      break;
    }
  }
  return n;
}

}  // namespace magsq
