#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <utility>

#include "magsq/linalg.hpp"
#include "magsq/tolerances.hpp"

namespace magsq {

using Complex = std::complex<double>;

struct Quaternion {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;  // a + b i + c j + d k

  Quaternion operator+(const Quaternion& o) const;
  Quaternion operator-(const Quaternion& o) const;
  Quaternion operator*(const Quaternion& o) const;  // Hamilton product
  Quaternion operator*(double s) const;
  Quaternion conjugated() const { return {a, -b, -c, -d}; }
  double norm() const { return a * a + b * b + c * c + d * d; }  // squared length
};

bool approx_equal(const Quaternion& x, const Quaternion& y, double tol = kEqTol);

// 2x2 complex matrix, row-major.
class Mat2C {
 public:
  Mat2C() = default;
  Mat2C(Complex m00, Complex m01, Complex m10, Complex m11)
      : e_{m00, m01, m10, m11} {}
  static Mat2C identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Complex& operator()(int i, int j) { return e_[static_cast<std::size_t>(2 * i + j)]; }
  Complex operator()(int i, int j) const { return e_[static_cast<std::size_t>(2 * i + j)]; }

  Mat2C operator*(const Mat2C& o) const;
  Mat2C operator+(const Mat2C& o) const;
  Mat2C operator-(const Mat2C& o) const;
  Mat2C operator*(Complex s) const;
  Mat2C operator-() const { return *this * Complex(-1.0); }

  Mat2C dagger() const;  // conjugate transpose
  Complex det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  Complex trace() const { return e_[0] + e_[3]; }

 private:
  std::array<Complex, 4> e_{};
};

double max_abs_diff(const Mat2C& x, const Mat2C& y);
bool approx_equal(const Mat2C& x, const Mat2C& y, double tol = kEqTol);

// lambda(a + bi + cj + dk) = [[a + bi, -c - di], [c - di, a - bi]].
// Injective ring homomorphism onto the w/z block pattern below; its image
// meets every unit: det(lambda(x)) = norm(x).
Mat2C lambda_embed(const Quaternion& x);
// Inverse of lambda_embed when m has the pattern [[w, -z], [conj z, conj w]].
std::optional<Quaternion> try_quaternion_from_matrix(const Mat2C& m,
                                                     double tol = kEqTol);

// Hermitian trace-free unit vectors of the standard model of Euclidean
// 3-space: pauli(1) = [[0,1],[1,0]], pauli(2) = [[0,-i],[i,0]],
// pauli(3) = [[1,0],[0,-1]].
Mat2C pauli(int index);
// Ascending product of pauli(i) over set bits (bit i-1 <-> pauli(i)).
Mat2C pauli_blade(std::uint32_t mask);

struct Su2Vector {
  double x1 = 0.0, x2 = 0.0, x3 = 0.0;  // coordinates in (lambda i, lambda j, lambda k)
};

// x1 lambda(i) + x2 lambda(j) + x3 lambda(k): skew-Hermitian, traceless,
// det = x1^2 + x2^2 + x3^2.
Mat2C su2_to_matrix(const Su2Vector& v);
// Throws NotSkewHermitianTraceless when m is outside the model (within tol).
Su2Vector matrix_to_su2(const Mat2C& m, double tol = kEqTol);

bool is_unitary(const Mat2C& m, double tol = kEqTol);
bool is_special_unitary(const Mat2C& m, double tol = kEqTol);
// Unitary with det = +/-1.
bool is_unimodular_unitary(const Mat2C& m, double tol = kEqTol);

// Twisted adjoint B -> det(A) A B A^{-1} on the su(2) model, returned as
// the 3x3 matrix in the (lambda i, lambda j, lambda k) coordinates.
// Requires a unimodular unitary input (A^{-1} = A^dagger).
RealMatrix rho_tilde(const Mat2C& a, double tol = kEqTol);

// Unitary, trace 0, det -1.
bool is_complex_reflection(const Mat2C& m, double tol = kEqTol);

// [[alpha, beta + gamma i], [beta - gamma i, -alpha]] for a unit vector
// (alpha, beta, gamma); throws NotUnitVector otherwise. Every complex
// reflection arises this way.
Mat2C reflection_from_unit_vector(double alpha, double beta, double gamma,
                                  double tol = kEqTol);

// The complex reflection whose rho_tilde image is the Householder mirror
// I - 2 n n^T. The sphere parametrization above reaches that mirror at
// (n1, -n3, n2): a fixed quarter turn separates the parameter vector from
// the induced mirror normal.
Mat2C reflection_for_mirror_normal(const Vec& n, double tol = kEqTol);

// 3x3 orthogonal matrix with trace 1 and det -1.
bool is_real_reflection(const RealMatrix& m, double tol = kEqTol);

// A is a complex reflection iff rho_tilde(A) is a real reflection.
bool reflection_correspondence_check(const Mat2C& a, double tol = kEqTol);

// Unique split m = lambda(h) + lambda(hi) * i of an arbitrary 2x2 complex
// matrix into the quaternionic block pattern and i times it.
std::pair<Quaternion, Quaternion> split_quaternion_pair(const Mat2C& m);

// Axis-angle versor lift of a 3x3 rotation: cos(t/2) + sin(t/2) * axis,
// with t in [0, pi] and a deterministic axis sign at t = pi.
Quaternion rotation_quaternion(const RealMatrix& r, double tol = kEqTol);

// Unit mirror normal of a 3x3 real reflection (first nonzero component
// positive). Throws InvalidInput when m is not a reflection.
Vec reflection_mirror_normal(const RealMatrix& m, double tol = kEqTol);

}  // namespace magsq
