#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "magsq/linalg.hpp"
#include "magsq/quadratic.hpp"
#include "magsq/tolerances.hpp"

namespace magsq {

enum class Parity { Even, Odd };
enum class PinVariant { Abs, Scharlau, Big };

// Product of two basis blades. Masks index generators by bit: bit i set
// means e_{i+1} is a factor; blades are kept with ascending indices.
// Returns the sign picked up by reordering plus metric contractions, and
// the resulting blade mask (xor of the inputs).
std::pair<int, std::uint32_t> blade_product(std::uint32_t a, std::uint32_t b,
                                            const QuadraticForm& form);

// Element of Cl(p,q) stored sparsely as blade-mask -> coefficient.
// Coefficients with |c| < kPruneTol are never stored.
class Multivector {
 public:
  explicit Multivector(const QuadraticForm& form);

  static Multivector scalar(const QuadraticForm& form, double value);
  static Multivector blade(const QuadraticForm& form, std::uint32_t mask,
                           double coeff = 1.0);
  static Multivector basis_vector(const QuadraticForm& form, int i);  // 0-based
  static Multivector from_vector(const QuadraticForm& form, const Vec& v);

  const QuadraticForm& form() const { return form_; }
  const std::map<std::uint32_t, double>& terms() const { return terms_; }

  double coeff(std::uint32_t mask) const;
  double scalar_part() const { return coeff(0); }
  Vec vector_part() const;  // grade-1 coefficients, length n
  Multivector grade_part(int k) const;
  double max_abs_coeff() const;
  // Largest |coefficient| over blades whose grade differs from k.
  double max_abs_coeff_off_grade(int k) const;
  bool is_zero(double tol = kPruneTol) const;
  // Even/Odd when all stored blades share one parity; nullopt for mixed.
  // The zero element counts as even.
  std::optional<Parity> homogeneous_parity() const;

  Multivector operator+(const Multivector& other) const;
  Multivector operator-(const Multivector& other) const;
  Multivector operator-() const;
  Multivector operator*(const Multivector& other) const;  // geometric product
  Multivector operator*(double s) const;

  // Main (grade) involution: blades of grade k pick up (-1)^k.
  Multivector grade_involution() const;
  // Reversion: (-1)^{k(k-1)/2} per grade-k blade.
  Multivector reversion() const;
  // Conjugation = reversion after grade involution: (-1)^{k(k+1)/2}.
  Multivector conjugation() const;

 private:
  void set(std::uint32_t mask, double value);
  QuadraticForm form_;
  std::map<std::uint32_t, double> terms_;
};

bool approx_equal(const Multivector& a, const Multivector& b, double tol = kEqTol);
double max_abs_diff(const Multivector& a, const Multivector& b);

// conj(x) * x. For elements of the Clifford group this is a scalar.
Multivector conjugation_norm(const Multivector& x);
// rev(x) * x. Agrees with conjugation_norm on even elements and is its
// negative on odd ones.
Multivector reversion_norm(const Multivector& x);
// Scalar coefficient of a norm value; throws InvalidInput when the
// off-scalar residue exceeds tol.
double scalar_norm_value(const Multivector& norm, double tol = kEqTol);

bool is_invertible(const Multivector& x, double tol = kEqTol);
// Inverse via conj(x)/s when conj(x)*x is a nonzero scalar s; otherwise a
// dense solve against the left-multiplication operator (n <= 6).
Multivector inverse(const Multivector& x, double tol = kEqTol);

// Twisted adjoint i_u(x) = (-1)^{|u||x|} u x u^{-1}; both arguments must be
// homogeneous.
Multivector twisted_adjoint(const Multivector& u, const Multivector& x,
                            double tol = kEqTol);

// u is homogeneous, invertible, and its twisted adjoint maps every basis
// vector to a grade-1 element (leak below tol).
bool in_clifford_group(const Multivector& u, double tol = kEqTol);

// n x n matrix of the twisted adjoint restricted to grade 1; column k holds
// the grade-1 coefficients of i_u(e_k). Throws NotInCliffordGroup.
RealMatrix orthogonal_action(const Multivector& u, double tol = kEqTol);

// Clifford-group membership plus the variant's norm condition:
//   Abs:      conj-norm  = 1
//   Scharlau: rev-norm   = 1
//   Big:      conj-norm^2 = 1  (i.e. = +/-1)
bool pin_membership(const Multivector& u, PinVariant variant, double tol = kEqTol);
bool spin_membership(const Multivector& u, PinVariant variant, double tol = kEqTol);

// Basis of {homogeneous u : u e_k = (-1)^{|u|} e_k u for every k}, computed
// per parity by a dense kernel solve (n <= 6). For the nondegenerate real
// forms handled here this is always the span of the scalar blade.
std::vector<Multivector> graded_center_basis(const QuadraticForm& form);

}  // namespace magsq
