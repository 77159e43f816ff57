#pragma once

#include <string>
#include <vector>

#include "magsq/linalg.hpp"
#include "magsq/tolerances.hpp"

namespace magsq {

// Real diagonal form q(x) = x_1^2 + ... + x_p^2 - x_{p+1}^2 - ... - x_{p+q}^2.
class QuadraticForm {
 public:
  QuadraticForm(int p, int q);

  int positive_count() const { return p_; }
  int negative_count() const { return q_; }
  int dimension() const { return p_ + q_; }

  // +1 for the first p coordinates, -1 for the rest (0-based index).
  double sign_of(int i) const;
  RealMatrix gram() const;  // diag(signs): matrix of the scalar product q(e_i, e_j)

  double evaluate(const Vec& v) const;
  // b_q(v, w) = q(v + w) - q(v) - q(w); note b_q(v, v) = 2 q(v).
  double polarization(const Vec& v, const Vec& w) const;

  // s_v(w) = w - b_q(v, w) q(v)^{-1} v. Throws IsotropicMirror when |q(v)|
  // is at or below the anisotropy threshold.
  Vec reflect(const Vec& v, const Vec& w) const;
  RealMatrix reflection_matrix(const Vec& v) const;

  // M^T G M = G within tol, i.e. M preserves the form.
  bool is_orthogonal(const RealMatrix& m, double tol = kEqTol) const;

  bool operator==(const QuadraticForm& other) const {
    return p_ == other.p_ && q_ == other.q_;
  }

 private:
  void check_vector(const Vec& v) const;
  int p_, q_;
};

struct RootSystemReport {
  bool ok = false;
  // Empty when ok; otherwise one of "unit-norm", "scalar-multiples",
  // "reflection-closure" plus a human-readable witness.
  std::string failed_axiom;
  std::string witness;
};

// Checks the three normalized-root-system axioms:
//   (a) every root has q(v) = 1,
//   (b) the only scalar multiples of a root in the set are +/- itself
//       (and -v must be present),
//   (c) each root's reflection permutes the set.
// Matching uses coordinate tolerance `tol`.
RootSystemReport check_root_system(const std::vector<Vec>& roots,
                                   const QuadraticForm& form,
                                   double tol = kGridTol);

}  // namespace magsq
