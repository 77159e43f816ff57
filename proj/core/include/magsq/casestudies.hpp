#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "magsq/tolerances.hpp"

namespace magsq {

struct CaseStudyRow {
  std::string claim;
  bool pass = false;
  std::string detail;
};

struct CaseStudyReport {
  int p = 0, q = 0;
  bool ok = false;
  std::vector<CaseStudyRow> rows;
};

// Pin/Spin kernel checks for one low-dimensional signature. Finite kernels
// ((0,1), (1,0)) are enumerated exactly on the {+-1, +-e} grid; the circle
// and sphere kernels ((0,2), (2,0), (3,0), (0,3)) are sampled on 64 grid
// angles plus 100 seeded random unit elements. (3,0) additionally
// cross-checks the blade arithmetic against 2x2 matrix products.
// Throws UnsupportedSignature outside those six.
CaseStudyReport case_study(int p, int q, std::uint64_t seed = kCaseStudySeed,
                           double tol = kEqTol);

std::vector<CaseStudyReport> all_case_studies(std::uint64_t seed = kCaseStudySeed,
                                              double tol = kEqTol);

struct DimensionReport {
  int p = 0, q = 0;
  bool ok = false;
  std::size_t blade_count = 0;   // 2^n distinct basis blades
  std::size_t even_count = 0;    // 2^{n-1} of them even
  bool products_stay_in_basis = false;  // blade * blade = +- blade
  bool center_is_scalar_line = false;   // graded center = span{1}
};

// Structural counts for Cl(p,q), p + q <= 6.
DimensionReport dimension_invariants(int p, int q);

// All 64 pairwise products of the images of the Cl(3,0) basis blades under
// pauli_blade agree with blade_product, entrywise within tol; the volume
// blade maps to i*I; the even blades land in the quaternionic block pattern
// and are linearly independent over R. On failure, *failure names the first
// mismatch.
bool pauli_model_check(double tol = 1e-12, std::string* failure = nullptr);

}  // namespace magsq
