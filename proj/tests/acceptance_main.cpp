// Acceptance gate: ten verification targets, one PASS/FAIL line each.
// Exits nonzero if any line fails.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "magsq/casestudies.hpp"
#include "magsq/catalog.hpp"
#include "magsq/clifford.hpp"
#include "magsq/finitegrp.hpp"
#include "magsq/json_io.hpp"
#include "magsq/quadratic.hpp"
#include "magsq/quatmat.hpp"
#include "magsq/rng.hpp"

using namespace magsq;

namespace {

int g_failures = 0;

void criterion(int index, const std::string& label,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::cout << (pass ? "PASS" : "FAIL") << " [" << (index < 10 ? " " : "")
            << index << "] " << label;
  if (!pass && !detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!pass) ++g_failures;
}

bool expect(bool condition, std::string& detail, const std::string& note) {
  if (!condition && detail.empty()) detail = note;
  return condition;
}

Vec random_anisotropic(Rng& rng, const QuadraticForm& form) {
  while (true) {
    Vec v(static_cast<std::size_t>(form.dimension()));
    for (auto& x : v) x = rng.uniform(-2.0, 2.0);
    if (std::abs(form.evaluate(v)) > 0.3) return v;
  }
}

Multivector random_multivector(Rng& rng, const QuadraticForm& form) {
  Multivector x(form);
  const int terms = rng.uniform_int(1, 4);
  const int top = (1 << form.dimension()) - 1;
  for (int t = 0; t < terms; ++t)
    x = x + Multivector::blade(form,
                               static_cast<std::uint32_t>(rng.uniform_int(0, top)),
                               rng.uniform(-2.0, 2.0));
  return x;
}

// Product of vectors scaled to |q(v)| = 1, so the versor's norm is +-1 and
// its inverse stays well conditioned even for the indefinite forms.
Multivector random_versor(Rng& rng, const QuadraticForm& form) {
  const auto unit_factor = [&] {
    while (true) {
      Vec v = random_anisotropic(rng, form);
      const double scale = 1.0 / std::sqrt(std::abs(form.evaluate(v)));
      double largest = 0.0;
      for (auto& x : v) {
        x *= scale;
        largest = std::max(largest, std::abs(x));
      }
      // Bounded entries cap the boost rapidity, so products of several
      // factors keep coefficients (and rounding error) small.
      if (largest <= 1.25) return Multivector::from_vector(form, v);
    }
  };
  Multivector u = unit_factor();
  const int extra = rng.uniform_int(0, 2);
  for (int t = 0; t < extra; ++t) u = u * unit_factor();
  return u;
}

Group3R reflection_group(ReflectionGroupName name) {
  const QuadraticForm euclid(3, 0);
  std::vector<RealMatrix> gens;
  for (const auto& root : builtin_roots(name))
    gens.push_back(euclid.reflection_matrix(root));
  return closure(gens);
}

std::size_t distinct_image_count(const Group2C& g, double tol) {
  std::set<std::vector<std::int64_t>> keys;
  for (const auto& m : g.elements)
    keys.insert(detail::grid_key(detail::flatten(rho_tilde(m)), tol));
  return keys.size();
}

// ---------------------------------------------------------------- criteria

bool pauli_model(std::string& detail) {
  const QuadraticForm euclid(3, 0);
  bool ok = true;
  for (std::uint32_t a = 0; a < 8 && ok; ++a)
    for (std::uint32_t b = 0; b < 8 && ok; ++b) {
      const auto [sign, mask] = blade_product(a, b, euclid);
      const Mat2C lhs = pauli_blade(a) * pauli_blade(b);
      const Mat2C rhs = pauli_blade(mask) * Complex(sign);
      ok = expect(max_abs_diff(lhs, rhs) <= 1e-12, detail,
                  "product of blades " + std::to_string(a) + "," + std::to_string(b));
    }

  ok = expect(max_abs_diff(pauli_blade(0b111), Mat2C::identity() * Complex(0, 1)) <=
                  1e-12,
              detail, "volume blade is not i times the identity") && ok;

  // The four even blades are embedded quaternions and independent over R.
  double coords[4][4];
  int row = 0;
  for (const std::uint32_t mask : {0b000u, 0b011u, 0b101u, 0b110u}) {
    const auto h = try_quaternion_from_matrix(pauli_blade(mask), 1e-12);
    ok = expect(h.has_value(), detail,
                "even blade " + std::to_string(mask) + " is not an embedded quaternion") && ok;
    if (!h) return false;
    coords[row][0] = h->a; coords[row][1] = h->b;
    coords[row][2] = h->c; coords[row][3] = h->d;
    ++row;
  }
  RealMatrix m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = coords[i][j];
  ok = expect(std::abs(m.det()) > 0.5, detail,
              "even blades are linearly dependent over the quaternion coordinates") && ok;

  std::string model_failure;
  ok = expect(pauli_model_check(1e-12, &model_failure), detail, model_failure) && ok;
  return ok;
}

bool kernel_and_covering(std::string& detail) {
  const auto h = reflection_group(ReflectionGroupName::B3);
  bool ok = expect(h.order() == 48, detail, "mirror closure order != 48");
  const auto lift = preimage_under_rho(h);
  ok = expect(lift.order() == 96, detail, "lift order != 96") && ok;

  std::size_t kernel = 0;
  const RealMatrix id3 = RealMatrix::identity(3);
  for (const auto& m : lift.elements)
    if (max_abs_diff(rho_tilde(m), id3) <= 1e-9) ++kernel;
  ok = expect(kernel == 2, detail,
              "kernel size " + std::to_string(kernel) + " != 2") && ok;

  const std::size_t images = distinct_image_count(lift, 1e-6);
  ok = expect(images == 48, detail,
              "distinct images " + std::to_string(images) + " != 48") && ok;
  return ok;
}

bool reflection_correspondence(std::string& detail) {
  Rng rng(2026);
  bool ok = true;
  for (int t = 0; t < 1000 && ok; ++t) {
    const Vec v = rng.unit_vector(3);
    const Mat2C refl = reflection_from_unit_vector(v[0], v[1], v[2], 1e-9);
    ok = expect(is_complex_reflection(refl, 1e-9), detail,
                "sample reflection fails the trace/det test");
    const RealMatrix m = rho_tilde(refl, 1e-9);
    ok = expect(std::abs(m.trace() - 1.0) <= 1e-9 && std::abs(m.det() + 1.0) <= 1e-9,
                detail, "image of a reflection is not trace 1 / det -1") && ok;
  }
  for (int t = 0; t < 1000 && ok; ++t) {
    const Vec h = rng.unit_vector(4);
    const Mat2C a = lambda_embed({h[0], h[1], h[2], h[3]});
    ok = expect(std::abs(rho_tilde(a, 1e-9).det() - 1.0) <= 1e-9, detail,
                "image of a special unitary sample is not det +1");
  }
  return ok;
}

bool magic_square_corners(std::string& detail) {
  struct Row {
    ReflectionGroupName name;
    std::size_t h, rot, lift, lift_special;
  };
  const std::vector<Row> rows = {
      {ReflectionGroupName::A3, 24, 12, 48, 24},
      {ReflectionGroupName::B3, 48, 24, 96, 48},
      {ReflectionGroupName::H3, 120, 60, 240, 120},
  };
  bool ok = true;
  for (const auto& row : rows) {
    const auto report =
        verify_magic_square(builtin_roots(row.name), to_string(row.name));
    ok = expect(report.ok, detail, to_string(row.name) + ": a check failed") && ok;
    ok = expect(report.order_reflection_group == row.h &&
                    report.order_rotation_subgroup == row.rot &&
                    report.order_lift == row.lift &&
                    report.order_lift_special == row.lift_special,
                detail, to_string(row.name) + ": corner orders are off") && ok;
    ok = expect(report.double_cover_ok && report.rotation_index_two &&
                    report.lift_special_index_two && report.kernel_ok &&
                    report.lift_reflection_generated &&
                    report.lift_contains_minus_identity &&
                    report.image_matches_rotation_subgroup,
                detail, to_string(row.name) + ": an arrow check failed") && ok;
  }
  return ok;
}

bool type_identification(std::string& detail) {
  using Tag = GroupIsoType::Tag;
  bool ok = true;
  const auto check_tag = [&](ReflectionGroupName name, Tag tag, const char* what) {
    const auto got = identify_so3_type(intersect_special(reflection_group(name)));
    ok = expect(got.tag == tag, detail, std::string("wrong type for ") + what) && ok;
  };
  check_tag(ReflectionGroupName::A3, Tag::Tetrahedral, "the 12-element corner");
  check_tag(ReflectionGroupName::B3, Tag::Octahedral, "the 24-element corner");
  check_tag(ReflectionGroupName::H3, Tag::Icosahedral, "the 60-element corner");

  for (int n = 2; n <= 7; ++n) {
    const auto cyc = identify_so3_type(closure({rotation_z(n)}));
    ok = expect(cyc == GroupIsoType{Tag::Cyclic, n}, detail,
                "cyclic group of order " + std::to_string(n)) && ok;
    const auto dih = identify_so3_type(closure(rotational_dihedral_generators(n)));
    ok = expect(dih == GroupIsoType{Tag::Dihedral, n}, detail,
                "dihedral group with " + std::to_string(n) + " rotations") && ok;
  }
  return ok;
}

bool witt_root_systems(std::string& detail) {
  const auto big = closure(builtin_binary_generators(BinaryGroupName::BinaryIcosahedral));
  const auto big_report = witt_root_check(big, 1e-6);
  bool ok = expect(big.order() == 120, detail, "120-element group has wrong order");
  ok = expect(big_report.ok && big_report.element_count == 120, detail,
              "120-element root check failed: " + big_report.roots.failed_axiom +
                  " " + big_report.roots.witness) && ok;

  const auto q8 = closure(builtin_binary_generators(BinaryGroupName::Q8));
  const auto q8_report = witt_root_check(q8, 1e-6);
  ok = expect(q8_report.ok && q8_report.element_count == 8, detail,
              "8-element root check failed") && ok;
  return ok;
}

bool odd_dihedral_exception(std::string& detail) {
  bool ok = true;
  for (int m = 1; m <= 3; ++m) {
    const int n = 2 * m + 1;
    std::vector<Mat2C> lifts;
    for (const auto& normal : dihedral_mirror_normals(n))
      lifts.push_back(reflection_for_mirror_normal(normal));
    const auto g = closure(lifts);
    ok = expect(g.order() == static_cast<std::size_t>(2 * n), detail,
                std::to_string(n) + " mirrors: order != " + std::to_string(2 * n)) && ok;
    ok = expect(!contains_minus_identity(g), detail,
                std::to_string(n) + " mirrors: -I appeared") && ok;
    ok = expect(distinct_image_count(g, 1e-6) == g.order(), detail,
                std::to_string(n) + " mirrors: induced map is not injective") && ok;
  }

  std::vector<Mat2C> lifts4;
  for (const auto& normal : dihedral_mirror_normals(4))
    lifts4.push_back(reflection_for_mirror_normal(normal));
  ok = expect(contains_minus_identity(closure(lifts4)), detail,
              "4 mirrors: -I missing from the lifted closure") && ok;
  return ok;
}

bool pin_case_studies(std::string& detail) {
  bool ok = true;
  for (const auto& report : all_case_studies()) {
    for (const auto& row : report.rows)
      ok = expect(row.pass, detail,
                  "(" + std::to_string(report.p) + "," + std::to_string(report.q) +
                      ") " + row.claim + ": " + row.detail) && ok;
    ok = expect(report.ok, detail, "report not ok") && ok;
  }
  return ok;
}

bool clifford_property_suite(std::string& detail) {
  Rng rng(31337);
  const double tol = 1e-9;
  bool ok = true;
  for (const auto& [p, q] : {std::pair{3, 0}, {0, 3}, {1, 1}, {2, 2}}) {
    const QuadraticForm form(p, q);
    const std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + "): ";

    for (int t = 0; t < 500 && ok; ++t) {
      const Multivector x = random_multivector(rng, form);
      const Multivector y = random_multivector(rng, form);
      const Multivector z = random_multivector(rng, form);
      ok = expect(max_abs_diff((x * y) * z, x * (y * z)) <= tol, detail,
                  tag + "associativity");
      ok = expect(max_abs_diff((x * y).grade_involution(),
                               x.grade_involution() * y.grade_involution()) <= tol,
                  detail, tag + "grade involution is not an automorphism") && ok;
      ok = expect(max_abs_diff((x * y).reversion(),
                               y.reversion() * x.reversion()) <= tol,
                  detail, tag + "reversion is not an anti-automorphism") && ok;
      ok = expect(max_abs_diff((x * y).conjugation(),
                               y.conjugation() * x.conjugation()) <= tol,
                  detail, tag + "conjugation is not an anti-automorphism") && ok;
      ok = expect(max_abs_diff(x.grade_involution().grade_involution(), x) <= tol &&
                      max_abs_diff(x.reversion().reversion(), x) <= tol &&
                      max_abs_diff(x.conjugation().conjugation(), x) <= tol,
                  detail, tag + "an involution failed to square to the identity") && ok;
    }

    for (int t = 0; t < 500 && ok; ++t) {
      const Vec v = random_anisotropic(rng, form);
      const Multivector mv = Multivector::from_vector(form, v);
      ok = expect(max_abs_diff(mv * mv,
                               Multivector::scalar(form, form.evaluate(v))) <= tol,
                  detail, tag + "vector square law");
      ok = expect(max_abs_diff(orthogonal_action(mv), form.reflection_matrix(v)) <=
                      tol,
                  detail, tag + "grade-1 action is not the mirror matrix") && ok;
    }

    for (int t = 0; t < 500 && ok; ++t) {
      const Multivector u = random_versor(rng, form);
      const Multivector w = random_versor(rng, form);
      const double nu = scalar_norm_value(conjugation_norm(u));
      const double nw = scalar_norm_value(conjugation_norm(w));
      const double nuw = scalar_norm_value(conjugation_norm(u * w));
      ok = expect(std::abs(nuw - nu * nw) <= tol * std::max(1.0, std::abs(nu * nw)),
                  detail, tag + "norm multiplicativity");
      ok = expect(max_abs_diff(orthogonal_action(u * w),
                               orthogonal_action(u) * orthogonal_action(w)) <= tol,
                  detail, tag + "action homomorphism") && ok;
      const double want_det =
          (u.homogeneous_parity() == Parity::Even) ? 1.0 : -1.0;
      ok = expect(std::abs(orthogonal_action(u).det() - want_det) <= 1e-7, detail,
                  tag + "determinant parity") && ok;
    }
  }
  return ok;
}

bool graded_center(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 4; ++n)
    for (int p = 0; p <= n; ++p) {
      const QuadraticForm form(p, n - p);
      const auto basis = graded_center_basis(form);
      const std::string tag =
          "(" + std::to_string(p) + "," + std::to_string(n - p) + ")";
      ok = expect(basis.size() == 1, detail, tag + ": center is not a line") && ok;
      if (basis.size() == 1)
        ok = expect(approx_equal(basis[0], Multivector::scalar(form, 1.0)), detail,
                    tag + ": center basis is not the unit scalar") && ok;
    }
  return ok;
}

}  // namespace

int main() {
  criterion(1, "blade arithmetic matches the 2x2 matrix model on all 64 products",
            pauli_model);
  criterion(2, "96-element lift: kernel of size 2 and 48 distinct images",
            kernel_and_covering);
  criterion(3, "1000 sampled reflections and rotations map to det -1 / det +1",
            reflection_correspondence);
  criterion(4, "square corners (24,12,48,24), (48,24,96,48), (120,60,240,120)",
            magic_square_corners);
  criterion(5, "type identification: three polyhedral corners plus cyclic/dihedral",
            type_identification);
  criterion(6, "unit quaternion groups of orders 120 and 8 are root systems",
            witt_root_systems);
  criterion(7, "odd coplanar mirror lifts close without -I; four mirrors bring it back",
            odd_dihedral_exception);
  criterion(8, "kernel tables for the six low-dimensional signatures", pin_case_studies);
  criterion(9, "algebra property suite: 500 random cases per law and signature",
            clifford_property_suite);
  criterion(10, "graded center is the scalar line for every signature up to rank 4",
            graded_center);

  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
