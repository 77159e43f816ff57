#include <doctest.h>

#include <bit>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "magsq/clifford.hpp"
#include "magsq/errors.hpp"
#include "magsq/quadratic.hpp"
#include "magsq/rng.hpp"

using namespace magsq;

namespace {

// Sign oracle by brute force: write out both index lists, bubble-sort the
// concatenation counting transpositions, then cancel adjacent duplicates
// against the metric. Slow and obviously correct.
std::pair<int, std::uint32_t> oracle_blade_product(std::uint32_t a, std::uint32_t b,
                                                   const QuadraticForm& form) {
  std::vector<int> idx;
  for (int i = 0; i < form.dimension(); ++i)
    if (a >> i & 1u) idx.push_back(i);
  for (int i = 0; i < form.dimension(); ++i)
    if (b >> i & 1u) idx.push_back(i);

  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t k = 0; k + 1 < idx.size(); ++k)
      if (idx[k] > idx[k + 1]) {
        std::swap(idx[k], idx[k + 1]);
        sign = -sign;
        moved = true;
      }
  }

  std::uint32_t mask = 0;
  for (std::size_t k = 0; k < idx.size();) {
    if (k + 1 < idx.size() && idx[k] == idx[k + 1]) {
      if (form.sign_of(idx[k]) < 0) sign = -sign;
      k += 2;
    } else {
      mask |= 1u << idx[k];
      ++k;
    }
  }
  return {sign, mask};
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

// Product of vectors scaled to |q(v)| = 1: the versor's norm is +-1, so it
// stays well conditioned under inversion even for the indefinite forms.
Multivector random_versor(Rng& rng, const QuadraticForm& form, int max_factors = 3) {
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
  const int extra = rng.uniform_int(0, max_factors - 1);
  for (int t = 0; t < extra; ++t) u = u * unit_factor();
  return u;
}

// Dense inverse oracle: solve L_x y = 1 for the left-multiplication matrix
// of x over the blade basis, by plain Gaussian elimination.
std::optional<Multivector> oracle_inverse(const Multivector& x) {
  const QuadraticForm& form = x.form();
  const std::size_t n = 1u << form.dimension();
  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
  for (std::size_t col = 0; col < n; ++col)
    for (const auto& [mask, coeff] : x.terms()) {
      const auto [sign, result] =
          blade_product(mask, static_cast<std::uint32_t>(col), form);
      a[result][col] += sign * coeff;
    }
  a[0][n] = 1.0;  // right-hand side: the scalar blade

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (std::abs(a[pivot][col]) < 1e-12) return std::nullopt;
    std::swap(a[col], a[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  Multivector y(form);
  for (std::size_t m = 0; m < n; ++m)
    y = y + Multivector::blade(form, static_cast<std::uint32_t>(m), a[m][n] / a[m][m]);
  return y;
}

const QuadraticForm kEuclid3(3, 0);

Multivector e(int i) { return Multivector::basis_vector(kEuclid3, i - 1); }

}  // namespace

TEST_SUITE("clifford") {

TEST_CASE("blade products match the permutation-sort oracle") {
  for (const auto& [p, q] :
       {std::pair{3, 0}, {0, 3}, {2, 1}, {1, 2}, {2, 3}, {1, 1}}) {
    const QuadraticForm form(p, q);
    const std::uint32_t n = 1u << form.dimension();
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        const auto got = blade_product(a, b, form);
        const auto want = oracle_blade_product(a, b, form);
        CHECK(got.first == want.first);
        CHECK(got.second == want.second);
      }
  }
}

TEST_CASE("pinned product values") {
  // (e1 + e2)^2 = 2 in the Euclidean 3-space algebra.
  const Multivector s = e(1) + e(2);
  CHECK(approx_equal(s * s, Multivector::scalar(kEuclid3, 2.0)));

  // (e1 e2)^2 = -1 when both generators square to -1.
  const QuadraticForm f02(0, 2);
  const Multivector b = Multivector::blade(f02, 0b11);
  CHECK(approx_equal(b * b, Multivector::scalar(f02, -1.0)));

  // The volume blade of the Euclidean 3-space algebra is central.
  const Multivector vol = Multivector::blade(kEuclid3, 0b111);
  for (int i = 1; i <= 3; ++i) {
    CHECK(approx_equal(vol * e(i), e(i) * vol));
  }
  CHECK(approx_equal(vol * vol, Multivector::scalar(kEuclid3, -1.0)));
}

TEST_CASE("vectors square to their quadratic value") {
  Rng rng(101);
  for (const auto& [p, q] : {std::pair{3, 0}, {0, 3}, {1, 1}, {2, 2}}) {
    const QuadraticForm form(p, q);
    for (int t = 0; t < 200; ++t) {
      Vec v(static_cast<std::size_t>(form.dimension()));
      for (auto& x : v) x = rng.uniform(-2.0, 2.0);
      const Multivector mv = Multivector::from_vector(form, v);
      CHECK(approx_equal(mv * mv, Multivector::scalar(form, form.evaluate(v))));
    }
  }
}

TEST_CASE("the product is associative and distributes over addition") {
  Rng rng(102);
  for (const auto& [p, q] : {std::pair{3, 0}, {1, 1}, {2, 2}}) {
    const QuadraticForm form(p, q);
    for (int t = 0; t < 200; ++t) {
      const Multivector x = random_multivector(rng, form);
      const Multivector y = random_multivector(rng, form);
      const Multivector z = random_multivector(rng, form);
      CHECK(approx_equal((x * y) * z, x * (y * z)));
      CHECK(approx_equal(x * (y + z), x * y + x * z));
      CHECK(approx_equal((x + y) * z, x * z + y * z));
    }
  }
}

TEST_CASE("mixing elements of different forms is rejected") {
  const Multivector a = Multivector::scalar(QuadraticForm(3, 0), 1.0);
  const Multivector b = Multivector::scalar(QuadraticForm(0, 3), 1.0);
  CHECK_THROWS_AS(a * b, FormMismatch);
  CHECK_THROWS_AS(a + b, FormMismatch);
}

TEST_CASE("involutions act by the right sign on each grade") {
  const QuadraticForm form(2, 2);
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    const Multivector b = Multivector::blade(form, mask);
    const int k = std::popcount(mask);
    const double alpha = (k % 2 == 0) ? 1.0 : -1.0;
    const double rev = (k % 4 == 0 || k % 4 == 1) ? 1.0 : -1.0;
    CHECK(approx_equal(b.grade_involution(), b * alpha));
    CHECK(approx_equal(b.reversion(), b * rev));
    CHECK(approx_equal(b.conjugation(), b * (alpha * rev)));
  }
}

TEST_CASE("involution algebra laws on random elements") {
  Rng rng(103);
  for (const auto& [p, q] : {std::pair{3, 0}, {0, 3}, {1, 1}, {2, 2}}) {
    const QuadraticForm form(p, q);
    for (int t = 0; t < 200; ++t) {
      const Multivector x = random_multivector(rng, form);
      const Multivector y = random_multivector(rng, form);
      // Automorphism / anti-automorphisms.
      CHECK(approx_equal((x * y).grade_involution(),
                         x.grade_involution() * y.grade_involution()));
      CHECK(approx_equal((x * y).reversion(), y.reversion() * x.reversion()));
      CHECK(approx_equal((x * y).conjugation(), y.conjugation() * x.conjugation()));
      // All three square to the identity.
      CHECK(approx_equal(x.grade_involution().grade_involution(), x));
      CHECK(approx_equal(x.reversion().reversion(), x));
      CHECK(approx_equal(x.conjugation().conjugation(), x));
      // Conjugation is the composite of the other two, in either order.
      CHECK(approx_equal(x.conjugation(), x.grade_involution().reversion()));
      CHECK(approx_equal(x.conjugation(), x.reversion().grade_involution()));
    }
  }
}

TEST_CASE("norm values on pinned examples") {
  const QuadraticForm f01(0, 1);
  const Multivector one_plus_e =
      Multivector::scalar(f01, 1.0) + Multivector::basis_vector(f01, 0);
  // rev(1+e)(1+e) = 1 + 2e + e^2 = 2e.
  CHECK(approx_equal(reversion_norm(one_plus_e),
                     Multivector::blade(f01, 1, 2.0)));
  // conj(1+e)(1+e) = (1-e)(1+e) = 1 - e^2 = 2.
  CHECK(approx_equal(conjugation_norm(one_plus_e), Multivector::scalar(f01, 2.0)));
  CHECK(scalar_norm_value(conjugation_norm(one_plus_e)) == doctest::Approx(2.0));
}

TEST_CASE("the two norms agree on even elements and differ by sign on odd ones") {
  Rng rng(104);
  for (const auto& [p, q] : {std::pair{3, 0}, {1, 1}, {2, 2}}) {
    const QuadraticForm form(p, q);
    for (int t = 0; t < 100; ++t) {
      const Multivector u = random_versor(rng, form);
      const auto parity = u.homogeneous_parity();
      REQUIRE(parity.has_value());
      const Multivector n = conjugation_norm(u);
      const Multivector np = reversion_norm(u);
      if (*parity == Parity::Even)
        CHECK(approx_equal(n, np));
      else
        CHECK(approx_equal(n, -np));
    }
  }
}

TEST_CASE("norms of group elements are scalars and multiply") {
  Rng rng(105);
  for (const auto& [p, q] : {std::pair{3, 0}, {0, 3}, {1, 1}, {2, 2}}) {
    const QuadraticForm form(p, q);
    for (int t = 0; t < 100; ++t) {
      const Multivector u = random_versor(rng, form);
      const Multivector w = random_versor(rng, form);
      const double nu = scalar_norm_value(conjugation_norm(u));
      const double nw = scalar_norm_value(conjugation_norm(w));
      const double nuw = scalar_norm_value(conjugation_norm(u * w));
      CHECK(nuw == doctest::Approx(nu * nw).epsilon(1e-9));
    }
  }
}

TEST_CASE("scalar_norm_value rejects non-scalar values") {
  const Multivector x = Multivector::scalar(kEuclid3, 1.0) +
                        Multivector::blade(kEuclid3, 0b001, 2.0) +
                        Multivector::blade(kEuclid3, 0b110, 3.0);
  // conj(x) x = 6 - 12 e123 here: a genuine non-scalar residue.
  CHECK_THROWS_AS(scalar_norm_value(conjugation_norm(x)), InvalidInput);
}

TEST_CASE("inverse takes the fast path on versors and a dense solve otherwise") {
  Rng rng(106);
  const QuadraticForm form(3, 0);
  for (int t = 0; t < 50; ++t) {
    const Multivector u = random_versor(rng, form);
    const Multivector one = Multivector::scalar(form, 1.0);
    CHECK(is_invertible(u));
    CHECK(approx_equal(u * inverse(u), one));
    CHECK(approx_equal(inverse(u) * u, one));
    const auto want = oracle_inverse(u);
    REQUIRE(want.has_value());
    CHECK(approx_equal(inverse(u), *want));
  }

  // Mixed-parity element whose norm is not scalar: needs the dense route.
  const Multivector x = Multivector::scalar(kEuclid3, 1.0) +
                        Multivector::blade(kEuclid3, 0b001, 2.0) +
                        Multivector::blade(kEuclid3, 0b110, 3.0);
  const auto want = oracle_inverse(x);
  REQUIRE(want.has_value());
  CHECK(approx_equal(inverse(x), *want));
  CHECK(approx_equal(x * inverse(x), Multivector::scalar(kEuclid3, 1.0)));
}

TEST_CASE("singular elements are detected") {
  const QuadraticForm f10(1, 0);
  const Multivector z =
      Multivector::scalar(f10, 1.0) + Multivector::basis_vector(f10, 0);
  CHECK_FALSE(is_invertible(z));  // (1+e)(1-e) = 1 - e^2 = 0
  CHECK_THROWS_AS(inverse(z), Singular);
  CHECK_THROWS_AS(inverse(Multivector(kEuclid3)), Singular);
}

TEST_CASE("twisted adjoint on basis vectors") {
  const Multivector u = e(1);
  CHECK(approx_equal(twisted_adjoint(u, e(1)), -e(1)));
  CHECK(approx_equal(twisted_adjoint(u, e(2)), e(2)));
  CHECK(approx_equal(twisted_adjoint(u, e(3)), e(3)));

  const Multivector one = Multivector::scalar(kEuclid3, 1.0);
  const Multivector x = e(2) * e(3);
  CHECK(approx_equal(twisted_adjoint(one, x), x));
}

TEST_CASE("twisted adjoint requires homogeneous arguments") {
  const Multivector mixed = Multivector::scalar(kEuclid3, 1.0) + e(1);
  CHECK_THROWS_AS(twisted_adjoint(mixed, e(1)), NotHomogeneous);
  CHECK_THROWS_AS(twisted_adjoint(e(1), mixed), NotHomogeneous);
  CHECK_THROWS_AS(twisted_adjoint(Multivector(kEuclid3), e(1)), Singular);
}

TEST_CASE("group membership accepts versors and rejects mixed or null elements") {
  CHECK(in_clifford_group(e(1)));
  CHECK(in_clifford_group(e(1) * e(2)));
  CHECK(in_clifford_group(Multivector::scalar(kEuclid3, 2.0)));

  const Multivector mixed =
      Multivector::scalar(kEuclid3, 1.0) + Multivector::blade(kEuclid3, 0b111, 0.5);
  CHECK_FALSE(in_clifford_group(mixed));  // central but not homogeneous
  CHECK_FALSE(in_clifford_group(Multivector(kEuclid3)));

  const QuadraticForm f10(1, 0);
  const Multivector null_elt =
      Multivector::scalar(f10, 1.0) + Multivector::basis_vector(f10, 0);
  CHECK_FALSE(in_clifford_group(null_elt));
}

TEST_CASE("orthogonal action on pinned elements") {
  const RealMatrix m3 = orthogonal_action(e(3));
  CHECK(m3(0, 0) == doctest::Approx(1.0));
  CHECK(m3(1, 1) == doctest::Approx(1.0));
  CHECK(m3(2, 2) == doctest::Approx(-1.0));
  CHECK(std::abs(m3(0, 1)) + std::abs(m3(0, 2)) + std::abs(m3(1, 2)) < 1e-12);

  const RealMatrix m12 = orthogonal_action(e(1) * e(2));
  CHECK(m12(0, 0) == doctest::Approx(-1.0));
  CHECK(m12(1, 1) == doctest::Approx(-1.0));
  CHECK(m12(2, 2) == doctest::Approx(1.0));

  const RealMatrix id = orthogonal_action(Multivector::scalar(kEuclid3, 2.0));
  CHECK(max_abs_diff(id, RealMatrix::identity(3)) < 1e-12);

  CHECK_THROWS_AS(orthogonal_action(Multivector::scalar(kEuclid3, 1.0) + e(1)),
                  NotInCliffordGroup);
}

TEST_CASE("orthogonal action is a homomorphism matching mirror matrices") {
  Rng rng(107);
  for (const auto& [p, q] : {std::pair{3, 0}, {0, 3}, {1, 1}, {2, 2}}) {
    const QuadraticForm form(p, q);
    for (int t = 0; t < 100; ++t) {
      const Vec v = random_anisotropic(rng, form);
      const Multivector mv = Multivector::from_vector(form, v);
      CHECK(max_abs_diff(orthogonal_action(mv), form.reflection_matrix(v)) < 1e-9);

      const Multivector u = random_versor(rng, form);
      const Multivector w = random_versor(rng, form);
      const RealMatrix prod = orthogonal_action(u * w);
      const RealMatrix comp = orthogonal_action(u) * orthogonal_action(w);
      CHECK(max_abs_diff(prod, comp) < 1e-9);
      CHECK(form.is_orthogonal(orthogonal_action(u)));

      // Determinant tracks the parity of the versor.
      const auto parity = u.homogeneous_parity();
      REQUIRE(parity.has_value());
      const double want_det = (*parity == Parity::Even) ? 1.0 : -1.0;
      CHECK(orthogonal_action(u).det() == doctest::Approx(want_det).epsilon(1e-7));
    }
  }
}

TEST_CASE("pin and spin membership on pinned case values") {
  const QuadraticForm f01(0, 1);
  const Multivector e01 = Multivector::basis_vector(f01, 0);
  CHECK(pin_membership(e01, PinVariant::Abs));
  CHECK_FALSE(pin_membership(e01, PinVariant::Scharlau));
  CHECK(pin_membership(e01, PinVariant::Big));

  const QuadraticForm f10(1, 0);
  const Multivector e10 = Multivector::basis_vector(f10, 0);
  CHECK_FALSE(pin_membership(e10, PinVariant::Abs));
  CHECK(pin_membership(e10, PinVariant::Scharlau));
  CHECK(pin_membership(e10, PinVariant::Big));

  for (const auto variant :
       {PinVariant::Abs, PinVariant::Scharlau, PinVariant::Big}) {
    CHECK(pin_membership(Multivector::scalar(f01, 1.0), variant));
    CHECK(pin_membership(Multivector::scalar(f01, -1.0), variant));
    // Odd elements never lie in Spin.
    CHECK_FALSE(spin_membership(e01, variant));
    CHECK_FALSE(spin_membership(e10, variant));
    CHECK(spin_membership(Multivector::scalar(f01, -1.0), variant));
    CHECK(spin_membership(Multivector::blade(kEuclid3, 0b011), variant));
  }

  // Scaling off the unit norm leaves the group but not Pin.
  CHECK(in_clifford_group(e(1) * 2.0));
  CHECK_FALSE(pin_membership(e(1) * 2.0, PinVariant::Abs));
  CHECK_FALSE(pin_membership(e(1) * 2.0, PinVariant::Big));
}

TEST_CASE("abs and scharlau membership coincide on even elements") {
  Rng rng(108);
  for (const auto& [p, q] : {std::pair{3, 0}, {1, 1}, {2, 2}}) {
    const QuadraticForm form(p, q);
    for (int t = 0; t < 100; ++t) {
      Multivector u = random_versor(rng, form);
      if (u.homogeneous_parity() == Parity::Odd)
        u = u * Multivector::from_vector(form, random_anisotropic(rng, form));
      // Normalize to |N| = 1 so membership is a genuine coin flip on sign.
      const double n = scalar_norm_value(conjugation_norm(u));
      u = u * (1.0 / std::sqrt(std::abs(n)));
      CHECK(pin_membership(u, PinVariant::Abs) ==
            pin_membership(u, PinVariant::Scharlau));
    }
  }
}

TEST_CASE("graded center is the scalar line") {
  for (const auto& [p, q] : {std::pair{1, 0}, {0, 1}, {2, 0}, {1, 1}, {3, 0}, {1, 2}}) {
    const auto basis = graded_center_basis(QuadraticForm(p, q));
    REQUIRE(basis.size() == 1);
    CHECK(approx_equal(basis[0], Multivector::scalar(QuadraticForm(p, q), 1.0)));
  }
  CHECK_THROWS_AS(graded_center_basis(QuadraticForm(4, 3)), DimensionTooLarge);
}

TEST_CASE("grade bookkeeping helpers") {
  const Multivector x = Multivector::scalar(kEuclid3, 2.0) + e(1) * 3.0 +
                        Multivector::blade(kEuclid3, 0b110, -4.0);
  CHECK(x.scalar_part() == doctest::Approx(2.0));
  CHECK(x.grade_part(1).coeff(0b001) == doctest::Approx(3.0));
  CHECK(x.grade_part(2).coeff(0b110) == doctest::Approx(-4.0));
  CHECK(x.grade_part(3).is_zero());
  CHECK(x.max_abs_coeff() == doctest::Approx(4.0));
  CHECK(x.max_abs_coeff_off_grade(2) == doctest::Approx(3.0));

  const Vec v = (e(1) * 3.0).vector_part();
  CHECK(v[0] == doctest::Approx(3.0));
  CHECK(v[1] == 0.0);

  CHECK(x.homogeneous_parity() == std::nullopt);
  CHECK(e(1).homogeneous_parity() == Parity::Odd);
  CHECK((e(1) * e(2)).homogeneous_parity() == Parity::Even);
  CHECK(Multivector(kEuclid3).homogeneous_parity() == Parity::Even);
}

TEST_CASE("dimension cap is enforced") {
  CHECK_THROWS_AS(Multivector(QuadraticForm(13, 0)), DimensionTooLarge);
  CHECK_NOTHROW(Multivector(QuadraticForm(6, 6)));
}

}  // TEST_SUITE
