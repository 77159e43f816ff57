#include "magsq/casestudies.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "magsq/clifford.hpp"
#include "magsq/errors.hpp"
#include "magsq/quatmat.hpp"
#include "magsq/rng.hpp"

namespace magsq {
namespace {

constexpr int kGridSamples = 64;
constexpr int kRandomSamples = 100;

struct MembershipCount {
  int in = 0, total = 0;
  void tally(bool member) {
    ++total;
    if (member) ++in;
  }
  bool all() const { return in == total; }
  bool none() const { return in == 0; }
  std::string str() const {
    std::ostringstream os;
    os << in << "/" << total << " samples in kernel";
    return os.str();
  }
};

void add_row(CaseStudyReport& report, const std::string& claim, bool pass,
             const std::string& detail = "") {
  report.rows.push_back({claim, pass, detail});
}

// Element-order census of a finite multiplicative set of multivectors,
// used to pin down the finite kernels up to isomorphism.
std::map<int, int> order_census(const std::vector<Multivector>& elems, double tol) {
  std::map<int, int> census;
  for (const auto& e : elems) {
    const Multivector one = Multivector::scalar(e.form(), 1.0);
    Multivector power = e;
    int k = 1;
    while (!approx_equal(power, one, tol) && k <= 16) {
      power = power * e;
      ++k;
    }
    ++census[k];
  }
  return census;
}

std::string census_str(const std::map<int, int>& census) {
  std::ostringstream os;
  for (const auto& [order, count] : census) os << count << "x(order " << order << ") ";
  return os.str();
}

// (0,1) and (1,0): the kernels are finite subsets of {+-1, +-e}.
void finite_signature_rows(CaseStudyReport& report, const QuadraticForm& form,
                           double tol) {
  const Multivector one = Multivector::scalar(form, 1.0);
  const Multivector e = Multivector::basis_vector(form, 0);
  const std::vector<Multivector> grid = {one, -one, e, -e};
  const std::vector<std::string> labels = {"1", "-1", "e", "-e"};

  auto kernel_of = [&](PinVariant v) {
    std::vector<int> in;
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (pin_membership(grid[i], v, tol)) in.push_back(static_cast<int>(i));
    return in;
  };
  auto describe = [&](const std::vector<int>& idx) {
    std::string s = "{";
    for (std::size_t i = 0; i < idx.size(); ++i)
      s += (i ? ", " : "") + labels[static_cast<std::size_t>(idx[i])];
    return s + "}";
  };
  auto elements_of = [&](const std::vector<int>& idx) {
    std::vector<Multivector> out;
    for (int i : idx) out.push_back(grid[static_cast<std::size_t>(i)]);
    return out;
  };

  const std::vector<int> whole = {0, 1, 2, 3}, pm_one = {0, 1};
  const bool e_squares_to_minus_one = form.negative_count() == 1;

  const auto abs_kernel = kernel_of(PinVariant::Abs);
  const auto sch_kernel = kernel_of(PinVariant::Scharlau);
  const auto big_kernel = kernel_of(PinVariant::Big);

  if (e_squares_to_minus_one) {
    // Cl(0,1): the conjugation-norm kernel is all four units and is cyclic
    // of order 4; the reversion-norm kernel is just +-1.
    add_row(report, "abs kernel is {1, -1, e, -e}", abs_kernel == whole,
            describe(abs_kernel));
    const auto census = order_census(elements_of(abs_kernel), tol);
    add_row(report, "abs kernel is cyclic of order 4",
            census == std::map<int, int>{{1, 1}, {2, 1}, {4, 2}},
            census_str(census));
    add_row(report, "scharlau kernel is {1, -1}", sch_kernel == pm_one,
            describe(sch_kernel));
    add_row(report, "big kernel equals abs kernel", big_kernel == abs_kernel,
            describe(big_kernel));
  } else {
    // Cl(1,0): the kernels swap roles and the big one has exponent 2.
    add_row(report, "abs kernel is {1, -1}", abs_kernel == pm_one,
            describe(abs_kernel));
    add_row(report, "scharlau kernel is {1, -1, e, -e}", sch_kernel == whole,
            describe(sch_kernel));
    const auto census = order_census(elements_of(sch_kernel), tol);
    add_row(report, "scharlau kernel is the Klein four group",
            census == std::map<int, int>{{1, 1}, {2, 3}}, census_str(census));
    add_row(report, "big kernel equals scharlau kernel", big_kernel == sch_kernel,
            describe(big_kernel));
  }

  bool spin_ok = true;
  for (const PinVariant v :
       {PinVariant::Abs, PinVariant::Scharlau, PinVariant::Big}) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const bool expected = i < 2;  // +-1 only
      if (spin_membership(grid[i], v, tol) != expected) spin_ok = false;
    }
  }
  add_row(report, "spin kernel is {1, -1} for every variant", spin_ok);
}

// (0,2) and (2,0): membership on the even rotor circle and the odd vector
// circle. `abs_on_odd` says which side the conjugation norm accepts.
void circle_signature_rows(CaseStudyReport& report, const QuadraticForm& form,
                           std::uint64_t seed, double tol) {
  const bool abs_on_odd = form.positive_count() == 0;  // q(v) = -|v|^2 there
  Rng rng(seed);

  MembershipCount abs_even, abs_odd, sch_even, sch_odd, big_even, big_odd;
  MembershipCount spin_even, spin_odd;

  auto sample = [&](double c, double s) {
    const Multivector even = Multivector::scalar(form, c) +
                             Multivector::blade(form, 0b11, s);
    const Multivector odd = Multivector::basis_vector(form, 0) * c +
                            Multivector::basis_vector(form, 1) * s;
    abs_even.tally(pin_membership(even, PinVariant::Abs, tol));
    abs_odd.tally(pin_membership(odd, PinVariant::Abs, tol));
    sch_even.tally(pin_membership(even, PinVariant::Scharlau, tol));
    sch_odd.tally(pin_membership(odd, PinVariant::Scharlau, tol));
    big_even.tally(pin_membership(even, PinVariant::Big, tol));
    big_odd.tally(pin_membership(odd, PinVariant::Big, tol));
    spin_even.tally(spin_membership(even, PinVariant::Big, tol));
    spin_odd.tally(spin_membership(odd, PinVariant::Big, tol));
  };

  for (int k = 0; k < kGridSamples; ++k) {
    const double t = 2.0 * std::numbers::pi * k / kGridSamples;
    sample(std::cos(t), std::sin(t));
  }
  for (int k = 0; k < kRandomSamples; ++k) {
    const Vec u = rng.unit_vector(2);
    sample(u[0], u[1]);
  }

  add_row(report, "abs membership holds on the whole even circle", abs_even.all(),
          abs_even.str());
  add_row(report,
          abs_on_odd ? "abs membership holds on the whole odd circle"
                     : "abs membership fails on the whole odd circle",
          abs_on_odd ? abs_odd.all() : abs_odd.none(), abs_odd.str());
  add_row(report, "scharlau membership holds on the whole even circle",
          sch_even.all(), sch_even.str());
  add_row(report,
          abs_on_odd ? "scharlau membership fails on the whole odd circle"
                     : "scharlau membership holds on the whole odd circle",
          abs_on_odd ? sch_odd.none() : sch_odd.all(), sch_odd.str());
  add_row(report, "big membership holds on both circles",
          big_even.all() && big_odd.all(),
          big_even.str() + "; " + big_odd.str());
  add_row(report, "spin membership holds exactly on the even circle",
          spin_even.all() && spin_odd.none(),
          spin_even.str() + "; " + spin_odd.str());
}

// (3,0) and (0,3): the even part is the unit quaternion 3-sphere; the odd
// part is another 3-sphere (vectors plus the volume blade).
void sphere_signature_rows(CaseStudyReport& report, const QuadraticForm& form,
                           std::uint64_t seed, double tol) {
  const bool abs_on_odd = form.positive_count() == 0;
  Rng rng(seed);

  const std::uint32_t even_blades[4] = {0b000, 0b011, 0b101, 0b110};
  const std::uint32_t odd_blades[4] = {0b001, 0b010, 0b100, 0b111};

  MembershipCount abs_even, abs_odd, sch_even, sch_odd, big_even, big_odd;
  MembershipCount spin_even, spin_odd;

  auto sample = [&](const Vec& coords, bool even) {
    Multivector u(form);
    for (int i = 0; i < 4; ++i)
      u = u + Multivector::blade(form, even ? even_blades[i] : odd_blades[i],
                                 coords[static_cast<std::size_t>(i)]);
    if (even) {
      abs_even.tally(pin_membership(u, PinVariant::Abs, tol));
      sch_even.tally(pin_membership(u, PinVariant::Scharlau, tol));
      big_even.tally(pin_membership(u, PinVariant::Big, tol));
      spin_even.tally(spin_membership(u, PinVariant::Big, tol));
    } else {
      abs_odd.tally(pin_membership(u, PinVariant::Abs, tol));
      sch_odd.tally(pin_membership(u, PinVariant::Scharlau, tol));
      big_odd.tally(pin_membership(u, PinVariant::Big, tol));
      spin_odd.tally(spin_membership(u, PinVariant::Big, tol));
    }
  };

  // Grid circles inside each sphere, then random points on the spheres.
  for (int k = 0; k < kGridSamples; ++k) {
    const double t = 2.0 * std::numbers::pi * k / kGridSamples;
    sample({std::cos(t), std::sin(t), 0.0, 0.0}, true);
    sample({std::cos(t), std::sin(t), 0.0, 0.0}, false);
  }
  for (int k = 0; k < kRandomSamples; ++k) {
    sample(rng.unit_vector(4), true);
    sample(rng.unit_vector(4), false);
  }

  add_row(report, "abs membership holds on the whole even unit sphere",
          abs_even.all(), abs_even.str());
  add_row(report,
          abs_on_odd ? "abs membership holds on the whole odd unit sphere"
                     : "abs membership fails on the whole odd unit sphere",
          abs_on_odd ? abs_odd.all() : abs_odd.none(), abs_odd.str());
  add_row(report, "scharlau membership holds on the whole even unit sphere",
          sch_even.all(), sch_even.str());
  add_row(report,
          abs_on_odd ? "scharlau membership fails on the whole odd unit sphere"
                     : "scharlau membership holds on the whole odd unit sphere",
          abs_on_odd ? sch_odd.none() : sch_odd.all(), sch_odd.str());
  add_row(report, "big membership holds on both unit spheres",
          big_even.all() && big_odd.all(),
          big_even.str() + "; " + big_odd.str());
  add_row(report, "spin membership holds exactly on the even unit sphere",
          spin_even.all() && spin_odd.none(),
          spin_even.str() + "; " + spin_odd.str());
}

}  // namespace

bool pauli_model_check(double tol, std::string* failure) {
  const QuadraticForm form(3, 0);
  auto fail = [&](const std::string& why) {
    if (failure) *failure = why;
    return false;
  };

  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b) {
      const auto [sign, mask] = blade_product(a, b, form);
      const Mat2C lhs = pauli_blade(a) * pauli_blade(b);
      const Mat2C rhs = pauli_blade(mask) * Complex(sign, 0.0);
      if (max_abs_diff(lhs, rhs) > tol) {
        std::ostringstream os;
        os << "blade product mismatch at masks " << a << ", " << b;
        return fail(os.str());
      }
    }

  const Mat2C volume = pauli_blade(0b111);
  if (max_abs_diff(volume, Mat2C::identity() * Complex(0.0, 1.0)) > tol)
    return fail("volume blade is not i times the identity");

  // Even blades must land in the quaternionic block pattern...
  const std::uint32_t even_masks[4] = {0b000, 0b011, 0b101, 0b110};
  RealMatrix coords(4, 4);
  for (int k = 0; k < 4; ++k) {
    const auto q = try_quaternion_from_matrix(pauli_blade(even_masks[k]), tol);
    if (!q) return fail("even blade escapes the quaternionic block pattern");
    coords(0, static_cast<std::size_t>(k)) = q->a;
    coords(1, static_cast<std::size_t>(k)) = q->b;
    coords(2, static_cast<std::size_t>(k)) = q->c;
    coords(3, static_cast<std::size_t>(k)) = q->d;
  }
  // ...and span it.
  if (std::abs(coords.det()) < 0.5)
    return fail("even blade images are linearly dependent");
  return true;
}

CaseStudyReport case_study(int p, int q, std::uint64_t seed, double tol) {
  CaseStudyReport report;
  report.p = p;
  report.q = q;
  const QuadraticForm form(p, q);
  const int n = form.dimension();

  if (n == 1) {
    finite_signature_rows(report, form, tol);
  } else if (n == 2 && (p == 0 || q == 0)) {
    circle_signature_rows(report, form, seed, tol);
  } else if (n == 3 && (p == 0 || q == 0)) {
    sphere_signature_rows(report, form, seed, tol);
    if (p == 3) {
      std::string why;
      const bool pass = pauli_model_check(1e-12, &why);
      add_row(report, "blade arithmetic matches the 2x2 matrix model", pass, why);
    }
  } else {
    throw UnsupportedSignature(
        "case studies cover (0,1), (1,0), (0,2), (2,0), (3,0), (0,3)");
  }

  report.ok = true;
  for (const auto& row : report.rows) report.ok = report.ok && row.pass;
  return report;
}

std::vector<CaseStudyReport> all_case_studies(std::uint64_t seed, double tol) {
  std::vector<CaseStudyReport> out;
  const int sigs[6][2] = {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {3, 0}, {0, 3}};
  for (const auto& sig : sigs) out.push_back(case_study(sig[0], sig[1], seed, tol));
  return out;
}

DimensionReport dimension_invariants(int p, int q) {
  DimensionReport report;
  report.p = p;
  report.q = q;
  const QuadraticForm form(p, q);
  const int n = form.dimension();
  if (n > 6) throw DimensionTooLarge("dimension report covers p + q <= 6");

  const std::size_t dim = std::size_t{1} << n;
  report.blade_count = dim;
  report.even_count = 0;
  report.products_stay_in_basis = true;
  for (std::uint32_t m = 0; m < dim; ++m) {
    if (std::popcount(m) % 2 == 0) ++report.even_count;
    for (std::uint32_t k = 0; k < dim; ++k) {
      const auto [sign, mask] = blade_product(m, k, form);
      if ((sign != 1 && sign != -1) || mask >= dim)
        report.products_stay_in_basis = false;
    }
  }

  const auto center = graded_center_basis(form);
  report.center_is_scalar_line =
      center.size() == 1 &&
      approx_equal(center.front(), Multivector::scalar(form, 1.0), kEqTol);

  report.ok = report.blade_count == dim && report.even_count == dim / 2 &&
              report.products_stay_in_basis && report.center_is_scalar_line;
  return report;
}

}  // namespace magsq
