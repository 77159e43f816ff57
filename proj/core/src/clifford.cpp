#include "magsq/clifford.hpp"

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <cstddef>

#include "magsq/errors.hpp"

namespace magsq {
namespace {

constexpr int kMaxDim = 12;       // hard cap on p + q
constexpr int kDenseSolveDim = 6; // cap for 2^n x 2^n inversion / center solves

int grade_of(std::uint32_t mask) { return std::popcount(mask); }

int involution_sign(std::uint32_t mask, int which) {
  const int k = grade_of(mask);
  switch (which) {
    case 0: return (k % 2 == 0) ? 1 : -1;                  // grade involution
    case 1: return ((k * (k - 1) / 2) % 2 == 0) ? 1 : -1;  // reversion
    default: return ((k * (k + 1) / 2) % 2 == 0) ? 1 : -1; // conjugation
  }
}

}  // namespace

std::pair<int, std::uint32_t> blade_product(std::uint32_t a, std::uint32_t b,
                                            const QuadraticForm& form) {
  // Count transpositions needed to merge the two ascending index lists:
  // each generator of b walks left past the generators of a above it.
  int swaps = 0;
  for (std::uint32_t t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  int sign = (swaps % 2 == 0) ? 1 : -1;
  // Shared generators contract to their metric sign e_i^2 = q(e_i).
  for (std::uint32_t shared = a & b; shared != 0; shared &= shared - 1) {
    const int idx = std::countr_zero(shared);
    if (form.sign_of(idx) < 0.0) sign = -sign;
  }
  return {sign, a ^ b};
}

Multivector::Multivector(const QuadraticForm& form) : form_(form) {
  if (form.dimension() > kMaxDim)
    throw DimensionTooLarge("Cl(p,q) supported only for p + q <= 12");
}

void Multivector::set(std::uint32_t mask, double value) {
  if (std::abs(value) < kPruneTol)
    terms_.erase(mask);
  else
    terms_[mask] = value;
}

Multivector Multivector::scalar(const QuadraticForm& form, double value) {
  Multivector x(form);
  x.set(0, value);
  return x;
}

Multivector Multivector::blade(const QuadraticForm& form, std::uint32_t mask,
                               double coeff) {
  if (mask >= (std::uint32_t{1} << form.dimension()))
    throw DimensionMismatch("blade mask references generators beyond the form dimension");
  Multivector x(form);
  x.set(mask, coeff);
  return x;
}

Multivector Multivector::basis_vector(const QuadraticForm& form, int i) {
  if (i < 0 || i >= form.dimension())
    throw DimensionMismatch("basis_vector: index out of range");
  return blade(form, std::uint32_t{1} << i);
}

Multivector Multivector::from_vector(const QuadraticForm& form, const Vec& v) {
  if (v.size() != static_cast<std::size_t>(form.dimension()))
    throw DimensionMismatch("from_vector: length does not match form dimension");
  Multivector x(form);
  for (std::size_t i = 0; i < v.size(); ++i)
    x.set(std::uint32_t{1} << i, v[i]);
  return x;
}

double Multivector::coeff(std::uint32_t mask) const {
  const auto it = terms_.find(mask);
  return it == terms_.end() ? 0.0 : it->second;
}

Vec Multivector::vector_part() const {
  Vec v(static_cast<std::size_t>(form_.dimension()), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(std::uint32_t{1} << i);
  return v;
}

Multivector Multivector::grade_part(int k) const {
  Multivector out(form_);
  for (const auto& [mask, c] : terms_)
    if (grade_of(mask) == k) out.set(mask, c);
  return out;
}

double Multivector::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [mask, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

double Multivector::max_abs_coeff_off_grade(int k) const {
  double m = 0.0;
  for (const auto& [mask, c] : terms_)
    if (grade_of(mask) != k) m = std::max(m, std::abs(c));
  return m;
}

bool Multivector::is_zero(double tol) const { return max_abs_coeff() <= tol; }

std::optional<Parity> Multivector::homogeneous_parity() const {
  if (terms_.empty()) return Parity::Even;
  bool has_even = false, has_odd = false;
  for (const auto& [mask, c] : terms_)
    (grade_of(mask) % 2 == 0 ? has_even : has_odd) = true;
  if (has_even && has_odd) return std::nullopt;
  return has_odd ? Parity::Odd : Parity::Even;
}

Multivector Multivector::operator+(const Multivector& other) const {
  if (!(form_ == other.form_)) throw FormMismatch("sum over different forms");
  Multivector out = *this;
  for (const auto& [mask, c] : other.terms_) out.set(mask, out.coeff(mask) + c);
  return out;
}

Multivector Multivector::operator-(const Multivector& other) const {
  return *this + (other * -1.0);
}

Multivector Multivector::operator-() const { return *this * -1.0; }

Multivector Multivector::operator*(double s) const {
  Multivector out(form_);
  for (const auto& [mask, c] : terms_) out.set(mask, c * s);
  return out;
}

Multivector Multivector::operator*(const Multivector& other) const {
  if (!(form_ == other.form_)) throw FormMismatch("product over different forms");
  std::map<std::uint32_t, double> acc;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) {
      const auto [sign, mask] = blade_product(ma, mb, form_);
      acc[mask] += sign * ca * cb;
    }
  Multivector out(form_);
  for (const auto& [mask, c] : acc) out.set(mask, c);
  return out;
}

Multivector Multivector::grade_involution() const {
  Multivector out(form_);
  for (const auto& [mask, c] : terms_) out.set(mask, involution_sign(mask, 0) * c);
  return out;
}

Multivector Multivector::reversion() const {
  Multivector out(form_);
  for (const auto& [mask, c] : terms_) out.set(mask, involution_sign(mask, 1) * c);
  return out;
}

Multivector Multivector::conjugation() const {
  Multivector out(form_);
  for (const auto& [mask, c] : terms_) out.set(mask, involution_sign(mask, 2) * c);
  return out;
}

bool approx_equal(const Multivector& a, const Multivector& b, double tol) {
  return (a.form() == b.form()) && max_abs_diff(a, b) <= tol;
}

double max_abs_diff(const Multivector& a, const Multivector& b) {
  if (!(a.form() == b.form())) throw FormMismatch("comparison over different forms");
  double m = 0.0;
  for (const auto& [mask, c] : a.terms()) m = std::max(m, std::abs(c - b.coeff(mask)));
  for (const auto& [mask, c] : b.terms()) m = std::max(m, std::abs(c - a.coeff(mask)));
  return m;
}

Multivector conjugation_norm(const Multivector& x) { return x.conjugation() * x; }

Multivector reversion_norm(const Multivector& x) { return x.reversion() * x; }

double scalar_norm_value(const Multivector& norm, double tol) {
  if (norm.max_abs_coeff_off_grade(0) > tol)
    throw InvalidInput("norm value has a non-scalar residue above tolerance");
  return norm.scalar_part();
}

namespace {

// Matrix of left multiplication by x in the blade basis (column j = x * blade_j).
Eigen::MatrixXd left_mul_operator(const Multivector& x) {
  const int n = x.form().dimension();
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                            static_cast<Eigen::Index>(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    for (const auto& [mask, c] : x.terms()) {
      const auto [sign, out] =
          blade_product(mask, static_cast<std::uint32_t>(j), x.form());
      L(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(j)) += sign * c;
    }
  }
  return L;
}

std::optional<Multivector> try_inverse(const Multivector& x, double tol) {
  const Multivector one = Multivector::scalar(x.form(), 1.0);
  // Versor fast path: conj(x) * x scalar and nonzero.
  const Multivector n = conjugation_norm(x);
  if (n.max_abs_coeff_off_grade(0) <= tol) {
    const double s = n.scalar_part();
    if (std::abs(s) <= tol) return std::nullopt;
    Multivector candidate = x.conjugation() * (1.0 / s);
    if (max_abs_diff(x * candidate, one) <= tol) return candidate;
  }
  if (x.form().dimension() > kDenseSolveDim)
    throw DimensionTooLarge("dense inversion supported only for p + q <= 6");
  const Eigen::MatrixXd L = left_mul_operator(x);
  const std::size_t dim = std::size_t{1} << x.form().dimension();
  Eigen::VectorXd e0 = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
  e0(0) = 1.0;
  const Eigen::VectorXd y = L.fullPivLu().solve(e0);
  if ((L * y - e0).cwiseAbs().maxCoeff() > tol) return std::nullopt;
  Multivector out(x.form());
  for (std::size_t m = 0; m < dim; ++m)
    out = out + Multivector::blade(x.form(), static_cast<std::uint32_t>(m),
                                   y(static_cast<Eigen::Index>(m)));
  return out;
}

}  // namespace

bool is_invertible(const Multivector& x, double tol) {
  return try_inverse(x, tol).has_value();
}

Multivector inverse(const Multivector& x, double tol) {
  auto inv = try_inverse(x, tol);
  if (!inv) throw Singular("element is not invertible");
  return *inv;
}

Multivector twisted_adjoint(const Multivector& u, const Multivector& x, double tol) {
  const auto pu = u.homogeneous_parity();
  const auto px = x.homogeneous_parity();
  if (!pu || !px)
    throw NotHomogeneous("twisted adjoint requires homogeneous arguments");
  Multivector out = u * x * inverse(u, tol);
  if (*pu == Parity::Odd && *px == Parity::Odd) out = -out;
  return out;
}

namespace {

// Twisted adjoint images of all basis vectors, or nullopt when u is not in
// the Clifford group (non-homogeneous, singular, or grade leak above tol).
std::optional<RealMatrix> try_orthogonal_action(const Multivector& u, double tol) {
  const auto pu = u.homogeneous_parity();
  if (!pu) return std::nullopt;
  const auto uinv = try_inverse(u, tol);
  if (!uinv) return std::nullopt;
  const int sign = (*pu == Parity::Odd) ? -1 : 1;
  const auto n = static_cast<std::size_t>(u.form().dimension());
  RealMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Multivector image =
        u * Multivector::basis_vector(u.form(), static_cast<int>(k)) * *uinv;
    if (sign < 0) image = -image;  // basis vectors are odd
    if (image.max_abs_coeff_off_grade(1) > tol) return std::nullopt;
    const Vec col = image.vector_part();
    for (std::size_t i = 0; i < n; ++i) m(i, k) = col[i];
  }
  return m;
}

}  // namespace

bool in_clifford_group(const Multivector& u, double tol) {
  return try_orthogonal_action(u, tol).has_value();
}

RealMatrix orthogonal_action(const Multivector& u, double tol) {
  auto m = try_orthogonal_action(u, tol);
  if (!m)
    throw NotInCliffordGroup(
        "element is not in the Clifford group (homogeneous, invertible, grade-1 preserving)");
  return *m;
}

bool pin_membership(const Multivector& u, PinVariant variant, double tol) {
  if (!in_clifford_group(u, tol)) return false;
  const Multivector norm =
      (variant == PinVariant::Scharlau) ? reversion_norm(u) : conjugation_norm(u);
  if (norm.max_abs_coeff_off_grade(0) > tol) return false;
  const double s = norm.scalar_part();
  if (variant == PinVariant::Big) return std::abs(s * s - 1.0) <= tol;
  return std::abs(s - 1.0) <= tol;
}

bool spin_membership(const Multivector& u, PinVariant variant, double tol) {
  return u.homogeneous_parity() == Parity::Even && pin_membership(u, variant, tol);
}

std::vector<Multivector> graded_center_basis(const QuadraticForm& form) {
  const int n = form.dimension();
  if (n > kDenseSolveDim)
    throw DimensionTooLarge("graded center solve supported only for p + q <= 6");
  const std::size_t dim = std::size_t{1} << n;

  std::vector<Multivector> basis;
  for (int parity = 0; parity <= 1; ++parity) {
    std::vector<std::uint32_t> blades;
    for (std::size_t m = 0; m < dim; ++m)
      if (grade_of(static_cast<std::uint32_t>(m)) % 2 == parity)
        blades.push_back(static_cast<std::uint32_t>(m));

    // Constraint rows: coefficients of B e_k - (-1)^parity e_k B, stacked
    // over all k and all result blades.
    const auto cols = static_cast<Eigen::Index>(blades.size());
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(
        static_cast<Eigen::Index>(dim) * n, cols);
    for (int k = 0; k < n; ++k) {
      const auto ek = std::uint32_t{1} << k;
      for (Eigen::Index j = 0; j < cols; ++j) {
        const std::uint32_t b = blades[static_cast<std::size_t>(j)];
        const auto [s1, m1] = blade_product(b, ek, form);
        const auto [s2, m2] = blade_product(ek, b, form);
        const int twist = (parity == 0) ? 1 : -1;
        A(static_cast<Eigen::Index>(dim) * k + m1, j) += s1;
        A(static_cast<Eigen::Index>(dim) * k + m2, j) -= twist * s2;
      }
    }

    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    lu.setThreshold(1e-9);
    const Eigen::MatrixXd kernel = lu.kernel();
    // FullPivLU::kernel() returns a single zero column for trivial kernels.
    for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
      if (kernel.col(c).cwiseAbs().maxCoeff() <= 1e-9) continue;
      // Normalize so the largest-|.| coefficient is 1 for stable output.
      Eigen::Index imax = 0;
      kernel.col(c).cwiseAbs().maxCoeff(&imax);
      const double scale = 1.0 / kernel(imax, c);
      Multivector u(form);
      for (Eigen::Index j = 0; j < cols; ++j)
        u = u + Multivector::blade(form, blades[static_cast<std::size_t>(j)],
                                   kernel(j, c) * scale);
      basis.push_back(u);
    }
  }
  return basis;
}

}  // namespace magsq
