#include "magsq/quadratic.hpp"

#include <cmath>
#include <cstddef>
#include <sstream>

#include "magsq/errors.hpp"

namespace magsq {
namespace {

std::string vec_to_string(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

bool member(const std::vector<Vec>& set, const Vec& v, double tol) {
  for (const Vec& w : set)
    if (max_abs_diff(w, v) <= tol) return true;
  return false;
}

}  // namespace

QuadraticForm::QuadraticForm(int p, int q) : p_(p), q_(q) {
  if (p < 0 || q < 0 || p + q < 1)
    throw UnsupportedSignature("quadratic form needs p, q >= 0 and p + q >= 1");
}

double QuadraticForm::sign_of(int i) const {
  if (i < 0 || i >= dimension()) throw DimensionMismatch("sign_of: index out of range");
  return i < p_ ? 1.0 : -1.0;
}

RealMatrix QuadraticForm::gram() const {
  Vec d(static_cast<std::size_t>(dimension()));
  for (int i = 0; i < dimension(); ++i) d[static_cast<std::size_t>(i)] = sign_of(i);
  return RealMatrix::diagonal(d);
}

void QuadraticForm::check_vector(const Vec& v) const {
  if (v.size() != static_cast<std::size_t>(dimension()))
    throw DimensionMismatch("vector length does not match form dimension");
}

double QuadraticForm::evaluate(const Vec& v) const {
  check_vector(v);
  double s = 0.0;
  for (int i = 0; i < dimension(); ++i) {
    const double x = v[static_cast<std::size_t>(i)];
    s += sign_of(i) * x * x;
  }
  return s;
}

double QuadraticForm::polarization(const Vec& v, const Vec& w) const {
  check_vector(v);
  check_vector(w);
  double s = 0.0;
  for (int i = 0; i < dimension(); ++i)
    s += 2.0 * sign_of(i) * v[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
  return s;
}

Vec QuadraticForm::reflect(const Vec& v, const Vec& w) const {
  check_vector(v);
  check_vector(w);
  const double qv = evaluate(v);
  if (std::abs(qv) <= kAnisotropyTol)
    throw IsotropicMirror("reflect: mirror vector is isotropic");
  const double f = polarization(v, w) / qv;
  Vec out = w;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= f * v[i];
  return out;
}

RealMatrix QuadraticForm::reflection_matrix(const Vec& v) const {
  const auto n = static_cast<std::size_t>(dimension());
  RealMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Vec e(n, 0.0);
    e[k] = 1.0;
    const Vec col = reflect(v, e);
    for (std::size_t i = 0; i < n; ++i) m(i, k) = col[i];
  }
  return m;
}

bool QuadraticForm::is_orthogonal(const RealMatrix& m, double tol) const {
  const auto n = static_cast<std::size_t>(dimension());
  if (m.rows() != n || m.cols() != n) return false;
  const RealMatrix g = gram();
  return max_abs_diff(m.transposed() * g * m, g) <= tol;
}

RootSystemReport check_root_system(const std::vector<Vec>& roots,
                                   const QuadraticForm& form, double tol) {
  RootSystemReport report;
  if (roots.empty()) {
    report.failed_axiom = "unit-norm";
    report.witness = "empty root set";
    return report;
  }

  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double qv = form.evaluate(roots[i]);
    if (std::abs(qv - 1.0) > tol) {
      report.failed_axiom = "unit-norm";
      std::ostringstream os;
      os << "root " << i << " " << vec_to_string(roots[i]) << " has q(v) = " << qv;
      report.witness = os.str();
      return report;
    }
  }

  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Vec& v = roots[i];
    std::size_t jmax = 0;
    for (std::size_t k = 1; k < v.size(); ++k)
      if (std::abs(v[k]) > std::abs(v[jmax])) jmax = k;

    if (!member(roots, scaled(v, -1.0), tol)) {
      report.failed_axiom = "scalar-multiples";
      std::ostringstream os;
      os << "negative of root " << i << " " << vec_to_string(v) << " is missing";
      report.witness = os.str();
      return report;
    }

    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (i == j) continue;
      const Vec& w = roots[j];
      const double c = w[jmax] / v[jmax];
      if (max_abs_diff(w, scaled(v, c)) > tol) continue;  // not colinear
      if (std::abs(c - 1.0) > tol && std::abs(c + 1.0) > tol) {
        report.failed_axiom = "scalar-multiples";
        std::ostringstream os;
        os << "roots " << i << " and " << j << " are parallel with ratio " << c;
        report.witness = os.str();
        return report;
      }
    }
  }

  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j < roots.size(); ++j) {
      const Vec image = form.reflect(roots[i], roots[j]);
      if (!member(roots, image, tol)) {
        report.failed_axiom = "reflection-closure";
        std::ostringstream os;
        os << "reflection in root " << i << " sends root " << j << " to "
           << vec_to_string(image) << ", which is not in the set";
        report.witness = os.str();
        return report;
      }
    }
  }

  report.ok = true;
  return report;
}

}  // namespace magsq
