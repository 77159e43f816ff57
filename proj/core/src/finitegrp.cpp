#include "magsq/finitegrp.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "magsq/errors.hpp"

namespace magsq {

namespace detail {

std::vector<std::int64_t> grid_key(const std::vector<double>& flat, double tol) {
  std::vector<std::int64_t> key(flat.size());
  for (std::size_t i = 0; i < flat.size(); ++i) {
    const auto cell = std::llround(flat[i] / tol);
    key[i] = (cell == 0) ? 0 : cell;  // folds -0 into 0
  }
  return key;
}

std::vector<double> flatten(const RealMatrix& m) { return m.data(); }

std::vector<double> flatten(const Mat2C& m) {
  std::vector<double> out;
  out.reserve(8);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      out.push_back(m(i, j).real());
      out.push_back(m(i, j).imag());
    }
  return out;
}

namespace {

double max_abs_flat_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

template <class M>
M identity_like(const M& sample) {
  if constexpr (std::is_same_v<M, Mat2C>)
    return Mat2C::identity();
  else
    return RealMatrix::identity(sample.rows() == 0 ? 3 : sample.rows());
}

template <class M>
FiniteMatrixGroup<M> closure_impl(const std::vector<M>& generators,
                                  std::size_t cap, double tol) {
  if constexpr (std::is_same_v<M, RealMatrix>) {
    for (const auto& g : generators)
      if (g.rows() != 3 || g.cols() != 3)
        throw DimensionMismatch("closure over O(3) expects 3x3 generators");
  }

  FiniteMatrixGroup<M> group;
  group.generators = generators;
  const M id = generators.empty() ? identity_like(M{})
                                  : identity_like(generators.front());

  std::map<std::vector<std::int64_t>, std::size_t> index;
  std::vector<M> elements;
  std::deque<std::size_t> work;

  auto insert = [&](const M& m) {
    const auto flat = flatten(m);
    const auto key = grid_key(flat, tol);
    const auto it = index.find(key);
    if (it != index.end()) {
      // Same cell: confirm the match instead of trusting the hash alone.
      if (max_abs_flat_diff(flat, flatten(elements[it->second])) >= tol)
        throw Error("closure: grid cell collision between distinct elements");
      return;
    }
    if (elements.size() >= cap)
      throw NotFiniteWithinCap("closure exceeded the element cap");
    index.emplace(key, elements.size());
    work.push_back(elements.size());
    elements.push_back(m);
  };

  insert(id);
  for (const auto& g : generators) insert(g);
  while (!work.empty()) {
    const std::size_t i = work.front();
    work.pop_front();
    for (const auto& g : generators) insert(elements[i] * g);
  }

  // Canonical order: sort by grid key.
  std::vector<std::size_t> perm(elements.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return grid_key(flatten(elements[a]), tol) < grid_key(flatten(elements[b]), tol);
  });
  group.elements.reserve(elements.size());
  for (const std::size_t i : perm) group.elements.push_back(elements[i]);
  return group;
}

template <class M>
bool contains_impl(const FiniteMatrixGroup<M>& g, const M& m, double tol) {
  const auto flat = flatten(m);
  for (const auto& e : g.elements)
    if (max_abs_flat_diff(flat, flatten(e)) < tol) return true;
  return false;
}

template <class M>
std::size_t element_order_impl(const M& g, std::size_t cap, double tol) {
  const M id = identity_like(g);
  M power = g;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (max_abs_flat_diff(flatten(power), flatten(id)) < tol) return k;
    power = power * g;
  }
  throw OrderNotFound("element order exceeds the cap");
}

}  // namespace
}  // namespace detail

Group3R closure(const std::vector<RealMatrix>& generators, std::size_t cap,
                double tol) {
  return detail::closure_impl(generators, cap, tol);
}

Group2C closure(const std::vector<Mat2C>& generators, std::size_t cap, double tol) {
  return detail::closure_impl(generators, cap, tol);
}

bool contains(const Group3R& g, const RealMatrix& m, double tol) {
  return detail::contains_impl(g, m, tol);
}

bool contains(const Group2C& g, const Mat2C& m, double tol) {
  return detail::contains_impl(g, m, tol);
}

bool contains_minus_identity(const Group3R& g, double tol) {
  return contains(g, -RealMatrix::identity(3), tol);
}

bool contains_minus_identity(const Group2C& g, double tol) {
  return contains(g, -Mat2C::identity(), tol);
}

std::size_t element_order(const RealMatrix& g, std::size_t cap, double tol) {
  return detail::element_order_impl(g, cap, tol);
}

std::size_t element_order(const Mat2C& g, std::size_t cap, double tol) {
  return detail::element_order_impl(g, cap, tol);
}

Group3R intersect_special(const Group3R& g, double tol) {
  Group3R out;
  for (const auto& e : g.elements)
    if (std::abs(e.det() - 1.0) <= tol) out.elements.push_back(e);
  out.generators = out.elements;
  return out;
}

Group2C intersect_special(const Group2C& g, double tol) {
  Group2C out;
  for (const auto& e : g.elements)
    if (std::abs(e.det() - 1.0) <= tol) out.elements.push_back(e);
  out.generators = out.elements;
  return out;
}

std::string GroupIsoType::name() const {
  std::ostringstream os;
  switch (tag) {
    case Tag::Cyclic: os << "Cyclic(" << n << ")"; break;
    case Tag::Dihedral: os << "Dihedral(" << n << ")"; break;
    case Tag::Tetrahedral: os << "Tetrahedral"; break;
    case Tag::Octahedral: os << "Octahedral"; break;
    case Tag::Icosahedral: os << "Icosahedral"; break;
  }
  return os.str();
}

GroupIsoType identify_so3_type(const Group3R& g, double tol) {
  const QuadraticForm euclid(3, 0);
  for (const auto& e : g.elements)
    if (!euclid.is_orthogonal(e, tol) || std::abs(e.det() - 1.0) > tol)
      throw Unclassifiable("group has an element outside SO(3)");

  const std::size_t n = g.order();
  if (n == 0) throw Unclassifiable("empty group");

  std::map<std::size_t, std::size_t> census;  // element order -> count
  std::size_t max_order = 1;
  try {
    for (const auto& e : g.elements) {
      const std::size_t k = element_order(e, n + 1);
      ++census[k];
      max_order = std::max(max_order, k);
    }
  } catch (const OrderNotFound&) {
    throw Unclassifiable("an element's order exceeds the group order; input is not a group");
  }

  using Tag = GroupIsoType::Tag;
  const std::map<std::size_t, std::size_t> tetra{{1, 1}, {2, 3}, {3, 8}};
  const std::map<std::size_t, std::size_t> octa{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
  const std::map<std::size_t, std::size_t> icosa{{1, 1}, {2, 15}, {3, 20}, {5, 24}};
  if (n == 12 && census == tetra) return {Tag::Tetrahedral, 0};
  if (n == 24 && census == octa) return {Tag::Octahedral, 0};
  if (n == 60 && census == icosa) return {Tag::Icosahedral, 0};

  if (max_order == n) return {Tag::Cyclic, static_cast<int>(n)};

  if (n % 2 == 0) {
    const std::size_t half = n / 2;
    const std::size_t involutions = census.count(2) ? census.at(2) : 0;
    const std::size_t expected = (half % 2 == 0) ? half + 1 : half;
    // Klein four realized in SO(3) counts as Dihedral(2) by convention.
    if (half >= 2 && max_order == half && involutions == expected)
      return {Tag::Dihedral, static_cast<int>(half)};
  }

  throw Unclassifiable("order census matches no rotation group type");
}

Group2C preimage_under_rho(const Group3R& h, std::size_t cap, double tol) {
  std::vector<Mat2C> lifts;
  lifts.reserve(h.order() + 1);
  const Mat2C i_times_identity(Complex(0.0, 1.0), 0.0, 0.0, Complex(0.0, 1.0));
  for (const auto& e : h.elements) {
    if (std::abs(e.det() - 1.0) <= tol) {
      const Quaternion q = rotation_quaternion(e);
      lifts.push_back(lambda_embed(q));
    } else if (is_real_reflection(e, tol)) {
      lifts.push_back(reflection_for_mirror_normal(reflection_mirror_normal(e, tol)));
    } else {
      // Improper but not a mirror: -e rotates, and i*I2 maps to -I3.
      const Quaternion q = rotation_quaternion(-e);
      lifts.push_back(i_times_identity * lambda_embed(q));
    }
  }
  lifts.push_back(-Mat2C::identity());
  return closure(lifts, cap, tol);
}

ReflectionSubgroup<RealMatrix> reflection_subgroup_generated(const Group3R& g,
                                                             std::size_t cap,
                                                             double tol) {
  std::vector<RealMatrix> refl;
  for (const auto& e : g.elements)
    if (is_real_reflection(e, tol)) refl.push_back(e);
  ReflectionSubgroup<RealMatrix> out;
  if (refl.empty()) {
    out.subgroup.elements.push_back(RealMatrix::identity(3));
  } else {
    out.subgroup = closure(refl, cap, tol);
  }
  out.equals_input = out.subgroup.order() == g.order();
  return out;
}

ReflectionSubgroup<Mat2C> reflection_subgroup_generated(const Group2C& g,
                                                        std::size_t cap,
                                                        double tol) {
  std::vector<Mat2C> refl;
  for (const auto& e : g.elements)
    if (is_complex_reflection(e, tol)) refl.push_back(e);
  ReflectionSubgroup<Mat2C> out;
  if (refl.empty()) {
    out.subgroup.elements.push_back(Mat2C::identity());
  } else {
    out.subgroup = closure(refl, cap, tol);
  }
  out.equals_input = out.subgroup.order() == g.order();
  return out;
}

WittReport witt_root_check(const Group2C& g, double tol) {
  WittReport report;
  report.element_count = g.order();
  std::vector<Vec> roots;
  roots.reserve(g.order());
  for (const auto& e : g.elements) {
    const auto q = try_quaternion_from_matrix(e, tol);
    if (!q || std::abs(q->norm() - 1.0) > tol)
      throw NotUnitQuaternions("group element is not lambda of a unit quaternion");
    roots.push_back({q->a, q->b, q->c, q->d});
  }
  report.roots = check_root_system(roots, QuadraticForm(4, 0), tol);
  report.ok = report.roots.ok;
  return report;
}

MagicSquareReport verify_magic_square(const std::vector<Vec>& mirror_roots,
                                      const std::string& name, std::size_t cap,
                                      double tol) {
  const QuadraticForm euclid(3, 0);
  std::vector<RealMatrix> mirrors;
  mirrors.reserve(mirror_roots.size());
  for (const Vec& v : mirror_roots) mirrors.push_back(euclid.reflection_matrix(v));

  MagicSquareReport report;
  report.group_name = name;

  const Group3R h = closure(mirrors, cap, tol);
  const Group3R h_rot = intersect_special(h, tol);
  const Group2C lift = preimage_under_rho(h, cap, tol);
  const Group2C lift_special = intersect_special(lift, tol);

  report.order_reflection_group = h.order();
  report.order_rotation_subgroup = h_rot.order();
  report.order_lift = lift.order();
  report.order_lift_special = lift_special.order();

  report.double_cover_ok = lift.order() == 2 * h.order();
  report.rotation_index_two = 2 * h_rot.order() == h.order();
  report.lift_special_index_two = 2 * lift_special.order() == lift.order();

  const RealMatrix id3 = RealMatrix::identity(3);
  for (const auto& e : lift.elements)
    if (max_abs_diff(rho_tilde(e), id3) < tol) ++report.kernel_size;
  report.kernel_ok = report.kernel_size == 2;

  report.lift_reflection_generated =
      reflection_subgroup_generated(lift, cap, tol).equals_input;
  report.lift_contains_minus_identity = contains_minus_identity(lift, tol);

  // rho of the special lift should cover exactly the rotation subgroup.
  std::vector<std::vector<std::int64_t>> image_keys, rot_keys;
  for (const auto& e : lift_special.elements)
    image_keys.push_back(detail::grid_key(detail::flatten(rho_tilde(e)), tol));
  for (const auto& e : h_rot.elements)
    rot_keys.push_back(detail::grid_key(detail::flatten(e), tol));
  std::sort(image_keys.begin(), image_keys.end());
  image_keys.erase(std::unique(image_keys.begin(), image_keys.end()),
                   image_keys.end());
  std::sort(rot_keys.begin(), rot_keys.end());
  report.image_matches_rotation_subgroup = image_keys == rot_keys;

  report.ok = report.double_cover_ok && report.rotation_index_two &&
              report.lift_special_index_two && report.kernel_ok &&
              report.lift_reflection_generated &&
              report.lift_contains_minus_identity &&
              report.image_matches_rotation_subgroup;
  return report;
}

}  // namespace magsq
