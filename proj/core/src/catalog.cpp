#include "magsq/catalog.hpp"

#include <cmath>
#include <numbers>

#include "magsq/errors.hpp"

namespace magsq {
namespace {

void push_with_negative(std::vector<Vec>& roots, const Vec& v) {
  roots.push_back(v);
  roots.push_back({-v[0], -v[1], -v[2]});
}

}  // namespace

ReflectionGroupName parse_reflection_group_name(const std::string& s) {
  if (s == "a1") return ReflectionGroupName::A1;
  if (s == "a1x3") return ReflectionGroupName::A1x3;
  if (s == "a3") return ReflectionGroupName::A3;
  if (s == "b3") return ReflectionGroupName::B3;
  if (s == "h3") return ReflectionGroupName::H3;
  throw InvalidInput("unknown reflection group: " + s);
}

std::string to_string(ReflectionGroupName name) {
  switch (name) {
    case ReflectionGroupName::A1: return "a1";
    case ReflectionGroupName::A1x3: return "a1x3";
    case ReflectionGroupName::A3: return "a3";
    case ReflectionGroupName::B3: return "b3";
    default: return "h3";
  }
}

std::vector<Vec> builtin_roots(ReflectionGroupName name) {
  std::vector<Vec> roots;
  const double r = std::sqrt(2.0) / 2.0;
  switch (name) {
    case ReflectionGroupName::A1:
      push_with_negative(roots, {0.0, 0.0, 1.0});
      break;
    case ReflectionGroupName::A1x3:
      push_with_negative(roots, {1.0, 0.0, 0.0});
      push_with_negative(roots, {0.0, 1.0, 0.0});
      push_with_negative(roots, {0.0, 0.0, 1.0});
      break;
    case ReflectionGroupName::A3:
      // 12 roots (+-e_i +- e_j)/sqrt(2); mirror group of the tetrahedron.
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          for (const double s : {1.0, -1.0}) {
            Vec v(3, 0.0);
            v[static_cast<std::size_t>(i)] = r;
            v[static_cast<std::size_t>(j)] = s * r;
            push_with_negative(roots, v);
          }
      break;
    case ReflectionGroupName::B3:
      roots = builtin_roots(ReflectionGroupName::A3);
      for (auto& v : builtin_roots(ReflectionGroupName::A1x3)) roots.push_back(v);
      break;
    case ReflectionGroupName::H3: {
      // 30 roots: the coordinate axes plus the cyclic shifts of
      // (+-1, +-phi, +-1/phi)/2, phi the golden ratio.
      const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
      roots = builtin_roots(ReflectionGroupName::A1x3);
      const double a = 0.5, b = phi / 2.0, c = 1.0 / (2.0 * phi);
      for (const double sa : {1.0, -1.0})
        for (const double sb : {1.0, -1.0})
          for (const double sc : {1.0, -1.0}) {
            roots.push_back({sa * a, sb * b, sc * c});
            roots.push_back({sc * c, sa * a, sb * b});
            roots.push_back({sb * b, sc * c, sa * a});
          }
      break;
    }
  }
  return roots;
}

BinaryGroupName parse_binary_group_name(const std::string& s) {
  if (s == "q8") return BinaryGroupName::Q8;
  if (s == "2t") return BinaryGroupName::BinaryTetrahedral;
  if (s == "2o") return BinaryGroupName::BinaryOctahedral;
  if (s == "2i") return BinaryGroupName::BinaryIcosahedral;
  throw InvalidInput("unknown binary group: " + s);
}

std::string to_string(BinaryGroupName name) {
  switch (name) {
    case BinaryGroupName::Q8: return "q8";
    case BinaryGroupName::BinaryTetrahedral: return "2t";
    case BinaryGroupName::BinaryOctahedral: return "2o";
    default: return "2i";
  }
}

std::vector<Mat2C> builtin_binary_generators(BinaryGroupName name) {
  const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0};
  const Quaternion omega{0.5, 0.5, 0.5, 0.5};  // order 6, generates 2T with i
  const double r = std::sqrt(2.0) / 2.0;
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  switch (name) {
    case BinaryGroupName::Q8:
      return {lambda_embed(i), lambda_embed(j)};
    case BinaryGroupName::BinaryTetrahedral:
      return {lambda_embed(i), lambda_embed(j), lambda_embed(omega)};
    case BinaryGroupName::BinaryOctahedral:
      return {lambda_embed(i), lambda_embed(omega),
              lambda_embed(Quaternion{r, r, 0, 0})};
    default: {
      // Icosian generators: (phi + phi^{-1} i + j)/2 and (1+i+j+k)/2.
      const Quaternion s{phi / 2.0, 1.0 / (2.0 * phi), 0.5, 0.0};
      return {lambda_embed(omega), lambda_embed(s)};
    }
  }
}

std::vector<Vec> dihedral_mirror_normals(int n) {
  if (n < 1) throw InvalidInput("dihedral mirror count must be >= 1");
  std::vector<Vec> normals;
  normals.reserve(static_cast<std::size_t>(n));
  const double step =
      (n % 2 == 1 ? 2.0 : 1.0) * std::numbers::pi / static_cast<double>(n);
  for (int k = 0; k < n; ++k) {
    const double t = step * k;
    normals.push_back({std::cos(t), std::sin(t), 0.0});
  }
  return normals;
}

RealMatrix rotation_z(int n) {
  if (n < 1) throw InvalidInput("rotation order must be >= 1");
  const double t = 2.0 * std::numbers::pi / static_cast<double>(n);
  RealMatrix m = RealMatrix::identity(3);
  m(0, 0) = std::cos(t);
  m(0, 1) = -std::sin(t);
  m(1, 0) = std::sin(t);
  m(1, 1) = std::cos(t);
  return m;
}

std::vector<RealMatrix> rotational_dihedral_generators(int n) {
  RealMatrix flip = RealMatrix::identity(3);
  flip(1, 1) = -1.0;
  flip(2, 2) = -1.0;
  return {rotation_z(n), flip};
}

}  // namespace magsq
