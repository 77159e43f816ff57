#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "magsq/linalg.hpp"
#include "magsq/quadratic.hpp"
#include "magsq/quatmat.hpp"
#include "magsq/tolerances.hpp"

namespace magsq {

namespace detail {
// Canonical cell key: every real component rounded to the kGridTol grid.
// Matrices whose keys agree differ by less than one grid step entrywise.
std::vector<std::int64_t> grid_key(const std::vector<double>& flat, double tol);
std::vector<double> flatten(const RealMatrix& m);
std::vector<double> flatten(const Mat2C& m);
}  // namespace detail

template <class M>
struct FiniteMatrixGroup {
  std::vector<M> generators;
  // Closure elements, sorted by grid key — a canonical order.
  std::vector<M> elements;
  std::size_t order() const { return elements.size(); }
};

using Group3R = FiniteMatrixGroup<RealMatrix>;
using Group2C = FiniteMatrixGroup<Mat2C>;

// Product closure by breadth-first search with grid-key deduplication.
// A finite set of invertible matrices closed under products is a group, so
// inverses come along automatically. Throws NotFiniteWithinCap.
Group3R closure(const std::vector<RealMatrix>& generators,
                std::size_t cap = kClosureCap, double tol = kGridTol);
Group2C closure(const std::vector<Mat2C>& generators,
                std::size_t cap = kClosureCap, double tol = kGridTol);

bool contains(const Group3R& g, const RealMatrix& m, double tol = kGridTol);
bool contains(const Group2C& g, const Mat2C& m, double tol = kGridTol);
bool contains_minus_identity(const Group3R& g, double tol = kGridTol);
bool contains_minus_identity(const Group2C& g, double tol = kGridTol);

// Smallest k >= 1 with g^k = 1; throws OrderNotFound past the cap.
std::size_t element_order(const RealMatrix& g, std::size_t cap = kClosureCap,
                          double tol = kGridTol);
std::size_t element_order(const Mat2C& g, std::size_t cap = kClosureCap,
                          double tol = kGridTol);

// Subgroup of elements with det = +1 (index 1 or 2).
Group3R intersect_special(const Group3R& g, double tol = kGridTol);
Group2C intersect_special(const Group2C& g, double tol = kGridTol);

struct GroupIsoType {
  enum class Tag { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };
  Tag tag = Tag::Cyclic;
  int n = 1;  // parameter for Cyclic / Dihedral
  std::string name() const;
  bool operator==(const GroupIsoType&) const = default;
};

// Classification of a finite rotation group by order and element-order
// census: cyclic, dihedral (Klein four counts as Dihedral(2)), or the
// rotational tetrahedral / octahedral / icosahedral group.
// Throws Unclassifiable when elements are not special orthogonal or no
// census matches.
GroupIsoType identify_so3_type(const Group3R& g, double tol = kEqTol);

// Full preimage under rho_tilde of a finite subgroup of O(3): rotations lift
// by their versors, reflections through reflection_for_mirror_normal, other
// improper elements as i*I2 times the lift of their negative; -I2 is
// adjoined and the closure taken. The result has order 2|H|.
Group2C preimage_under_rho(const Group3R& h, std::size_t cap = kClosureCap,
                           double tol = kGridTol);

template <class M>
struct ReflectionSubgroup {
  FiniteMatrixGroup<M> subgroup;
  bool equals_input = false;
};

// Closure of the reflection elements of g (complex reflections for U(2)
// groups, trace-1 det--1 matrices for O(3) groups).
ReflectionSubgroup<RealMatrix> reflection_subgroup_generated(
    const Group3R& g, std::size_t cap = kClosureCap, double tol = kGridTol);
ReflectionSubgroup<Mat2C> reflection_subgroup_generated(
    const Group2C& g, std::size_t cap = kClosureCap, double tol = kGridTol);

struct WittReport {
  bool ok = false;
  std::size_t element_count = 0;
  RootSystemReport roots;
};

// Views a finite subgroup of SU(2) as unit quaternions in R^4 and checks
// the root-system axioms for q_{4,0}. Throws NotUnitQuaternions when an
// element is not lambda of a unit quaternion.
WittReport witt_root_check(const Group2C& g, double tol = kGridTol);

struct MagicSquareReport {
  std::string group_name;
  std::size_t order_reflection_group = 0;   // |H|
  std::size_t order_rotation_subgroup = 0;  // |H meet SO(3)|
  std::size_t order_lift = 0;               // |preimage of H|
  std::size_t order_lift_special = 0;       // |preimage meet SU(2)|
  bool double_cover_ok = false;             // |lift| = 2 |H|
  bool rotation_index_two = false;          // |H meet SO(3)| = |H| / 2
  bool lift_special_index_two = false;      // |lift meet SU(2)| = |lift| / 2
  std::size_t kernel_size = 0;              // lift elements with rho = identity
  bool kernel_ok = false;                   // exactly 2
  bool lift_reflection_generated = false;
  bool lift_contains_minus_identity = false;
  bool image_matches_rotation_subgroup = false;  // rho(lift meet SU(2)) = H meet SO(3)
  bool ok = false;
};

// Builds H as the closure of the reflections in the given mirror roots and
// verifies the bijection square between H, its rotation subgroup, the
// preimage under rho_tilde, and that preimage's special subgroup.
MagicSquareReport verify_magic_square(const std::vector<Vec>& mirror_roots,
                                      const std::string& name = "",
                                      std::size_t cap = kClosureCap,
                                      double tol = kGridTol);

}  // namespace magsq
