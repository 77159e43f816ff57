#pragma once

#include <string>
#include <vector>

#include "magsq/linalg.hpp"
#include "magsq/quatmat.hpp"

namespace magsq {

// Named mirror systems in O(3). Roots are unit normals of the mirror
// planes; each set satisfies the root-system axioms for q_{3,0}.
enum class ReflectionGroupName { A1, A1x3, A3, B3, H3 };
ReflectionGroupName parse_reflection_group_name(const std::string& s);
std::string to_string(ReflectionGroupName name);
std::vector<Vec> builtin_roots(ReflectionGroupName name);

// Named finite subgroups of SU(2), given by generating matrices.
enum class BinaryGroupName { Q8, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral };
BinaryGroupName parse_binary_group_name(const std::string& s);
std::string to_string(BinaryGroupName name);
std::vector<Mat2C> builtin_binary_generators(BinaryGroupName name);

// Unit mirror normals of the dihedral reflection group with n coplanar
// mirrors (normals in the x1 x2 plane). For odd n the normals sit at
// angles 2 pi k / n: with that sign choice the lifted complex reflections
// generate a group of order 2n that misses -I. Even n uses pi k / n.
std::vector<Vec> dihedral_mirror_normals(int n);

// Rotation by 2 pi / n about the x3 axis.
RealMatrix rotation_z(int n);
// Generators of the rotation group of the regular n-gon prism: the z
// rotation plus a half turn about x1. Closure has order 2n.
std::vector<RealMatrix> rotational_dihedral_generators(int n);

}  // namespace magsq
