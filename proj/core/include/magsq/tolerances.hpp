#pragma once

#include <cstddef>
#include <cstdint>

namespace magsq {

// Coefficient / entrywise equality.
inline constexpr double kEqTol = 1e-9;
// Multivector coefficients below this are dropped after arithmetic.
inline constexpr double kPruneTol = 1e-12;
// Grid used to match group elements and root vectors (irrational
// coordinates like sqrt(2)/2 sit three orders above accumulated error).
inline constexpr double kGridTol = 1e-6;
// |q(v)| at or below this counts as isotropic (unusable as a mirror).
inline constexpr double kAnisotropyTol = 1e-9;

inline constexpr std::size_t kClosureCap = 10000;

// Fixed seed for the membership-sampling case studies.
inline constexpr std::uint64_t kCaseStudySeed = 0xC11FF0;

}  // namespace magsq
