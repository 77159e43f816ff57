#pragma once

#include <stdexcept>
#include <string>

namespace magsq {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct FormMismatch : Error { using Error::Error; };
struct UnsupportedSignature : Error { using Error::Error; };
struct DimensionTooLarge : Error { using Error::Error; };

// Mirror vector with |q(v)| below the anisotropy threshold.
struct IsotropicMirror : Error { using Error::Error; };
struct Singular : Error { using Error::Error; };
struct NotHomogeneous : Error { using Error::Error; };
struct NotInCliffordGroup : Error { using Error::Error; };

struct NotSkewHermitianTraceless : Error { using Error::Error; };
struct NotUnimodularUnitary : Error { using Error::Error; };
struct NotUnitVector : Error { using Error::Error; };
struct NotUnitQuaternions : Error { using Error::Error; };

struct NotFiniteWithinCap : Error { using Error::Error; };
struct OrderNotFound : Error { using Error::Error; };
struct Unclassifiable : Error { using Error::Error; };

struct InvalidInput : Error { using Error::Error; };

}  // namespace magsq
