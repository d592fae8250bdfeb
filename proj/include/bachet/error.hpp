#pragma once

#include <stdexcept>
#include <string>

namespace bachet {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad caller input: composite modulus, a = 0, non-residue twist factor, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Field elements (or points) from different moduli (or curves) were combined.
class ModulusMismatch : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// The requested prime is above the limit of an O(p)-memory path.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (Hasse violation, N·P != o, ...).
/// Seeing one of these means the arithmetic is wrong, not the input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace bachet
