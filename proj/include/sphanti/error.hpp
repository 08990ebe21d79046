#pragma once

#include <stdexcept>
#include <string>

namespace sphanti {

/// Input that does not follow the datum or spec-string grammar.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation needs a datum field that is absent (spherical roots,
/// weights of color equations, a presentation, ...).
class InsufficientData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The datum contradicts itself, e.g. two moving roots assign different
/// types to one color.
class DatumInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sphanti
