#ifndef SCHURTAU_COMMON_HPP
#define SCHURTAU_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace schurtau {

using Complex = std::complex<double>;

// Thrown when an enumeration request exceeds the configured hard cap.
struct SizeLimitError : std::length_error {
  using std::length_error::length_error;
};

// Thrown when an evaluation point leaves the region where a series
// representation is valid (e.g. a Miwa shift outside the annulus).
struct AnnulusError : std::domain_error {
  using std::domain_error::domain_error;
};

// Thrown when a determinant or sum leaves the representable range.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace schurtau

#endif
