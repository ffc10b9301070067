#pragma once

#include <stdexcept>
#include <string>

namespace wrightmi {

// A gamma (or digamma) argument landed on a non-positive integer where a
// finite value is required.
class pole_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// An input is outside the supported parameter domain.
class domain_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// A value exceeded the double floating range.
class overflow_error : public std::overflow_error {
  public:
    using std::overflow_error::overflow_error;
};

// An iterative computation did not reach its target within its budget
// (oracle series hitting the term cap, quadrature refinement stalling,
// tail bound not established).
class convergence_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace wrightmi
