#ifndef PH_ERRORS_HPP
#define PH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ph {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown by divide_by_sin when the dividend is not an exact trig-polynomial
// multiple of sin(m x).  Divisibility is a correctness signal in the kernel
// recursion, so we fail fast instead of returning a partial quotient.
class NotDivisibleError : public Error {
 public:
  explicit NotDivisibleError(const std::string& msg) : Error(msg) {}
};

// A sample point falls on (or too close to) a zero of sin(kappa x).
class SingularSampleError : public Error {
 public:
  explicit SingularSampleError(const std::string& msg) : Error(msg) {}
};

// Input exceeds a cost guard (e.g. brute-force enumeration bound).
class TooLargeError : public Error {
 public:
  explicit TooLargeError(const std::string& msg) : Error(msg) {}
};

// The quadrature rule cannot integrate the integrand's maximum frequency
// exactly with the requested node count.
class InsufficientNodesError : public Error {
 public:
  explicit InsufficientNodesError(const std::string& msg) : Error(msg) {}
};

// The kernel order exceeds the certified double-precision envelope: the
// kernel amplitude grows like C(2s,s) while the integral is a small integer,
// so cancellation eats the residual budget.  The exact series path
// (tail extraction) has no such envelope.
class CancellationRiskError : public Error {
 public:
  explicit CancellationRiskError(const std::string& msg) : Error(msg) {}
};

// Tail extraction requires order s >= 3.
class OrderTooSmallError : public Error {
 public:
  explicit OrderTooSmallError(const std::string& msg) : Error(msg) {}
};

// Vanishing-moment offsets must be even (odd offsets break the parity needed
// for cosine orthogonality on [0, pi/2] and the integrals do not vanish).
class OddOffsetError : public Error {
 public:
  explicit OddOffsetError(const std::string& msg) : Error(msg) {}
};

}  // namespace ph

#endif  // PH_ERRORS_HPP
