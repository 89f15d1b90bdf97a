#ifndef PH_DYADIC_HPP
#define PH_DYADIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ph {

using BigInt = boost::multiprecision::cpp_int;

// Exact dyadic rational: numerator / 2^exponent.
//
// Product-to-sum expansion of trigonometric products introduces only exact
// halves, so powers of two are the only denominators that can ever appear.
// Canonical form: exponent == 0, or numerator odd and nonzero.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(const BigInt& numerator) : num_(numerator) {}  // NOLINT: integers convert implicitly
  Dyadic(std::int64_t numerator) : num_(numerator) {}   // NOLINT
  Dyadic(BigInt numerator, unsigned exponent);

  const BigInt& numerator() const { return num_; }
  unsigned exponent() const { return exp_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return exp_ == 0; }
  bool is_negative() const { return num_ < 0; }

  // Requires is_integer().
  const BigInt& as_integer() const;

  double to_double() const;

  // True when |value| >= 2^53, i.e. the coefficient no longer fits the
  // double mantissa and floating evaluation may silently lose precision.
  bool exceeds_double_mantissa() const;

  Dyadic halved() const;
  Dyadic doubled() const;

  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& rhs);
  Dyadic& operator-=(const Dyadic& rhs);
  Dyadic& operator*=(const Dyadic& rhs);

  friend Dyadic operator+(Dyadic lhs, const Dyadic& rhs) { return lhs += rhs; }
  friend Dyadic operator-(Dyadic lhs, const Dyadic& rhs) { return lhs -= rhs; }
  friend Dyadic operator*(Dyadic lhs, const Dyadic& rhs) { return lhs *= rhs; }

  // Canonical form makes structural equality the one true equality.
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }

  std::string str() const;

 private:
  void canonicalize();

  BigInt num_ = 0;
  unsigned exp_ = 0;
};

}  // namespace ph

#endif  // PH_DYADIC_HPP
