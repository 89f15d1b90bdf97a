#include "ph/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace ph {

namespace mp = boost::multiprecision;

Dyadic::Dyadic(BigInt numerator, unsigned exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  canonicalize();
}

void Dyadic::canonicalize() {
  if (num_.is_zero()) {
    exp_ = 0;
    return;
  }
  if (exp_ == 0) return;
  const unsigned trailing = mp::lsb(mp::abs(num_));
  const unsigned shift = trailing < exp_ ? trailing : exp_;
  if (shift > 0) {
    const bool neg = num_ < 0;
    BigInt mag = mp::abs(num_) >> shift;
    num_ = neg ? -mag : mag;
    exp_ -= shift;
  }
}

const BigInt& Dyadic::as_integer() const {
  if (exp_ != 0) throw std::logic_error("Dyadic::as_integer: value " + str() + " is not an integer");
  return num_;
}

double Dyadic::to_double() const {
  return std::ldexp(num_.convert_to<double>(), -static_cast<int>(exp_));
}

bool Dyadic::exceeds_double_mantissa() const {
  if (num_.is_zero()) return false;
  return mp::msb(mp::abs(num_)) >= 53u + exp_;
}

Dyadic Dyadic::halved() const {
  if (num_.is_zero()) return {};
  return Dyadic(num_, exp_ + 1);
}

Dyadic Dyadic::doubled() const {
  if (exp_ > 0) return Dyadic(num_, exp_ - 1);
  return Dyadic(num_ << 1, 0);
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.num_ = -r.num_;
  return r;
}

Dyadic& Dyadic::operator+=(const Dyadic& rhs) {
  const unsigned e = exp_ > rhs.exp_ ? exp_ : rhs.exp_;
  num_ = (num_ << (e - exp_)) + (rhs.num_ << (e - rhs.exp_));
  exp_ = e;
  canonicalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& rhs) { return *this += -rhs; }

Dyadic& Dyadic::operator*=(const Dyadic& rhs) {
  num_ *= rhs.num_;
  exp_ += rhs.exp_;
  canonicalize();
  return *this;
}

std::string Dyadic::str() const {
  if (exp_ == 0) return num_.str();
  return num_.str() + "/2^" + std::to_string(exp_);
}

}  // namespace ph
