#include "ph/trig_poly.hpp"

#include "ph/errors.hpp"
#include "ph/sincos.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ph {

TrigPoly TrigPoly::constant(Dyadic value) {
  TrigPoly p;
  p.add_cos_term(0, value);
  return p;
}

TrigPoly TrigPoly::harmonic_cos(Frequency n, Dyadic c) {
  TrigPoly p;
  p.add_cos_term(n, c);
  return p;
}

TrigPoly TrigPoly::harmonic_sin(Frequency n, Dyadic c) {
  TrigPoly p;
  p.add_sin_term(n, c);
  return p;
}

Frequency TrigPoly::max_frequency() const {
  Frequency m = 0;
  if (!cos_.empty()) m = cos_.rbegin()->first;
  if (!sin_.empty() && sin_.rbegin()->first > m) m = sin_.rbegin()->first;
  return m;
}

Dyadic TrigPoly::cos_coeff(Frequency n) const {
  auto it = cos_.find(n < 0 ? -n : n);
  return it == cos_.end() ? Dyadic() : it->second;
}

Dyadic TrigPoly::sin_coeff(Frequency n) const {
  if (n == 0) return {};
  auto it = sin_.find(n < 0 ? -n : n);
  if (it == sin_.end()) return {};
  return n < 0 ? -it->second : it->second;
}

void TrigPoly::add_cos_term(Frequency n, const Dyadic& c) {
  if (c.is_zero()) return;
  if (n < 0) n = -n;
  auto [it, inserted] = cos_.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) cos_.erase(it);
  }
}

void TrigPoly::add_sin_term(Frequency n, const Dyadic& c) {
  if (c.is_zero() || n == 0) return;
  Dyadic v = c;
  if (n < 0) {
    n = -n;
    v = -v;
  }
  auto [it, inserted] = sin_.try_emplace(n, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) sin_.erase(it);
  }
}

TrigPoly TrigPoly::operator-() const {
  TrigPoly r;
  for (const auto& [n, c] : cos_) r.cos_.emplace(n, -c);
  for (const auto& [n, c] : sin_) r.sin_.emplace(n, -c);
  return r;
}

TrigPoly operator+(const TrigPoly& p, const TrigPoly& q) {
  TrigPoly r = p;
  for (const auto& [n, c] : q.cos_) r.add_cos_term(n, c);
  for (const auto& [n, c] : q.sin_) r.add_sin_term(n, c);
  return r;
}

TrigPoly operator-(const TrigPoly& p, const TrigPoly& q) {
  TrigPoly r = p;
  for (const auto& [n, c] : q.cos_) r.add_cos_term(n, -c);
  for (const auto& [n, c] : q.sin_) r.add_sin_term(n, -c);
  return r;
}

TrigPoly operator*(const TrigPoly& p, const TrigPoly& q) {
  TrigPoly r;
  // cos(a)cos(b) = 1/2 [cos(a-b) + cos(a+b)]
  for (const auto& [a, ca] : p.cos_) {
    for (const auto& [b, cb] : q.cos_) {
      const Dyadic h = (ca * cb).halved();
      r.add_cos_term(a - b, h);
      r.add_cos_term(a + b, h);
    }
  }
  // sin(a)sin(b) = 1/2 [cos(a-b) - cos(a+b)]
  for (const auto& [a, ca] : p.sin_) {
    for (const auto& [b, cb] : q.sin_) {
      const Dyadic h = (ca * cb).halved();
      r.add_cos_term(a - b, h);
      r.add_cos_term(a + b, -h);
    }
  }
  // sin(a)cos(b) = 1/2 [sin(a-b) + sin(a+b)]
  for (const auto& [a, ca] : p.sin_) {
    for (const auto& [b, cb] : q.cos_) {
      const Dyadic h = (ca * cb).halved();
      r.add_sin_term(a - b, h);
      r.add_sin_term(a + b, h);
    }
  }
  for (const auto& [a, ca] : p.cos_) {
    for (const auto& [b, cb] : q.sin_) {
      const Dyadic h = (ca * cb).halved();
      r.add_sin_term(b - a, h);
      r.add_sin_term(b + a, h);
    }
  }
  return r;
}

double TrigPoly::eval(double x, bool* precision_loss) const {
  if (precision_loss) *precision_loss = false;
  double sum = 0.0;
  for (const auto& [n, c] : cos_) {
    if (precision_loss && c.exceeds_double_mantissa()) *precision_loss = true;
    sum += c.to_double() * cos_of_multiple(static_cast<double>(n), x);
  }
  for (const auto& [n, c] : sin_) {
    if (precision_loss && c.exceeds_double_mantissa()) *precision_loss = true;
    sum += c.to_double() * sin_of_multiple(static_cast<double>(n), x);
  }
  return sum;
}

Dyadic TrigPoly::eval_exact_at_zero() const {
  Dyadic sum;
  for (const auto& [n, c] : cos_) sum += c;
  return sum;
}

nlohmann::json TrigPoly::to_json() const {
  nlohmann::json j;
  j["cos"] = nlohmann::json::array();
  j["sin"] = nlohmann::json::array();
  for (const auto& [n, c] : cos_)
    j["cos"].push_back({n, c.numerator().str(), c.exponent()});
  for (const auto& [n, c] : sin_)
    j["sin"].push_back({n, c.numerator().str(), c.exponent()});
  return j;
}

namespace {

Dyadic coeff_from_json(const nlohmann::json& entry) {
  BigInt num;
  if (entry.at(1).is_string()) {
    num = BigInt(entry.at(1).get<std::string>());
  } else {
    num = BigInt(entry.at(1).get<std::int64_t>());
  }
  return Dyadic(num, entry.at(2).get<unsigned>());
}

}  // namespace

TrigPoly TrigPoly::from_json(const nlohmann::json& j) {
  TrigPoly p;
  for (const auto& entry : j.at("cos"))
    p.add_cos_term(entry.at(0).get<Frequency>(), coeff_from_json(entry));
  for (const auto& entry : j.at("sin"))
    p.add_sin_term(entry.at(0).get<Frequency>(), coeff_from_json(entry));
  return p;
}

std::string TrigPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  auto emit = [&](Frequency n, const Dyadic& c, const char* fn) {
    if (!first) out << " + ";
    first = false;
    if (n == 0) {
      out << c.str();
      return;
    }
    if (c != Dyadic(1)) out << c.str() << " ";
    out << fn << " " << n << "x";
  };
  for (const auto& [n, c] : cos_) emit(n, c, "cos");
  for (const auto& [n, c] : sin_) emit(n, c, "sin");
  return out.str();
}

TrigPoly divide_by_sin(const TrigPoly& p, Frequency m) {
  if (m < 1) throw std::invalid_argument("divide_by_sin: m must be >= 1");
  if (!p.pure_sin())
    throw std::invalid_argument("divide_by_sin: dividend must be a pure sine series");

  TrigPoly quotient;
  TrigPoly r = p;
  while (!r.is_zero()) {
    const auto top = r.sin_terms().rbegin();
    const Frequency f = top->first;
    const Dyadic c = top->second;
    if (f < m) {
      throw NotDivisibleError("divide_by_sin: remainder " + r.str() +
                              " is not divisible by sin " + std::to_string(m) + "x");
    }
    const Frequency k = f - m;
    if (k == 0) {
      // Constant quotient term: c * sin(mx) cancels the top term exactly.
      quotient.add_cos_term(0, c);
      r.add_sin_term(m, -c);
    } else {
      quotient.add_cos_term(k, c.doubled());
      r.add_sin_term(f, -c);
      r.add_sin_term(m - k, -c);
    }
  }
  return quotient;
}

}  // namespace ph
