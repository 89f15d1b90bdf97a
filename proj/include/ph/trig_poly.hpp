#ifndef PH_TRIG_POLY_HPP
#define PH_TRIG_POLY_HPP

#include "ph/dyadic.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <map>
#include <string>

namespace ph {

// Frequency multiplier n of cos(nx) / sin(nx).  Stored frequencies are
// always >= 0; negative arguments fold via cos(-nx) = cos(nx) and
// sin(-nx) = -sin(nx), and sin(0x) drops.
using Frequency = std::int64_t;

// Exact finite Fourier series with dyadic-rational coefficients.
//
// Canonical form is an invariant on every constructed value: no stored zero
// coefficients and no sin entry at frequency zero.  Equality is map equality
// of canonical forms; there are no epsilon comparisons in exact land.
// Values are immutable in practice (all operations are pure functions) and
// safe to share across threads.
class TrigPoly {
 public:
  using TermMap = std::map<Frequency, Dyadic>;

  TrigPoly() = default;

  static TrigPoly constant(Dyadic value);
  // c * cos(nx) / c * sin(nx), with negative-frequency folding.
  static TrigPoly harmonic_cos(Frequency n, Dyadic c = Dyadic(1));
  static TrigPoly harmonic_sin(Frequency n, Dyadic c = Dyadic(1));

  const TermMap& cos_terms() const { return cos_; }
  const TermMap& sin_terms() const { return sin_; }

  bool is_zero() const { return cos_.empty() && sin_.empty(); }
  bool pure_cos() const { return sin_.empty(); }
  bool pure_sin() const { return cos_.empty(); }
  std::size_t term_count() const { return cos_.size() + sin_.size(); }

  // Largest frequency across both maps; 0 for the zero polynomial.
  Frequency max_frequency() const;

  // Coefficient lookup; zero when absent.
  Dyadic cos_coeff(Frequency n) const;
  Dyadic sin_coeff(Frequency n) const;

  // Folding accumulators; they keep the value canonical.
  void add_cos_term(Frequency n, const Dyadic& c);
  void add_sin_term(Frequency n, const Dyadic& c);

  TrigPoly operator-() const;
  friend TrigPoly operator+(const TrigPoly& p, const TrigPoly& q);
  friend TrigPoly operator-(const TrigPoly& p, const TrigPoly& q);
  // Exact product via product-to-sum identities; each cross term introduces
  // an exact dyadic half.
  friend TrigPoly operator*(const TrigPoly& p, const TrigPoly& q);

  friend bool operator==(const TrigPoly& p, const TrigPoly& q) {
    return p.cos_ == q.cos_ && p.sin_ == q.sin_;
  }
  friend bool operator!=(const TrigPoly& p, const TrigPoly& q) { return !(p == q); }

  // Floating evaluation sum c_n cos(nx) + sum b_n sin(nx).  Coefficients are
  // converted to double at call time; *precision_loss (optional) is set when
  // any |coefficient| >= 2^53, i.e. outside the double mantissa.
  double eval(double x, bool* precision_loss = nullptr) const;

  // Exact value at x = 0: the sum of all cosine coefficients.
  Dyadic eval_exact_at_zero() const;

  // {"cos": [[n, "num", exp], ...], "sin": [...]}, frequencies ascending.
  // Numerators are decimal strings so arbitrary-precision values survive.
  nlohmann::json to_json() const;
  static TrigPoly from_json(const nlohmann::json& j);

  std::string str() const;

 private:
  TermMap cos_;
  TermMap sin_;
};

inline TrigPoly add(const TrigPoly& p, const TrigPoly& q) { return p + q; }
inline TrigPoly mul(const TrigPoly& p, const TrigPoly& q) { return p * q; }

// Exact quotient q with only cosine terms such that q * sin(mx) == p.
// Works from the highest frequency downward, eliminating the top term via
// cos(kx) sin(mx) = 1/2 [sin((m+k)x) + sin((m-k)x)].  Throws
// NotDivisibleError as soon as elimination stalls on a nonzero remainder.
// Precondition: p is a pure sine series and m >= 1.
TrigPoly divide_by_sin(const TrigPoly& p, Frequency m);

}  // namespace ph

#endif  // PH_TRIG_POLY_HPP
