#include "ph/kernel.hpp"

#include "ph/errors.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace ph {

namespace {

void validate_kernel(const KernelSeries& k) {
  const auto s = static_cast<Frequency>(k.order);
  const Frequency expected_max = s * s;
  if (!k.series.pure_cos())
    throw std::logic_error("kernel: series must be cosine-only at s=" + std::to_string(k.order));
  if (k.series.max_frequency() != expected_max)
    throw std::logic_error("kernel: max frequency " + std::to_string(k.series.max_frequency()) +
                           " != s^2 at s=" + std::to_string(k.order));
  const Frequency parity = expected_max % 2;
  for (const auto& [n, c] : k.series.cos_terms()) {
    if (n % 2 != parity)
      throw std::logic_error("kernel: frequency " + std::to_string(n) +
                             " breaks the s^2 parity at s=" + std::to_string(k.order));
    if (!c.is_integer() || c.is_negative() || c.is_zero() || (c.as_integer() & 1) != 0)
      throw std::logic_error("kernel: coefficient " + c.str() + " at frequency " +
                             std::to_string(n) + " is not a positive even integer (s=" +
                             std::to_string(k.order) + ")");
  }
}

KernelSeries advance(const KernelSeries& k) {
  const Frequency s = k.order;
  TrigPoly step = TrigPoly::harmonic_sin(3 * s + 2) + TrigPoly::harmonic_sin(s);
  KernelSeries next;
  next.order = k.order + 1;
  next.series = divide_by_sin(k.series * step, s + 1);
  next.max_frequency = next.series.max_frequency();
  validate_kernel(next);
  return next;
}

}  // namespace

KernelSeries build_kernel(int s) {
  if (s < 1) throw std::invalid_argument("build_kernel: s must be >= 1");
  KernelSeries k{1, TrigPoly::harmonic_cos(1, Dyadic(2)), 1};
  validate_kernel(k);
  for (int order = 1; order < s; ++order) k = advance(k);
  return k;
}

std::vector<KernelSeries> build_kernel_ladder(int max_s) {
  if (max_s < 1) throw std::invalid_argument("build_kernel_ladder: max_s must be >= 1");
  std::vector<KernelSeries> ladder;
  ladder.reserve(static_cast<std::size_t>(max_s));
  ladder.push_back(build_kernel(1));
  for (int s = 2; s <= max_s; ++s) ladder.push_back(advance(ladder.back()));
  return ladder;
}

BigInt kernel_at_zero(const KernelSeries& k) {
  return k.series.eval_exact_at_zero().as_integer();
}

BigInt kernel_at_half_pi(const KernelSeries& k) {
  BigInt sum = 0;
  for (const auto& [n, c] : k.series.cos_terms()) {
    if (n % 2 != 0) continue;  // cos(n pi/2) = 0 for odd n
    if ((n / 2) % 2 == 0)
      sum += c.as_integer();
    else
      sum -= c.as_integer();
  }
  return sum;
}

std::int64_t term_count(const KernelSeries& k) {
  return static_cast<std::int64_t>(k.series.cos_terms().size());
}

Tail extract_tail(const KernelSeries& k) {
  if (k.order < 3)
    throw OrderTooSmallError("extract_tail: order " + std::to_string(k.order) +
                             " < 3 (the tail would reach the constant term)");
  Tail tail;
  tail.order = k.order;
  const Frequency top = k.max_frequency;
  tail.coeffs.reserve(static_cast<std::size_t>(k.order) + 1);
  for (int j = 0; j <= k.order; ++j) {
    const Dyadic c = k.series.cos_coeff(top - 2 * j);
    tail.coeffs.push_back(c.halved().as_integer());
  }
  return tail;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: the running value is C(n-k+i, i)
  }
  return result;
}

}  // namespace ph
