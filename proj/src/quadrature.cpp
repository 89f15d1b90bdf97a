#include "ph/quadrature.hpp"

#include "ph/errors.hpp"
#include "ph/sincos.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

namespace ph {

namespace {

constexpr double kPi = std::numbers::pi;

int auto_nodes(Frequency max_freq) {
  return static_cast<int>((max_freq + 1) / 2) + 8;
}

int min_nodes(Rule rule, Frequency max_freq) {
  if (rule == Rule::kUniformTrapezoid) {
    // Discrete orthogonality over the period-pi formulation: aliasing stops
    // once 2N exceeds the maximum (even) frequency.
    return static_cast<int>(max_freq / 2) + 1;
  }
  // Gauss-Legendre resolves cos(Fx) on [0, pi/2] once the polynomial degree
  // 2N-1 passes the Chebyshev transition F*pi/4; heuristic with margin.
  return static_cast<int>((2 * max_freq) / 5) + 8;
}

void fill_values(const std::function<double(double)>& f, std::span<const double> xs,
                 std::vector<double>& values, int threads) {
  const std::size_t n = xs.size();
  values.resize(n);
  if (threads <= 1 || n < 64) {
    for (std::size_t i = 0; i < n; ++i) values[i] = f(xs[i]);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) values[i] = f(xs[i]);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double sum = 0.0;
    for (const double v : values) sum += v;
    return sum;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

void gauss_legendre_rule(int n, std::span<double> nodes, std::span<double> weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre_rule: n must be >= 1");
  if (nodes.size() != static_cast<std::size_t>(n) || weights.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("gauss_legendre_rule: span sizes must equal n");
  const int mid = (n + 1) / 2;
  for (int i = 0; i < mid; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence for P_n(x) and P_{n-1}(x).
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[static_cast<std::size_t>(i)] = -x;
    nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
}

double integrate_half_period(const std::function<double(double)>& f, Frequency max_freq,
                             const QuadratureSpec& spec, int* nodes_used) {
  const int n = spec.nodes > 0 ? spec.nodes : auto_nodes(max_freq);
  if (n < min_nodes(spec.rule, max_freq))
    throw InsufficientNodesError(
        "integrate_half_period: " + std::to_string(n) + " nodes cannot integrate max frequency " +
        std::to_string(max_freq) + " exactly (need >= " +
        std::to_string(min_nodes(spec.rule, max_freq)) + ")");
  if (nodes_used) *nodes_used = n;

  std::vector<double> xs(static_cast<std::size_t>(n));
  std::vector<double> values;
  if (spec.rule == Rule::kUniformTrapezoid) {
    // Periodic trapezoid over [0, pi] (the endpoint samples coincide), then
    // halve using f(pi - x) = f(x).
    for (int j = 0; j < n; ++j) xs[static_cast<std::size_t>(j)] = kPi * j / n;
    fill_values(f, xs, values, spec.threads);
    return 0.5 * (kPi / n) * pairwise_sum(values);
  }

  std::vector<double> t(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
  gauss_legendre_rule(n, t, w);
  for (int j = 0; j < n; ++j)
    xs[static_cast<std::size_t>(j)] = 0.25 * kPi * (t[static_cast<std::size_t>(j)] + 1.0);
  fill_values(f, xs, values, spec.threads);
  for (int j = 0; j < n; ++j) values[static_cast<std::size_t>(j)] *= 0.25 * kPi * w[static_cast<std::size_t>(j)];
  return pairwise_sum(values);
}

namespace {

// prod sin(b x) over num_args / prod sin(a x) over den_args, with removable
// singularities resolved by pairing vanishing factors and taking the
// derivative-ratio limit sin(Bx)/sin(Ax) -> B cos(Bx) / (A cos(Ax)).
double sin_ratio_product(std::span<const Frequency> num_args, std::span<const Frequency> den_args,
                         double x, double tol, int depth) {
  std::vector<Frequency> sing_num, sing_den;
  double num_prod = 1.0, den_prod = 1.0;
  for (const Frequency b : num_args) {
    const double v = sin_of_multiple(static_cast<double>(b), x);
    if (std::abs(v) < tol) sing_num.push_back(b);
    else num_prod *= v;
  }
  for (const Frequency a : den_args) {
    const double v = sin_of_multiple(static_cast<double>(a), x);
    if (std::abs(v) < tol) sing_den.push_back(a);
    else den_prod *= v;
  }

  if (sing_den.size() > sing_num.size()) {
    // More vanishing denominators than numerators never happens at a true
    // singular point of these kernels (they are polynomials); this is
    // tolerance noise.  Symmetric two-sided sample, averaged.
    if (depth > 0) {
      // Terminal guard: the literal ratio with every factor included.
      for (const Frequency b : sing_num) num_prod *= sin_of_multiple(static_cast<double>(b), x);
      for (const Frequency a : sing_den) den_prod *= sin_of_multiple(static_cast<double>(a), x);
      return num_prod / den_prod;
    }
    const double h = 1e-6;
    return 0.5 * (sin_ratio_product(num_args, den_args, x - h, tol, depth + 1) +
                  sin_ratio_product(num_args, den_args, x + h, tol, depth + 1));
  }

  double result = num_prod / den_prod;
  std::size_t i = 0;
  for (; i < sing_den.size(); ++i) {
    const double b = static_cast<double>(sing_num[i]);
    const double a = static_cast<double>(sing_den[i]);
    result *= (b * cos_of_multiple(b, x)) / (a * cos_of_multiple(a, x));
  }
  // Unpaired vanishing numerator factors: the kernel itself vanishes here.
  for (; i < sing_num.size(); ++i)
    result *= sin_of_multiple(static_cast<double>(sing_num[i]), x);
  return result;
}

std::vector<Frequency> iota_args(Frequency first, Frequency count, Frequency stride = 1) {
  std::vector<Frequency> args(static_cast<std::size_t>(count));
  for (Frequency i = 0; i < count; ++i) args[static_cast<std::size_t>(i)] = first + i * stride;
  return args;
}

void check_envelope(int order, const char* where) {
  if (order > kQuadratureOrderEnvelope)
    throw CancellationRiskError(std::string(where) + ": kernel order " + std::to_string(order) +
                                " exceeds the certified quadrature envelope " +
                                std::to_string(kQuadratureOrderEnvelope) +
                                "; use the exact series path (kernel tail) instead");
}

QuadratureResult finish(double raw, const QuadratureSpec& spec, int nodes_used) {
  QuadratureResult r;
  r.raw = raw;
  r.rounded = static_cast<std::int64_t>(std::llround(raw));
  r.residual = std::abs(raw - static_cast<double>(r.rounded));
  r.trusted = r.residual < 0.25;
  r.nodes_used = nodes_used;
  r.spec = spec;
  return r;
}

// Builds the cos-weighted kernel integrand for either evaluator strategy.
std::function<double(double)> kernel_integrand(int order, Frequency phase,
                                               const QuadratureSpec& spec) {
  const double q = static_cast<double>(phase < 0 ? -phase : phase);
  if (spec.evaluator == Evaluator::kSeries) {
    auto kernel = std::make_shared<KernelSeries>(build_kernel(order));
    return [kernel, q](double x) {
      return evaluate_kernel_series(*kernel, x) * cos_of_multiple(q, x);
    };
  }
  const double tol = spec.singularity_tolerance;
  return [order, q, tol](double x) {
    return evaluate_kernel_direct(order, x, tol) * cos_of_multiple(q, x);
  };
}

}  // namespace

double evaluate_kernel_direct(int s, double x, double tol) {
  if (s < 1) throw std::invalid_argument("evaluate_kernel_direct: s must be >= 1");
  const auto num = iota_args(s + 1, s);
  const auto den = iota_args(1, s);
  return sin_ratio_product(num, den, x, tol, 0);
}

double evaluate_kernel_series(const KernelSeries& k, double x) {
  return k.series.eval(x);
}

double exact_half_period_integral(const TrigPoly& integrand) {
  // Int_0^{pi/2} cos(nx) dx = pi/2 (n=0), 0 (n even), sin(n pi/2)/n (n odd).
  // Int_0^{pi/2} sin(nx) dx = (1 - cos(n pi/2))/n.
  double rational_part = 0.0;
  double pi_part = 0.0;
  for (const auto& [n, c] : integrand.cos_terms()) {
    if (n == 0) {
      pi_part += c.to_double();
    } else if (n % 2 != 0) {
      const double sign = (n % 4 == 1) ? 1.0 : -1.0;
      rational_part += c.to_double() * sign / static_cast<double>(n);
    }
  }
  for (const auto& [n, c] : integrand.sin_terms()) {
    if (n % 4 == 2) rational_part += c.to_double() * 2.0 / static_cast<double>(n);
    else if (n % 2 != 0) rational_part += c.to_double() / static_cast<double>(n);
  }
  return 0.5 * kPi * pi_part + rational_part;
}

QuadratureResult integrate_reduced(int s, const QuadratureSpec& spec) {
  if (s < 1) throw std::invalid_argument("integrate_reduced: s must be >= 1");
  check_envelope(s, "integrate_reduced");
  const Frequency s2 = static_cast<Frequency>(s) * s;
  const Frequency phase = s2 - 2 * s;
  const Frequency max_freq = s2 + phase;
  int used = 0;
  const double raw =
      integrate_half_period(kernel_integrand(s, phase, spec), max_freq, spec, &used);
  return finish(raw * 2.0 / kPi, spec, used);
}

namespace {

QuadratureResult integrate_pair_form(int s, const QuadratureSpec& spec, bool sine_pair) {
  if (s < 1) throw std::invalid_argument("integrate_pair_form: s must be >= 1");
  check_envelope(s, sine_pair ? "integrate_sin_form" : "integrate_cos_form");
  const Frequency s2 = static_cast<Frequency>(s) * s;
  const Frequency max_freq = 2 * s2 + 2 * s;
  const double a = 2.0 * s, b = static_cast<double>(s2);
  std::function<double(double)> weight;
  if (sine_pair)
    weight = [a, b](double x) { return sin_of_multiple(a, x) * sin_of_multiple(b, x); };
  else
    weight = [a, b](double x) { return cos_of_multiple(a, x) * cos_of_multiple(b, x); };

  std::function<double(double)> kernel_eval;
  if (spec.evaluator == Evaluator::kSeries) {
    auto kernel = std::make_shared<KernelSeries>(build_kernel(s));
    kernel_eval = [kernel](double x) { return evaluate_kernel_series(*kernel, x); };
  } else {
    const double tol = spec.singularity_tolerance;
    kernel_eval = [s, tol](double x) { return evaluate_kernel_direct(s, x, tol); };
  }
  auto f = [kernel_eval, weight](double x) { return kernel_eval(x) * weight(x); };
  int used = 0;
  const double raw = integrate_half_period(f, max_freq, spec, &used);
  return finish(raw * 4.0 / kPi, spec, used);
}

}  // namespace

QuadratureResult integrate_sin_form(int s, const QuadratureSpec& spec) {
  return integrate_pair_form(s, spec, true);
}

QuadratureResult integrate_cos_form(int s, const QuadratureSpec& spec) {
  return integrate_pair_form(s, spec, false);
}

QuadratureResult integrate_full(int s, const QuadratureSpec& spec) {
  if (s < 1) throw std::invalid_argument("integrate_full: s must be >= 1");
  check_envelope(s, "integrate_full");
  const Frequency fs = s;
  // Kernel prod_{k=1..s} sin[k(s+1)x]/sin(kx); max frequency s^2(s+1)/2.
  std::vector<Frequency> num(static_cast<std::size_t>(s));
  for (Frequency k = 1; k <= fs; ++k) num[static_cast<std::size_t>(k - 1)] = k * (fs + 1);
  const auto den = iota_args(1, fs);
  const Frequency kernel_max = fs * fs * (fs + 1) / 2;
  const Frequency phase = kernel_max - 2 * fs;  // negative only at s=1; cos is even
  const Frequency max_freq = kernel_max + (phase < 0 ? -phase : phase);
  const double q = static_cast<double>(phase < 0 ? -phase : phase);
  const double tol = spec.singularity_tolerance;
  auto f = [num, den, q, tol](double x) {
    return sin_ratio_product(num, den, x, tol, 0) * cos_of_multiple(q, x);
  };
  int used = 0;
  const double raw = integrate_half_period(f, max_freq, spec, &used);
  return finish(raw * 2.0 / kPi, spec, used);
}

QuadratureResult integrate_general(int s, int m, const QuadratureSpec& spec) {
  if (s < 1 || m < 0)
    throw std::invalid_argument("integrate_general: need s >= 1 and m >= 0");
  check_envelope(s + m, "integrate_general");
  const Frequency order = s + m;
  const Frequency phase = order * order - 2 * static_cast<Frequency>(s);
  const Frequency max_freq = order * order + phase;
  int used = 0;
  const double raw = integrate_half_period(
      kernel_integrand(static_cast<int>(order), phase, spec), max_freq, spec, &used);
  return finish(raw * 2.0 / kPi, spec, used);
}

double vanishing_moment(int s, int offset, const QuadratureSpec& spec) {
  if (s < 1) throw std::invalid_argument("vanishing_moment: s must be >= 1");
  if (offset < 2 || offset % 2 != 0)
    throw OddOffsetError("vanishing_moment: offset " + std::to_string(offset) +
                         " must be an even integer >= 2 (odd offsets do not vanish; "
                         "use moment_value to inspect them)");
  check_envelope(s, "vanishing_moment");
  const Frequency s2 = static_cast<Frequency>(s) * s;
  const Frequency phase = s2 + offset;
  const Frequency max_freq = s2 + phase;
  return integrate_half_period(kernel_integrand(s, phase, spec), max_freq, spec, nullptr);
}

double moment_value(int s, int offset) {
  if (s < 1 || offset < 1)
    throw std::invalid_argument("moment_value: need s >= 1 and offset >= 1");
  const KernelSeries kernel = build_kernel(s);
  const Frequency phase = kernel.max_frequency + offset;
  return exact_half_period_integral(kernel.series * TrigPoly::harmonic_cos(phase));
}

double coefficient_by_orthogonality(const KernelSeries& k, int m, const QuadratureSpec& spec) {
  const int s = k.order;
  check_envelope(s, "coefficient_by_orthogonality");
  const bool even = s % 2 == 0;
  const Frequency s2 = static_cast<Frequency>(s) * s;
  Frequency target = even ? 2 * static_cast<Frequency>(m) : 2 * static_cast<Frequency>(m) - 1;
  if (m < (even ? 0 : 1) || target > s2)
    throw std::invalid_argument("coefficient_by_orthogonality: m out of range for s=" +
                                std::to_string(s));
  const Frequency max_freq = s2 + target;
  const double raw =
      integrate_half_period(kernel_integrand(s, target, spec), max_freq, spec, nullptr);
  const double value = raw * 4.0 / kPi;
  return target == 0 ? 0.5 * value : value;
}

}  // namespace ph
