#include "cropreq/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cropreq {

namespace {

// Continued-fraction expansion of the incomplete beta function
// (Lentz's method).
double beta_cf(double a, double b, double x) {
  constexpr double kTiny = 1e-30;
  constexpr double kEps = 1e-14;
  constexpr int kMaxIter = 500;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw std::runtime_error("incomplete beta continued fraction did not converge");
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (x < 0.0 || x > 1.0) throw std::invalid_argument("incomplete_beta: x outside [0,1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double ln_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                       a * std::log(x) + b * std::log(1.0 - x);
  const double bt = std::exp(ln_bt);
  if (x < (a + 1.0) / (a + b + 2.0)) return bt * beta_cf(a, b, x) / a;
  return 1.0 - bt * beta_cf(b, a, 1.0 - x) / b;
}

double student_t_p_two_sided(double t, double df) {
  if (df <= 0.0) throw std::invalid_argument("student_t_p_two_sided: df must be positive");
  if (std::isnan(t)) throw std::invalid_argument("student_t_p_two_sided: t is NaN");
  if (std::isinf(t)) return 0.0;
  return incomplete_beta(df / 2.0, 0.5, df / (df + t * t));
}

ErrorVector estimation_error(std::string crop, std::span<const int> predicted_years,
                             std::span<const double> predicted,
                             std::span<const int> actual_years,
                             std::span<const double> actual) {
  if (predicted.size() != actual.size() || predicted_years.size() != actual_years.size() ||
      predicted.size() != predicted_years.size())
    throw std::invalid_argument("estimation_error: series lengths differ");
  if (!std::equal(predicted_years.begin(), predicted_years.end(), actual_years.begin()))
    throw std::invalid_argument("estimation_error: years are not aligned");

  ErrorVector ev;
  ev.crop = std::move(crop);
  ev.years.assign(predicted_years.begin(), predicted_years.end());
  ev.errors.resize(predicted.size());
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    ev.errors[i] = predicted[i] - actual[i];
    if (!std::isfinite(ev.errors[i]))
      throw std::invalid_argument("estimation_error: non-finite error");
  }
  return ev;
}

double mean(std::span<const double> v) {
  if (v.empty()) throw std::invalid_argument("mean of empty series");
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double rmse(std::span<const double> errors) {
  if (errors.empty()) throw std::invalid_argument("rmse of empty error vector");
  double ss = 0.0;
  for (double e : errors) ss += e * e;
  return std::sqrt(ss / static_cast<double>(errors.size()));
}

double rmse(const ErrorVector& ev) { return rmse(std::span<const double>(ev.errors)); }

double cv_rmse_pct(std::span<const double> errors, double reference_mean) {
  if (reference_mean <= 0.0)
    throw std::invalid_argument("cv_rmse: reference mean must be positive");
  return 100.0 * rmse(errors) / reference_mean;
}

double cv_rmse_pct(const ErrorVector& ev, double reference_mean) {
  return cv_rmse_pct(std::span<const double>(ev.errors), reference_mean);
}

DescriptiveStats describe(std::span<const double> series) {
  if (series.empty()) throw std::invalid_argument("describe of empty series");
  const double m = mean(series);
  if (m <= 0.0) throw std::invalid_argument("describe: mean must be positive");
  DescriptiveStats out;
  out.mean = m;
  out.min = *std::min_element(series.begin(), series.end());
  out.max = *std::max_element(series.begin(), series.end());
  if (series.size() < 2) {
    out.cv_pct = 0.0;
    return out;
  }
  double ss = 0.0;
  for (double x : series) ss += (x - m) * (x - m);
  const double sd = std::sqrt(ss / static_cast<double>(series.size() - 1));
  out.cv_pct = 100.0 * sd / m;
  return out;
}

CorrelationResult pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("pearson: lengths differ");
  const std::size_t n = x.size();
  if (n < 3) throw std::invalid_argument("pearson: need at least 3 samples");
  const double mx = mean(x);
  const double my = mean(y);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0)
    throw std::invalid_argument("pearson: zero variance, correlation undefined");
  double r = sxy / std::sqrt(sxx * syy);
  r = std::clamp(r, -1.0, 1.0);

  CorrelationResult out;
  out.r = r;
  out.n = static_cast<int>(n);
  const double df = static_cast<double>(n - 2);
  if (1.0 - r * r <= 0.0) {
    out.p_value = 0.0;  // perfectly collinear
  } else {
    const double t = r * std::sqrt(df / (1.0 - r * r));
    out.p_value = student_t_p_two_sided(t, df);
  }
  return out;
}

}  // namespace cropreq
