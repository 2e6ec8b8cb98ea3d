#include "cropreq/trend.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cropreq/stats.hpp"

namespace cropreq {

std::string trend_kind_name(TrendKind k) {
  switch (k) {
    case TrendKind::None: return "none";
    case TrendKind::Linear: return "linear";
    case TrendKind::Exponential: return "exponential";
  }
  return "?";
}

namespace {

TrendModel ols(std::span<const int> years, std::span<const double> values, TrendKind kind) {
  const std::size_t n = years.size();
  if (n != values.size()) throw std::invalid_argument("trend fit: lengths differ");
  if (n < 3) throw std::invalid_argument("trend fit: length >= 3 required");

  const int base_year = years[0];
  double tbar = 0.0, ubar = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    tbar += years[i] - base_year;
    ubar += values[i];
  }
  tbar /= static_cast<double>(n);
  ubar /= static_cast<double>(n);

  double stt = 0.0, stu = 0.0, suu = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dt = (years[i] - base_year) - tbar;
    const double du = values[i] - ubar;
    stt += dt * dt;
    stu += dt * du;
    suu += du * du;
  }
  if (stt <= 0.0) throw std::invalid_argument("trend fit: zero time variance");

  TrendModel m;
  m.kind = kind;
  m.base_year = base_year;
  m.beta = stu / stt;
  m.alpha = ubar - m.beta * tbar;

  double sse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double fit = m.alpha + m.beta * ((years[i] - base_year) - 0.0);
    const double res = values[i] - fit;
    sse += res * res;
  }
  m.r2 = suu > 0.0 ? std::clamp(1.0 - sse / suu, 0.0, 1.0) : 0.0;

  const double df = static_cast<double>(n) - 2.0;
  // Zero residual variance leaves the t statistic 0/0; a perfect fit is
  // treated as maximally significant.
  if (sse <= 1e-30 * std::max(suu, 1e-300)) {
    m.p_value = 0.0;
    return m;
  }
  const double se_beta = std::sqrt(sse / df / stt);
  const double t = m.beta / se_beta;
  m.p_value = student_t_p_two_sided(t, df);
  return m;
}

}  // namespace

TrendModel fit_linear(std::span<const int> years, std::span<const double> values) {
  return ols(years, values, TrendKind::Linear);
}

TrendModel fit_exponential(std::span<const int> years, std::span<const double> values) {
  for (double v : values)
    if (v <= 0.0)
      throw std::invalid_argument("exponential model ineligible: non-positive value");
  std::vector<double> logs(values.size());
  std::transform(values.begin(), values.end(), logs.begin(),
                 [](double v) { return std::log(v); });
  return ols(years, logs, TrendKind::Exponential);
}

TrendModel select_trend(std::span<const int> years, std::span<const double> values,
                        double alpha_level) {
  const TrendModel lin = fit_linear(years, values);
  const bool expo_eligible =
      std::all_of(values.begin(), values.end(), [](double v) { return v > 0.0; });

  TrendModel best;
  best.kind = TrendKind::None;
  best.base_year = years.empty() ? 0 : years[0];

  const bool lin_ok = lin.p_value < alpha_level;
  if (expo_eligible) {
    const TrendModel expo = fit_exponential(years, values);
    const bool expo_ok = expo.p_value < alpha_level;
    if (lin_ok && expo_ok) return expo.r2 > lin.r2 ? expo : lin;
    if (expo_ok) return expo;
  }
  if (lin_ok) return lin;
  return best;
}

DetrendedSeries detrend(std::span<const int> years, std::span<const double> values,
                        const TrendModel& model) {
  if (model.kind == TrendKind::None)
    throw std::invalid_argument("detrend: model has no trend, caller must skip");
  if (years.size() != values.size()) throw std::invalid_argument("detrend: lengths differ");
  DetrendedSeries out;
  out.years.assign(years.begin(), years.end());
  out.values.resize(values.size());
  out.trend_values.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.trend_values[i] = trend_value(model, years[i]);
    out.values[i] = values[i] - out.trend_values[i];
  }
  return out;
}

double trend_value(const TrendModel& model, int year) {
  const double t = static_cast<double>(year - model.base_year);
  switch (model.kind) {
    case TrendKind::Linear: return model.alpha + model.beta * t;
    case TrendKind::Exponential: return std::exp(model.alpha + model.beta * t);
    case TrendKind::None: break;
  }
  throw std::invalid_argument("trend_value: model has no trend");
}

TrendReportRow trend_report(std::span<const int> years, std::span<const double> values,
                            double alpha_level) {
  const TrendModel lin = fit_linear(years, values);
  const bool expo_eligible =
      std::all_of(values.begin(), values.end(), [](double v) { return v > 0.0; });

  TrendModel display = lin;
  if (expo_eligible) {
    const TrendModel expo = fit_exponential(years, values);
    if (expo.r2 > lin.r2) display = expo;
  }

  TrendReportRow row;
  row.display_kind = display.kind;
  row.beta = display.beta;
  row.r2 = display.r2;
  row.p_value = display.p_value;
  row.significant = display.p_value < alpha_level;
  row.selected_kind = select_trend(years, values, alpha_level).kind;
  return row;
}

}  // namespace cropreq
