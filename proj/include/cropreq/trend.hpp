#pragma once

#include <span>
#include <string>
#include <vector>

namespace cropreq {

enum class TrendKind { None, Linear, Exponential };

std::string trend_kind_name(TrendKind k);

/// Fitted trend of one series. The time regressor is centered at the first
/// year of the fitted series (t = year - base_year), so alpha is the trend
/// value at base_year. For the exponential model alpha and beta live in log
/// space and r2 is the log-space coefficient of determination.
struct TrendModel {
  TrendKind kind = TrendKind::None;
  double alpha = 0.0;
  double beta = 0.0;
  double p_value = 1.0;  // two-sided significance of beta
  double r2 = 0.0;
  int base_year = 0;
};

struct DetrendedSeries {
  std::vector<int> years;
  std::vector<double> values;        // z_t = u_t - trend_t
  std::vector<double> trend_values;  // trend_t
};

/// OLS fit of u = alpha + beta * (year - year0). Needs length >= 3 and at
/// least two distinct years. p-value from the two-sided t test on beta with
/// T-2 degrees of freedom; a fit with zero residual variance gets p = 0.
TrendModel fit_linear(std::span<const int> years, std::span<const double> values);

/// OLS fit of log(u) against the year. All values must be strictly
/// positive; otherwise the model is ineligible and this throws.
TrendModel fit_exponential(std::span<const int> years, std::span<const double> values);

/// Fits both models (the exponential one only when every value is
/// positive), keeps the ones with p_value < alpha_level and returns the
/// qualifier with the higher R2, each R2 taken in its own fitting space.
/// Returns kind = None when neither qualifies.
TrendModel select_trend(std::span<const int> years, std::span<const double> values,
                        double alpha_level = 0.01);

/// Subtracts the trend pointwise. values + trend_values reconstructs the
/// input exactly. Throws when model.kind is None.
DetrendedSeries detrend(std::span<const int> years, std::span<const double> values,
                        const TrendModel& model);

/// Trend value at a calendar year; extrapolation is allowed.
double trend_value(const TrendModel& model, int year);

/// Reporting row for the trend table: the displayed model is the better-R2
/// fit of the two (exponential only when eligible) whether or not it is
/// significant, while selected_kind is what select_trend would use for
/// prediction.
struct TrendReportRow {
  TrendKind display_kind = TrendKind::Linear;
  double beta = 0.0;
  double r2 = 0.0;
  double p_value = 1.0;
  bool significant = false;
  TrendKind selected_kind = TrendKind::None;
};

TrendReportRow trend_report(std::span<const int> years, std::span<const double> values,
                            double alpha_level = 0.01);

}  // namespace cropreq
