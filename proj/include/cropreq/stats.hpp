#pragma once

#include <span>
#include <string>
#include <vector>

namespace cropreq {

/// Signed estimation errors of one crop, prediction minus actual
/// (positive = overestimation), in the unit of the estimated quantity.
struct ErrorVector {
  std::string crop;
  std::vector<int> years;
  std::vector<double> errors;
};

struct DescriptiveStats {
  double min;
  double mean;
  double max;
  double cv_pct;  // 100 * sample sd (T-1 divisor) / mean
};

struct CorrelationResult {
  double r;
  double p_value;  // two-sided, Student t with n-2 df
  int n;
};

ErrorVector estimation_error(std::string crop,
                             std::span<const int> predicted_years,
                             std::span<const double> predicted,
                             std::span<const int> actual_years,
                             std::span<const double> actual);

double mean(std::span<const double> v);

/// Root mean square with divisor T (the number of evaluated years).
double rmse(std::span<const double> errors);
double rmse(const ErrorVector& ev);

/// 100 * rmse / reference_mean. The reference mean is the mean of the
/// actual series over the evaluated years.
double cv_rmse_pct(std::span<const double> errors, double reference_mean);
double cv_rmse_pct(const ErrorVector& ev, double reference_mean);

DescriptiveStats describe(std::span<const double> series);

CorrelationResult pearson(std::span<const double> x, std::span<const double> y);

/// Regularized incomplete beta function I_x(a, b).
double incomplete_beta(double a, double b, double x);

/// Two-sided p-value of a Student t statistic with df degrees of freedom.
double student_t_p_two_sided(double t, double df);

}  // namespace cropreq
