#pragma once

#include <map>
#include <string>
#include <vector>

#include "cropreq/stats.hpp"
#include "cropreq/types.hpp"

namespace cropreq {

/// Contribution of one department to national estimation error. Errors are
/// plain no-trend LOOCV errors of the department series (kt); the relative
/// score normalizes the department RMSE by the national mean production of
/// the crop over the same years.
struct DepartmentScore {
  std::string department;
  std::map<std::string, ErrorVector> errors;      // per crop
  std::map<std::string, double> rel_score_pct;    // per crop
  double mean_score_pct = 0.0;      // unweighted mean across crops
  double weighted_score_pct = 0.0;  // weighted by department mean production
};

std::vector<DepartmentScore> department_scores(const std::vector<DepartmentPanel>& dpanel,
                                               const std::vector<CropPanel>& national);

struct StratumAggregate {
  std::string crop;
  double cumulative_error_pct;  // aggregate of all departments up to this stratum
  double stratum_error_pct;     // aggregate of this stratum's members alone
};

struct Stratum {
  double cutoff_pct = 100.0;
  std::string label;  // "[0-10]", "]10-20]", ...
  std::vector<std::string> departments;
  std::vector<StratumAggregate> aggregates;
};

struct Stratification {
  std::vector<Stratum> strata;
  bool weighted_sort = false;
};

/// Greedy stratification: departments sorted ascending by mean relative
/// score join the cumulative set while every crop's aggregate error stays
/// under the stratum cutoff. The aggregate preserves cross-department
/// correlation: it is the CV(RMSE) of the per-year sum of signed LOOCV
/// errors over the set, normalized by national mean production.
Stratification stratify(const std::vector<DepartmentScore>& scores,
                        const std::vector<CropPanel>& national,
                        std::vector<double> cutoffs = {10, 20, 30, 100},
                        bool weighted = false);

/// Correlation of crop yield with cumulative rainfall from the first June
/// decade to each endpoint decade of the rainy season (June .. October).
struct RainfallCorrelation {
  std::string crop;
  std::vector<int> endpoint_decades;  // 16..30
  std::vector<double> r;
  std::vector<bool> significant;  // p < alpha_level
};

inline constexpr int kFirstJuneDecade = 16;
inline constexpr int kLastOctoberDecade = 30;

std::vector<RainfallCorrelation> rainfall_yield_correlation(
    const RainfallPanel& rpanel, const std::vector<CropPanel>& panels,
    double alpha_level = 0.01);

}  // namespace cropreq
