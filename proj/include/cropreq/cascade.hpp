#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cropreq/trend.hpp"
#include "cropreq/types.hpp"

namespace cropreq {

/// Calendar stages of the estimator cascade, in the order the inputs
/// become available. The labels are mnemonics; no date arithmetic is done.
enum class Stage { May, Jul, Aug, Sep, Oct, Nov };

inline constexpr std::array<Stage, 6> kStageOrder = {Stage::May, Stage::Jul, Stage::Aug,
                                                     Stage::Sep, Stage::Oct, Stage::Nov};

std::string stage_label(Stage s);  // "MAY", "JUL", ...

enum class TrendPolicy {
  Auto,    // significance decided once on the full series
  NoTrend  // plain leave-one-out mean
};

/// Leave-one-out historical estimator of one variable. The trend kind is
/// fixed on the full series; alpha/beta are refit on the T-1 training years
/// of each fold and the prediction is the mean training residual plus the
/// refit trend evaluated at the held-out year.
struct BaselinePredictor {
  Variable variable = Variable::Production;
  TrendModel trend;             // full-series selection (kind None when no trend)
  std::vector<int> years;
  std::vector<double> predictions;  // one per held-out year
  std::vector<double> actuals;      // the series being predicted
  std::vector<bool> linear_fallback;  // fold refit fell back to linear

  double cv_rmse_pct() const;
};

BaselinePredictor loocv_baseline(const CropPanel& panel, Variable variable,
                                 TrendPolicy policy,
                                 const CroplandSeries* cropland = nullptr,
                                 double alpha_level = 0.01);

/// Constant multiplicative biases of the early estimators, as signed
/// relative fractions (|e| < 1). A field may only be set when the stage
/// actually uses that component.
struct ComponentErrors {
  std::optional<double> cropland;
  std::optional<double> area;
  std::optional<double> yield;
};

enum class ComponentSource { Actual, Baseline, Biased };

struct ComponentUse {
  std::string component;
  ComponentSource source;
  double relative_error;  // 0 unless source == Biased
};

/// A production prediction for one crop-year at one stage, with the
/// provenance of every input that went into it.
struct StageEstimate {
  std::string crop;
  int year = 0;
  Stage stage = Stage::May;
  double value = 0.0;  // kt
  std::vector<ComponentUse> components;
};

struct StageCv {
  Stage stage;
  double cv_rmse_pct;
  double best_available_pct;  // min over this and all earlier stages
};

struct CascadeReport {
  std::string crop;
  std::vector<StageCv> stages;
};

/// Which early estimators are assumed perfect (e = 0) when building the
/// cascade report. A stage whose component is not marked perfect has no
/// error value to use and is left out of the report.
struct PerfectComponents {
  bool cropland = true;
  bool area = true;
  bool yield = true;
};

/// Evaluates the calendar cascade of one crop. Baselines are computed once
/// at construction, so per-cell grid evaluations stay cheap.
class CascadeEvaluator {
 public:
  /// cropland may be null; the JUL stage is then unavailable.
  CascadeEvaluator(const CropPanel& panel, const CroplandSeries* cropland = nullptr,
                   double alpha_level = 0.01);

  const CropPanel& panel() const { return panel_; }
  bool has_cropland() const { return has_cropland_; }
  double mean_production() const { return mean_production_; }

  const BaselinePredictor& baseline(Variable v) const;

  StageEstimate stage_estimate(Stage stage, int year,
                               const ComponentErrors& errors = {}) const;

  /// CV(RMSE) in percent of the stage's predictions against actual
  /// production over all years of the panel.
  double stage_cv_pct(Stage stage, const ComponentErrors& errors = {}) const;

  CascadeReport cascade(const PerfectComponents& perfect = {}) const;

 private:
  double stage_value(Stage stage, std::size_t i, const ComponentErrors& errors) const;
  void check_errors(Stage stage, const ComponentErrors& errors) const;

  CropPanel panel_;
  bool has_cropland_ = false;
  std::vector<double> cropland_;  // aligned with panel years
  double mean_production_ = 0.0;
  BaselinePredictor production_;
  BaselinePredictor area_;
  BaselinePredictor yield_;
  BaselinePredictor ratio_;  // only valid when has_cropland_
};

}  // namespace cropreq
