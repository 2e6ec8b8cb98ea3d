#pragma once

#include <string>
#include <vector>

#include "cropreq/cascade.hpp"

namespace cropreq {

enum class Component { Cropland, Area, Yield };

std::string component_name(Component c);

enum class SignPolicy { WorstCase, OverOnly, UnderOnly };
enum class BindingSign { Over, Under };

struct RequirementQuery {
  std::string crop;
  Component component = Component::Yield;
  Stage baseline_stage = Stage::Sep;  // May for cropland/area, Sep for yield
  SignPolicy sign_policy = SignPolicy::WorstCase;
  double search_cap = 0.50;  // relative fraction
  double step = 0.005;
};

/// Largest constant relative error of a component estimator that still
/// beats the baseline stage. None: not even the first scan step qualifies
/// (the component is useless below the scan resolution). AboveCap: every
/// scanned error qualifies.
struct RequirementResult {
  enum class Kind { Value, None, AboveCap };

  std::string crop;
  Component component = Component::Yield;
  Kind kind = Kind::None;
  double max_error_pct = 0.0;  // set for Value; equals 100*cap for AboveCap
  BindingSign binding_sign = BindingSign::Over;
  double baseline_cv_pct = 0.0;

  std::string requirement_text() const;  // "12.5", "none" or ">50"
};

RequirementResult solve_requirement(const RequirementQuery& q, const CascadeEvaluator& eval);

struct GridAxis {
  Component component = Component::Area;
  double min = -0.5;
  double max = 0.5;
  double step = 0.01;
  int size = 101;

  double value(int i) const { return min + i * step; }
};

struct IsolinePoint {
  double e1;
  double e2;
};

/// Ordered points of one threshold contour, split per branch (a grid
/// column can cross a contour twice: once below and once above the
/// error-compensation valley).
struct Isoline {
  std::string threshold_name;  // "may" or "sep"
  double threshold_cv_pct = 0.0;
  int branch = 0;  // 0 = lower crossing, 1 = upper crossing
  std::vector<IsolinePoint> points;
};

/// 2-D raster over component-error axes. Exactly one of cv_pct / labels is
/// populated, row-major with axis1 as the row index.
struct ErrorGrid {
  GridAxis axis1;
  GridAxis axis2;
  std::vector<double> cv_pct;
  std::vector<Stage> labels;
  std::vector<Isoline> isolines;
  bool identity_warning = false;

  std::size_t index(int i1, int i2) const {
    return static_cast<std::size_t>(i1) * axis2.size + i2;
  }
};

/// Best estimator among MAY, JUL(e_c) and AUG(e_a) per (e_c, e_a) cell.
/// Ties go to the later stage.
ErrorGrid grid_best_estimator(const CascadeEvaluator& eval, double range, double step);

/// CV(RMSE) of a_t(1+e_a) * y_t(1+e_y) per (e_a, e_y) cell, with isolines
/// extracted at the MAY and SEP stage CVs.
ErrorGrid grid_area_yield(const CascadeEvaluator& eval, double range, double step);
ErrorGrid grid_area_yield(const CascadeEvaluator& eval, double range, double step,
                          double may_cv_pct, double sep_cv_pct);

/// Per-year signed relative errors (percent of mean production) of the
/// yield-baseline estimator a_t * yhat_t and of the constant-bias
/// estimator a_t * y_t (1 + e_yield), aligned by year.
struct ErrorDistribution {
  std::string crop;
  double e_yield = 0.0;
  std::vector<int> years;
  std::vector<double> baseline_error_pct;
  std::vector<double> biased_error_pct;
};

ErrorDistribution error_distributions(const CascadeEvaluator& eval, double e_yield);

}  // namespace cropreq
