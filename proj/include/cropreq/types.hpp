#pragma once

#include <string>
#include <vector>

namespace cropreq {

// Units are fixed across the whole tool: production in kilotonnes (kt),
// crop area and cropland in thousands of hectares (kha), yield in tonnes
// per hectare (t/ha), rainfall in millimetres (mm).

enum class Variable { Production, Area, Yield, Ratio };

std::string variable_name(Variable v);

/// Annual national series of one crop. Years are strictly increasing and
/// gap-free; production, area and yield are strictly positive.
struct CropPanel {
  std::string crop;
  std::vector<int> years;
  std::vector<double> production;  // kt
  std::vector<double> area;        // kha
  std::vector<double> yield;       // t/ha

  std::size_t size() const { return years.size(); }

  /// Series for Production, Area or Yield. Ratio is not stored here
  /// (it needs a CroplandSeries); asking for it throws.
  const std::vector<double>& series(Variable v) const;

  /// Index of a calendar year, or -1 when the year is not in the panel.
  int index_of_year(int year) const;
};

/// Total cultivated area per year (all crops together), kha.
struct CroplandSeries {
  std::vector<int> years;
  std::vector<double> cropland;
  /// true when read from an explicit file column, false when synthesized
  /// as the per-year sum of crop areas.
  bool from_explicit_column = false;

  /// Cropland of a calendar year; throws when the year is absent.
  double value_at(int year) const;
  bool has_year(int year) const;
};

/// Annual production of one crop in one department, kt. Zero production is
/// a valid value (departments that do not grow the crop).
struct DepartmentPanel {
  std::string department;
  std::string crop;
  std::vector<int> years;
  std::vector<double> production;
};

struct RainfallCell {
  int year;
  int decade;      // 1..36, three per month
  double rain_mm;  // country-average rainfall of the 10-day period
};

/// Decadal country-average rainfall, sorted by (year, decade), unique keys.
struct RainfallPanel {
  std::vector<RainfallCell> cells;

  /// Rainfall of (year, decade) or a negative value when absent.
  double find(int year, int decade) const;
  std::vector<int> years() const;
};

struct ValidationIssue {
  std::string locator;  // "line 12" or "crop millet, year 2005"
  std::string rule;
};

struct ValidationReport {
  std::vector<ValidationIssue> errors;
  std::vector<ValidationIssue> warnings;

  bool ok() const { return errors.empty(); }
  void error(std::string locator, std::string rule);
  void warn(std::string locator, std::string rule);
};

}  // namespace cropreq
