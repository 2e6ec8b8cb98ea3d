#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cropreq/types.hpp"

namespace cropreq {

// File schemas (comma delimiter, '.' decimal point, UTF-8, header row):
//   national:   crop,year,production_kt,area_kha,yield_tha[,cropland_kha]
//   department: department,crop,year,production_kt
//   rainfall:   year,decade,rain_mm

struct NationalData {
  std::vector<CropPanel> panels;  // sorted by crop name, years ascending
  CroplandSeries cropland;
  ValidationReport report;
};

NationalData load_national_panel(const std::string& path);
NationalData parse_national_panel(const std::string& text);

/// Normalized form: crops alphabetical, years ascending, canonical number
/// formatting. The cropland column is written only when it came from an
/// explicit column, so re-loading reproduces the same normalized bytes.
std::string write_national_panel(const std::vector<CropPanel>& panels,
                                 const CroplandSeries& cropland);

struct DepartmentData {
  std::vector<DepartmentPanel> panels;  // sorted by (department, crop)
  ValidationReport report;
};

DepartmentData load_department_panel(const std::string& path);
DepartmentData parse_department_panel(const std::string& text);
std::string write_department_panel(const std::vector<DepartmentPanel>& panels);

struct RainfallData {
  RainfallPanel panel;
  ValidationReport report;
};

RainfallData load_rainfall_panel(const std::string& path);
RainfallData parse_rainfall_panel(const std::string& text);
std::string write_rainfall_panel(const RainfallPanel& panel);

/// Thrown by the pipeline when an input fails validation; carries the
/// report so the CLI can print every error with its locator.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string what, ValidationReport report)
      : std::runtime_error(std::move(what)), report(std::move(report)) {}

  ValidationReport report;
};

}  // namespace cropreq
