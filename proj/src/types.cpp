#include "cropreq/types.hpp"

#include <algorithm>
#include <stdexcept>

namespace cropreq {

std::string variable_name(Variable v) {
  switch (v) {
    case Variable::Production: return "production";
    case Variable::Area: return "area";
    case Variable::Yield: return "yield";
    case Variable::Ratio: return "ratio";
  }
  return "?";
}

const std::vector<double>& CropPanel::series(Variable v) const {
  switch (v) {
    case Variable::Production: return production;
    case Variable::Area: return area;
    case Variable::Yield: return yield;
    case Variable::Ratio: break;
  }
  throw std::invalid_argument("ratio series requires a cropland series");
}

int CropPanel::index_of_year(int year) const {
  auto it = std::lower_bound(years.begin(), years.end(), year);
  if (it == years.end() || *it != year) return -1;
  return static_cast<int>(it - years.begin());
}

bool CroplandSeries::has_year(int year) const {
  return std::binary_search(years.begin(), years.end(), year);
}

double CroplandSeries::value_at(int year) const {
  auto it = std::lower_bound(years.begin(), years.end(), year);
  if (it == years.end() || *it != year)
    throw std::invalid_argument("cropland series has no year " + std::to_string(year));
  return cropland[static_cast<std::size_t>(it - years.begin())];
}

double RainfallPanel::find(int year, int decade) const {
  auto it = std::lower_bound(cells.begin(), cells.end(), std::pair{year, decade},
                             [](const RainfallCell& c, const std::pair<int, int>& key) {
                               return std::pair{c.year, c.decade} < key;
                             });
  if (it == cells.end() || it->year != year || it->decade != decade) return -1.0;
  return it->rain_mm;
}

std::vector<int> RainfallPanel::years() const {
  std::vector<int> out;
  for (const auto& c : cells)
    if (out.empty() || out.back() != c.year) out.push_back(c.year);
  return out;
}

void ValidationReport::error(std::string locator, std::string rule) {
  errors.push_back({std::move(locator), std::move(rule)});
}

void ValidationReport::warn(std::string locator, std::string rule) {
  warnings.push_back({std::move(locator), std::move(rule)});
}

}  // namespace cropreq
