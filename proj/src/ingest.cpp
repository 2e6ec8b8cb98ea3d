#include "cropreq/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "cropreq/csv.hpp"

namespace cropreq {

namespace {

std::string line_locator(std::size_t line_no) { return "line " + std::to_string(line_no); }

std::string pct1(double frac) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f%%", 100.0 * frac);
  return buf;
}

struct NationalRow {
  std::size_t line_no;
  int year;
  double production, area, yield;
  double cropland = -1.0;  // <0 when the column is absent
};

}  // namespace

NationalData parse_national_panel(const std::string& text) {
  NationalData out;
  ValidationReport& rep = out.report;
  const csv::Table table = csv::read_string(text);

  const char* required[] = {"crop", "year", "production_kt", "area_kha", "yield_tha"};
  for (const char* name : required) {
    if (!table.column(name)) {
      rep.error("header", std::string("missing column '") + name + "'");
      return out;
    }
  }
  const auto c_crop = *table.column("crop");
  const auto c_year = *table.column("year");
  const auto c_prod = *table.column("production_kt");
  const auto c_area = *table.column("area_kha");
  const auto c_yield = *table.column("yield_tha");
  const auto c_cropland = table.column("cropland_kha");
  const std::size_t n_cols = table.header.size();

  std::map<std::string, std::vector<NationalRow>> by_crop;
  std::map<int, std::pair<double, std::size_t>> cropland_by_year;  // value, first line

  for (const auto& row : table.rows) {
    if (row.fields.size() != n_cols) {
      rep.error(line_locator(row.line_no), "malformed row: expected " +
                                               std::to_string(n_cols) + " fields, got " +
                                               std::to_string(row.fields.size()));
      continue;
    }
    const std::string& crop = row.fields[c_crop];
    NationalRow r;
    r.line_no = row.line_no;
    if (crop.empty() || !csv::parse_int(row.fields[c_year], r.year) ||
        !csv::parse_double(row.fields[c_prod], r.production) ||
        !csv::parse_double(row.fields[c_area], r.area) ||
        !csv::parse_double(row.fields[c_yield], r.yield) ||
        (c_cropland && !csv::parse_double(row.fields[*c_cropland], r.cropland))) {
      rep.error(line_locator(row.line_no), "malformed row: unparseable field");
      continue;
    }
    if (r.production <= 0.0 || r.area <= 0.0 || r.yield <= 0.0 ||
        (c_cropland && r.cropland <= 0.0)) {
      rep.error(line_locator(row.line_no), "non-positive value");
      continue;
    }
    auto& rows = by_crop[crop];
    const bool dup = std::any_of(rows.begin(), rows.end(),
                                 [&](const NationalRow& o) { return o.year == r.year; });
    if (dup) {
      rep.error(line_locator(row.line_no),
                "duplicate year " + std::to_string(r.year) + " for crop " + crop);
      continue;
    }
    if (c_cropland) {
      auto [it, inserted] = cropland_by_year.try_emplace(r.year, r.cropland, r.line_no);
      if (!inserted && it->second.first != r.cropland) {
        rep.error(line_locator(row.line_no),
                  "inconsistent cropland for year " + std::to_string(r.year));
        continue;
      }
    }
    rows.push_back(r);
  }

  for (auto& [crop, rows] : by_crop) {
    std::sort(rows.begin(), rows.end(),
              [](const NationalRow& a, const NationalRow& b) { return a.year < b.year; });
    bool gap = false;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      for (int y = rows[i - 1].year + 1; y < rows[i].year; ++y) {
        rep.error("crop " + crop,
                  "missing year " + std::to_string(y) + " (series must be gap-free)");
        gap = true;
      }
    }
    if (gap) continue;  // series rejected

    CropPanel panel;
    panel.crop = crop;
    for (const auto& r : rows) {
      panel.years.push_back(r.year);
      panel.production.push_back(r.production);
      panel.area.push_back(r.area);
      panel.yield.push_back(r.yield);
      const double identity = r.area * r.yield;
      const double rel = std::fabs(r.production - identity) / identity;
      if (rel > 0.05)
        rep.warn("crop " + crop + ", year " + std::to_string(r.year),
                 "unit identity violated by " + pct1(rel));
    }
    out.panels.push_back(std::move(panel));
  }
  // by_crop is an ordered map, so panels come out crop-alphabetical

  CroplandSeries& cl = out.cropland;
  if (c_cropland) {
    cl.from_explicit_column = true;
    for (const auto& [year, vl] : cropland_by_year) {
      cl.years.push_back(year);
      cl.cropland.push_back(vl.first);
    }
  } else {
    cl.from_explicit_column = false;
    std::map<int, double> sums;
    for (const auto& p : out.panels)
      for (std::size_t i = 0; i < p.size(); ++i) sums[p.years[i]] += p.area[i];
    for (const auto& [year, sum] : sums) {
      cl.years.push_back(year);
      cl.cropland.push_back(sum);
    }
    if (!out.panels.empty())
      rep.warn("cropland", "no cropland_kha column: synthesized as per-year sum of crop areas");
  }
  for (const auto& p : out.panels) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!cl.has_year(p.years[i])) {
        rep.error("cropland", "no cropland value for year " + std::to_string(p.years[i]));
        continue;
      }
      if (cl.value_at(p.years[i]) < p.area[i])
        rep.error("cropland, year " + std::to_string(p.years[i]),
                  "cropland below the area of crop " + p.crop);
    }
  }
  return out;
}

NationalData load_national_panel(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_national_panel(buf.str());
}

std::string write_national_panel(const std::vector<CropPanel>& panels,
                                 const CroplandSeries& cropland) {
  std::vector<const CropPanel*> sorted;
  for (const auto& p : panels) sorted.push_back(&p);
  std::sort(sorted.begin(), sorted.end(),
            [](const CropPanel* a, const CropPanel* b) { return a->crop < b->crop; });

  std::string out = "crop,year,production_kt,area_kha,yield_tha";
  if (cropland.from_explicit_column) out += ",cropland_kha";
  out += '\n';
  for (const CropPanel* p : sorted) {
    for (std::size_t i = 0; i < p->size(); ++i) {
      out += p->crop + ',' + std::to_string(p->years[i]) + ',' +
             csv::format(p->production[i]) + ',' + csv::format(p->area[i]) + ',' +
             csv::format(p->yield[i]);
      if (cropland.from_explicit_column)
        out += ',' + csv::format(cropland.value_at(p->years[i]));
      out += '\n';
    }
  }
  return out;
}

DepartmentData parse_department_panel(const std::string& text) {
  DepartmentData out;
  ValidationReport& rep = out.report;
  const csv::Table table = csv::read_string(text);

  for (const char* name : {"department", "crop", "year", "production_kt"}) {
    if (!table.column(name)) {
      rep.error("header", std::string("missing column '") + name + "'");
      return out;
    }
  }
  const auto c_dep = *table.column("department");
  const auto c_crop = *table.column("crop");
  const auto c_year = *table.column("year");
  const auto c_prod = *table.column("production_kt");
  const std::size_t n_cols = table.header.size();

  struct Key {
    std::string department, crop;
    auto operator<=>(const Key&) const = default;
  };
  std::map<Key, std::vector<std::pair<int, double>>> series;

  for (const auto& row : table.rows) {
    if (row.fields.size() != n_cols) {
      rep.error(line_locator(row.line_no), "malformed row: wrong field count");
      continue;
    }
    Key key{row.fields[c_dep], row.fields[c_crop]};
    int year = 0;
    double prod = 0.0;
    if (key.department.empty() || key.crop.empty() ||
        !csv::parse_int(row.fields[c_year], year) ||
        !csv::parse_double(row.fields[c_prod], prod)) {
      rep.error(line_locator(row.line_no), "malformed row: unparseable field");
      continue;
    }
    if (prod < 0.0) {
      rep.error(line_locator(row.line_no), "negative production");
      continue;
    }
    auto& vec = series[key];
    const bool dup = std::any_of(vec.begin(), vec.end(),
                                 [&](const auto& o) { return o.first == year; });
    if (dup) {
      rep.error(line_locator(row.line_no), "duplicate (department, crop, year) key: " +
                                               key.department + "/" + key.crop + "/" +
                                               std::to_string(year));
      continue;
    }
    vec.emplace_back(year, prod);
  }

  for (auto& [key, vec] : series) {
    std::sort(vec.begin(), vec.end());
    DepartmentPanel p;
    p.department = key.department;
    p.crop = key.crop;
    for (const auto& [year, prod] : vec) {
      p.years.push_back(year);
      p.production.push_back(prod);
    }
    out.panels.push_back(std::move(p));
  }
  return out;
}

DepartmentData load_department_panel(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_department_panel(buf.str());
}

std::string write_department_panel(const std::vector<DepartmentPanel>& panels) {
  std::vector<const DepartmentPanel*> sorted;
  for (const auto& p : panels) sorted.push_back(&p);
  std::sort(sorted.begin(), sorted.end(), [](const DepartmentPanel* a, const DepartmentPanel* b) {
    return std::tie(a->department, a->crop) < std::tie(b->department, b->crop);
  });
  std::string out = "department,crop,year,production_kt\n";
  for (const DepartmentPanel* p : sorted)
    for (std::size_t i = 0; i < p->years.size(); ++i)
      out += p->department + ',' + p->crop + ',' + std::to_string(p->years[i]) + ',' +
             csv::format(p->production[i]) + '\n';
  return out;
}

RainfallData parse_rainfall_panel(const std::string& text) {
  RainfallData out;
  ValidationReport& rep = out.report;
  const csv::Table table = csv::read_string(text);

  for (const char* name : {"year", "decade", "rain_mm"}) {
    if (!table.column(name)) {
      rep.error("header", std::string("missing column '") + name + "'");
      return out;
    }
  }
  const auto c_year = *table.column("year");
  const auto c_dec = *table.column("decade");
  const auto c_rain = *table.column("rain_mm");
  const std::size_t n_cols = table.header.size();

  std::set<std::pair<int, int>> seen;
  for (const auto& row : table.rows) {
    if (row.fields.size() != n_cols) {
      rep.error(line_locator(row.line_no), "malformed row: wrong field count");
      continue;
    }
    int year = 0, decade = 0;
    double rain = 0.0;
    if (!csv::parse_int(row.fields[c_year], year) ||
        !csv::parse_int(row.fields[c_dec], decade) ||
        !csv::parse_double(row.fields[c_rain], rain)) {
      rep.error(line_locator(row.line_no), "malformed row: unparseable field");
      continue;
    }
    if (decade < 1 || decade > 36) {
      rep.error(line_locator(row.line_no),
                "decade index " + std::to_string(decade) + " outside 1..36");
      continue;
    }
    if (rain < 0.0) {
      rep.error(line_locator(row.line_no), "negative rainfall");
      continue;
    }
    if (!seen.insert({year, decade}).second) {
      rep.error(line_locator(row.line_no), "duplicate (year, decade) cell");
      continue;
    }
    out.panel.cells.push_back({year, decade, rain});
  }
  std::sort(out.panel.cells.begin(), out.panel.cells.end(),
            [](const RainfallCell& a, const RainfallCell& b) {
              return std::tie(a.year, a.decade) < std::tie(b.year, b.decade);
            });
  return out;
}

RainfallData load_rainfall_panel(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_rainfall_panel(buf.str());
}

std::string write_rainfall_panel(const RainfallPanel& panel) {
  std::string out = "year,decade,rain_mm\n";
  for (const auto& c : panel.cells)
    out += std::to_string(c.year) + ',' + std::to_string(c.decade) + ',' +
           csv::format(c.rain_mm) + '\n';
  return out;
}

}  // namespace cropreq
