#include "lorentzvol/output.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace lorentzvol {

Cell Cell::of(double v) {
  Cell c;
  c.kind = Kind::Real;
  c.real = v;
  return c;
}
Cell Cell::of_int(long long v) {
  Cell c;
  c.kind = Kind::Int;
  c.integer = v;
  return c;
}
Cell Cell::of(std::string v) {
  Cell c;
  c.kind = Kind::Text;
  c.text = std::move(v);
  return c;
}
Cell Cell::of(bool v) {
  Cell c;
  c.kind = Kind::Boolean;
  c.boolean = v;
  return c;
}

OutputFormat output_format_from_name(const std::string& name) {
  if (name == "table") return OutputFormat::table;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format '" + name + "' (expected table, csv or json)");
}

namespace {

std::string format_real(double v, bool sci3) {
  char buf[64];
  if (sci3)
    std::snprintf(buf, sizeof(buf), "%.3e", v);
  else
    std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string cell_text(const Cell& c, bool sci3) {
  switch (c.kind) {
    case Cell::Kind::Real: return format_real(c.real, sci3);
    case Cell::Kind::Int: return std::to_string(c.integer);
    case Cell::Kind::Text: return c.text;
    case Cell::Kind::Boolean: return c.boolean ? "true" : "false";
  }
  return "";
}

}  // namespace

std::string render_table(const OutputRecord& rec) {
  const size_t ncols = rec.columns.size();
  std::vector<std::vector<std::string>> grid;
  grid.reserve(rec.rows.size() + 1);
  std::vector<std::string> head;
  for (const Column& col : rec.columns) head.push_back(col.name);
  grid.push_back(std::move(head));
  for (const auto& row : rec.rows) {
    std::vector<std::string> line;
    for (size_t i = 0; i < ncols; ++i) line.push_back(cell_text(row[i], rec.columns[i].sci3));
    grid.push_back(std::move(line));
  }

  std::vector<size_t> width(ncols, 0);
  for (const auto& line : grid)
    for (size_t i = 0; i < ncols; ++i) width[i] = std::max(width[i], line[i].size());

  std::string out;
  out += "# " + rec.command;
  for (const auto& [key, value] : rec.inputs) out += " " + key + "=" + value;
  out += "\n";
  for (const auto& line : grid) {
    for (size_t i = 0; i < ncols; ++i) {
      if (i) out += "  ";
      out += line[i];
      out.append(width[i] - line[i].size(), ' ');
    }
    out += "\n";
  }
  for (const std::string& w : rec.warnings) out += "warning: " + w + "\n";
  return out;
}

std::string render_csv(const OutputRecord& rec) {
  std::string out;
  for (size_t i = 0; i < rec.columns.size(); ++i) {
    if (i) out += ",";
    out += rec.columns[i].name;
  }
  out += "\n";
  for (const auto& row : rec.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      // always full precision in csv; sci3 is a table-mode affordance
      out += cell_text(row[i], false);
    }
    out += "\n";
  }
  return out;
}

std::string render_json(const OutputRecord& rec) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = rec.command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (const auto& [key, value] : rec.inputs) inputs[key] = value;
  doc["inputs"] = std::move(inputs);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : rec.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (size_t i = 0; i < row.size(); ++i) {
      const Cell& c = row[i];
      const std::string& name = rec.columns[i].name;
      switch (c.kind) {
        case Cell::Kind::Real:
          if (std::isfinite(c.real))
            obj[name] = c.real;
          else
            obj[name] = nullptr;  // JSON has no inf/nan
          break;
        case Cell::Kind::Int: obj[name] = c.integer; break;
        case Cell::Kind::Text: obj[name] = c.text; break;
        case Cell::Kind::Boolean: obj[name] = c.boolean; break;
      }
    }
    rows.push_back(std::move(obj));
  }
  doc["results"] = std::move(rows);
  doc["warnings"] = rec.warnings;
  return doc.dump(2) + "\n";
}

std::string render(const OutputRecord& rec, OutputFormat format) {
  switch (format) {
    case OutputFormat::table: return render_table(rec);
    case OutputFormat::csv: return render_csv(rec);
    case OutputFormat::json: return render_json(rec);
  }
  return "";
}

}  // namespace lorentzvol
