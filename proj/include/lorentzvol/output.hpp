#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lorentzvol {

inline constexpr const char* kSchemaVersion = "1";

// One typed cell of a result row.
struct Cell {
  enum class Kind { Real, Int, Text, Boolean } kind = Kind::Real;
  double real = 0.0;
  long long integer = 0;
  std::string text;
  bool boolean = false;

  static Cell of(double v);
  static Cell of_int(long long v);
  static Cell of(std::string v);
  static Cell of(bool v);
};

struct Column {
  std::string name;
  bool sci3 = false;  // table mode renders with scientific notation, 3 decimals
};

// Everything a command prints: inputs echoed back, typed rows, warnings.
// Rendering is deterministic; repeated invocations produce identical bytes.
struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> warnings;
};

enum class OutputFormat { table, csv, json };
OutputFormat output_format_from_name(const std::string& name);

std::string render_table(const OutputRecord& rec);
// comma separator, dot decimal, header row, reals at 17 significant digits
std::string render_csv(const OutputRecord& rec);
std::string render_json(const OutputRecord& rec);
std::string render(const OutputRecord& rec, OutputFormat format);

}  // namespace lorentzvol
