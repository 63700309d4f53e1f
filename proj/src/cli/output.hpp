#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace gibbsdice::cli {

enum class Format { Table, Csv, Json };

Format parse_format(const std::string& name);
std::string format_name(Format f);

/// A table cell. Percent cells hold a probability and print as "12.3" in
/// table format; csv and json always carry the full-precision value.
struct Cell {
  enum class Kind { Text, Number, Integer, Percent };
  Kind kind = Kind::Text;
  std::string text;
  double number = 0.0;
  std::int64_t integer = 0;

  static Cell str(std::string s) { return {Kind::Text, std::move(s), 0.0, 0}; }
  static Cell num(double v) { return {Kind::Number, {}, v, 0}; }
  static Cell count(std::int64_t v) { return {Kind::Integer, {}, 0.0, v}; }
  static Cell percent(double p) { return {Kind::Percent, {}, p, 0}; }
};

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Everything a command reports. `results` is the json payload; `tables`
/// are the human/csv views of the same numbers.
struct Report {
  std::string command;
  std::vector<std::string> arguments;
  std::string input_digest;
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<Table> tables;
};

void render(const Report& report, Format format, std::ostream& out);

/// FNV-1a 64-bit digest, hex encoded with an algorithm prefix.
std::string digest(const std::string& bytes);

}  // namespace gibbsdice::cli
