#include "cli/output.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "gibbsdice/datasets.hpp"

namespace gibbsdice::cli {

Format parse_format(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + name + "' (expected table, csv or json)");
}

std::string format_name(Format f) {
  switch (f) {
    case Format::Table: return "table";
    case Format::Csv: return "csv";
    case Format::Json: return "json";
  }
  return "table";
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string table_text(const Cell& c) {
  char buf[64];
  switch (c.kind) {
    case Cell::Kind::Text: return c.text;
    case Cell::Kind::Integer: return std::to_string(c.integer);
    case Cell::Kind::Percent:
      std::snprintf(buf, sizeof buf, "%.1f", 100.0 * c.number);
      return buf;
    case Cell::Kind::Number:
      std::snprintf(buf, sizeof buf, "%.6g", c.number);
      return buf;
  }
  return {};
}

std::string csv_text(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::Text: {
      if (c.text.find_first_of(",\"\n") == std::string::npos) return c.text;
      std::string q = "\"";
      for (char ch : c.text) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return q + "\"";
    }
    case Cell::Kind::Integer: return std::to_string(c.integer);
    case Cell::Kind::Percent: return format_number(100.0 * c.number);
    case Cell::Kind::Number: return format_number(c.number);
  }
  return {};
}

void render_table(const Report& report, std::ostream& out) {
  bool first = true;
  for (const Table& t : report.tables) {
    if (!first) out << '\n';
    first = false;
    if (!t.title.empty()) out << t.title << '\n';
    std::vector<std::size_t> width(t.columns.size(), 0);
    std::vector<std::vector<std::string>> text;
    for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
    for (const auto& row : t.rows) {
      auto& line = text.emplace_back();
      for (std::size_t i = 0; i < row.size(); ++i) {
        line.push_back(table_text(row[i]));
        width[i] = std::max(width[i], line.back().size());
      }
    }
    const auto emit = [&](const std::vector<std::string>& cells) {
      std::string line;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += "  ";
        line += std::string(width[i] - cells[i].size(), ' ') + cells[i];
      }
      out << line << '\n';
    };
    emit(t.columns);
    for (const auto& line : text) emit(line);
  }
}

void render_csv(const Report& report, std::ostream& out) {
  bool first = true;
  for (const Table& t : report.tables) {
    if (!first) out << '\n';
    first = false;
    out << "# " << t.title << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_text(row[i]);
      out << '\n';
    }
  }
}

}  // namespace

void render(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::Table:
      render_table(report, out);
      break;
    case Format::Csv:
      render_csv(report, out);
      break;
    case Format::Json: {
      nlohmann::ordered_json envelope;
      envelope["schema"] = "gibbsdice-output/1";
      envelope["command"] = report.command;
      envelope["arguments"] = report.arguments;
      envelope["input_digest"] = report.input_digest;
      envelope["results"] = report.results;
      out << envelope.dump(2) << '\n';
      break;
    }
  }
}

}  // namespace gibbsdice::cli
