#include "gibbsdice/datasets.hpp"

#include "builtin_data.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <system_error>

namespace gibbsdice {

bool operator==(const CuboidSpec& a, const CuboidSpec& b) {
  return a.s1 == b.s1 && a.s2 == b.s2 && a.s3 == b.s3;
}
bool operator==(const GeneralDieSpec& a, const GeneralDieSpec& b) {
  return a.heights == b.heights && a.scale == b.scale;
}
bool operator==(const CuboidExperiment& a, const CuboidExperiment& b) {
  return a.cuboid == b.cuboid && a.counts == b.counts;
}
bool operator==(const GeneralDieExperiment& a, const GeneralDieExperiment& b) {
  return a.die == b.die && a.counts == b.counts;
}
bool operator==(const XxyFamily& a, const XxyFamily& b) { return a.rows == b.rows; }
bool operator==(const ExperimentRecord& a, const ExperimentRecord& b) {
  return a.name == b.name && a.source == b.source && a.note == b.note && a.data == b.data;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& b : detail::kBuiltinTexts) out.emplace_back(b.name);
    return out;
  }();
  return names;
}

std::string_view builtin_text(std::string_view name) {
  for (const auto& b : detail::kBuiltinTexts) {
    if (b.name == name) return b.text;
  }
  std::string available;
  for (const auto& n : builtin_names()) available += (available.empty() ? "" : ", ") + n;
  throw DatasetError("unknown builtin dataset '" + std::string(name) +
                     "'; available: " + available);
}

ExperimentRecord load_builtin(std::string_view name) { return parse_experiment(builtin_text(name)); }

std::string format_number(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_length(std::string_view field, std::size_t line, std::size_t column,
                    std::string_view what) {
  double v = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw DatasetError("expected a number for " + std::string(what) + ", got '" +
                           std::string(field) + "'",
                       line, column);
  }
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DatasetError(std::string(what) + " must be positive, got " + std::string(field), line,
                       column);
  }
  return v;
}

std::uint64_t parse_count(std::string_view field, std::size_t line, std::size_t column,
                          std::string_view what) {
  if (!field.empty() && field.front() == '-') {
    throw DatasetError(std::string(what) + " must not be negative, got " + std::string(field),
                       line, column);
  }
  std::uint64_t v = 0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw DatasetError("expected a non-negative integer for " + std::string(what) + ", got '" +
                           std::string(field) + "'",
                       line, column);
  }
  return v;
}

struct NumberedLine {
  std::size_t number;
  std::vector<std::string_view> fields;
};

}  // namespace

ExperimentRecord parse_experiment(std::string_view content) {
  ExperimentRecord record;
  std::optional<std::vector<NumberedLine>> xxy_rows;
  std::optional<NumberedLine> sides, heights, scale, counts;
  std::optional<NumberedLine> name_line, source_line, note_line;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const auto nl = content.find('\n', pos);
    std::string_view raw = content.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? content.size() + 1 : nl + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto comma = line.find(',');
    const std::string_view key = trim(line.substr(0, comma));
    const std::string_view rest =
        comma == std::string_view::npos ? std::string_view{} : trim(line.substr(comma + 1));

    const auto once = [&](std::optional<NumberedLine>& slot) {
      if (slot) throw DatasetError("duplicate '" + std::string(key) + "' line", line_no);
      slot = NumberedLine{line_no, split_fields(line)};
    };

    const auto meta = [&](std::optional<NumberedLine>& slot, std::string& value) {
      if (slot) throw DatasetError("duplicate '" + std::string(key) + "' line", line_no);
      slot = NumberedLine{line_no, {}};
      value = std::string(rest);
    };

    if (xxy_rows) {
      xxy_rows->push_back({line_no, split_fields(line)});
    } else if (key == "name") {
      meta(name_line, record.name);
    } else if (key == "source") {
      meta(source_line, record.source);
    } else if (key == "note") {
      meta(note_line, record.note);
    } else if (key == "sx") {
      const auto header = split_fields(line);
      if (header != std::vector<std::string_view>{"sx", "sy", "N", "nxx"}) {
        throw DatasetError("xxy header must be exactly 'sx,sy,N,nxx'", line_no);
      }
      xxy_rows.emplace();
    } else if (key == "sides") {
      once(sides);
    } else if (key == "heights") {
      once(heights);
    } else if (key == "scale") {
      once(scale);
    } else if (key == "counts") {
      once(counts);
    } else {
      throw DatasetError("unrecognized line '" + std::string(key) +
                             "'; expected name, source, note, sides, heights, scale, counts "
                             "or the header 'sx,sy,N,nxx'",
                         line_no, 1);
    }
  }

  if (xxy_rows) {
    if (sides || heights || scale || counts) {
      throw DatasetError("an xxy table cannot be mixed with sides/heights/scale/counts lines");
    }
    if (xxy_rows->empty()) throw DatasetError("xxy table has no rows");
    XxyFamily family;
    for (const auto& row : *xxy_rows) {
      if (row.fields.size() != 4) {
        throw DatasetError("expected 4 columns (sx,sy,N,nxx), found " +
                               std::to_string(row.fields.size()),
                           row.number);
      }
      XxyObservation o;
      o.sx = parse_length(row.fields[0], row.number, 1, "sx");
      o.sy = parse_length(row.fields[1], row.number, 2, "sy");
      o.tosses = parse_count(row.fields[2], row.number, 3, "N");
      o.nxx = parse_count(row.fields[3], row.number, 4, "nxx");
      if (o.tosses == 0) throw DatasetError("N must be at least 1", row.number, 3);
      if (o.nxx > o.tosses) {
        throw DatasetError("nxx = " + std::to_string(o.nxx) + " exceeds N = " +
                               std::to_string(o.tosses),
                           row.number, 4);
      }
      family.rows.push_back(o);
    }
    record.data = std::move(family);
    return record;
  }

  if (!counts) throw DatasetError("missing 'counts' line");
  std::vector<std::uint64_t> n;
  for (std::size_t i = 1; i < counts->fields.size(); ++i) {
    n.push_back(parse_count(counts->fields[i], counts->number, i + 1, "count"));
  }
  if (n.empty()) throw DatasetError("'counts' line lists no counts", counts->number);
  std::uint64_t total = 0;
  for (auto c : n) total += c;
  if (total == 0) throw DatasetError("counts contain no observations", counts->number);

  if (sides) {
    if (heights || scale) {
      throw DatasetError("a cuboid ('sides') cannot also have 'heights' or 'scale'",
                         sides->number);
    }
    if (sides->fields.size() != 4) {
      throw DatasetError("'sides' needs exactly three side-lengths", sides->number);
    }
    CuboidSpec c{parse_length(sides->fields[1], sides->number, 2, "side-length"),
                 parse_length(sides->fields[2], sides->number, 3, "side-length"),
                 parse_length(sides->fields[3], sides->number, 4, "side-length")};
    if (n.size() != 6) {
      throw DatasetError("a cuboid has 6 faces but 'counts' lists " + std::to_string(n.size()),
                         counts->number);
    }
    record.data = CuboidExperiment{c, TossCounts(std::move(n))};
    return record;
  }

  if (!heights || !scale) {
    throw DatasetError("expected an xxy table, a 'sides' line, or 'heights' and 'scale' lines");
  }
  GeneralDieSpec die;
  for (std::size_t i = 1; i < heights->fields.size(); ++i) {
    die.heights.push_back(parse_length(heights->fields[i], heights->number, i + 1, "height"));
  }
  if (die.heights.size() < 2) {
    throw DatasetError("'heights' needs at least two states", heights->number);
  }
  if (scale->fields.size() != 2) throw DatasetError("'scale' takes one value", scale->number);
  die.scale = parse_length(scale->fields[1], scale->number, 2, "scale");
  if (n.size() != die.heights.size()) {
    throw DatasetError("'counts' lists " + std::to_string(n.size()) + " states but 'heights' lists " +
                           std::to_string(die.heights.size()),
                       counts->number);
  }
  record.data = GeneralDieExperiment{std::move(die), TossCounts(std::move(n))};
  return record;
}

std::string serialize_experiment(const ExperimentRecord& record) {
  std::ostringstream out;
  if (!record.name.empty()) out << "name," << record.name << '\n';
  if (!record.source.empty()) out << "source," << record.source << '\n';
  if (!record.note.empty()) out << "note," << record.note << '\n';

  const auto write_counts = [&out](const TossCounts& c) {
    out << "counts";
    for (auto v : c.values()) out << ',' << v;
    out << '\n';
  };

  if (const auto* cub = std::get_if<CuboidExperiment>(&record.data)) {
    out << "sides," << format_number(cub->cuboid.s1) << ',' << format_number(cub->cuboid.s2) << ','
        << format_number(cub->cuboid.s3) << '\n';
    write_counts(cub->counts);
  } else if (const auto* die = std::get_if<GeneralDieExperiment>(&record.data)) {
    out << "heights";
    for (double h : die->die.heights) out << ',' << format_number(h);
    out << "\nscale," << format_number(die->die.scale) << '\n';
    write_counts(die->counts);
  } else {
    out << "sx,sy,N,nxx\n";
    for (const auto& o : std::get<XxyFamily>(record.data).rows) {
      out << format_number(o.sx) << ',' << format_number(o.sy) << ',' << o.tosses << ',' << o.nxx
          << '\n';
    }
  }
  return out.str();
}

}  // namespace gibbsdice
