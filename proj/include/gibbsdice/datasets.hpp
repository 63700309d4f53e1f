#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gibbsdice/estimation.hpp"
#include "gibbsdice/model.hpp"

namespace gibbsdice {

/// Six-face homogeneous cuboid with per-face toss counts.
struct CuboidExperiment {
  CuboidSpec cuboid;
  TossCounts counts;
};

/// Die given by center-of-gravity heights and a normalization length.
struct GeneralDieExperiment {
  GeneralDieSpec die;
  TossCounts counts;
};

/// Family of xxy-cuboids tossed under the same conditions.
struct XxyFamily {
  std::vector<XxyObservation> rows;
};

struct ExperimentRecord {
  std::string name;
  std::string source;
  std::string note;
  std::variant<XxyFamily, CuboidExperiment, GeneralDieExperiment> data;
};

bool operator==(const CuboidSpec& a, const CuboidSpec& b);
bool operator==(const GeneralDieSpec& a, const GeneralDieSpec& b);
bool operator==(const CuboidExperiment& a, const CuboidExperiment& b);
bool operator==(const GeneralDieExperiment& a, const GeneralDieExperiment& b);
bool operator==(const XxyFamily& a, const XxyFamily& b);
bool operator==(const ExperimentRecord& a, const ExperimentRecord& b);

/// Names accepted by load_builtin, in a stable order.
const std::vector<std::string>& builtin_names();

/// Throws DatasetError listing the available names if `name` is unknown.
ExperimentRecord load_builtin(std::string_view name);

/// Raw bundled text of a builtin dataset.
std::string_view builtin_text(std::string_view name);

/// Parse the comma-separated dataset format (see docs/dataset-format.md).
ExperimentRecord parse_experiment(std::string_view content);

/// Inverse of parse_experiment; numbers use the shortest round-trip form.
std::string serialize_experiment(const ExperimentRecord& record);

/// Shortest decimal string that parses back to exactly `value`.
std::string format_number(double value);

}  // namespace gibbsdice
