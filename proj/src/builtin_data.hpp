#pragma once

#include <array>
#include <string_view>

namespace gibbsdice::detail {

struct BuiltinText {
  std::string_view name;
  std::string_view text;
};

extern const std::array<BuiltinText, 6> kBuiltinTexts;

}  // namespace gibbsdice::detail
