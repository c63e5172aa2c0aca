#pragma once

#include <optional>
#include <string_view>

namespace opinion {

enum class PosTag { noun, verb, adj, adv };

std::string_view to_string(PosTag t) noexcept;
std::optional<PosTag> parse_pos_tag(std::string_view s) noexcept;

}  // namespace opinion
