#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace opinion::vocab {

// Closed lists applied to cleaned tokens, so contractions appear with the
// apostrophe already stripped ("dont", "nt").
bool is_negation(std::string_view word) noexcept;
// +1 for an amplifier, -1 for a dampener, absent otherwise.
std::optional<double> booster_direction(std::string_view word) noexcept;
bool is_booster(std::string_view word) noexcept;

const std::vector<std::string_view>& negations();
const std::vector<std::string_view>& amplifiers();
const std::vector<std::string_view>& dampeners();

}  // namespace opinion::vocab
