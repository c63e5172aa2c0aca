#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace opinion {

// Listed in report key order.
enum class Engine { pattern_avg, synset, valence_rule };
inline constexpr std::array<Engine, 3> kEngines = {Engine::pattern_avg, Engine::synset,
                                                   Engine::valence_rule};

std::string_view to_string(Engine e) noexcept;
std::optional<Engine> parse_engine(std::string_view s) noexcept;

struct Proportions {
  double positive = 0.0;
  double neutral = 1.0;
  double negative = 0.0;

  bool operator==(const Proportions&) const = default;
};

struct SentimentScore {
  Engine engine = Engine::valence_rule;
  double polarity = 0.0;                    // [-1, 1]
  std::optional<double> subjectivity;       // pattern_avg only
  std::optional<Proportions> proportions;   // valence_rule only

  bool operator==(const SentimentScore&) const = default;
};

}  // namespace opinion
