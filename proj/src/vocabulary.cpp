#include "opinion/vocabulary.hpp"

#include <algorithm>

namespace opinion::vocab {

namespace {

// Kept sorted for binary search.
const std::vector<std::string_view> kNegations = [] {
  std::vector<std::string_view> v = {
      "not",    "no",     "never",  "nt",      "neither", "nor",      "cannot",
      "dont",   "doesnt", "didnt",  "isnt",    "arent",   "wasnt",    "werent",
      "wont",   "cant",   "couldnt", "shouldnt", "wouldnt", "havent", "hasnt",
      "hadnt",  "aint",   "mustnt", "neednt"};
  std::sort(v.begin(), v.end());
  return v;
}();

const std::vector<std::string_view> kAmplifiers = {
    "absolutely",   "amazingly",   "completely", "considerably", "decidedly",
    "deeply",       "enormously",  "entirely",   "especially",   "exceptionally",
    "extremely",    "fully",       "greatly",    "highly",       "hugely",
    "incredibly",   "intensely",   "majorly",    "more",         "most",
    "particularly", "purely",      "quite",      "really",       "remarkably",
    "so",           "substantially", "thoroughly", "totally",    "tremendously",
    "unbelievably", "unusually",   "utterly",    "very"};

const std::vector<std::string_view> kDampeners = {
    "almost", "barely", "hardly", "kinda", "less", "little", "marginally",
    "occasionally", "partly", "scarcely", "slightly", "somewhat", "sorta"};

bool contains(const std::vector<std::string_view>& sorted, std::string_view w) {
  return std::binary_search(sorted.begin(), sorted.end(), w);
}

}  // namespace

bool is_negation(std::string_view word) noexcept { return contains(kNegations, word); }

std::optional<double> booster_direction(std::string_view word) noexcept {
  if (contains(kAmplifiers, word)) return 1.0;
  if (contains(kDampeners, word)) return -1.0;
  return std::nullopt;
}

bool is_booster(std::string_view word) noexcept { return booster_direction(word).has_value(); }

const std::vector<std::string_view>& negations() { return kNegations; }
const std::vector<std::string_view>& amplifiers() { return kAmplifiers; }
const std::vector<std::string_view>& dampeners() { return kDampeners; }

}  // namespace opinion::vocab
