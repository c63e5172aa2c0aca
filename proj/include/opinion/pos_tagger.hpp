#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "opinion/pos.hpp"

namespace opinion {

// Most-frequent-tag table with suffix fallback: -ly adv, -ing/-ed verb,
// -ous/-ful/-able adj, otherwise noun.
class PosTagger {
 public:
  PosTagger() = default;
  static PosTagger load(const std::filesystem::path& path);
  static PosTagger parse(std::string_view content);

  PosTag tag(std::string_view word) const;
  std::size_t size() const noexcept { return table_.size(); }

 private:
  std::unordered_map<std::string, PosTag> table_;
};

std::vector<std::pair<std::string, PosTag>> tag_pos(const std::vector<std::string>& tokens,
                                                    const PosTagger& tagger);

}  // namespace opinion
