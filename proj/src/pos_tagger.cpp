#include "opinion/pos_tagger.hpp"

#include "opinion/error.hpp"
#include "opinion/text.hpp"

namespace opinion {

std::string_view to_string(PosTag t) noexcept {
  switch (t) {
    case PosTag::noun: return "noun";
    case PosTag::verb: return "verb";
    case PosTag::adj: return "adj";
    case PosTag::adv: return "adv";
  }
  return "noun";
}

std::optional<PosTag> parse_pos_tag(std::string_view s) noexcept {
  if (s == "noun") return PosTag::noun;
  if (s == "verb") return PosTag::verb;
  if (s == "adj") return PosTag::adj;
  if (s == "adv") return PosTag::adv;
  return std::nullopt;
}

PosTagger PosTagger::parse(std::string_view content) {
  PosTagger t;
  std::size_t line_no = 0;
  for (auto line : text::split(content, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto f = text::split(line, '\t');
    std::optional<PosTag> tag;
    if (f.size() == 2) tag = parse_pos_tag(f[1]);
    if (!tag || f[0].empty()) {
      throw Error(ErrorCode::MalformedEntry, "expected word<TAB>noun|verb|adj|adv", line_no);
    }
    if (!t.table_.emplace(std::string(f[0]), *tag).second) {
      throw Error(ErrorCode::DuplicateWord, "duplicate word '" + std::string(f[0]) + "'", line_no,
                  std::string(f[0]));
    }
  }
  return t;
}

PosTagger PosTagger::load(const std::filesystem::path& path) {
  return parse(text::read_file(path));
}

PosTag PosTagger::tag(std::string_view word) const {
  if (auto it = table_.find(std::string(word)); it != table_.end()) return it->second;
  if (word.ends_with("ly")) return PosTag::adv;
  if (word.ends_with("ing") || word.ends_with("ed")) return PosTag::verb;
  if (word.ends_with("ous") || word.ends_with("ful") || word.ends_with("able")) return PosTag::adj;
  return PosTag::noun;
}

std::vector<std::pair<std::string, PosTag>> tag_pos(const std::vector<std::string>& tokens,
                                                    const PosTagger& tagger) {
  std::vector<std::pair<std::string, PosTag>> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.emplace_back(t, tagger.tag(t));
  return out;
}

}  // namespace opinion
