#pragma once

// Byte-level ASCII helpers. Everything here leaves non-ASCII UTF-8 bytes alone.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace opinion::text {

constexpr bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}
constexpr bool is_upper(char c) noexcept { return c >= 'A' && c <= 'Z'; }
constexpr bool is_lower(char c) noexcept { return c >= 'a' && c <= 'z'; }
constexpr bool is_alpha(char c) noexcept { return is_upper(c) || is_lower(c); }
constexpr char to_lower(char c) noexcept { return is_upper(c) ? static_cast<char>(c + 32) : c; }
// The 32 ASCII punctuation characters.
constexpr bool is_punct(char c) noexcept {
  return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') || (c >= '[' && c <= '`') ||
         (c >= '{' && c <= '~');
}

std::string lower(std::string_view s);
std::string_view trim(std::string_view s) noexcept;
std::vector<std::string> split_ws(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);
bool is_lowercase_word(std::string_view s) noexcept;

// FNV-1a 64-bit, rendered as 16 lowercase hex digits.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;
std::string hex64(std::uint64_t v);
std::string digest(std::string_view bytes);

// Reads a whole file; throws Error(FileNotReadable) on failure.
std::string read_file(const std::filesystem::path& path);

// Real numbers in reports: "%.12f" with trailing zeros trimmed, one kept,
// and negative zero written as 0.0.
std::string format_real(double v);
// "%.17g", used where a value must round-trip (config digests).
std::string format_exact(double v);

}  // namespace opinion::text
