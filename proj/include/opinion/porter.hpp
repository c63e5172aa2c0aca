#pragma once

#include <string>
#include <string_view>

namespace opinion {

// The original five-step Porter suffix stripper. Words that are not made of
// lowercase ASCII letters, and words of one or two letters, come back unchanged.
std::string porter_stem(std::string_view word);

}  // namespace opinion
