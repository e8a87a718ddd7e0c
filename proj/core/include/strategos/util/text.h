#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace strategos {

std::vector<std::string> split(std::string_view s, char sep);
std::string_view trim(std::string_view s);
bool starts_with(std::string_view s, std::string_view prefix);

// Levenshtein edit distance; used for "did you mean" suggestions.
std::size_t edit_distance(std::string_view a, std::string_view b);

// Smallest edit distance match from candidates; empty when candidates empty.
std::string nearest_match(std::string_view value, const std::vector<std::string>& candidates);

}  // namespace strategos
