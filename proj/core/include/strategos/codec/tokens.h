#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace strategos::codec {

struct TokenEstimate {
  long long input_tokens = 0;
  std::string method;
};

// Default estimator: ceil(bytes / 4), suitable for ASCII-dominant text.
TokenEstimate estimate_tokens(std::string_view text);

// Pluggable estimation point for exact tokenizers.
using TokenEstimator = std::function<TokenEstimate(std::string_view)>;
TokenEstimator default_estimator();

}  // namespace strategos::codec
