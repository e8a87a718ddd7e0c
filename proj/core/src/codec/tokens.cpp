#include "strategos/codec/tokens.h"

namespace strategos::codec {

TokenEstimate estimate_tokens(std::string_view text) {
  TokenEstimate e;
  e.input_tokens = static_cast<long long>((text.size() + 3) / 4);
  e.method = "bytes4";
  return e;
}

TokenEstimator default_estimator() {
  return [](std::string_view text) { return estimate_tokens(text); };
}

}  // namespace strategos::codec
