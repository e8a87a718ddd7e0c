#include "strategos/bridge/frame.h"

namespace strategos::bridge {

std::string encode_frame(std::string_view payload) {
  const std::uint32_t len = static_cast<std::uint32_t>(payload.size());
  std::string out;
  out.reserve(payload.size() + 4);
  out.push_back(static_cast<char>((len >> 24) & 0xFF));
  out.push_back(static_cast<char>((len >> 16) & 0xFF));
  out.push_back(static_cast<char>((len >> 8) & 0xFF));
  out.push_back(static_cast<char>(len & 0xFF));
  out.append(payload);
  return out;
}

void FrameParser::feed(std::string_view bytes) {
  if (poisoned_) return;
  buffer_.append(bytes);
}

std::optional<std::string> FrameParser::next() {
  if (poisoned_ || buffer_.size() < 4) return std::nullopt;
  const auto b = [&](std::size_t i) { return static_cast<std::uint32_t>(static_cast<unsigned char>(buffer_[i])); };
  const std::uint32_t len = (b(0) << 24) | (b(1) << 16) | (b(2) << 8) | b(3);
  if (len > kMaxFramePayload) {
    poisoned_ = true;
    return std::nullopt;
  }
  if (buffer_.size() < 4 + static_cast<std::size_t>(len)) return std::nullopt;
  std::string payload = buffer_.substr(4, len);
  buffer_.erase(0, 4 + static_cast<std::size_t>(len));
  return payload;
}

}  // namespace strategos::bridge
