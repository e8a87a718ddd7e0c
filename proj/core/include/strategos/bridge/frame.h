#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace strategos::bridge {

// Wire format: 4-byte big-endian payload length, then UTF-8 payload bytes.
inline constexpr std::uint32_t kMaxFramePayload = 16u * 1024u * 1024u;

std::string encode_frame(std::string_view payload);

// Incremental decoder. Feed arbitrary byte chunks; pull complete payloads.
// A declared length beyond kMaxFramePayload poisons the stream (the
// connection must be closed).
class FrameParser {
 public:
  void feed(std::string_view bytes);
  std::optional<std::string> next();
  bool poisoned() const { return poisoned_; }
  std::size_t buffered() const { return buffer_.size(); }

 private:
  std::string buffer_;
  bool poisoned_ = false;
};

}  // namespace strategos::bridge
