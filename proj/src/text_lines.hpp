#pragma once

// Shared tokenizer for the graph and labeled-graph text formats.

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hcordial/graph.hpp"

namespace hcordial::detail {

struct TextLine {
  std::size_t number = 0;  // 1-based
  std::vector<std::string_view> tokens;
};

inline std::vector<TextLine> content_lines(std::string_view text) {
  std::vector<TextLine> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    TextLine tl{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) tl.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tl.tokens.empty() || tl.tokens.front().front() == '#') continue;
    out.push_back(std::move(tl));
  }
  return out;
}

template <typename Int>
Int parse_int(std::string_view token, std::size_t line) {
  Int value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" +
                     std::string(token) + "'");
  }
  return value;
}

}  // namespace hcordial::detail
