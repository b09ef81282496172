#include "ratcat/format.hpp"

#include <cctype>
#include <charconv>

#include "ratcat/errors.hpp"

namespace ratcat {

std::vector<int> parse_int_list(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = s.find(',', pos);
    const std::string_view item = std::string_view(s).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    int value = 0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (item.empty() || ec != std::errc() || ptr != last) {
      throw Error(ErrorCode::ParseError, "bad integer '" + std::string(item) + "' in '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

SetPartition parse_partition(std::string_view text, int n) {
  std::vector<SetPartition::Block> blocks;
  int count = 0;
  std::size_t pos = 0;
  while (true) {
    const std::size_t bar = text.find('|', pos);
    const std::string_view piece = text.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos);
    std::vector<int> block = parse_int_list(piece);
    if (block.empty()) throw Error(ErrorCode::ParseError, "empty block in '" + std::string(text) + "'");
    count += static_cast<int>(block.size());
    blocks.push_back(std::move(block));
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  return SetPartition(n > 0 ? n : count, std::move(blocks));
}

std::string format_block(std::span<const int> block) { return format_int_list(block); }

std::string format_partition(const SetPartition& p) {
  std::string out;
  for (const auto& block : p.blocks()) {
    if (!out.empty()) out += '|';
    out += format_block(block);
  }
  return out;
}

std::string format_int_list(std::span<const int> xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace ratcat
