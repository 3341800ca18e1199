#include "hybrid/location.h"

#include <charconv>
#include <vector>

#include "hybrid/error.h"

namespace hybrid {

std::string Location::ToString() const {
  std::string s = "(" + std::to_string(chapter) + ":" + std::to_string(verse);
  if (token) {
    s += ":" + std::to_string(*token);
    if (segment) s += ":" + std::to_string(*segment);
  }
  return s + ")";
}

Location ParseLocation(std::string_view text) {
  auto fail = [&]() -> Location {
    throw ParseError("malformed location '" + std::string(text) + "'");
  };
  if (text.size() < 5 || text.front() != '(' || text.back() != ')') fail();
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<int> parts;
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t colon = body.find(':', pos);
    if (colon == std::string_view::npos) colon = body.size();
    std::string_view piece = body.substr(pos, colon - pos);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() ||
        ptr != piece.data() + piece.size() || value < 1) {
      fail();
    }
    parts.push_back(value);
    pos = colon + 1;
  }
  if (parts.size() < 2 || parts.size() > 4) fail();
  Location loc;
  loc.chapter = parts[0];
  loc.verse = parts[1];
  if (parts.size() > 2) loc.token = parts[2];
  if (parts.size() > 3) loc.segment = parts[3];
  return loc;
}

}  // namespace hybrid
