#ifndef HYBRID_LOCATION_H_
#define HYBRID_LOCATION_H_

#include <optional>
#include <string>
#include <string_view>

namespace hybrid {

// Chapter, verse, token and segment numbers. Token and segment are
// optional so that verse references like "(6:76)" survive a roundtrip.
struct Location {
  int chapter = 1;
  int verse = 1;
  std::optional<int> token;
  std::optional<int> segment;

  int Token() const { return token.value_or(1); }
  int Segment() const { return segment.value_or(1); }

  std::string ToString() const;
  bool operator==(const Location &other) const = default;
};

// Accepts "(c:v)", "(c:v:t)" and "(c:v:t:s)". Throws ParseError.
Location ParseLocation(std::string_view text);

}  // namespace hybrid

#endif  // HYBRID_LOCATION_H_
