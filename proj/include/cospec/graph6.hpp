#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cospec/graph.hpp"

namespace cospec {

// Short-form graph6 only: one size byte n + 63, so n <= 62.
inline constexpr int kMaxGraph6Order = 62;

enum class Graph6Errc {
  empty_record,
  malformed_length,
  order_too_large,
  invalid_data_byte,
  truncated,
  trailing_garbage,
};

inline const char* to_string(Graph6Errc e) {
  switch (e) {
    case Graph6Errc::empty_record: return "empty record";
    case Graph6Errc::malformed_length: return "malformed length byte";
    case Graph6Errc::order_too_large: return "graph order exceeds 62";
    case Graph6Errc::invalid_data_byte: return "invalid data byte";
    case Graph6Errc::truncated: return "truncated bit data";
    case Graph6Errc::trailing_garbage: return "trailing garbage";
  }
  return "unknown graph6 error";
}

class Graph6Error : public std::runtime_error {
 public:
  explicit Graph6Error(Graph6Errc code, std::string_view detail = {})
      : std::runtime_error(std::string("graph6: ") + to_string(code) +
                           (detail.empty() ? "" : ": " + std::string(detail))),
        code_(code),
        detail_(detail) {}
  Graph6Errc code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  Graph6Errc code_;
  std::string detail_;
};

inline std::size_t graph6_data_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

namespace detail {

inline std::string_view strip_line(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  return line;
}

}  // namespace detail

/// Decodes one graph6 record. A trailing newline (or CRLF) is ignored.
/// Sets *nonzero_padding when the unused low bits of the last byte are not
/// zero; such records are accepted.
inline Graph parse_graph6(std::string_view line, bool* nonzero_padding = nullptr) {
  line = detail::strip_line(line);
  if (line.empty()) throw Graph6Error(Graph6Errc::empty_record);

  const int size_byte = static_cast<unsigned char>(line[0]);
  if (size_byte == 126) throw Graph6Error(Graph6Errc::order_too_large, "long-form size prefix");
  if (size_byte < 64 || size_byte > 125)
    throw Graph6Error(Graph6Errc::malformed_length, "byte " + std::to_string(size_byte));
  const int n = size_byte - 63;

  const std::size_t want = graph6_data_bytes(n);
  const std::string_view data = line.substr(1);
  if (data.size() < want)
    throw Graph6Error(Graph6Errc::truncated, "expected " + std::to_string(want) + " data bytes, got " +
                                                 std::to_string(data.size()));
  if (data.size() > want)
    throw Graph6Error(Graph6Errc::trailing_garbage, std::to_string(data.size() - want) + " extra bytes");

  for (char c : data) {
    const int b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) throw Graph6Error(Graph6Errc::invalid_data_byte, "byte " + std::to_string(b));
  }

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int b = static_cast<unsigned char>(data[k / 6]) - 63;
      if ((b >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (nonzero_padding) {
    *nonzero_padding = false;
    if (k % 6 != 0) {
      const int b = static_cast<unsigned char>(data[k / 6]) - 63;
      *nonzero_padding = (b & ((1 << (6 - k % 6)) - 1)) != 0;
    }
  }
  return g;
}

/// Canonical graph6 encoding without the trailing newline; padding bits are zero.
inline std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) throw Graph6Error(Graph6Errc::order_too_large, std::to_string(n) + " vertices");
  if (n < 1) throw Graph6Error(Graph6Errc::malformed_length, "empty graph");
  std::string out(1 + graph6_data_bytes(n), '\0');
  out[0] = static_cast<char>(n + 63);
  std::size_t k = 0;
  int acc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (k % 6 == 5) {
        out[1 + k / 6] = static_cast<char>(acc + 63);
        acc = 0;
      }
    }
  }
  if (k % 6 != 0) out[1 + k / 6] = static_cast<char>((acc << (6 - k % 6)) + 63);
  return out;
}

/// Sequential reader over a stream of newline-terminated graph6 records.
/// Blank lines are skipped; record numbers are 1-based. Parse errors carry
/// the line number, and records() names the failing record.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(in) {}

  std::optional<Graph> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (detail::strip_line(line).empty()) continue;
      ++records_;
      bool padding = false;
      try {
        Graph g = parse_graph6(line, &padding);
        if (padding) ++padding_warnings_;
        return g;
      } catch (const Graph6Error& e) {
        throw Graph6Error(e.code(), e.detail() + (e.detail().empty() ? "" : " ") + "(line " +
                                        std::to_string(line_no_) + ")");
      }
    }
    return std::nullopt;
  }

  std::size_t records() const { return records_; }
  std::size_t line_number() const { return line_no_; }
  std::size_t padding_warnings() const { return padding_warnings_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
  std::size_t records_ = 0;
  std::size_t padding_warnings_ = 0;
};

}  // namespace cospec
