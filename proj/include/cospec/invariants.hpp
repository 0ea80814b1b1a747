#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cospec/charpoly.hpp"
#include "cospec/graph.hpp"
#include "cospec/matrices.hpp"
#include "cospec/snf.hpp"

namespace cospec {

enum class InvariantType { SP, IN };

inline std::string_view to_string(InvariantType t) { return t == InvariantType::SP ? "sp" : "in"; }

struct InvariantPart {
  MatrixKind kind;
  InvariantType type;

  int index() const { return static_cast<int>(kind) * 2 + static_cast<int>(type); }
  friend bool operator==(const InvariantPart&, const InvariantPart&) = default;
};

inline constexpr int kPartCount = 12;

/// Ordered combination of (matrix, invariant) pairs. Two graphs are mates
/// under a spec when they agree on every part simultaneously.
struct InvariantSpec {
  std::vector<InvariantPart> parts;

  /// Parses "KIND:sp|in[,KIND:sp|in...]", e.g. "A:sp,DL:in,DQ:in".
  static InvariantSpec parse(std::string_view text) {
    InvariantSpec spec;
    while (!text.empty()) {
      const auto comma = text.find(',');
      const std::string_view item = text.substr(0, comma);
      text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
      const auto colon = item.find(':');
      if (colon == std::string_view::npos)
        throw std::invalid_argument("invariant spec item '" + std::string(item) + "' lacks ':sp' or ':in'");
      const auto kind = parse_matrix_kind(item.substr(0, colon));
      if (!kind) throw std::invalid_argument("unknown matrix kind '" + std::string(item.substr(0, colon)) + "'");
      const std::string_view type = item.substr(colon + 1);
      if (type == "sp") {
        spec.parts.push_back({*kind, InvariantType::SP});
      } else if (type == "in") {
        spec.parts.push_back({*kind, InvariantType::IN});
      } else {
        throw std::invalid_argument("unknown invariant type '" + std::string(type) + "'");
      }
      if (comma != std::string_view::npos && text.empty()) throw std::invalid_argument("trailing comma in spec");
    }
    if (spec.parts.empty()) throw std::invalid_argument("empty invariant spec");
    return spec;
  }

  std::string label() const {
    std::string out;
    for (const auto& p : parts) {
      if (!out.empty()) out += ',';
      out += to_string(p.kind);
      out += ':';
      out += to_string(p.type);
    }
    return out;
  }

  bool needs_distances() const {
    for (const auto& p : parts)
      if (is_distance_kind(p.kind)) return true;
    return false;
  }
};

/// Canonical byte string naming an invariant tuple.
using InvariantKey = std::string;

namespace detail {

inline char part_tag(InvariantPart p) { return static_cast<char>('A' + p.index()); }

template <typename T>
void append_integer(std::string& out, const T& v) {
  const std::string digits = to_decimal(v);
  out += std::to_string(digits.size());
  out += ':';
  out += digits;
}

}  // namespace detail

/// Part encoding: tag byte, element count, ';', then each integer as
/// "<length>:<decimal>". Characteristic polynomials list c_0..c_n; Smith
/// forms list the factors followed by the zero count.
inline std::string encode_part(InvariantPart p, const CharPoly& cp) {
  std::string out(1, detail::part_tag(p));
  out += std::to_string(cp.coeffs.size());
  out += ';';
  for (const auto& c : cp.coeffs) detail::append_integer(out, c);
  return out;
}

inline std::string encode_part(InvariantPart p, const SnfResult& s) {
  std::string out(1, detail::part_tag(p));
  out += std::to_string(s.factors.size() + 1);
  out += ';';
  for (const auto& f : s.factors) detail::append_integer(out, f);
  detail::append_integer(out, BigInt(s.zeros));
  return out;
}

namespace detail {

template <typename T>
std::string encode_fast(InvariantPart p, const SquareMatrix<T>& m) {
  std::string out(1, part_tag(p));
  if (p.type == InvariantType::SP) {
    const auto hi_to_lo = berkowitz(m);
    out += std::to_string(hi_to_lo.size());
    out += ';';
    for (auto it = hi_to_lo.rbegin(); it != hi_to_lo.rend(); ++it) append_integer(out, *it);
  } else {
    auto d = smith_diagonal(m);
    enforce_divisibility_chain(d);
    out += std::to_string(d.size() + 1);
    out += ';';
    for (const auto& f : d) append_integer(out, f);
    append_integer(out, T(m.size() - static_cast<int>(d.size())));
  }
  return out;
}

}  // namespace detail

/// Computes and memoizes the encoded parts of one graph. Matrices are built
/// once per kind; arithmetic starts in checked 64-bit integers and is
/// recomputed in arbitrary precision only on overflow.
class InvariantCache {
 public:
  explicit InvariantCache(const Graph& g) : g_(g) {}

  const std::string& part(InvariantPart p) {
    auto& slot = parts_[p.index()];
    if (!slot) slot = compute(p);
    return *slot;
  }

  InvariantKey key(const InvariantSpec& spec) {
    InvariantKey k;
    for (const auto& p : spec.parts) k += part(p);
    return k;
  }

 private:
  std::string compute(InvariantPart p) {
    const int k = static_cast<int>(p.kind);
    if (!fast_[k]) fast_[k] = build_matrix_as<Int64>(g_, p.kind);
    try {
      return detail::encode_fast(p, *fast_[k]);
    } catch (const IntegerOverflow&) {
    }
    try {
      return detail::encode_fast(p, fast_[k]->template cast<Int128>());
    } catch (const IntegerOverflow&) {
    }
    const BigIntMatrix m = build_matrix(g_, p.kind);
    return p.type == InvariantType::SP ? encode_part(p, char_poly(m)) : encode_part(p, snf(m));
  }

  const Graph& g_;
  std::array<std::optional<SquareMatrix<Int64>>, 6> fast_{};
  std::array<std::optional<std::string>, kPartCount> parts_{};
};

/// Key of g under spec; equal keys iff the graphs agree on every part.
inline InvariantKey key_of(const Graph& g, const InvariantSpec& spec) { return InvariantCache(g).key(spec); }

}  // namespace cospec
