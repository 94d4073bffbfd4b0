#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fpf/errors.hpp"

namespace fpf {

using Vertex = int;

/// A bijection of {0, ..., n-1}. Used for automorphism witnesses and for
/// isomorphisms between equally sized vertex sets.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `image` is a bijection of 0..n-1.
  explicit Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
    std::vector<char> seen(image_.size(), 0);
    for (Vertex v : image_) {
      if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || seen[v]) {
        throw std::invalid_argument("Permutation: image is not a bijection");
      }
      seen[v] = 1;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<Vertex> image(n);
    std::iota(image.begin(), image.end(), 0);
    Permutation p;
    p.image_ = std::move(image);
    return p;
  }

  std::size_t size() const noexcept { return image_.size(); }
  Vertex operator()(Vertex v) const { return image_[v]; }
  std::span<const Vertex> images() const noexcept { return image_; }

  Permutation inverse() const {
    Permutation inv;
    inv.image_.resize(image_.size());
    for (std::size_t v = 0; v < image_.size(); ++v) {
      inv.image_[image_[v]] = static_cast<Vertex>(v);
    }
    return inv;
  }

  /// outer ∘ inner, i.e. v ↦ outer(inner(v)).
  friend Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (outer.size() != inner.size()) {
      throw std::invalid_argument("compose: size mismatch");
    }
    Permutation p;
    p.image_.resize(inner.size());
    for (std::size_t v = 0; v < inner.size(); ++v) {
      p.image_[v] = outer.image_[inner.image_[v]];
    }
    return p;
  }

  std::vector<Vertex> fixed_points() const {
    std::vector<Vertex> fixed;
    for (std::size_t v = 0; v < image_.size(); ++v) {
      if (image_[v] == static_cast<Vertex>(v)) fixed.push_back(static_cast<Vertex>(v));
    }
    return fixed;
  }

  bool is_fixed_point_free() const {
    for (std::size_t v = 0; v < image_.size(); ++v) {
      if (image_[v] == static_cast<Vertex>(v)) return false;
    }
    return true;
  }

  /// φ∘φ = id. The identity qualifies.
  bool is_self_inverse() const {
    for (std::size_t v = 0; v < image_.size(); ++v) {
      if (image_[image_[v]] != static_cast<Vertex>(v)) return false;
    }
    return true;
  }

  /// Non-trivial cycles, each starting at its minimum, sorted by minimum.
  std::vector<std::vector<Vertex>> cycles() const {
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(image_.size(), 0);
    for (std::size_t start = 0; start < image_.size(); ++start) {
      if (seen[start] || image_[start] == static_cast<Vertex>(start)) continue;
      std::vector<Vertex> cycle;
      for (Vertex v = static_cast<Vertex>(start); !seen[v]; v = image_[v]) {
        seen[v] = 1;
        cycle.push_back(v);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  /// lcm of the cycle lengths; saturates at UINT64_MAX.
  std::uint64_t order() const {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t result = 1;
    for (const auto& cycle : cycles()) {
      const std::uint64_t len = cycle.size();
      const std::uint64_t g = std::gcd(result, len);
      if (result / g > kMax / len) return kMax;
      result = result / g * len;
    }
    return result;
  }

  /// Cycle notation with fixed points omitted; "()" for the identity.
  std::string to_cycle_string() const {
    const auto cs = cycles();
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& cycle : cs) {
      out += '(';
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(cycle[i]);
      }
      out += ')';
    }
    return out;
  }

  /// Parses "(0 3)(1 2)"-style text on n points. Commas are accepted as
  /// separators. Throws ParseError on malformed input.
  static Permutation parse_cycles(std::string_view text, std::size_t n) {
    std::vector<Vertex> image(n);
    std::iota(image.begin(), image.end(), 0);
    std::vector<char> used(n, 0);
    std::size_t i = 0;
    auto skip_space = [&] {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
    };
    skip_space();
    while (i < text.size()) {
      if (text[i] != '(') throw ParseError("cycle notation: expected '('");
      ++i;
      std::vector<Vertex> cycle;
      for (;;) {
        skip_space();
        if (i >= text.size()) throw ParseError("cycle notation: unterminated cycle");
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
          throw ParseError("cycle notation: unexpected character");
        }
        std::size_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + static_cast<std::size_t>(text[i] - '0');
          if (v >= n) throw ParseError("cycle notation: vertex out of range");
          ++i;
        }
        if (used[v]) throw ParseError("cycle notation: vertex repeated");
        used[v] = 1;
        cycle.push_back(static_cast<Vertex>(v));
      }
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        image[cycle[k]] = cycle[(k + 1) % cycle.size()];
      }
      skip_space();
    }
    return Permutation(std::move(image));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> image_;
};

}  // namespace fpf
