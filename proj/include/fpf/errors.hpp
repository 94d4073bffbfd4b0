#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpf {

/// Malformed graph6, edge-list, coloring, mask, partition or cycle text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A brute-force routine was handed more vertices than its configured cap.
class CapExceeded : public std::invalid_argument {
 public:
  CapExceeded(const std::string& what, std::size_t size, std::size_t cap)
      : std::invalid_argument(what + ": " + std::to_string(size) +
                              " vertices exceeds cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

/// The decomposition reached a prime quotient that is not a tree, a co-tree,
/// a spider, and is larger than the brute-force cap.
class UnsupportedQuotient : public std::runtime_error {
 public:
  UnsupportedQuotient(std::size_t quotient_size, std::size_t module_size)
      : std::runtime_error("unsupported prime quotient on " +
                           std::to_string(quotient_size) +
                           " vertices (module of size " +
                           std::to_string(module_size) + ")"),
        quotient_size_(quotient_size),
        module_size_(module_size) {}

  std::size_t quotient_size() const noexcept { return quotient_size_; }
  std::size_t module_size() const noexcept { return module_size_; }

 private:
  std::size_t quotient_size_;
  std::size_t module_size_;
};

}  // namespace fpf
