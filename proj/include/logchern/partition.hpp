#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace logchern {

/// Weakly decreasing sequence of non-negative integers indexing a Schur functor.
/// Trailing zeros are stripped at construction; an optional context rank r
/// bounds the number of nonzero parts and pads the text form to length r.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts, std::optional<int> context_rank = std::nullopt);

  // "2,1"; the empty partition is "" or "0".
  static Partition parse(std::string_view text);
  static Partition row(int m) { return Partition(std::vector<int>{m}); }
  static Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  // i-th part (0-based); zero past the last nonzero part.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  std::vector<int> padded(int r) const;

  std::optional<int> context_rank() const { return context_rank_; }
  Partition with_context_rank(int r) const { return Partition(parts_, r); }

  bool is_empty() const { return parts_.empty(); }
  bool is_row() const { return parts_.size() == 1; }
  bool is_column() const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  std::optional<int> context_rank_;
};

}  // namespace logchern
