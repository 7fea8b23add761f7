#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qcso {

// Indexed finite universe of elements (features). Indices are dense and
// stable for the lifetime of a run; labels are for reporting only.
class GroundSet {
 public:
  // Requires at least two elements: the objective domain 2^X \ {empty, X}
  // is empty below that.
  explicit GroundSet(std::vector<std::string> labels);

  static GroundSet with_default_labels(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::string> labels_;
};

// Exact subset of a fixed universe 0..N-1. Bitmask storage for N <= 64,
// sorted index list above; all set operations are exact.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe_size);

  static Subset singleton(std::size_t universe_size, std::uint32_t element);
  static Subset from_indices(std::size_t universe_size,
                             std::span<const std::uint32_t> indices);
  static Subset from_indices(std::size_t universe_size,
                             std::initializer_list<std::uint32_t> indices);
  // Convenience for enumeration code; universe_size <= 64 only.
  static Subset from_mask(std::size_t universe_size, std::uint64_t mask);

  std::size_t universe_size() const { return universe_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool full() const { return count_ == universe_; }

  void insert(std::uint32_t element);
  bool contains(std::uint32_t element) const;

  Subset intersect(const Subset& other) const;
  Subset unite(const Subset& other) const;
  bool is_subset_of(const Subset& other) const;
  bool is_strict_subset_of(const Subset& other) const;

  bool operator==(const Subset& other) const;
  bool operator!=(const Subset& other) const { return !(*this == other); }

  // Member indices in ascending order.
  std::vector<std::uint32_t> indices() const;

  // Applies fn(index) to each member in ascending order, no allocation.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    if (use_bits()) {
      std::uint64_t m = bits_;
      while (m != 0) {
        const int b = std::countr_zero(m);
        fn(static_cast<std::uint32_t>(b));
        m &= m - 1;
      }
    } else {
      for (std::uint32_t e : sorted_) fn(e);
    }
  }

 private:
  bool use_bits() const { return universe_ <= 64; }

  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::uint64_t bits_ = 0;
  std::vector<std::uint32_t> sorted_;
};

// Deterministic result ordering: by cardinality, then lexicographic member
// order.
bool subset_order_less(const Subset& a, const Subset& b);

}  // namespace qcso
