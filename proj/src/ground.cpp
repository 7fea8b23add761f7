#include "qcso/ground.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcso {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() < 2) {
    throw std::domain_error("ground set needs at least 2 elements, got " +
                            std::to_string(labels_.size()));
  }
}

GroundSet GroundSet::with_default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return GroundSet(std::move(labels));
}

Subset::Subset(std::size_t universe_size) : universe_(universe_size) {}

Subset Subset::singleton(std::size_t universe_size, std::uint32_t element) {
  Subset s(universe_size);
  s.insert(element);
  return s;
}

Subset Subset::from_indices(std::size_t universe_size,
                            std::span<const std::uint32_t> indices) {
  Subset s(universe_size);
  for (std::uint32_t e : indices) s.insert(e);
  return s;
}

Subset Subset::from_indices(std::size_t universe_size,
                            std::initializer_list<std::uint32_t> indices) {
  Subset s(universe_size);
  for (std::uint32_t e : indices) s.insert(e);
  return s;
}

Subset Subset::from_mask(std::size_t universe_size, std::uint64_t mask) {
  if (universe_size > 64) {
    throw std::invalid_argument("from_mask requires universe size <= 64");
  }
  if (universe_size < 64 && (mask >> universe_size) != 0) {
    throw std::invalid_argument("mask has bits outside the universe");
  }
  Subset s(universe_size);
  s.bits_ = mask;
  s.count_ = static_cast<std::size_t>(std::popcount(mask));
  return s;
}

void Subset::insert(std::uint32_t element) {
  if (element >= universe_) {
    throw std::out_of_range("element " + std::to_string(element) +
                            " outside universe of size " + std::to_string(universe_));
  }
  if (use_bits()) {
    const std::uint64_t bit = std::uint64_t{1} << element;
    if ((bits_ & bit) == 0) {
      bits_ |= bit;
      ++count_;
    }
  } else {
    auto it = std::lower_bound(sorted_.begin(), sorted_.end(), element);
    if (it == sorted_.end() || *it != element) {
      sorted_.insert(it, element);
      ++count_;
    }
  }
}

bool Subset::contains(std::uint32_t element) const {
  if (element >= universe_) return false;
  if (use_bits()) return (bits_ >> element) & 1u;
  return std::binary_search(sorted_.begin(), sorted_.end(), element);
}

Subset Subset::intersect(const Subset& other) const {
  Subset out(universe_);
  if (use_bits()) {
    out.bits_ = bits_ & other.bits_;
    out.count_ = static_cast<std::size_t>(std::popcount(out.bits_));
  } else {
    std::set_intersection(sorted_.begin(), sorted_.end(), other.sorted_.begin(),
                          other.sorted_.end(), std::back_inserter(out.sorted_));
    out.count_ = out.sorted_.size();
  }
  return out;
}

Subset Subset::unite(const Subset& other) const {
  Subset out(universe_);
  if (use_bits()) {
    out.bits_ = bits_ | other.bits_;
    out.count_ = static_cast<std::size_t>(std::popcount(out.bits_));
  } else {
    std::set_union(sorted_.begin(), sorted_.end(), other.sorted_.begin(),
                   other.sorted_.end(), std::back_inserter(out.sorted_));
    out.count_ = out.sorted_.size();
  }
  return out;
}

bool Subset::is_subset_of(const Subset& other) const {
  if (use_bits()) return (bits_ & ~other.bits_) == 0;
  return std::includes(other.sorted_.begin(), other.sorted_.end(),
                       sorted_.begin(), sorted_.end());
}

bool Subset::is_strict_subset_of(const Subset& other) const {
  return count_ < other.count_ && is_subset_of(other);
}

bool Subset::operator==(const Subset& other) const {
  if (universe_ != other.universe_ || count_ != other.count_) return false;
  if (use_bits()) return bits_ == other.bits_;
  return sorted_ == other.sorted_;
}

std::vector<std::uint32_t> Subset::indices() const {
  if (!use_bits()) return sorted_;
  std::vector<std::uint32_t> out;
  out.reserve(count_);
  for_each([&out](std::uint32_t e) { out.push_back(e); });
  return out;
}

bool subset_order_less(const Subset& a, const Subset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.indices() < b.indices();
}

}  // namespace qcso
