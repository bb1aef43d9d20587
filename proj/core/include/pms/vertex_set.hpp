#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace pms {

// Subset of the vertices {0, ..., universe-1} of a graph, stored as a 64-bit
// mask. Vertices are 0-based here; reports convert to 1-based labels.
class VertexSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr VertexSet() = default;
  constexpr VertexSet(int universe, std::uint64_t bits)
      : bits_(bits & mask_for(universe)), universe_(universe) {}

  static constexpr VertexSet full(int universe) {
    return VertexSet(universe, mask_for(universe));
  }
  static constexpr VertexSet single(int universe, int v) {
    return VertexSet(universe, std::uint64_t{1} << v);
  }
  static VertexSet from_members(int universe, const std::vector<int>& members);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int universe() const { return universe_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr int max() const { return 63 - std::countl_zero(bits_); }

  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet complement() const {
    return VertexSet(universe_, ~bits_);
  }
  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.universe_, a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.universe_, a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.universe_, a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

  // Canonical order: by cardinality, then by bit pattern.
  friend constexpr bool operator<(VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits_ < b.bits_;
  }

  // 0-based members in increasing order.
  std::vector<int> members() const;
  // 1-based labels in increasing order.
  std::vector<int> labels() const;
  // "{1,3}" using 1-based labels.
  std::string to_string() const;

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

 private:
  static constexpr std::uint64_t mask_for(int universe) {
    return universe >= 64 ? ~std::uint64_t{0}
                          : (std::uint64_t{1} << universe) - 1;
  }

  std::uint64_t bits_ = 0;
  int universe_ = 0;
};

}  // namespace pms
