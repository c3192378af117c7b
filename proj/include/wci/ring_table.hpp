#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace wci {

// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<int>;

constexpr int kDefaultSizeCap = 65536;

// A finite ring given by explicit Cayley tables over elements 0..order-1.
// Index 0 is always the additive identity. Immutable once built.
//
// Construction checks shape only (sizes, entry ranges, identity index);
// the ring axioms themselves are checked by verify_ring_axioms.
class RingTable {
 public:
  // Entries are stored as uint16, which caps the order at 65536. Tables
  // are row-major order*order. Pass unital=false (one ignored) for a rng
  // without identity, e.g. a generated subring that lost the ambient 1.
  RingTable(int order, int one, std::vector<std::uint16_t> add_table,
            std::vector<std::uint16_t> mul_table, bool unital = true);

  static constexpr int kMaxOrder = 65536;

  int order() const noexcept { return order_; }
  bool unital() const noexcept { return unital_; }
  int zero() const noexcept { return 0; }
  int one() const;  // throws UnsupportedOperationError if not unital

  int add(int a, int b) const {
    return add_[std::size_t(a) * order_ + b];
  }
  int mul(int a, int b) const {
    return mul_[std::size_t(a) * order_ + b];
  }
  // Additive inverse, or -1 if the table has none for this element.
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const;  // a - b; throws InputError if b has no inverse

  const std::vector<std::uint16_t>& add_table() const noexcept { return add_; }
  const std::vector<std::uint16_t>& mul_table() const noexcept { return mul_; }

 private:
  int order_;
  int one_;
  bool unital_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<int> neg_;
};

using RingPtr = std::shared_ptr<const RingTable>;

// A subset of an ambient ring closed under +, - and *. May lack the
// ambient identity; all arithmetic happens through the ambient tables.
struct SubringView {
  RingPtr ambient;
  ElementSet members;
};

}  // namespace wci
