#include "wci/ring_table.hpp"

#include <string>

#include "wci/errors.hpp"

namespace wci {

RingTable::RingTable(int order, int one, std::vector<std::uint16_t> add_table,
                     std::vector<std::uint16_t> mul_table, bool unital)
    : order_(order),
      one_(one),
      unital_(unital),
      add_(std::move(add_table)),
      mul_(std::move(mul_table)) {
  if (order_ < 1) throw InputError("ring order must be >= 1");
  if (order_ > kMaxOrder)
    throw ResourceError("ring order " + std::to_string(order_) +
                        " exceeds the table ceiling " +
                        std::to_string(kMaxOrder));
  const std::size_t want = std::size_t(order_) * order_;
  if (add_.size() != want)
    throw InputError("add table must have order*order entries, got " +
                     std::to_string(add_.size()));
  if (mul_.size() != want)
    throw InputError("mul table must have order*order entries, got " +
                     std::to_string(mul_.size()));
  for (std::size_t i = 0; i < want; ++i) {
    if (add_[i] >= order_ || mul_[i] >= order_)
      throw InputError("table entry out of range at flat index " +
                       std::to_string(i));
  }
  if (unital_) {
    if (one_ < 0 || one_ >= order_)
      throw InputError("identity index " + std::to_string(one_) +
                       " out of range");
  } else {
    one_ = -1;
  }

  neg_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (add(a, b) == 0 && add(b, a) == 0) {
        neg_[a] = b;
        break;
      }
    }
  }
}

int RingTable::one() const {
  if (!unital_)
    throw UnsupportedOperationError("ring has no multiplicative identity");
  return one_;
}

int RingTable::sub(int a, int b) const {
  const int nb = neg_[b];
  if (nb < 0)
    throw InputError("element " + std::to_string(b) +
                     " has no additive inverse; not a ring table");
  return add(a, nb);
}

}  // namespace wci
