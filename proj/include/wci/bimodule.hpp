#pragma once

#include <cstdint>
#include <vector>

#include "wci/ring_ops.hpp"
#include "wci/ring_table.hpp"

namespace wci {

// A finite (A,B)-bimodule M given by explicit tables:
//   add   order x order   abelian group on 0..order-1 (0 is the zero)
//   left  |A| x order     a . w
//   right order x |B|     w . b
struct FiniteBimodule {
  RingPtr a_ring;
  RingPtr b_ring;
  int order = 0;
  std::vector<std::uint16_t> add;
  std::vector<std::uint16_t> left;
  std::vector<std::uint16_t> right;

  int madd(int w, int v) const { return add[std::size_t(w) * order + v]; }
  int act_left(int a, int w) const { return left[std::size_t(a) * order + w]; }
  int act_right(int w, int b) const {
    return right[std::size_t(w) * b_ring->order() + b];
  }
  int mneg(int w) const;  // -1 when the add table has no inverse
};

// Shape plus bimodule axioms: abelian group under add, unital associative
// additive actions on both sides, and (a.w).b == a.(w.b). One witness per
// axiom, reusing AxiomReport.
AxiomReport verify_bimodule(const FiniteBimodule& m);

// R viewed as an (R,R)-bimodule through its own multiplication.
FiniteBimodule natural_bimodule(RingPtr r);

}  // namespace wci
