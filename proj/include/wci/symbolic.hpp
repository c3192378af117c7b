#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wci {

// Element of the triangular matrix ring [[Z, Z_3], [0, Z]]: integer
// diagonal (a, b), off-diagonal entry w in Z_3.
struct SymElem {
  long long a = 0;
  int w = 0;
  long long b = 0;

  friend bool operator==(const SymElem& x, const SymElem& y) {
    return x.a == y.a && x.w == y.w && x.b == y.b;
  }
  friend bool operator<(const SymElem& x, const SymElem& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.w != y.w) return x.w < y.w;
    return x.b < y.b;
  }
};

std::string to_string(const SymElem& x);

// The infinite ring T(Z, Z, Z_3), exact arithmetic. Units are exactly the
// elements with diagonal entries in {1,-1}; there are eight idempotents.
class SymbolicTriangularRing {
 public:
  static constexpr int kModuleOrder = 3;

  SymElem zero() const { return {0, 0, 0}; }
  SymElem one() const { return {1, 0, 1}; }
  SymElem add(const SymElem& x, const SymElem& y) const;
  SymElem sub(const SymElem& x, const SymElem& y) const;
  SymElem neg(const SymElem& x) const;
  SymElem mul(const SymElem& x, const SymElem& y) const;

  bool is_idempotent(const SymElem& x) const;
  bool is_unit(const SymElem& x) const;
  SymElem inverse(const SymElem& x) const;  // PreconditionError for non-units

  // All eight, sorted by (a, w, b).
  std::vector<SymElem> idempotent_elements() const;
};

}  // namespace wci
