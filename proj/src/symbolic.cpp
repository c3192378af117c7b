#include "wci/symbolic.hpp"

#include <algorithm>

#include "wci/errors.hpp"

namespace wci {

namespace {
int mod3(long long v) {
  int m = int(v % 3);
  return m < 0 ? m + 3 : m;
}
}  // namespace

std::string to_string(const SymElem& x) {
  return "(" + std::to_string(x.a) + "," + std::to_string(x.w) + "," +
         std::to_string(x.b) + ")";
}

SymElem SymbolicTriangularRing::add(const SymElem& x, const SymElem& y) const {
  return {x.a + y.a, mod3(x.w + y.w), x.b + y.b};
}

SymElem SymbolicTriangularRing::neg(const SymElem& x) const {
  return {-x.a, mod3(-x.w), -x.b};
}

SymElem SymbolicTriangularRing::sub(const SymElem& x, const SymElem& y) const {
  return add(x, neg(y));
}

SymElem SymbolicTriangularRing::mul(const SymElem& x, const SymElem& y) const {
  // [[a, w], [0, b]] * [[a', w'], [0, b']] = [[aa', aw' + wb'], [0, bb']]
  return {x.a * y.a, mod3(x.a * y.w + (long long)x.w * y.b), x.b * y.b};
}

bool SymbolicTriangularRing::is_idempotent(const SymElem& x) const {
  return mul(x, x) == x;
}

bool SymbolicTriangularRing::is_unit(const SymElem& x) const {
  // diagonal must be invertible in Z; the off-diagonal entry is free
  return (x.a == 1 || x.a == -1) && (x.b == 1 || x.b == -1);
}

SymElem SymbolicTriangularRing::inverse(const SymElem& x) const {
  if (!is_unit(x))
    throw PreconditionError("element " + to_string(x) + " is not a unit");
  // [[a, w], [0, b]]^-1 = [[a, -a.w.b], [0, b]] since a, b are self-inverse
  return {x.a, mod3(-(x.a * (long long)x.w * x.b)), x.b};
}

std::vector<SymElem> SymbolicTriangularRing::idempotent_elements() const {
  // diagonal entries idempotent in Z, so a,b in {0,1}; the off-diagonal
  // condition w = a.w + w.b kills w unless exactly one diagonal entry is 1
  std::vector<SymElem> out;
  for (long long a = 0; a <= 1; ++a)
    for (int w = 0; w < kModuleOrder; ++w)
      for (long long b = 0; b <= 1; ++b) {
        const SymElem e{a, w, b};
        if (is_idempotent(e)) out.push_back(e);
      }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wci
