#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "wci/bimodule.hpp"
#include "wci/ring_table.hpp"
#include "wci/symbolic.hpp"

namespace wci {

// Compound-ring element indexing is lexicographic over component tuples
// with the first component most significant: product pairs (a,b), matrix
// entries row-major, triangular triples (a,w,b), polynomial coefficient
// tuples (c0,...,c_{k-1}) with c0 the constant term.

RingTable zn(int n);

RingTable direct_product(const RingTable& r1, const RingTable& r2,
                         int size_cap = kDefaultSizeCap);

// k x k matrices over base.
RingTable matrix_ring(const RingTable& base, int k,
                      int size_cap = kDefaultSizeCap);

// Formal triangular matrix ring [[A, M], [0, B]] for an (A,B)-bimodule M,
// kept together with its index codec so entries can be addressed.
struct TriangularRing {
  RingPtr ring;
  FiniteBimodule mod;

  int encode(int a, int w, int b) const {
    return (a * mod.order + w) * mod.b_ring->order() + b;
  }
  std::array<int, 3> decode(int idx) const {
    const int nb = mod.b_ring->order();
    return {idx / (mod.order * nb), (idx / nb) % mod.order, idx % nb};
  }
};
TriangularRing build_triangular(const FiniteBimodule& m,
                                int size_cap = kDefaultSizeCap);
RingTable triangular(const FiniteBimodule& m, int size_cap = kDefaultSizeCap);

// base[x] / (x^k): truncated polynomials of degree < k.
RingTable trunc_poly(const RingTable& base, int k,
                     int size_cap = kDefaultSizeCap);
// Index of the constant polynomial c, and of c * x^deg.
int trunc_embed(const RingTable& base, int k, int c);
int trunc_monomial(const RingTable& base, int k, int c, int deg);

struct BuildOptions {
  int size_cap = kDefaultSizeCap;
  // Axiom-check user-supplied "table" specs and bimodule tables. The
  // verifier turns this off so broken catalogs surface as report rows
  // instead of build failures.
  bool verify_tables = true;
};

// Result of building a ring spec: a concrete table, or the symbolic
// triangular ring (kind "symbolic_t3"), which has no finite table.
struct BuiltRing {
  RingPtr table;
  std::shared_ptr<const SymbolicTriangularRing> symbolic;
  std::optional<TriangularRing> tri;  // present for kind "triangular"
  bool is_symbolic() const noexcept { return symbolic != nullptr; }
};

// Build from a JSON ring spec. Kinds: zn, product, matrix, triangular,
// trunc_poly, table, subring, symbolic_t3. Errors carry the JSON path of
// the offending subterm.
BuiltRing build(const nlohmann::json& spec, const BuildOptions& opts = {});
BuiltRing build(const std::string& spec_text, const BuildOptions& opts = {});
inline BuiltRing build(const char* spec_text, const BuildOptions& opts = {}) {
  return build(std::string(spec_text), opts);
}

}  // namespace wci
