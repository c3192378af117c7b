#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wci/bimodule.hpp"
#include "wci/construct.hpp"
#include "wci/errors.hpp"
#include "wci/ring_ops.hpp"
#include "wci/ring_table.hpp"

using namespace wci;
using doctest::Contains;

namespace {

RingPtr ptr(RingTable r) { return std::make_shared<RingTable>(std::move(r)); }

bool same_table(const RingTable& x, const RingTable& y) {
  return x.order() == y.order() && x.unital() == y.unital() &&
         (!x.unital() || x.one() == y.one()) &&
         x.add_table() == y.add_table() && x.mul_table() == y.mul_table();
}

}  // namespace

TEST_CASE("zn matches modular arithmetic") {
  const RingTable r = zn(7);
  for (int a = 0; a < 7; ++a) {
    CHECK(r.neg(a) == (7 - a) % 7);
    for (int b = 0; b < 7; ++b) {
      CHECK(r.add(a, b) == (a + b) % 7);
      CHECK(r.mul(a, b) == (a * b) % 7);
    }
  }
  CHECK(r.one() == 1);

  const RingTable z1 = zn(1);
  CHECK(z1.order() == 1);
  CHECK(z1.unital());
  CHECK(z1.one() == 0);

  CHECK_THROWS_AS(zn(0), InputError);
  CHECK_THROWS_AS(zn(-3), InputError);
  CHECK_THROWS_AS(zn(70000), ResourceError);
}

TEST_CASE("direct product indexes pairs with the first factor on top") {
  const RingTable p = direct_product(zn(2), zn(3));
  CHECK(p.order() == 6);
  CHECK(p.one() == 1 * 3 + 1);       // (1,1)
  CHECK(p.add(4, 4) == 2);           // (1,1)+(1,1) = (0,2)
  CHECK(p.mul(5, 4) == 5);           // (1,2)*(1,1) = (1,2)
  CHECK(p.mul(3, 4) == 3);           // (1,0)*(1,1) = (1,0)
  CHECK(is_abelian(p));
  CHECK(verify_ring_axioms(p).ok());

  // nesting on the left keeps the leftmost factor most significant
  const RingTable q = direct_product(direct_product(zn(2), zn(2)), zn(2));
  CHECK(q.order() == 8);
  CHECK(q.one() == 7);
}

TEST_CASE("matrix ring over Z_2") {
  const RingTable m = matrix_ring(zn(2), 2);
  CHECK(m.order() == 16);
  // row-major digits (e00,e01,e10,e11)
  CHECK(m.one() == 9);   // [[1,0],[0,1]]
  const int e01 = 4, e10 = 2;
  CHECK(m.mul(e01, e10) == 8);  // E01*E10 = E00
  CHECK(m.mul(e10, e01) == 1);  // E10*E01 = E11
  CHECK(units(m).size() == 6);
  CHECK(idempotents(m).size() == 8);
  CHECK_FALSE(is_abelian(m));
  CHECK(verify_ring_axioms(m).ok());

  CHECK_THROWS_AS(matrix_ring(zn(2), 0), InputError);
  CHECK_THROWS_AS(matrix_ring(zn(17), 2), ResourceError);
}

TEST_CASE("triangular ring from the natural bimodule") {
  const FiniteBimodule nat = natural_bimodule(ptr(zn(2)));
  const TriangularRing t = build_triangular(nat);
  CHECK(t.ring->order() == 8);
  CHECK(t.encode(1, 0, 1) == 5);
  CHECK(t.ring->one() == 5);
  const std::array<int, 3> back = t.decode(6);
  CHECK(back[0] == 1);
  CHECK(back[1] == 1);
  CHECK(back[2] == 0);
  CHECK(units(*t.ring) == ElementSet{5, 7});
  CHECK(idempotents(*t.ring) == ElementSet{0, 1, 3, 4, 5, 6});
  CHECK(verify_ring_axioms(*t.ring).ok());

  // a corrupted action must be refused before any table is built
  FiniteBimodule broken = nat;
  broken.left[1 * 2 + 1] = 0;  // 1.w no longer the identity action
  CHECK_THROWS_WITH_AS(build_triangular(broken),
                       Contains("bimodule axiom"), PreconditionError);
}

TEST_CASE("truncated polynomials") {
  const RingTable r2 = trunc_poly(zn(2), 2);
  CHECK(r2.order() == 4);
  CHECK(r2.one() == 2);         // (1,0): constant term most significant
  CHECK(r2.mul(1, 1) == 0);     // x*x = 0
  CHECK(units(r2) == ElementSet{2, 3});
  CHECK(is_local(r2));

  const RingTable r3 = trunc_poly(zn(2), 3);
  CHECK(r3.order() == 8);
  CHECK(r3.mul(2, 2) == 1);     // x*x = x^2
  CHECK(r3.mul(2, 1) == 0);     // x*x^2 = 0
  CHECK(verify_ring_axioms(r3).ok());

  CHECK(trunc_embed(zn(3), 2, 2) == 6);
  CHECK(trunc_monomial(zn(3), 2, 2, 1) == 2);
  CHECK(trunc_monomial(zn(3), 3, 1, 1) == 3);
  CHECK_THROWS_AS(trunc_monomial(zn(3), 2, 2, 2), InputError);
  CHECK_THROWS_AS(trunc_monomial(zn(3), 2, 3, 0), InputError);
  CHECK_THROWS_AS(trunc_poly(zn(2), 0), InputError);
  CHECK_THROWS_AS(trunc_poly(zn(4), 9), ResourceError);
}

TEST_CASE("JSON specs build every kind") {
  CHECK(same_table(*build(R"({"kind":"zn","n":6})").table, zn(6)));

  const BuiltRing prod = build(
      R"({"kind":"product","factors":[{"kind":"zn","n":2},{"kind":"zn","n":3}]})");
  CHECK(same_table(*prod.table, direct_product(zn(2), zn(3))));
  CHECK_FALSE(prod.tri.has_value());

  const BuiltRing mat =
      build(R"({"kind":"matrix","base":{"kind":"zn","n":2},"k":2})");
  CHECK(same_table(*mat.table, matrix_ring(zn(2), 2)));

  const BuiltRing tri = build(R"({
    "kind": "triangular",
    "a": {"kind": "zn", "n": 2},
    "b": {"kind": "zn", "n": 2},
    "m": {"order": 2, "add": [[0,1],[1,0]],
          "left": [[0,0],[0,1]], "right": [[0,0],[0,1]]}
  })");
  CHECK(same_table(*tri.table, triangular(natural_bimodule(ptr(zn(2))))));
  REQUIRE(tri.tri.has_value());
  CHECK(tri.tri->encode(1, 0, 1) == 5);

  const BuiltRing tp =
      build(R"({"kind":"trunc_poly","base":{"kind":"zn","n":2},"k":3})");
  CHECK(same_table(*tp.table, trunc_poly(zn(2), 3)));

  const BuiltRing tab = build(R"({
    "kind": "table", "order": 2, "one": 1,
    "add": [[0,1],[1,0]], "mul": [[0,0],[0,1]]
  })");
  CHECK(same_table(*tab.table, zn(2)));

  const BuiltRing sub =
      build(R"({"kind":"subring","base":{"kind":"zn","n":6},"seed":[2]})");
  CHECK(sub.table->order() == 3);      // {0,2,4}
  CHECK(sub.table->unital());
  CHECK(sub.table->one() == 2);        // 4 acts as the identity

  const BuiltRing sym = build(R"({"kind":"symbolic_t3"})");
  CHECK(sym.is_symbolic());
  CHECK(sym.table == nullptr);
  CHECK(sym.symbolic->idempotent_elements().size() == 8);
}

TEST_CASE("JSON spec errors carry the offending path") {
  CHECK_THROWS_WITH_AS(build("{"), Contains("ring spec is not valid JSON"),
                       InputError);
  CHECK_THROWS_WITH_AS(build(R"({"n":4})"), Contains("missing field 'kind'"),
                       InputError);
  CHECK_THROWS_WITH_AS(build(R"({"kind":"frob"})"),
                       Contains("unknown ring kind 'frob'"), InputError);
  CHECK_THROWS_WITH_AS(
      build(R"({"kind":"product","factors":[{"kind":"zn","n":0}]})"),
      Contains("$.factors[0]"), InputError);
  CHECK_THROWS_WITH_AS(
      build(R"({"kind":"matrix","base":{"kind":"symbolic_t3"},"k":2})"),
      Contains("a finite ring is required here"), InputError);
  CHECK_THROWS_WITH_AS(
      build(R"({"kind":"subring","base":{"kind":"zn","n":6},"seed":[9]})"),
      Contains("$.seed"), InputError);
}

TEST_CASE("user tables are axiom-checked unless disabled") {
  // 1*1 = 0 breaks the identity
  const std::string broken = R"({
    "kind": "table", "order": 2, "one": 1,
    "add": [[0,1],[1,0]], "mul": [[0,0],[0,0]]
  })";
  CHECK_THROWS_WITH_AS(build(broken), Contains("ring axiom 'one-identity'"),
                       InputError);
  BuildOptions lax;
  lax.verify_tables = false;
  const BuiltRing b = build(broken, lax);
  CHECK(b.table->order() == 2);
  CHECK_FALSE(verify_ring_axioms(*b.table).ok());
}

TEST_CASE("size cap applies to every kind") {
  BuildOptions small;
  small.size_cap = 50;
  CHECK_THROWS_AS(build(R"({"kind":"zn","n":100})", small), ResourceError);
  CHECK_THROWS_AS(
      build(R"({"kind":"matrix","base":{"kind":"zn","n":3},"k":2})", small),
      ResourceError);
  CHECK_THROWS_AS(
      build(R"({"kind":"trunc_poly","base":{"kind":"zn","n":8},"k":2})", small),
      ResourceError);
  CHECK(build(R"({"kind":"zn","n":50})", small).table->order() == 50);

  BuildOptions bad;
  bad.size_cap = 0;
  CHECK_THROWS_AS(build(R"({"kind":"zn","n":2})", bad), InputError);
}
