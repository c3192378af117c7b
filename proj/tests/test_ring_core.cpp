#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wci/bimodule.hpp"
#include "wci/construct.hpp"
#include "wci/errors.hpp"
#include "wci/ring_ops.hpp"
#include "wci/ring_table.hpp"

using namespace wci;

namespace {

bool has_violation(const AxiomReport& rep, const std::string& axiom) {
  for (const AxiomViolation& v : rep.violations)
    if (v.axiom == axiom) return true;
  return false;
}

RingPtr ptr(RingTable r) { return std::make_shared<RingTable>(std::move(r)); }

}  // namespace

TEST_CASE("table arithmetic on Z_6") {
  const RingTable r = zn(6);
  CHECK(r.order() == 6);
  CHECK(r.unital());
  CHECK(r.zero() == 0);
  CHECK(r.one() == 1);
  CHECK(r.add(4, 5) == 3);
  CHECK(r.mul(4, 5) == 2);
  CHECK(r.neg(2) == 4);
  CHECK(r.sub(1, 5) == 2);
}

TEST_CASE("table constructor rejects malformed input") {
  CHECK_THROWS_AS(RingTable(0, 0, {}, {}), InputError);
  CHECK_THROWS_AS(RingTable(2, 1, {0, 1, 1, 0}, {0, 0}), InputError);
  CHECK_THROWS_AS(RingTable(2, 1, {0, 1, 1, 7}, {0, 0, 0, 1}), InputError);
  CHECK_THROWS_AS(RingTable(2, 5, {0, 1, 1, 0}, {0, 0, 0, 1}), InputError);
}

TEST_CASE("axiom verification accepts real rings and pins faults") {
  CHECK(verify_ring_axioms(zn(12)).ok());
  CHECK(verify_ring_axioms(zn(1)).ok());
  CHECK(verify_ring_axioms(matrix_ring(zn(2), 2)).ok());

  // break 1*2: the identity axiom must name it
  const RingTable good = zn(4);
  std::vector<std::uint16_t> mul = good.mul_table();
  mul[1 * 4 + 2] = 0;
  const RingTable bad(4, 1, good.add_table(), mul);
  const AxiomReport rep = verify_ring_axioms(bad);
  CHECK_FALSE(rep.ok());
  CHECK(has_violation(rep, "one-identity"));

  std::vector<std::uint16_t> add = good.add_table();
  add[0 * 4 + 1] = 0;
  const AxiomReport rep2 = verify_ring_axioms(RingTable(4, 1, add, good.mul_table()));
  CHECK_FALSE(rep2.ok());
  CHECK(has_violation(rep2, "add-zero-identity"));
}

TEST_CASE("units and inverses") {
  const RingTable r = zn(6);
  const UnitData ud = unit_data(r);
  CHECK(ud.set == ElementSet{1, 5});
  CHECK(ud.inverse[5] == 5);
  CHECK(ud.inverse[1] == 1);
  CHECK(units(zn(12)) == ElementSet{1, 5, 7, 11});
  CHECK(units(r) == oracle::units(r));
  const RingTable m = matrix_ring(zn(2), 2);
  CHECK(units(m).size() == 6);
  CHECK(units(m) == oracle::units(m));
}

TEST_CASE("idempotents, nilpotents, center") {
  CHECK(idempotents(zn(6)) == ElementSet{0, 1, 3, 4});
  CHECK(idempotents(zn(12)) == ElementSet{0, 1, 4, 9});
  CHECK(nilpotents(zn(6)) == ElementSet{0});
  CHECK(nilpotents(zn(8)) == ElementSet{0, 2, 4, 6});
  const RingTable m = matrix_ring(zn(2), 2);
  CHECK(idempotents(m).size() == 8);
  CHECK(center(m) == ElementSet{0, 9});  // zero and the identity matrix
  CHECK(center(zn(12)).size() == 12);
}

TEST_CASE("abelian test is about central idempotents") {
  CHECK(is_abelian(zn(12)));
  CHECK(is_abelian(zn(1)));
  CHECK_FALSE(is_abelian(matrix_ring(zn(2), 2)));
  CHECK_FALSE(is_abelian(triangular(natural_bimodule(ptr(zn(2))))));
}

TEST_CASE("quasi-regular elements") {
  CHECK(quasi_regular(zn(4)) == ElementSet{0, 2});
  CHECK(quasi_regular(zn(6)) == ElementSet{0, 4});
  // subset form needs no identity
  CHECK(quasi_regular(zn(6), ElementSet{0, 2, 4}) == ElementSet{0, 4});
  CHECK(quasi_regular(zn(6), ElementSet{0, 3}) == ElementSet{0});
}

TEST_CASE("jacobson radical and local rings") {
  CHECK(jacobson_radical(zn(12)) == ElementSet{0, 6});
  CHECK(jacobson_radical(zn(8)) == ElementSet{0, 2, 4, 6});
  CHECK(jacobson_radical(matrix_ring(zn(2), 2)) == ElementSet{0});
  CHECK(is_local(zn(4)));
  CHECK(is_local(zn(9)));
  CHECK(is_local(zn(2)));
  CHECK_FALSE(is_local(zn(6)));
  CHECK_FALSE(is_local(zn(1)));  // every element is a unit, J = {0} != nonunits
  CHECK_FALSE(is_local(matrix_ring(zn(2), 2)));
}

TEST_CASE("quotient rings") {
  const RingTable q = quotient(zn(12), ElementSet{0, 6});
  CHECK(q.order() == 6);
  CHECK(units(q).size() == 2);
  CHECK(idempotents(q).size() == 4);

  const RingTable q2 = quotient(zn(12), ElementSet{0, 4, 8});
  CHECK(q2.order() == 4);
  CHECK(idempotents(q2) == ElementSet{0, 1});

  CHECK_THROWS_AS(quotient(zn(12), ElementSet{0, 1}), PreconditionError);
  CHECK_THROWS_AS(quotient(zn(12), ElementSet{}), PreconditionError);
}

TEST_CASE("corner rings") {
  const RingTable c = corner_ring(zn(6), 3);
  CHECK(c.order() == 2);
  CHECK(c.one() == 1);
  CHECK(c.mul(1, 1) == 1);
  CHECK_THROWS_AS(corner_ring(zn(6), 2), PreconditionError);

  // corner at 4 in Z_6 is the copy of Z_3
  const RingTable c3 = corner_ring(zn(6), 4);
  CHECK(c3.order() == 3);
  CHECK(units(c3).size() == 2);
}

TEST_CASE("peirce components of a triangular ring") {
  const RingTable t = triangular(natural_bimodule(ptr(zn(2))));
  const int e11 = 4;  // (1,0,0)
  REQUIRE(t.mul(e11, e11) == e11);
  const PeirceComponents p = peirce_components(t, e11);
  CHECK(p.upper_left == ElementSet{0, 4});
  CHECK(p.upper_right == ElementSet{0, 2});
  CHECK(p.lower_left == ElementSet{0});
  CHECK(p.lower_right == ElementSet{0, 1});
}

TEST_CASE("generated subrings and their realization") {
  RingPtr r6 = ptr(zn(6));
  CHECK(subring_generated(r6, {2}).members == ElementSet{0, 2, 4});
  CHECK(subring_generated(r6, {5}).members == ElementSet{0, 1, 2, 3, 4, 5});
  CHECK(subring_generated(r6, {3}).members == ElementSet{0, 3});

  const RingTable s = realize_subring(subring_generated(r6, {2}));
  CHECK(s.order() == 3);
  CHECK(s.unital());
  CHECK(s.one() == 2);  // ambient element 4 acts as identity
  CHECK(units(s).size() == 2);

  RingPtr r4 = ptr(zn(4));
  const RingTable s2 = realize_subring(subring_generated(r4, {2}));
  CHECK(s2.order() == 2);
  CHECK_FALSE(s2.unital());
  CHECK_THROWS_AS(s2.one(), UnsupportedOperationError);
}

TEST_CASE("bimodule verification") {
  FiniteBimodule m = natural_bimodule(ptr(zn(3)));
  CHECK(verify_bimodule(m).ok());

  FiniteBimodule bad = m;
  bad.left[1 * 3 + 2] = 0;  // 1*2 must stay 2
  const AxiomReport rep = verify_bimodule(bad);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("size guards refuse oversized carriers") {
  CHECK_THROWS_AS(zn(0), InputError);
  CHECK_THROWS_AS(zn(70000), ResourceError);
  CHECK_THROWS_AS(matrix_ring(zn(17), 2), ResourceError);
  CHECK_THROWS_AS(direct_product(zn(300), zn(300)), ResourceError);
  CHECK_THROWS_AS(trunc_poly(zn(2), 3, 4), ResourceError);
}
