#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "wci/construct.hpp"
#include "wci/errors.hpp"
#include "wci/index.hpp"
#include "wci/ring_ops.hpp"

using namespace wci;

namespace {

RingPtr ptr(RingTable r) { return std::make_shared<RingTable>(std::move(r)); }

const ChiWitness* witness_for(const ChiReport& rep, int e) {
  for (const ChiWitness& w : rep.witnesses)
    if (w.idempotent == e) return &w;
  return nullptr;
}

std::vector<RingTable> sample_rings() {
  std::vector<RingTable> out;
  for (int n = 1; n <= 12; ++n) out.push_back(zn(n));
  out.push_back(matrix_ring(zn(2), 2));
  out.push_back(triangular(natural_bimodule(ptr(zn(2)))));
  out.push_back(trunc_poly(zn(2), 3));
  out.push_back(direct_product(zn(2), zn(3)));
  return out;
}

}  // namespace

TEST_CASE("chi membership and direction witnesses") {
  const RingTable r6 = zn(6);
  const ChiReport c4 = chi(r6, 4);
  CHECK(c4.members == ElementSet{1, 3});
  const ChiWitness* w1 = witness_for(c4, 1);
  REQUIRE(w1 != nullptr);
  CHECK_FALSE(w1->minus_unit);  // 4-1 = 3
  CHECK(w1->plus_unit);         // 4+1 = 5
  const ChiWitness* w3 = witness_for(c4, 3);
  REQUIRE(w3 != nullptr);
  CHECK(w3->minus_unit);
  CHECK(w3->plus_unit);

  CHECK(chi(r6, 1).members == ElementSet{0, 4});
  const ChiReport c2 = chi(zn(4), 2);
  CHECK(c2.members == ElementSet{1});
  CHECK(c2.witnesses[0].minus_unit);
  CHECK(c2.witnesses[0].plus_unit);

  CHECK(chi_clean(zn(3), 1).members == ElementSet{0});
  CHECK(chi_clean(r6, 4).members == ElementSet{3});

  const nlohmann::json j = to_json(c4);
  CHECK(j["element"] == 4);
  CHECK(j["members"] == nlohmann::json::array({1, 3}));
  CHECK(j["size"] == 2);
  CHECK(j["witnesses"].size() == 2);
}

TEST_CASE("chi and the indices agree with the definition oracle") {
  for (const RingTable& r : sample_rings()) {
    for (int a = 0; a < r.order(); ++a) {
      CHECK(chi(r, a).members == oracle::chi(r, a));
      CHECK(chi_clean(r, a).members == oracle::chi_clean(r, a));
    }
    CHECK(weak_clean_index(r).value == oracle::win(r));
    CHECK(clean_index(r).value == oracle::clean_index(r));
  }
}

TEST_CASE("frozen index values") {
  const int win_zn[] = {1, 1, 2, 1, 2, 2};
  for (int n = 1; n <= 6; ++n)
    CHECK(weak_clean_index(zn(n)).value == win_zn[n - 1]);
  CHECK(weak_clean_index(zn(6)).argmax == 1);
  CHECK(weak_clean_index(zn(15)).value == 4);
  CHECK(weak_clean_index(zn(15)).argmax == 1);

  CHECK(weak_clean_index(triangular(natural_bimodule(ptr(zn(2))))).value == 2);
  CHECK(weak_clean_index(triangular(natural_bimodule(ptr(zn(3))))).value == 8);

  const IndexResult in6 = clean_index(zn(6));
  CHECK(in6.value == 2);
  CHECK(in6.argmax == 2);
}

TEST_CASE("threaded scans match the serial ones exactly") {
  const RingTable r60 = zn(60);
  const IndexResult serial = weak_clean_index(r60, 1);
  for (int t : {2, 4, 7}) {
    const IndexResult par = weak_clean_index(r60, t);
    CHECK(par.value == serial.value);
    CHECK(par.argmax == serial.argmax);
  }
  const IndexResult cs = clean_index(r60, 1), cp = clean_index(r60, 4);
  CHECK(cp.value == cs.value);
  CHECK(cp.argmax == cs.argmax);

  const RingTable u3 = triangular(natural_bimodule(ptr(zn(3))));
  const IndexResult s = weak_clean_index(u3, 1), p = weak_clean_index(u3, 3);
  CHECK(s.value == p.value);
  CHECK(s.argmax == p.argmax);
}

TEST_CASE("cleanness predicates") {
  CHECK(is_clean(zn(4)));
  CHECK(is_weakly_clean(zn(4)));
  CHECK(is_uniquely_clean(zn(4)));
  CHECK(is_uniquely_clean(zn(1)));
  CHECK(is_clean(zn(6)));
  CHECK(is_weakly_clean(zn(6)));
  CHECK_FALSE(is_uniquely_clean(zn(6)));
  CHECK_FALSE(is_uniquely_clean(zn(3)));
}

TEST_CASE("elemental detection") {
  const ElementalResult e3 = is_elemental(zn(3));
  CHECK(e3.elemental);
  CHECK(e3.u == 2);
  CHECK(e3.v == 2);
  CHECK(zn(3).add(e3.u, e3.v) == zn(3).one());
  CHECK_FALSE(is_elemental(zn(2)).elemental);  // 1 is not a unit sum
  CHECK_FALSE(is_elemental(zn(4)).elemental);
  CHECK_FALSE(is_elemental(zn(6)).elemental);  // nontrivial idempotents
  CHECK_FALSE(is_elemental(zn(1)).elemental);  // 0 = 1 collapses the pair
}

TEST_CASE("quasi-regular decompositions induce chi one step up") {
  const RingTable r4 = zn(4);
  const JSets js = j_sets(r4, 1);
  CHECK(js.j1 == ElementSet{0});
  CHECK(js.j2 == ElementSet{2});
  CHECK(js.combined == ElementSet{0, 2});
  // both branches land on the same idempotent: the induced set is smaller
  CHECK(js.members == ElementSet{1});
  CHECK(js.members == chi(r4, r4.add(1, r4.one())).members);

  for (const RingTable& r : {zn(6), zn(8), zn(9)})
    for (int a = 0; a < r.order(); ++a)
      CHECK(j_sets(r, a).members == chi(r, r.add(a, r.one())).members);
}

TEST_CASE("identity-free index through the q-sets") {
  RingPtr r6 = ptr(zn(6));
  CHECK(win_via_jsets(SubringView{r6, {0, 2, 4}}) == 2);
  CHECK(win_via_jsets(SubringView{r6, {0, 3}}) == 1);

  RingPtr r4 = ptr(zn(4));
  const SubringView full{r4, {0, 1, 2, 3}};
  CHECK(win_via_jsets(full) == weak_clean_index(*r4).value);
}

TEST_CASE("classification predicates") {
  const ClassificationResult p1 = predicate_win1(zn(2));
  CHECK(p1.matched);
  CHECK(p1.clause == "abelian-no-idempotent-unit-sum");

  const ClassificationResult m1 = predicate_win1(zn(3));
  CHECK_FALSE(m1.matched);
  CHECK(m1.witness["u"] == 2);
  CHECK(m1.witness["v"] == 2);

  const ClassificationResult p2 = predicate_win2(zn(3));
  CHECK(p2.matched);
  CHECK(p2.clause == "elemental");

  const ClassificationResult s2 = predicate_win2(zn(6));
  CHECK(s2.matched);
  CHECK(s2.clause == "central-split-elemental-x-win1");
  CHECK(s2.witness["central_idempotent"] == 4);

  const RingTable u2 = triangular(natural_bimodule(ptr(zn(2))));
  const ClassificationResult t2 = predicate_win2(u2);
  CHECK(t2.matched);
  CHECK(t2.clause == "triangular-module-2-win1-corners");

  const nlohmann::json j = to_json(s2);
  CHECK(j["matched"] == true);
  CHECK(j["claimed_win"] == 2);
  CHECK(j["clause"] == "central-split-elemental-x-win1");
}

TEST_CASE("triangular chi bound") {
  const TriangularRing t = build_triangular(natural_bimodule(ptr(zn(2))));
  const ChiBound b = chi_bound_triangular(t, 1);
  CHECK(b.chi_size == 2);
  CHECK(b.bound == 2);
  CHECK(b.within_bound);
  CHECK(chi(*t.ring, 1).members == ElementSet{4, 6});
}
