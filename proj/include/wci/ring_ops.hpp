#pragma once

#include <string>
#include <vector>

#include "wci/ring_table.hpp"

namespace wci {

struct AxiomViolation {
  std::string axiom;
  std::vector<int> witness;  // the elements that break it
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

// Full axiom sweep: abelian group under +, associative *, distributivity,
// and (when flagged unital) two-sided identity. One witness per axiom.
AxiomReport verify_ring_axioms(const RingTable& r);

// Unit scan with inverses. is_unit is indexed by element; inverse[a] is -1
// for non-units.
struct UnitData {
  ElementSet set;
  std::vector<char> is_unit;
  std::vector<int> inverse;
};
UnitData unit_data(const RingTable& r);

ElementSet units(const RingTable& r);        // two-sided invertibles
ElementSet idempotents(const RingTable& r);  // e*e == e
ElementSet nilpotents(const RingTable& r);   // a^k == 0 for some k >= 1
ElementSet center(const RingTable& r);
bool is_abelian(const RingTable& r);  // every idempotent is central

// Quasi-regular elements: q such that some p satisfies
// q+p+qp == 0 == p+q+pq. Second form restricts the scan to a subset
// (both q and p range over it), for subrings without identity.
ElementSet quasi_regular(const RingTable& r);
ElementSet quasi_regular(const RingTable& ambient, const ElementSet& members);

// { a : 1 - r*a and 1 - a*r are units for every r }.
ElementSet jacobson_radical(const RingTable& r);

// Local <=> the non-units are exactly the Jacobson radical.
bool is_local(const RingTable& r);

// Quotient by a two-sided ideal (given as an element set; checked).
// Cosets are represented by their minimal member, reindexed in order.
RingTable quotient(const RingTable& r, const ElementSet& ideal);

// eRe with identity e, for an idempotent e (checked).
RingTable corner_ring(const RingTable& r, int e);

// The four pieces of the decomposition at an idempotent e.
struct PeirceComponents {
  ElementSet upper_left;   // eRe
  ElementSet upper_right;  // eR(1-e)
  ElementSet lower_left;   // (1-e)Re
  ElementSet lower_right;  // (1-e)R(1-e)
};
PeirceComponents peirce_components(const RingTable& r, int e);

// Smallest subset of the ambient ring containing the seed and closed
// under +, - and *.
SubringView subring_generated(RingPtr r, const ElementSet& seed);

// Standalone reindexed copy of a subring. Detects an identity inside the
// subset (it need not be the ambient one); unital=false when none exists.
RingTable realize_subring(const SubringView& s);

}  // namespace wci
