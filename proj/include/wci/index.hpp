#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wci/construct.hpp"
#include "wci/ring_ops.hpp"
#include "wci/ring_table.hpp"
#include "wci/symbolic.hpp"

namespace wci {

// Per-ring scan shared by the chi family so repeated queries don't redo
// the O(n^2) unit search.
struct RingScan {
  UnitData units;
  ElementSet idem;
};
RingScan scan_ring(const RingTable& r);

struct ChiWitness {
  int idempotent;
  bool minus_unit;  // a - e is a unit
  bool plus_unit;   // a + e is a unit
};

struct ChiReport {
  int element = 0;
  ElementSet members;
  std::vector<ChiWitness> witnesses;
};

// chi(a) = { idempotent e : a-e or a+e is a unit }; chi_clean keeps only
// the a-e direction.
ChiReport chi(const RingTable& r, int a);
ChiReport chi(const RingTable& r, const RingScan& s, int a);
ChiReport chi_clean(const RingTable& r, int a);
ChiReport chi_clean(const RingTable& r, const RingScan& s, int a);

struct IndexResult {
  int value = 0;
  int argmax = 0;  // smallest element attaining the max
};

// max over a of |chi(a)| resp. |chi_clean(a)|. threads > 1 splits the
// element range; the merge keeps the smallest argmax, so the result is
// identical for any thread count.
IndexResult weak_clean_index(const RingTable& r, int threads = 1);
IndexResult clean_index(const RingTable& r, int threads = 1);

bool is_clean(const RingTable& r);
bool is_weakly_clean(const RingTable& r);
bool is_uniquely_clean(const RingTable& r);

struct ElementalResult {
  bool elemental = false;
  int u = -1, v = -1;  // unit witnesses with u + v = 1
};
// Only trivial idempotents, and 1 is a sum of two units.
ElementalResult is_elemental(const RingTable& r);

// Quasi-regular decompositions: J1(a) = { q quasi-regular : a - q is
// idempotent }, J2(a) the mirrored form. Works on any closed subset;
// needs no identity. `members` is the induced idempotent set
// {a-q : q in J1} u {q-a : q in J2}; in a unital ring it equals
// chi(a+1), and it can be smaller than |J1 u J2| because both branches
// may reach the same idempotent (Z_4, a=1: q=0 and q=2 both give e=1).
struct JSets {
  ElementSet j1, j2;
  ElementSet combined;  // J1 u J2
  ElementSet members;   // induced idempotents
};
JSets j_sets(const RingTable& r, int a);
JSets j_sets(const RingTable& ambient, const ElementSet& members, int a);

// max over the subset of the induced idempotent count -- the
// identity-free route to the weak clean index of a subring; for a unital
// subring it equals that subring's weak_clean_index.
int win_via_jsets(const SubringView& s);

struct ClassificationResult {
  bool matched = false;
  int claimed_win = 0;
  std::string clause;
  nlohmann::json witness;
};

// Structural tests for weak clean index 1, 2 and 3. Each returns the
// matched clause plus the elements that witness it (or, on a miss, what
// broke the first applicable clause).
ClassificationResult predicate_win1(const RingTable& r);
ClassificationResult predicate_win2(const RingTable& r);
ClassificationResult predicate_win3(const RingTable& r);

// Upper bound for chi in a triangular ring: |chi_A(a)| * |chi_B(b)| *
// max compatible off-diagonal count, compared against the actual size.
struct ChiBound {
  int chi_size = 0;
  int bound = 0;
  bool within_bound = false;
};
ChiBound chi_bound_triangular(const TriangularRing& t, int alpha);

// --- symbolic counterparts --------------------------------------------

struct SymChiWitness {
  SymElem idempotent;
  bool minus_unit;
  bool plus_unit;
};
struct SymChiReport {
  SymElem element;
  std::vector<SymChiWitness> members;
};
SymChiReport chi(const SymbolicTriangularRing& t, const SymElem& a);
ClassificationResult predicate_win3(const SymbolicTriangularRing& t);
ChiBound chi_bound_triangular(const SymbolicTriangularRing& t,
                              const SymElem& alpha);

nlohmann::json to_json(const ChiReport& rep);
nlohmann::json to_json(const SymChiReport& rep);
nlohmann::json to_json(const ClassificationResult& res);

}  // namespace wci
