#include "wci/index.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "wci/errors.hpp"

namespace wci {

using nlohmann::json;

RingScan scan_ring(const RingTable& r) {
  return RingScan{unit_data(r), idempotents(r)};
}

ChiReport chi(const RingTable& r, const RingScan& s, int a) {
  if (a < 0 || a >= r.order()) throw InputError("element index out of range");
  ChiReport rep;
  rep.element = a;
  for (int e : s.idem) {
    const bool mu = s.units.is_unit[r.sub(a, e)] != 0;
    const bool pu = s.units.is_unit[r.add(a, e)] != 0;
    if (mu || pu) {
      rep.members.push_back(e);
      rep.witnesses.push_back({e, mu, pu});
    }
  }
  return rep;
}

ChiReport chi(const RingTable& r, int a) { return chi(r, scan_ring(r), a); }

ChiReport chi_clean(const RingTable& r, const RingScan& s, int a) {
  if (a < 0 || a >= r.order()) throw InputError("element index out of range");
  ChiReport rep;
  rep.element = a;
  for (int e : s.idem) {
    if (s.units.is_unit[r.sub(a, e)]) {
      rep.members.push_back(e);
      rep.witnesses.push_back({e, true, false});
    }
  }
  return rep;
}

ChiReport chi_clean(const RingTable& r, int a) {
  return chi_clean(r, scan_ring(r), a);
}

namespace {

// max over [lo,hi) of the per-element count, keeping the smallest argmax
template <typename Count>
IndexResult best_in_range(int lo, int hi, Count&& count) {
  IndexResult best{-1, -1};
  for (int a = lo; a < hi; ++a) {
    const int c = count(a);
    if (c > best.value) best = {c, a};
  }
  return best;
}

template <typename Count>
IndexResult scan_max(int n, int threads, Count&& count) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) return best_in_range(0, n, count);

  std::vector<IndexResult> parts(threads);
  std::vector<std::thread> pool;
  const int chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const int lo = t * chunk, hi = std::min(n, lo + chunk);
    pool.emplace_back([&, t, lo, hi] { parts[t] = best_in_range(lo, hi, count); });
  }
  for (auto& th : pool) th.join();
  // chunks are in element order, so ties resolve to the smaller element
  IndexResult best{-1, -1};
  for (const IndexResult& p : parts)
    if (p.argmax >= 0 && p.value > best.value) best = p;
  return best;
}

}  // namespace

IndexResult weak_clean_index(const RingTable& r, int threads) {
  const RingScan s = scan_ring(r);
  return scan_max(r.order(), threads, [&](int a) {
    int c = 0;
    for (int e : s.idem)
      c += s.units.is_unit[r.sub(a, e)] || s.units.is_unit[r.add(a, e)];
    return c;
  });
}

IndexResult clean_index(const RingTable& r, int threads) {
  const RingScan s = scan_ring(r);
  return scan_max(r.order(), threads, [&](int a) {
    int c = 0;
    for (int e : s.idem) c += s.units.is_unit[r.sub(a, e)] != 0;
    return c;
  });
}

bool is_clean(const RingTable& r) {
  const RingScan s = scan_ring(r);
  for (int a = 0; a < r.order(); ++a) {
    bool any = false;
    for (int e : s.idem)
      if (s.units.is_unit[r.sub(a, e)]) {
        any = true;
        break;
      }
    if (!any) return false;
  }
  return true;
}

bool is_weakly_clean(const RingTable& r) {
  const RingScan s = scan_ring(r);
  for (int a = 0; a < r.order(); ++a) {
    bool any = false;
    for (int e : s.idem)
      if (s.units.is_unit[r.sub(a, e)] || s.units.is_unit[r.add(a, e)]) {
        any = true;
        break;
      }
    if (!any) return false;
  }
  return true;
}

bool is_uniquely_clean(const RingTable& r) {
  const RingScan s = scan_ring(r);
  for (int a = 0; a < r.order(); ++a) {
    int c = 0;
    for (int e : s.idem) c += s.units.is_unit[r.sub(a, e)] != 0;
    if (c != 1) return false;
  }
  return true;
}

ElementalResult is_elemental(const RingTable& r) {
  // trivial idempotents means exactly {0, 1} with 0 != 1
  const ElementSet idem = idempotents(r);
  ElementalResult res;
  if (idem != ElementSet{0, r.one()}) return res;
  const UnitData ud = unit_data(r);
  const int e = r.one();
  for (int u : ud.set)
    for (int v : ud.set)
      if (r.add(u, v) == e) {
        res.elemental = true;
        res.u = u;
        res.v = v;
        return res;
      }
  return res;
}

JSets j_sets(const RingTable& ambient, const ElementSet& members, int a) {
  JSets js;
  const ElementSet q = quasi_regular(ambient, members);
  for (int x : q) {
    const int d1 = ambient.sub(a, x);
    if (ambient.mul(d1, d1) == d1) {
      js.j1.push_back(x);
      js.members.push_back(d1);
    }
    const int d2 = ambient.sub(x, a);
    if (ambient.mul(d2, d2) == d2) {
      js.j2.push_back(x);
      js.members.push_back(d2);
    }
  }
  js.combined = js.j1;
  js.combined.insert(js.combined.end(), js.j2.begin(), js.j2.end());
  std::sort(js.combined.begin(), js.combined.end());
  js.combined.erase(std::unique(js.combined.begin(), js.combined.end()),
                    js.combined.end());
  // one idempotent can arise from a j1 element and a j2 element at once,
  // so the induced set can be smaller than the combined q set
  std::sort(js.members.begin(), js.members.end());
  js.members.erase(std::unique(js.members.begin(), js.members.end()),
                   js.members.end());
  return js;
}

JSets j_sets(const RingTable& r, int a) {
  ElementSet all(r.order());
  std::iota(all.begin(), all.end(), 0);
  return j_sets(r, all, a);
}

int win_via_jsets(const SubringView& s) {
  if (!s.ambient) throw PreconditionError("null ambient ring");
  int best = 0;
  for (int a : s.members) {
    const JSets js = j_sets(*s.ambient, s.members, a);
    best = std::max(best, int(js.members.size()));
  }
  return best;
}

// --- classification -----------------------------------------------------

namespace {

json set_json(const ElementSet& s) { return json(s); }

}  // namespace

ClassificationResult predicate_win1(const RingTable& r) {
  ClassificationResult res;
  res.claimed_win = 1;
  const ElementSet idem = idempotents(r);
  for (int e : idem) {
    for (int x = 0; x < r.order(); ++x)
      if (r.mul(e, x) != r.mul(x, e)) {
        res.clause = "";
        res.witness = {{"reason", "not abelian"},
                       {"idempotent", e},
                       {"conjugate_at", x}};
        return res;
      }
  }
  const UnitData ud = unit_data(r);
  for (int e : idem) {
    if (e == 0) continue;
    for (int u : ud.set)
      for (int v : ud.set)
        if (r.add(u, v) == e) {
          res.witness = {{"reason", "idempotent is a sum of two units"},
                         {"idempotent", e},
                         {"u", u},
                         {"v", v}};
          return res;
        }
  }
  res.matched = true;
  res.clause = "abelian-no-idempotent-unit-sum";
  res.witness = {{"idempotents", set_json(idem)}};
  return res;
}

namespace {

// |eR(1-e)| == m_size and |(1-e)Re| == 1 in either orientation, with both
// diagonal corners of weak clean index 1.
bool triangular_clause(const RingTable& r, int m_size,
                       ClassificationResult& res, const char* clause) {
  const ElementSet idem = idempotents(r);
  const int one = r.one();
  for (int e : idem) {
    if (e == 0 || e == one) continue;
    const PeirceComponents pc = peirce_components(r, e);
    const int up = int(pc.upper_right.size());
    const int lo = int(pc.lower_left.size());
    const bool upper = up == m_size && lo == 1;
    const bool lower = lo == m_size && up == 1;
    if (!upper && !lower) continue;
    const RingTable a = corner_ring(r, e);
    const RingTable b = corner_ring(r, r.sub(one, e));
    if (weak_clean_index(a).value != 1 || weak_clean_index(b).value != 1)
      continue;
    res.matched = true;
    res.clause = clause;
    res.witness = {{"idempotent", e},
                   {"module", upper ? set_json(pc.upper_right)
                                    : set_json(pc.lower_left)},
                   {"orientation", upper ? "upper" : "lower"},
                   {"corner_orders", {a.order(), b.order()}}};
    return true;
  }
  return false;
}

}  // namespace

ClassificationResult predicate_win2(const RingTable& r) {
  ClassificationResult res;
  res.claimed_win = 2;

  const ElementalResult el = is_elemental(r);
  if (el.elemental) {
    res.matched = true;
    res.clause = "elemental";
    res.witness = {{"u", el.u}, {"v", el.v}};
    return res;
  }

  // split at a central idempotent into elemental x win-1
  const ElementSet cen = center(r);
  const int one = r.one();
  for (int c : cen) {
    if (c == 0 || c == one || r.mul(c, c) != c) continue;
    const RingTable a = corner_ring(r, c);
    const ElementalResult ea = is_elemental(a);
    if (!ea.elemental) continue;
    const RingTable b = corner_ring(r, r.sub(one, c));
    if (weak_clean_index(b).value != 1) continue;
    res.matched = true;
    res.clause = "central-split-elemental-x-win1";
    res.witness = {{"central_idempotent", c},
                   {"u", ea.u},
                   {"v", ea.v},
                   {"factor_orders", {a.order(), b.order()}}};
    return res;
  }

  if (triangular_clause(r, 2, res, "triangular-module-2-win1-corners"))
    return res;

  res.witness = {{"reason", "no clause applies"}};
  return res;
}

ClassificationResult predicate_win3(const RingTable& r) {
  ClassificationResult res;
  res.claimed_win = 3;
  if (triangular_clause(r, 3, res, "triangular-module-3-win1-corners"))
    return res;
  res.witness = {{"reason", "no clause applies"}};
  return res;
}

ChiBound chi_bound_triangular(const TriangularRing& t, int alpha) {
  if (!t.ring || !t.mod.a_ring || !t.mod.b_ring)
    throw PreconditionError("incomplete triangular ring");
  const auto d = t.decode(alpha);
  const RingTable& A = *t.mod.a_ring;
  const RingTable& B = *t.mod.b_ring;
  const ChiReport ca = chi(A, d[0]);
  const ChiReport cb = chi(B, d[2]);

  int w_max = 0;
  for (int e : ca.members)
    for (int f : cb.members) {
      int cnt = 0;
      for (int w = 0; w < t.mod.order; ++w)
        cnt += t.mod.madd(t.mod.act_left(e, w), t.mod.act_right(w, f)) == w;
      w_max = std::max(w_max, cnt);
    }

  ChiBound out;
  out.bound = int(ca.members.size()) * int(cb.members.size()) * w_max;
  out.chi_size = int(chi(*t.ring, alpha).members.size());
  out.within_bound = out.chi_size <= out.bound;
  return out;
}

// --- symbolic ------------------------------------------------------------

SymChiReport chi(const SymbolicTriangularRing& t, const SymElem& a) {
  SymChiReport rep;
  rep.element = a;
  for (const SymElem& e : t.idempotent_elements()) {
    const bool mu = t.is_unit(t.sub(a, e));
    const bool pu = t.is_unit(t.add(a, e));
    if (mu || pu) rep.members.push_back({e, mu, pu});
  }
  return rep;
}

namespace {

json sym_json(const SymElem& x) { return json::array({x.a, x.w, x.b}); }

// weak clean index 1 certificate for the integer diagonal corner: its
// units are +-1 (any other a has no multiplicative inverse) and no unit
// sum hits the idempotent 1.
bool integers_have_win1(json& cert) {
  const std::vector<long long> units{1, -1};
  std::vector<long long> sums;
  for (long long u : units)
    for (long long v : units) sums.push_back(u + v);
  const bool ok = std::find(sums.begin(), sums.end(), 1) == sums.end();
  cert = {{"units", units}, {"unit_sums", sums}};
  return ok;
}

}  // namespace

ClassificationResult predicate_win3(const SymbolicTriangularRing& t) {
  ClassificationResult res;
  res.claimed_win = 3;

  const SymElem e{1, 0, 0};
  const SymElem f = t.sub(t.one(), e);  // (0,0,1)
  if (!t.is_idempotent(e) || !t.is_idempotent(f)) {
    res.witness = {{"reason", "corner idempotents broken"}};
    return res;
  }

  // e.t.(1-e) depends only on the off-diagonal entry: enumerate it; and
  // (1-e).t.e vanishes. Checked on a deterministic grid of elements.
  std::vector<SymElem> module;
  for (int w = 0; w < SymbolicTriangularRing::kModuleOrder; ++w)
    module.push_back({0, w, 0});
  for (long long a = -3; a <= 3; ++a)
    for (int w = 0; w < SymbolicTriangularRing::kModuleOrder; ++w)
      for (long long b = -3; b <= 3; ++b) {
        const SymElem x{a, w, b};
        const SymElem up = t.mul(t.mul(e, x), f);
        if (!(up == SymElem{0, w, 0})) {
          res.witness = {{"reason", "upper module mismatch"},
                         {"element", sym_json(x)}};
          return res;
        }
        if (!(t.mul(t.mul(f, x), e) == t.zero())) {
          res.witness = {{"reason", "lower corner not zero"},
                         {"element", sym_json(x)}};
          return res;
        }
      }

  json cert;
  if (!integers_have_win1(cert)) {
    res.witness = {{"reason", "diagonal corner not of index 1"}};
    return res;
  }

  res.matched = true;
  res.clause = "triangular-module-3-win1-corners";
  json mod = json::array();
  for (const SymElem& m : module) mod.push_back(sym_json(m));
  res.witness = {{"idempotent", sym_json(e)},
                 {"module", mod},
                 {"corner_certificate", cert}};
  return res;
}

ChiBound chi_bound_triangular(const SymbolicTriangularRing& t,
                              const SymElem& alpha) {
  // diagonal corners are copies of Z: chi there is decided exactly
  auto corner_chi = [](long long a) {
    std::vector<long long> out;
    for (long long e = 0; e <= 1; ++e) {
      const long long d = a - e, s = a + e;
      if (d == 1 || d == -1 || s == 1 || s == -1) out.push_back(e);
    }
    return out;
  };
  const auto ca = corner_chi(alpha.a);
  const auto cb = corner_chi(alpha.b);

  int w_max = 0;
  for (long long e : ca)
    for (long long f : cb) {
      int cnt = 0;
      for (int w = 0; w < SymbolicTriangularRing::kModuleOrder; ++w)
        cnt += int((e * w + (long long)w * f) % 3) == w;
      w_max = std::max(w_max, cnt);
    }

  ChiBound out;
  out.bound = int(ca.size()) * int(cb.size()) * w_max;
  out.chi_size = int(chi(t, alpha).members.size());
  out.within_bound = out.chi_size <= out.bound;
  return out;
}

// --- json ----------------------------------------------------------------

json to_json(const ChiReport& rep) {
  json w = json::array();
  for (const ChiWitness& x : rep.witnesses)
    w.push_back({{"idempotent", x.idempotent},
                 {"minus_unit", x.minus_unit},
                 {"plus_unit", x.plus_unit}});
  return {{"element", rep.element},
          {"members", json(rep.members)},
          {"size", rep.members.size()},
          {"witnesses", w}};
}

json to_json(const SymChiReport& rep) {
  json w = json::array();
  json members = json::array();
  for (const SymChiWitness& x : rep.members) {
    members.push_back(sym_json(x.idempotent));
    w.push_back({{"idempotent", sym_json(x.idempotent)},
                 {"minus_unit", x.minus_unit},
                 {"plus_unit", x.plus_unit}});
  }
  return {{"element", sym_json(rep.element)},
          {"members", members},
          {"size", rep.members.size()},
          {"witnesses", w}};
}

json to_json(const ClassificationResult& res) {
  return {{"matched", res.matched},
          {"claimed_win", res.claimed_win},
          {"clause", res.clause},
          {"witness", res.witness}};
}

}  // namespace wci
