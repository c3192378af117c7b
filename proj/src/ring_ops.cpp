#include "wci/ring_ops.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wci/errors.hpp"

namespace wci {

AxiomReport verify_ring_axioms(const RingTable& r) {
  AxiomReport rep;
  const int n = r.order();
  auto record = [&rep](const char* axiom, std::initializer_list<int> w) {
    rep.violations.push_back({axiom, std::vector<int>(w)});
  };

  for (int a = 0; a < n; ++a)
    if (r.add(0, a) != a || r.add(a, 0) != a) {
      record("add-zero-identity", {a});
      break;
    }
  for (int a = 0; a < n; ++a)
    if (r.neg(a) < 0) {
      record("add-inverse", {a});
      break;
    }
  for (int a = 0; a < n; ++a) {
    bool done = false;
    for (int b = a + 1; b < n; ++b)
      if (r.add(a, b) != r.add(b, a)) {
        record("add-commutative", {a, b});
        done = true;
        break;
      }
    if (done) break;
  }

  // one combined triple sweep; each axiom keeps its first witness
  bool aa = false, ma = false, ld = false, rd = false;
  for (int a = 0; a < n && !(aa && ma && ld && rd); ++a) {
    for (int b = 0; b < n && !(aa && ma && ld && rd); ++b) {
      for (int c = 0; c < n; ++c) {
        if (!aa && r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) {
          record("add-associative", {a, b, c});
          aa = true;
        }
        if (!ma && r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) {
          record("mul-associative", {a, b, c});
          ma = true;
        }
        if (!ld && r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) {
          record("left-distributive", {a, b, c});
          ld = true;
        }
        if (!rd && r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) {
          record("right-distributive", {a, b, c});
          rd = true;
        }
        if (aa && ma && ld && rd) break;
      }
    }
  }

  if (r.unital()) {
    const int e = r.one();
    for (int a = 0; a < n; ++a)
      if (r.mul(e, a) != a || r.mul(a, e) != a) {
        record("one-identity", {a});
        break;
      }
  }
  return rep;
}

UnitData unit_data(const RingTable& r) {
  const int n = r.order();
  const int e = r.one();
  UnitData ud;
  ud.is_unit.assign(n, 0);
  ud.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (r.mul(a, b) == e && r.mul(b, a) == e) {
        ud.is_unit[a] = 1;
        ud.inverse[a] = b;
        ud.set.push_back(a);
        break;
      }
    }
  }
  return ud;
}

ElementSet units(const RingTable& r) { return unit_data(r).set; }

ElementSet idempotents(const RingTable& r) {
  ElementSet out;
  for (int a = 0; a < r.order(); ++a)
    if (r.mul(a, a) == a) out.push_back(a);
  return out;
}

ElementSet nilpotents(const RingTable& r) {
  // follow the power orbit; it cycles within order() steps
  ElementSet out;
  const int n = r.order();
  for (int a = 0; a < n; ++a) {
    int p = a;
    for (int k = 0; k < n; ++k) {
      if (p == 0) break;
      p = r.mul(p, a);
    }
    if (p == 0) out.push_back(a);
  }
  return out;
}

ElementSet center(const RingTable& r) {
  ElementSet out;
  const int n = r.order();
  for (int a = 0; a < n; ++a) {
    bool central = true;
    for (int x = 0; x < n; ++x)
      if (r.mul(a, x) != r.mul(x, a)) {
        central = false;
        break;
      }
    if (central) out.push_back(a);
  }
  return out;
}

bool is_abelian(const RingTable& r) {
  const int n = r.order();
  for (int a = 0; a < n; ++a) {
    if (r.mul(a, a) != a) continue;
    for (int x = 0; x < n; ++x)
      if (r.mul(a, x) != r.mul(x, a)) return false;
  }
  return true;
}

ElementSet quasi_regular(const RingTable& ambient,
                         const ElementSet& members) {
  ElementSet out;
  for (int q : members) {
    for (int p : members) {
      const bool fwd =
          ambient.add(ambient.add(q, p), ambient.mul(q, p)) == 0;
      if (!fwd) continue;
      if (ambient.add(ambient.add(p, q), ambient.mul(p, q)) == 0) {
        out.push_back(q);
        break;
      }
    }
  }
  return out;
}

ElementSet quasi_regular(const RingTable& r) {
  ElementSet all(r.order());
  std::iota(all.begin(), all.end(), 0);
  return quasi_regular(r, all);
}

ElementSet jacobson_radical(const RingTable& r) {
  const int n = r.order();
  const int e = r.one();
  const UnitData ud = unit_data(r);
  ElementSet out;
  for (int a = 0; a < n; ++a) {
    bool in = true;
    for (int x = 0; x < n; ++x) {
      if (!ud.is_unit[r.sub(e, r.mul(x, a))] ||
          !ud.is_unit[r.sub(e, r.mul(a, x))]) {
        in = false;
        break;
      }
    }
    if (in) out.push_back(a);
  }

  // sanity: the result must be a two-sided ideal
  std::vector<char> member(n, 0);
  for (int a : out) member[a] = 1;
  for (int a : out) {
    for (int b : out)
      if (!member[r.add(a, b)])
        throw InputError("radical scan did not close under +: " +
                         std::to_string(a) + "," + std::to_string(b));
    for (int x = 0; x < n; ++x)
      if (!member[r.mul(a, x)] || !member[r.mul(x, a)])
        throw InputError("radical scan did not absorb products at " +
                         std::to_string(a) + "," + std::to_string(x));
  }
  return out;
}

bool is_local(const RingTable& r) {
  const UnitData ud = unit_data(r);
  const ElementSet rad = jacobson_radical(r);
  ElementSet nonunits;
  for (int a = 0; a < r.order(); ++a)
    if (!ud.is_unit[a]) nonunits.push_back(a);
  return nonunits == rad;
}

namespace {

void check_ideal(const RingTable& r, const ElementSet& ideal,
                 const std::vector<char>& member) {
  if (ideal.empty()) throw PreconditionError("ideal must be non-empty");
  for (int i : ideal) {
    if (i < 0 || i >= r.order())
      throw PreconditionError("ideal element " + std::to_string(i) +
                              " out of range");
    const int ni = r.neg(i);
    if (ni < 0 || !member[ni])
      throw PreconditionError("ideal not closed under negation at " +
                              std::to_string(i));
    for (int j : ideal)
      if (!member[r.add(i, j)])
        throw PreconditionError("ideal not closed under + at " +
                                std::to_string(i) + "," + std::to_string(j));
    for (int x = 0; x < r.order(); ++x)
      if (!member[r.mul(x, i)] || !member[r.mul(i, x)])
        throw PreconditionError("ideal does not absorb products at " +
                                std::to_string(i) + "," + std::to_string(x));
  }
  if (!member[0])
    throw PreconditionError("ideal must contain 0");
}

}  // namespace

RingTable quotient(const RingTable& r, const ElementSet& ideal) {
  const int n = r.order();
  std::vector<char> member(n, 0);
  for (int i : ideal)
    if (i >= 0 && i < n) member[i] = 1;
  check_ideal(r, ideal, member);

  // coset representative = minimal member of a + I
  std::vector<int> rep(n);
  for (int a = 0; a < n; ++a) {
    int m = n;
    for (int i : ideal) m = std::min(m, r.add(a, i));
    rep[a] = m;
  }
  std::vector<int> reps;
  std::vector<int> pos(n, -1);
  for (int a = 0; a < n; ++a)
    if (rep[a] == a) {
      pos[a] = int(reps.size());
      reps.push_back(a);
    }

  const int m = int(reps.size());
  std::vector<std::uint16_t> qadd(std::size_t(m) * m), qmul(std::size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      qadd[std::size_t(i) * m + j] =
          std::uint16_t(pos[rep[r.add(reps[i], reps[j])]]);
      qmul[std::size_t(i) * m + j] =
          std::uint16_t(pos[rep[r.mul(reps[i], reps[j])]]);
    }
  const bool unital = r.unital();
  const int qone = unital ? pos[rep[r.one()]] : -1;
  return RingTable(m, qone, std::move(qadd), std::move(qmul), unital);
}

RingTable corner_ring(const RingTable& r, int e) {
  if (e < 0 || e >= r.order())
    throw PreconditionError("corner element out of range");
  if (r.mul(e, e) != e)
    throw PreconditionError("corner element " + std::to_string(e) +
                            " is not idempotent");
  ElementSet members;
  {
    std::vector<char> seen(r.order(), 0);
    for (int x = 0; x < r.order(); ++x) {
      const int y = r.mul(r.mul(e, x), e);
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
  }
  std::vector<int> pos(r.order(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = int(i);

  const int m = int(members.size());
  std::vector<std::uint16_t> cadd(std::size_t(m) * m), cmul(std::size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      cadd[std::size_t(i) * m + j] =
          std::uint16_t(pos[r.add(members[i], members[j])]);
      cmul[std::size_t(i) * m + j] =
          std::uint16_t(pos[r.mul(members[i], members[j])]);
    }
  return RingTable(m, pos[e], std::move(cadd), std::move(cmul), true);
}

PeirceComponents peirce_components(const RingTable& r, int e) {
  if (e < 0 || e >= r.order())
    throw PreconditionError("idempotent out of range");
  if (r.mul(e, e) != e)
    throw PreconditionError("element " + std::to_string(e) +
                            " is not idempotent");
  const int f = r.sub(r.one(), e);
  PeirceComponents pc;
  std::vector<char> ul(r.order(), 0), ur(r.order(), 0), ll(r.order(), 0),
      lr(r.order(), 0);
  for (int x = 0; x < r.order(); ++x) {
    const int ex = r.mul(e, x), fx = r.mul(f, x);
    ul[r.mul(ex, e)] = 1;
    ur[r.mul(ex, f)] = 1;
    ll[r.mul(fx, e)] = 1;
    lr[r.mul(fx, f)] = 1;
  }
  for (int x = 0; x < r.order(); ++x) {
    if (ul[x]) pc.upper_left.push_back(x);
    if (ur[x]) pc.upper_right.push_back(x);
    if (ll[x]) pc.lower_left.push_back(x);
    if (lr[x]) pc.lower_right.push_back(x);
  }
  return pc;
}

SubringView subring_generated(RingPtr r, const ElementSet& seed) {
  if (!r) throw PreconditionError("null ambient ring");
  if (seed.empty()) throw PreconditionError("seed must be non-empty");
  const int n = r->order();
  std::vector<char> in(n, 0);
  ElementSet members;
  std::vector<int> work;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
      work.push_back(x);
    }
  };
  for (int s : seed) {
    if (s < 0 || s >= n)
      throw PreconditionError("seed element " + std::to_string(s) +
                              " out of range");
    push(s);
  }
  while (!work.empty()) {
    const int x = work.back();
    work.pop_back();
    const int nx = r->neg(x);
    if (nx < 0)
      throw InputError("ambient table lacks an additive inverse for " +
                       std::to_string(x));
    push(nx);
    // snapshot; pushes extend members but new pairs get handled when the
    // new element is popped
    const std::size_t upto = members.size();
    for (std::size_t i = 0; i < upto; ++i) {
      const int y = members[i];
      push(r->add(x, y));
      push(r->mul(x, y));
      push(r->mul(y, x));
    }
  }
  std::sort(members.begin(), members.end());
  return SubringView{std::move(r), std::move(members)};
}

RingTable realize_subring(const SubringView& s) {
  if (!s.ambient) throw PreconditionError("null ambient ring");
  const RingTable& r = *s.ambient;
  const int m = int(s.members.size());
  if (m == 0) throw PreconditionError("empty subring");
  std::vector<int> pos(r.order(), -1);
  for (int i = 0; i < m; ++i) {
    const int x = s.members[i];
    if (x < 0 || x >= r.order())
      throw PreconditionError("subring member out of range");
    pos[x] = i;
  }

  std::vector<std::uint16_t> sadd(std::size_t(m) * m), smul(std::size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int a = r.add(s.members[i], s.members[j]);
      const int p = r.mul(s.members[i], s.members[j]);
      if (pos[a] < 0 || pos[p] < 0)
        throw PreconditionError("member set is not closed under the ambient "
                                "operations");
      sadd[std::size_t(i) * m + j] = std::uint16_t(pos[a]);
      smul[std::size_t(i) * m + j] = std::uint16_t(pos[p]);
    }

  // the subring may have its own identity even without the ambient one
  int one = -1;
  for (int i = 0; i < m && one < 0; ++i) {
    bool id = true;
    for (int j = 0; j < m; ++j)
      if (smul[std::size_t(i) * m + j] != j ||
          smul[std::size_t(j) * m + i] != j) {
        id = false;
        break;
      }
    if (id) one = i;
  }
  return RingTable(m, one, std::move(sadd), std::move(smul), one >= 0);
}

}  // namespace wci
