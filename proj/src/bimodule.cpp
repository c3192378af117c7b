#include "wci/bimodule.hpp"

#include "wci/errors.hpp"

namespace wci {

int FiniteBimodule::mneg(int w) const {
  for (int v = 0; v < order; ++v)
    if (madd(w, v) == 0 && madd(v, w) == 0) return v;
  return -1;
}

AxiomReport verify_bimodule(const FiniteBimodule& m) {
  AxiomReport rep;
  auto record = [&rep](const char* axiom, std::initializer_list<int> w) {
    rep.violations.push_back({axiom, std::vector<int>(w)});
  };
  if (!m.a_ring || !m.b_ring) {
    record("rings-missing", {});
    return rep;
  }
  const int n = m.order;
  const int na = m.a_ring->order();
  const int nb = m.b_ring->order();
  if (n < 1 || m.add.size() != std::size_t(n) * n ||
      m.left.size() != std::size_t(na) * n ||
      m.right.size() != std::size_t(n) * nb) {
    record("table-shape", {n});
    return rep;
  }
  for (auto v : m.add)
    if (v >= n) {
      record("add-entry-range", {int(v)});
      return rep;
    }
  for (auto v : m.left)
    if (v >= n) {
      record("left-entry-range", {int(v)});
      return rep;
    }
  for (auto v : m.right)
    if (v >= n) {
      record("right-entry-range", {int(v)});
      return rep;
    }

  for (int w = 0; w < n; ++w)
    if (m.madd(0, w) != w || m.madd(w, 0) != w) {
      record("add-zero-identity", {w});
      break;
    }
  for (int w = 0; w < n; ++w)
    if (m.mneg(w) < 0) {
      record("add-inverse", {w});
      break;
    }
  {
    bool done = false;
    for (int w = 0; w < n && !done; ++w)
      for (int v = w + 1; v < n; ++v)
        if (m.madd(w, v) != m.madd(v, w)) {
          record("add-commutative", {w, v});
          done = true;
          break;
        }
  }
  {
    bool done = false;
    for (int u = 0; u < n && !done; ++u)
      for (int v = 0; v < n && !done; ++v)
        for (int w = 0; w < n; ++w)
          if (m.madd(m.madd(u, v), w) != m.madd(u, m.madd(v, w))) {
            record("add-associative", {u, v, w});
            done = true;
            break;
          }
  }

  const RingTable& A = *m.a_ring;
  const RingTable& B = *m.b_ring;
  for (int w = 0; w < n; ++w)
    if (m.act_left(A.one(), w) != w) {
      record("left-unital", {w});
      break;
    }
  for (int w = 0; w < n; ++w)
    if (m.act_right(w, B.one()) != w) {
      record("right-unital", {w});
      break;
    }
  {
    bool done = false;
    for (int a = 0; a < na && !done; ++a)
      for (int a2 = 0; a2 < na && !done; ++a2)
        for (int w = 0; w < n; ++w) {
          if (m.act_left(A.mul(a, a2), w) !=
              m.act_left(a, m.act_left(a2, w))) {
            record("left-associative", {a, a2, w});
            done = true;
            break;
          }
          if (m.act_left(A.add(a, a2), w) !=
              m.madd(m.act_left(a, w), m.act_left(a2, w))) {
            record("left-additive-in-ring", {a, a2, w});
            done = true;
            break;
          }
        }
  }
  {
    bool done = false;
    for (int a = 0; a < na && !done; ++a)
      for (int w = 0; w < n && !done; ++w)
        for (int v = 0; v < n; ++v)
          if (m.act_left(a, m.madd(w, v)) !=
              m.madd(m.act_left(a, w), m.act_left(a, v))) {
            record("left-additive-in-module", {a, w, v});
            done = true;
            break;
          }
  }
  {
    bool done = false;
    for (int b = 0; b < nb && !done; ++b)
      for (int b2 = 0; b2 < nb && !done; ++b2)
        for (int w = 0; w < n; ++w) {
          if (m.act_right(w, B.mul(b, b2)) !=
              m.act_right(m.act_right(w, b), b2)) {
            record("right-associative", {w, b, b2});
            done = true;
            break;
          }
          if (m.act_right(w, B.add(b, b2)) !=
              m.madd(m.act_right(w, b), m.act_right(w, b2))) {
            record("right-additive-in-ring", {w, b, b2});
            done = true;
            break;
          }
        }
  }
  {
    bool done = false;
    for (int b = 0; b < nb && !done; ++b)
      for (int w = 0; w < n && !done; ++w)
        for (int v = 0; v < n; ++v)
          if (m.act_right(m.madd(w, v), b) !=
              m.madd(m.act_right(w, b), m.act_right(v, b))) {
            record("right-additive-in-module", {w, v, b});
            done = true;
            break;
          }
  }
  {
    bool done = false;
    for (int a = 0; a < na && !done; ++a)
      for (int w = 0; w < n && !done; ++w)
        for (int b = 0; b < nb; ++b)
          if (m.act_right(m.act_left(a, w), b) !=
              m.act_left(a, m.act_right(w, b))) {
            record("action-compatibility", {a, w, b});
            done = true;
            break;
          }
  }
  return rep;
}

FiniteBimodule natural_bimodule(RingPtr r) {
  if (!r) throw PreconditionError("null ring");
  FiniteBimodule m;
  m.order = r->order();
  m.add = r->add_table();
  m.left = r->mul_table();
  m.right = r->mul_table();
  m.a_ring = r;
  m.b_ring = std::move(r);
  return m;
}

}  // namespace wci
