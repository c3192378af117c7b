#include "wci/construct.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "wci/errors.hpp"
#include "wci/ring_ops.hpp"

namespace wci {

namespace {

// cap guard that also respects the uint16 representation ceiling
int checked_order(long long m, int size_cap, const std::string& what) {
  if (size_cap < 1 || size_cap > RingTable::kMaxOrder)
    throw InputError("size cap must be in 1.." +
                     std::to_string(RingTable::kMaxOrder));
  if (m > size_cap)
    throw ResourceError(what + " has order " + std::to_string(m) +
                        ", above the size cap " + std::to_string(size_cap));
  return int(m);
}

}  // namespace

RingTable zn(int n) {
  if (n < 1) throw InputError("zn requires n >= 1");
  if (n > RingTable::kMaxOrder)
    throw ResourceError("zn order exceeds the table ceiling");
  std::vector<std::uint16_t> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add[std::size_t(a) * n + b] = std::uint16_t((a + b) % n);
      mul[std::size_t(a) * n + b] = std::uint16_t((1LL * a * b) % n);
    }
  // in the one-element ring 0 == 1
  return RingTable(n, n == 1 ? 0 : 1, std::move(add), std::move(mul), true);
}

RingTable direct_product(const RingTable& r1, const RingTable& r2,
                         int size_cap) {
  const long long m = (long long)r1.order() * r2.order();
  const int n = checked_order(m, size_cap, "direct product");
  const int n2 = r2.order();
  std::vector<std::uint16_t> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  for (int x = 0; x < n; ++x) {
    const int a1 = x / n2, a2 = x % n2;
    for (int y = 0; y < n; ++y) {
      const int b1 = y / n2, b2 = y % n2;
      add[std::size_t(x) * n + y] =
          std::uint16_t(r1.add(a1, b1) * n2 + r2.add(a2, b2));
      mul[std::size_t(x) * n + y] =
          std::uint16_t(r1.mul(a1, b1) * n2 + r2.mul(a2, b2));
    }
  }
  const bool unital = r1.unital() && r2.unital();
  const int one = unital ? r1.one() * n2 + r2.one() : -1;
  return RingTable(n, one, std::move(add), std::move(mul), unital);
}

RingTable matrix_ring(const RingTable& base, int k, int size_cap) {
  if (k < 1) throw InputError("matrix_ring requires k >= 1");
  const int n = base.order();
  const int kk = k * k;
  long long m = 1;
  for (int i = 0; i < kk && m <= size_cap; ++i) m *= n;
  const int order = checked_order(m, size_cap, "matrix ring");

  // digit decomposition of every element, row-major entries
  std::vector<std::uint16_t> dig(std::size_t(order) * kk);
  for (int idx = 1; idx < order; ++idx) {
    std::uint16_t* d = &dig[std::size_t(idx) * kk];
    const std::uint16_t* p = &dig[std::size_t(idx - 1) * kk];
    std::copy(p, p + kk, d);
    for (int j = kk - 1; j >= 0; --j) {
      if (++d[j] < n) break;
      d[j] = 0;
    }
  }
  auto encode = [&](const int* entries) {
    int idx = 0;
    for (int j = 0; j < kk; ++j) idx = idx * n + entries[j];
    return idx;
  };

  std::vector<std::uint16_t> add(std::size_t(order) * order),
      mul(std::size_t(order) * order);
  std::vector<int> acc(kk);
  for (int x = 0; x < order; ++x) {
    const std::uint16_t* a = &dig[std::size_t(x) * kk];
    for (int y = 0; y < order; ++y) {
      const std::uint16_t* b = &dig[std::size_t(y) * kk];
      for (int j = 0; j < kk; ++j) acc[j] = base.add(a[j], b[j]);
      add[std::size_t(x) * order + y] = std::uint16_t(encode(acc.data()));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          int s = base.mul(a[i * k], b[j]);
          for (int t = 1; t < k; ++t)
            s = base.add(s, base.mul(a[i * k + t], b[t * k + j]));
          acc[i * k + j] = s;
        }
      mul[std::size_t(x) * order + y] = std::uint16_t(encode(acc.data()));
    }
  }

  int one = -1;
  if (base.unital()) {
    std::vector<int> id(kk, 0);
    for (int i = 0; i < k; ++i) id[i * k + i] = base.one();
    one = encode(id.data());
  }
  return RingTable(order, one, std::move(add), std::move(mul), base.unital());
}

TriangularRing build_triangular(const FiniteBimodule& m, int size_cap) {
  const AxiomReport rep = verify_bimodule(m);
  if (!rep.ok()) {
    std::string w;
    for (int v : rep.violations.front().witness)
      w += (w.empty() ? "" : ",") + std::to_string(v);
    throw PreconditionError("bimodule axiom '" +
                            rep.violations.front().axiom +
                            "' fails at (" + w + ")");
  }
  const RingTable& A = *m.a_ring;
  const RingTable& B = *m.b_ring;
  const long long total = (long long)A.order() * m.order * B.order();
  const int order = checked_order(total, size_cap, "triangular ring");

  TriangularRing t;
  t.mod = m;
  const int nw = m.order, nb = B.order();
  std::vector<std::uint16_t> add(std::size_t(order) * order),
      mul(std::size_t(order) * order);
  for (int x = 0; x < order; ++x) {
    const int xa = x / (nw * nb), xw = (x / nb) % nw, xb = x % nb;
    for (int y = 0; y < order; ++y) {
      const int ya = y / (nw * nb), yw = (y / nb) % nw, yb = y % nb;
      add[std::size_t(x) * order + y] = std::uint16_t(
          (A.add(xa, ya) * nw + m.madd(xw, yw)) * nb + B.add(xb, yb));
      mul[std::size_t(x) * order + y] = std::uint16_t(
          (A.mul(xa, ya) * nw +
           m.madd(m.act_left(xa, yw), m.act_right(xw, yb))) *
              nb +
          B.mul(xb, yb));
    }
  }
  const int one = (A.one() * nw + 0) * nb + B.one();
  t.ring = std::make_shared<RingTable>(order, one, std::move(add),
                                       std::move(mul), true);
  return t;
}

RingTable triangular(const FiniteBimodule& m, int size_cap) {
  return *build_triangular(m, size_cap).ring;
}

namespace {

long long trunc_order(const RingTable& base, int k, int size_cap) {
  if (k < 1) throw InputError("trunc_poly requires k >= 1");
  long long m = 1;
  for (int i = 0; i < k; ++i) {
    m *= base.order();
    if (m > size_cap) break;
  }
  return m;
}

}  // namespace

RingTable trunc_poly(const RingTable& base, int k, int size_cap) {
  const int n = base.order();
  const int order =
      checked_order(trunc_order(base, k, size_cap), size_cap, "trunc_poly");

  // coefficient tuples, constant term first / most significant
  std::vector<std::uint16_t> dig(std::size_t(order) * k);
  for (int idx = 1; idx < order; ++idx) {
    std::uint16_t* d = &dig[std::size_t(idx) * k];
    const std::uint16_t* p = &dig[std::size_t(idx - 1) * k];
    std::copy(p, p + k, d);
    for (int j = k - 1; j >= 0; --j) {
      if (++d[j] < n) break;
      d[j] = 0;
    }
  }

  std::vector<std::uint16_t> add(std::size_t(order) * order),
      mul(std::size_t(order) * order);
  std::vector<int> acc(k);
  for (int x = 0; x < order; ++x) {
    const std::uint16_t* a = &dig[std::size_t(x) * k];
    std::uint16_t* arow = &add[std::size_t(x) * order];
    std::uint16_t* mrow = &mul[std::size_t(x) * order];
    for (int y = 0; y < order; ++y) {
      const std::uint16_t* b = &dig[std::size_t(y) * k];
      int ia = 0, im = 0;
      for (int t = 0; t < k; ++t) {
        ia = ia * n + base.add(a[t], b[t]);
        int s = base.mul(a[0], b[t]);
        for (int i = 1; i <= t; ++i)
          s = base.add(s, base.mul(a[i], b[t - i]));
        im = im * n + s;
      }
      arow[y] = std::uint16_t(ia);
      mrow[y] = std::uint16_t(im);
    }
  }

  int one = -1;
  if (base.unital()) one = trunc_embed(base, k, base.one());
  return RingTable(order, one, std::move(add), std::move(mul), base.unital());
}

int trunc_embed(const RingTable& base, int k, int c) {
  return trunc_monomial(base, k, c, 0);
}

int trunc_monomial(const RingTable& base, int k, int c, int deg) {
  if (deg < 0 || deg >= k) throw InputError("monomial degree out of range");
  if (c < 0 || c >= base.order()) throw InputError("coefficient out of range");
  long long idx = c;
  for (int j = deg + 1; j < k; ++j) {
    idx *= base.order();
    if (idx > RingTable::kMaxOrder)
      throw ResourceError("monomial index exceeds the table ceiling");
  }
  return int(idx);
}

// ---------------------------------------------------------------------
// JSON ring specs

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw InputError(path + ": " + msg);
}

const json& field(const json& spec, const char* key, const std::string& path) {
  auto it = spec.find(key);
  if (it == spec.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const json& spec, const char* key, const std::string& path) {
  const json& v = field(spec, key, path);
  if (!v.is_number_integer())
    fail(path + "." + key, "expected an integer");
  return v.get<int>();
}

std::vector<std::uint16_t> flat_table(const json& v, const char* key,
                                      std::size_t rows, std::size_t cols,
                                      const std::string& path) {
  const std::string where = path + "." + key;
  if (!v.is_array() || v.size() != rows)
    fail(where, "expected an array of " + std::to_string(rows) + " rows");
  std::vector<std::uint16_t> out;
  out.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = v[i];
    if (!row.is_array() || row.size() != cols)
      fail(where + "[" + std::to_string(i) + "]",
           "expected a row of " + std::to_string(cols) + " entries");
    for (const json& cell : row) {
      if (!cell.is_number_integer() || cell.get<long long>() < 0 ||
          cell.get<long long>() >= 65536)
        fail(where + "[" + std::to_string(i) + "]",
             "table entries must be integers in 0..65535");
      out.push_back(std::uint16_t(cell.get<int>()));
    }
  }
  return out;
}

BuiltRing build_impl(const json& spec, const BuildOptions& opts,
                     const std::string& path);

RingPtr build_finite(const json& spec, const BuildOptions& opts,
                     const std::string& path) {
  BuiltRing r = build_impl(spec, opts, path);
  if (r.is_symbolic())
    fail(path, "a finite ring is required here, got the symbolic ring");
  return r.table;
}

BuiltRing build_impl(const json& spec, const BuildOptions& opts,
                     const std::string& path) {
  if (!spec.is_object()) fail(path, "ring spec must be a JSON object");
  const json& kindv = field(spec, "kind", path);
  if (!kindv.is_string()) fail(path + ".kind", "expected a string");
  const std::string kind = kindv.get<std::string>();
  BuiltRing out;

  if (kind == "zn") {
    const int n = int_field(spec, "n", path);
    if (n < 1) fail(path + ".n", "zn requires n >= 1");
    checked_order(n, opts.size_cap, path);
    out.table = std::make_shared<RingTable>(zn(n));
  } else if (kind == "product") {
    const json& fs = field(spec, "factors", path);
    if (!fs.is_array() || fs.empty())
      fail(path + ".factors", "expected a non-empty array of ring specs");
    RingPtr acc = build_finite(fs[0], opts, path + ".factors[0]");
    for (std::size_t i = 1; i < fs.size(); ++i) {
      RingPtr next =
          build_finite(fs[i], opts, path + ".factors[" + std::to_string(i) + "]");
      acc = std::make_shared<RingTable>(
          direct_product(*acc, *next, opts.size_cap));
    }
    out.table = acc;
  } else if (kind == "matrix") {
    RingPtr base = build_finite(field(spec, "base", path), opts, path + ".base");
    const int k = int_field(spec, "k", path);
    out.table =
        std::make_shared<RingTable>(matrix_ring(*base, k, opts.size_cap));
  } else if (kind == "triangular") {
    RingPtr a = build_finite(field(spec, "a", path), opts, path + ".a");
    RingPtr b = build_finite(field(spec, "b", path), opts, path + ".b");
    const json& mj = field(spec, "m", path);
    if (!mj.is_object()) fail(path + ".m", "expected a bimodule object");
    FiniteBimodule m;
    m.a_ring = a;
    m.b_ring = b;
    m.order = int_field(mj, "order", path + ".m");
    if (m.order < 1) fail(path + ".m.order", "module order must be >= 1");
    m.add = flat_table(field(mj, "add", path + ".m"), "add",
                       std::size_t(m.order), std::size_t(m.order), path + ".m");
    m.left = flat_table(field(mj, "left", path + ".m"), "left",
                        std::size_t(a->order()), std::size_t(m.order),
                        path + ".m");
    m.right = flat_table(field(mj, "right", path + ".m"), "right",
                         std::size_t(m.order), std::size_t(b->order()),
                         path + ".m");
    if (opts.verify_tables) {
      const AxiomReport rep = verify_bimodule(m);
      if (!rep.ok()) {
        std::string w;
        for (int v : rep.violations.front().witness)
          w += (w.empty() ? "" : ",") + std::to_string(v);
        fail(path + ".m", "bimodule axiom '" + rep.violations.front().axiom +
                              "' fails at (" + w + ")");
      }
    }
    TriangularRing t = build_triangular(m, opts.size_cap);
    out.table = t.ring;
    out.tri = std::move(t);
  } else if (kind == "trunc_poly") {
    RingPtr base = build_finite(field(spec, "base", path), opts, path + ".base");
    const int k = int_field(spec, "k", path);
    out.table =
        std::make_shared<RingTable>(trunc_poly(*base, k, opts.size_cap));
  } else if (kind == "table") {
    const int order = int_field(spec, "order", path);
    if (order < 1) fail(path + ".order", "order must be >= 1");
    if (order > opts.size_cap)
      throw ResourceError(path + ": order above the size cap " +
                          std::to_string(opts.size_cap));
    const int one = int_field(spec, "one", path);
    auto addt = flat_table(field(spec, "add", path), "add",
                           std::size_t(order), std::size_t(order), path);
    auto mult = flat_table(field(spec, "mul", path), "mul",
                           std::size_t(order), std::size_t(order), path);
    RingPtr r;
    try {
      r = std::make_shared<RingTable>(order, one, std::move(addt),
                                      std::move(mult), true);
    } catch (const InputError& e) {
      fail(path, e.what());
    }
    if (opts.verify_tables) {
      const AxiomReport rep = verify_ring_axioms(*r);
      if (!rep.ok()) {
        const AxiomViolation& v = rep.violations.front();
        std::string w;
        for (int x : v.witness) w += (w.empty() ? "" : ",") + std::to_string(x);
        fail(path, "ring axiom '" + v.axiom + "' fails at (" + w + ")");
      }
    }
    out.table = r;
  } else if (kind == "subring") {
    RingPtr base = build_finite(field(spec, "base", path), opts, path + ".base");
    const json& seedv = field(spec, "seed", path);
    if (!seedv.is_array() || seedv.empty())
      fail(path + ".seed", "expected a non-empty array of element indices");
    ElementSet seed;
    for (const json& s : seedv) {
      if (!s.is_number_integer() || s.get<long long>() < 0 ||
          s.get<long long>() >= base->order())
        fail(path + ".seed", "seed entries must be element indices of base");
      seed.push_back(s.get<int>());
    }
    out.table = std::make_shared<RingTable>(
        realize_subring(subring_generated(base, seed)));
  } else if (kind == "symbolic_t3") {
    out.symbolic = std::make_shared<SymbolicTriangularRing>();
  } else {
    fail(path + ".kind", "unknown ring kind '" + kind + "'");
  }
  return out;
}

}  // namespace

BuiltRing build(const nlohmann::json& spec, const BuildOptions& opts) {
  return build_impl(spec, opts, "$");
}

BuiltRing build(const std::string& spec_text, const BuildOptions& opts) {
  json doc;
  try {
    doc = json::parse(spec_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("ring spec is not valid JSON: ") + e.what());
  }
  return build(doc, opts);
}

}  // namespace wci
