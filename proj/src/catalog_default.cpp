#include "wci/verify.hpp"

namespace wci {

// Kept in sync with data/catalog.json (a test compares the two).
const char* default_catalog_text() {
  return R"catalog(
{
  "entries": [
    {"name": "Z_1", "spec": {"kind": "zn", "n": 1}},
    {"name": "Z_2", "spec": {"kind": "zn", "n": 2}},
    {"name": "Z_3", "spec": {"kind": "zn", "n": 3}},
    {"name": "Z_4", "spec": {"kind": "zn", "n": 4}},
    {"name": "Z_5", "spec": {"kind": "zn", "n": 5}},
    {"name": "Z_6", "spec": {"kind": "zn", "n": 6}},
    {"name": "Z_7", "spec": {"kind": "zn", "n": 7}},
    {"name": "Z_8", "spec": {"kind": "zn", "n": 8}},
    {"name": "Z_9", "spec": {"kind": "zn", "n": 9}},
    {"name": "Z_10", "spec": {"kind": "zn", "n": 10}},
    {"name": "Z_11", "spec": {"kind": "zn", "n": 11}},
    {"name": "Z_12", "spec": {"kind": "zn", "n": 12}},
    {"name": "Z_13", "spec": {"kind": "zn", "n": 13}},
    {"name": "Z_14", "spec": {"kind": "zn", "n": 14}},
    {"name": "Z_15", "spec": {"kind": "zn", "n": 15}},
    {"name": "Z_16", "spec": {"kind": "zn", "n": 16}},
    {"name": "Z_25", "spec": {"kind": "zn", "n": 25}},
    {"name": "Z_27", "spec": {"kind": "zn", "n": 27}},
    {"name": "Z_2xZ_3", "spec": {"kind": "product", "factors": [{"kind": "zn", "n": 2}, {"kind": "zn", "n": 3}]}},
    {"name": "Z_2xZ_2", "spec": {"kind": "product", "factors": [{"kind": "zn", "n": 2}, {"kind": "zn", "n": 2}]}},
    {"name": "M_2(Z_2)", "spec": {"kind": "matrix", "base": {"kind": "zn", "n": 2}, "k": 2}},
    {"name": "U_2(Z_2)", "spec": {"kind": "triangular", "a": {"kind": "zn", "n": 2}, "b": {"kind": "zn", "n": 2}, "m": {"order": 2, "add": [[0, 1], [1, 0]], "left": [[0, 0], [0, 1]], "right": [[0, 0], [0, 1]]}}},
    {"name": "U_2(Z_3)", "spec": {"kind": "triangular", "a": {"kind": "zn", "n": 3}, "b": {"kind": "zn", "n": 3}, "m": {"order": 3, "add": [[0, 1, 2], [1, 2, 0], [2, 0, 1]], "left": [[0, 0, 0], [0, 1, 2], [0, 2, 1]], "right": [[0, 0, 0], [0, 1, 2], [0, 2, 1]]}}},
    {"name": "T(Z_2,Z_2,M_2)", "spec": {"kind": "triangular", "a": {"kind": "zn", "n": 2}, "b": {"kind": "zn", "n": 2}, "m": {"order": 2, "add": [[0, 1], [1, 0]], "left": [[0, 0], [0, 1]], "right": [[0, 0], [0, 1]]}}},
    {"name": "Z_2[x]/(x^2)", "spec": {"kind": "trunc_poly", "base": {"kind": "zn", "n": 2}, "k": 2}},
    {"name": "Z_2[x]/(x^3)", "spec": {"kind": "trunc_poly", "base": {"kind": "zn", "n": 2}, "k": 3}},
    {"name": "Z_3[x]/(x^2)", "spec": {"kind": "trunc_poly", "base": {"kind": "zn", "n": 3}, "k": 2}},
    {"name": "sub(Z_6,2)", "spec": {"kind": "subring", "base": {"kind": "zn", "n": 6}, "seed": [2]}},
    {"name": "sub(Z_6,3)", "spec": {"kind": "subring", "base": {"kind": "zn", "n": 6}, "seed": [3]}},
    {"name": "T(Z,Z,Z_3)", "spec": {"kind": "symbolic_t3"}}
  ]
}
)catalog" + 1;
}

}  // namespace wci
