#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "wci/construct.hpp"

namespace wci {

constexpr std::uint64_t kDefaultSeed = 1729;

struct CatalogEntry {
  std::string name;
  nlohmann::json spec;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
};

// The catalog shipped with the library (also installed as data/catalog.json).
const char* default_catalog_text();
Catalog default_catalog();
Catalog parse_catalog(const nlohmann::json& doc);
Catalog load_catalog(const std::string& path);

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  int samples = 1000;
  int window = 50;
  int size_cap = kDefaultSizeCap;
  int threads = 1;
};

struct CheckResult {
  std::string ring;
  std::string check;
  std::string outcome;  // pass | fail | na
  nlohmann::json witness;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> results;
  std::uint64_t seed = kDefaultSeed;
  std::int64_t elapsed_ms = 0;
  bool all_passed() const;
};

// Suites: lemma-basic, subring-monotonicity, jset-bijection,
// classification, trunc-poly-growth, theorem3-witness, all.
const std::vector<std::string>& suite_names();
VerificationReport run_suite(const std::string& name, const Catalog& catalog,
                             const SuiteOptions& opts = {});

// elapsed_ms is emitted only on request so reruns are byte-identical.
nlohmann::json report_to_json(const VerificationReport& rep,
                              bool include_timing = false);

// Standalone forms of the two composite checks.
std::vector<CheckResult> check_trunc_poly_growth(const std::string& ring_name,
                                                 const RingTable& r, int k,
                                                 const SuiteOptions& opts = {});
std::vector<CheckResult> check_theorem3_witness(const SuiteOptions& opts = {});

struct CensusRow {
  std::string ring;
  int order = 0;
  int win = 0;
  int argmax = 0;
  std::string clause;
};

struct Census {
  std::vector<CensusRow> rows;
  std::vector<std::string> skipped;  // symbolic / over-cap entries
  std::vector<std::string> violations;
  int max_win = 0;
  bool win3_found = false;
};

// Full-catalog weak-clean-index census. Cross-checks every row against
// the structural predicates and records whether any finite entry attains
// index 3.
Census search_max_win(const Catalog& catalog, const SuiteOptions& opts = {});
nlohmann::json census_to_json(const Census& c);

}  // namespace wci
