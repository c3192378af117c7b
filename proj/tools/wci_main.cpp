// wci: weak clean index toolkit for explicitly presented finite rings.
//
// exit codes: 0 success / all checks passed, 1 a verified property failed,
// 2 bad input (malformed spec, unknown option, unsupported operation).

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "wci/construct.hpp"
#include "wci/errors.hpp"
#include "wci/index.hpp"
#include "wci/ring_ops.hpp"
#include "wci/verify.hpp"

using nlohmann::json;

namespace {

struct OutputOpts {
  std::string format = "text";
  bool json_flag = false;
  std::string out_path;

  std::string resolved() const { return json_flag ? "json" : format; }
};

void add_output_opts(CLI::App* cmd, OutputOpts& o) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_flag("--json", o.json_flag, "shortcut for --format json");
  cmd->add_option("--out", o.out_path,
                  "write output to this file (atomic replace)");
}

struct SpecOpts {
  std::string inline_spec;
  std::string spec_file;
  long long size_cap = wci::kDefaultSizeCap;
};

void add_spec_opts(CLI::App* cmd, SpecOpts& s) {
  cmd->add_option("--spec", s.inline_spec, "ring spec as inline JSON");
  cmd->add_option("--spec-file", s.spec_file,
                  "ring spec from a file ('-' reads stdin)");
  cmd->add_option("--size-cap", s.size_cap, "largest table the build may make")
      ->check(CLI::PositiveNumber);
}

std::string read_spec_text(const SpecOpts& s) {
  if (!s.inline_spec.empty() && !s.spec_file.empty())
    throw wci::InputError("give either --spec or --spec-file, not both");
  if (!s.inline_spec.empty()) return s.inline_spec;
  if (s.spec_file.empty())
    throw wci::InputError("a ring spec is required (--spec or --spec-file)");
  if (s.spec_file == "-")
    return {std::istreambuf_iterator<char>(std::cin),
            std::istreambuf_iterator<char>()};
  std::ifstream in(s.spec_file);
  if (!in) throw wci::InputError("cannot open spec file: " + s.spec_file);
  return {std::istreambuf_iterator<char>(in),
          std::istreambuf_iterator<char>()};
}

wci::BuiltRing build_from(const SpecOpts& s) {
  wci::BuildOptions opts;
  opts.size_cap = int(s.size_cap);
  return wci::build(read_spec_text(s), opts);
}

void write_output(const OutputOpts& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    return;
  }
  const std::string tmp = o.out_path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw wci::ResourceError("cannot write to " + tmp);
    f << text;
    if (!f.good()) throw wci::ResourceError("short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), o.out_path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw wci::ResourceError("cannot replace " + o.out_path);
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

long long resolve_seed(bool given, long long value) {
  if (given) return value;
  if (const char* env = std::getenv("WCI_SEED")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0')
      throw wci::InputError("WCI_SEED must be an integer, got '" +
                            std::string(env) + "'");
    return v;
  }
  return wci::kDefaultSeed;
}

wci::Catalog catalog_from(const std::string& path) {
  return path.empty() ? wci::default_catalog() : wci::load_catalog(path);
}

// --element accepts a plain index, or "a,w,b" for triangular presentations
struct ElementArg {
  bool triple = false;
  long long index = 0;
  long long a = 0, b = 0;
  int w = 0;
};

ElementArg parse_element(const std::string& text) {
  ElementArg e;
  if (text.find(',') == std::string::npos) {
    try {
      std::size_t used = 0;
      e.index = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw wci::InputError("--element must be an integer or 'a,w,b', got '" +
                            text + "'");
    }
    return e;
  }
  e.triple = true;
  std::istringstream in(text);
  char c1 = 0, c2 = 0;
  long long w = 0;
  if (!(in >> e.a >> c1 >> w >> c2 >> e.b) || c1 != ',' || c2 != ',' ||
      !(in >> std::ws).eof())
    throw wci::InputError("--element triple must look like 'a,w,b', got '" +
                          text + "'");
  e.w = int(w);
  return e;
}

std::string yn(bool b) { return b ? "yes" : "no"; }

// --- info ------------------------------------------------------------------

json info_finite(const wci::RingTable& r) {
  json out;
  out["order"] = r.order();
  out["unital"] = r.unital();
  const wci::ElementSet idem = wci::idempotents(r);
  out["idempotents"] = idem.size();
  out["nilpotents"] = wci::nilpotents(r).size();
  out["abelian"] = wci::is_abelian(r);
  out["center"] = wci::center(r).size();
  if (!r.unital()) {
    for (const char* k :
         {"one", "units", "radical", "local", "clean", "weakly_clean",
          "uniquely_clean", "elemental", "win", "win_argmax", "in",
          "in_argmax"})
      out[k] = nullptr;
    return out;
  }
  out["one"] = r.one();
  out["units"] = wci::units(r).size();
  out["radical"] = wci::jacobson_radical(r).size();
  out["local"] = wci::is_local(r);
  out["clean"] = wci::is_clean(r);
  out["weakly_clean"] = wci::is_weakly_clean(r);
  out["uniquely_clean"] = wci::is_uniquely_clean(r);
  out["elemental"] = wci::is_elemental(r).elemental;
  const wci::IndexResult win = wci::weak_clean_index(r);
  const wci::IndexResult in = wci::clean_index(r);
  out["win"] = win.value;
  out["win_argmax"] = win.argmax;
  out["in"] = in.value;
  out["in_argmax"] = in.argmax;
  return out;
}

json info_symbolic(const wci::SymbolicTriangularRing& t) {
  const wci::ClassificationResult c3 = wci::predicate_win3(t);
  return {{"kind", "symbolic-triangular"},
          {"module_order", wci::SymbolicTriangularRing::kModuleOrder},
          {"idempotents", t.idempotent_elements().size()},
          {"win", 3},
          {"clause", c3.clause}};
}

std::string info_text(const json& d) {
  std::ostringstream out;
  auto line = [&](const char* label, const char* key) {
    out << label << ": ";
    const json& v = d.at(key);
    if (v.is_null())
      out << "n/a";
    else if (v.is_boolean())
      out << yn(v.get<bool>());
    else
      out << v;
    out << "\n";
  };
  if (d.contains("kind")) {
    out << "kind: " << d.at("kind").get<std::string>() << "\n";
    line("module order", "module_order");
    line("idempotents", "idempotents");
    line("win", "win");
    out << "clause: " << d.at("clause").get<std::string>() << "\n";
    return out.str();
  }
  line("order", "order");
  line("unital", "unital");
  line("one", "one");
  line("abelian", "abelian");
  line("local", "local");
  line("clean", "clean");
  line("weakly clean", "weakly_clean");
  line("uniquely clean", "uniquely_clean");
  line("elemental", "elemental");
  line("units", "units");
  line("idempotents", "idempotents");
  line("nilpotents", "nilpotents");
  line("radical", "radical");
  line("center", "center");
  if (d.at("win").is_null()) {
    out << "win: n/a\nin: n/a\n";
  } else {
    out << "win: " << d.at("win") << " (argmax " << d.at("win_argmax") << ")\n";
    out << "in: " << d.at("in") << " (argmax " << d.at("in_argmax") << ")\n";
  }
  return out.str();
}

// --- chi -------------------------------------------------------------------

std::string chi_text_finite(const wci::ChiReport& rep) {
  std::ostringstream out;
  out << "element: " << rep.element << "\n";
  out << "size: " << rep.members.size() << "\n";
  out << "members:";
  for (int e : rep.members) out << " " << e;
  out << "\n";
  for (const wci::ChiWitness& w : rep.witnesses) {
    out << "e=" << w.idempotent << ":";
    if (w.minus_unit) out << " a-e is a unit";
    if (w.plus_unit) out << " a+e is a unit";
    out << "\n";
  }
  return out.str();
}

std::string chi_text_symbolic(const wci::SymChiReport& rep) {
  std::ostringstream out;
  out << "element: " << wci::to_string(rep.element) << "\n";
  out << "size: " << rep.members.size() << "\n";
  for (const wci::SymChiWitness& w : rep.members) {
    out << "e=" << wci::to_string(w.idempotent) << ":";
    if (w.minus_unit) out << " a-e is a unit";
    if (w.plus_unit) out << " a+e is a unit";
    out << "\n";
  }
  return out.str();
}

// --- verify / search / catalog ----------------------------------------------

std::string verify_text(const wci::VerificationReport& rep, bool timing) {
  std::ostringstream out;
  int pass = 0, fail = 0, na = 0;
  for (const wci::CheckResult& c : rep.results) {
    if (c.outcome == "pass") {
      ++pass;
      out << "[pass] " << c.ring << " :: " << c.check << "\n";
    } else if (c.outcome == "fail") {
      ++fail;
      out << "[fail] " << c.ring << " :: " << c.check
          << "  witness: " << c.witness.dump() << "\n";
    } else {
      ++na;
      out << "[na]   " << c.ring << " :: " << c.check;
      if (c.witness.contains("reason"))
        out << " (" << c.witness.at("reason").get<std::string>() << ")";
      out << "\n";
    }
  }
  out << "suite: " << rep.suite << "\n";
  out << "seed: " << rep.seed << "\n";
  out << "summary: " << rep.results.size() << " checks, " << pass << " pass, "
      << fail << " fail, " << na << " na\n";
  if (timing) out << "elapsed_ms: " << rep.elapsed_ms << "\n";
  return out.str();
}

std::string verify_csv(const wci::VerificationReport& rep) {
  std::ostringstream out;
  out << "ring,check,outcome,witness\n";
  for (const wci::CheckResult& c : rep.results)
    out << csv_field(c.ring) << "," << csv_field(c.check) << "," << c.outcome
        << "," << csv_field(c.witness.dump()) << "\n";
  return out.str();
}

std::string census_text(const wci::Census& c) {
  std::ostringstream out;
  out << std::left << std::setw(18) << "ring" << std::setw(7) << "order"
      << std::setw(5) << "win" << std::setw(8) << "argmax"
      << "clause\n";
  for (const wci::CensusRow& r : c.rows)
    out << std::left << std::setw(18) << r.ring << std::setw(7) << r.order
        << std::setw(5) << r.win << std::setw(8) << r.argmax << r.clause
        << "\n";
  out << "max win: " << c.max_win << "\n";
  out << (c.win3_found
              ? "observation: a finite catalog entry attains weak clean index 3"
              : "observation: no finite catalog entry attains weak clean index 3")
      << "\n";
  for (const std::string& s : c.skipped) out << "skipped: " << s << "\n";
  for (const std::string& v : c.violations) out << "violation: " << v << "\n";
  return out.str();
}

std::string census_csv(const wci::Census& c) {
  std::ostringstream out;
  out << "ring,order,win,argmax,clause\n";
  for (const wci::CensusRow& r : c.rows)
    out << csv_field(r.ring) << "," << r.order << "," << r.win << ","
        << r.argmax << "," << csv_field(r.clause) << "\n";
  return out.str();
}

struct CatalogRow {
  std::string name;
  std::string kind;
  int order = -1;  // -1 for symbolic entries
};

std::vector<CatalogRow> catalog_rows(const wci::Catalog& cat,
                                     long long size_cap) {
  std::vector<CatalogRow> rows;
  for (const wci::CatalogEntry& e : cat.entries) {
    CatalogRow row;
    row.name = e.name;
    row.kind = e.spec.is_object() && e.spec.contains("kind") &&
                       e.spec.at("kind").is_string()
                   ? e.spec.at("kind").get<std::string>()
                   : "?";
    wci::BuildOptions opts;
    opts.size_cap = int(size_cap);
    opts.verify_tables = false;
    const wci::BuiltRing built = wci::build(e.spec, opts);
    if (built.table) row.order = built.table->order();
    rows.push_back(std::move(row));
  }
  return rows;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"weak clean index toolkit for finite rings"};
  app.require_subcommand(1);

  // info
  auto* info_cmd = app.add_subcommand("info", "summarize one ring");
  SpecOpts info_spec;
  OutputOpts info_out;
  add_spec_opts(info_cmd, info_spec);
  add_output_opts(info_cmd, info_out);

  // chi
  auto* chi_cmd = app.add_subcommand("chi", "weakly clean expressions of one element");
  SpecOpts chi_spec;
  OutputOpts chi_out;
  std::string chi_element;
  add_spec_opts(chi_cmd, chi_spec);
  add_output_opts(chi_cmd, chi_out);
  chi_cmd->add_option("--element", chi_element, "element index, or 'a,w,b'")
      ->required();

  // index
  auto* index_cmd = app.add_subcommand("index", "weak clean and clean index");
  SpecOpts index_spec;
  OutputOpts index_out;
  int index_threads = 1;
  add_spec_opts(index_cmd, index_spec);
  add_output_opts(index_cmd, index_out);
  index_cmd->add_option("--threads", index_threads, "worker threads")
      ->check(CLI::PositiveNumber);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
  OutputOpts verify_out;
  std::string suite = "all";
  std::string verify_catalog;
  long long seed_val = wci::kDefaultSeed;
  bool seed_given = false;
  int samples = 1000, window = 50, verify_threads = 1;
  long long verify_cap = wci::kDefaultSizeCap;
  bool timing = false;
  add_output_opts(verify_cmd, verify_out);
  verify_cmd->add_option("--suite", suite, "suite name (or 'all')");
  verify_cmd->add_option("--catalog", verify_catalog, "catalog JSON file");
  verify_cmd->add_option("--seed", seed_val, "seed for sampled checks")
      ->each([&](const std::string&) { seed_given = true; });
  verify_cmd->add_option("--samples", samples, "sample count")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--window", window, "sampling window for symbolic entries")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--threads", verify_threads, "worker threads")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--size-cap", verify_cap, "largest table a check may build")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--timing", timing, "include elapsed time in the report");

  // search
  auto* search_cmd = app.add_subcommand("search", "census of the catalog");
  OutputOpts search_out;
  std::string search_catalog;
  int search_threads = 1;
  long long search_cap = wci::kDefaultSizeCap;
  add_output_opts(search_cmd, search_out);
  search_cmd->add_option("--catalog", search_catalog, "catalog JSON file");
  search_cmd->add_option("--threads", search_threads, "worker threads")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--size-cap", search_cap, "largest table to build")
      ->check(CLI::PositiveNumber);

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "list catalog entries");
  OutputOpts catalog_out;
  std::string catalog_path;
  long long catalog_cap = wci::kDefaultSizeCap;
  add_output_opts(catalog_cmd, catalog_out);
  catalog_cmd->add_option("--catalog", catalog_path, "catalog JSON file");
  catalog_cmd->add_option("--size-cap", catalog_cap, "largest table to build")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const bool help = e.get_name() == "CallForHelp" ||
                      e.get_name() == "CallForAllHelp";
    app.exit(e);
    return help ? 0 : 2;
  }

  if (info_cmd->parsed()) {
    const wci::BuiltRing built = build_from(info_spec);
    const json doc = built.is_symbolic() ? info_symbolic(*built.symbolic)
                                         : info_finite(*built.table);
    const std::string fmt = info_out.resolved();
    if (fmt == "csv")
      throw wci::InputError("csv output is not available for info");
    write_output(info_out, fmt == "json" ? doc.dump(2) + "\n" : info_text(doc));
    return 0;
  }

  if (chi_cmd->parsed()) {
    const wci::BuiltRing built = build_from(chi_spec);
    const ElementArg el = parse_element(chi_element);
    const std::string fmt = chi_out.resolved();
    if (fmt == "csv")
      throw wci::InputError("csv output is not available for chi");
    std::string text;
    if (built.is_symbolic()) {
      if (!el.triple)
        throw wci::InputError(
            "a symbolic triangular ring needs --element 'a,w,b'");
      const wci::SymChiReport rep =
          wci::chi(*built.symbolic, wci::SymElem{el.a, el.w, el.b});
      text = fmt == "json" ? wci::to_json(rep).dump(2) + "\n"
                           : chi_text_symbolic(rep);
    } else {
      long long idx = el.index;
      if (el.triple) {
        if (!built.tri)
          throw wci::InputError(
              "--element 'a,w,b' needs a triangular presentation");
        idx = built.tri->encode(int(el.a), el.w, int(el.b));
      }
      const wci::RingTable& r = *built.table;
      if (idx < 0 || idx >= r.order())
        throw wci::InputError("element " + std::to_string(idx) +
                              " is out of range for order " +
                              std::to_string(r.order()));
      const wci::ChiReport rep = wci::chi(r, int(idx));
      text = fmt == "json" ? wci::to_json(rep).dump(2) + "\n"
                           : chi_text_finite(rep);
    }
    write_output(chi_out, text);
    return 0;
  }

  if (index_cmd->parsed()) {
    const wci::BuiltRing built = build_from(index_spec);
    if (built.is_symbolic())
      throw wci::UnsupportedOperationError(
          "index enumerates a finite carrier; the symbolic ring is infinite "
          "(use verify --suite theorem3-witness)");
    const wci::RingTable& r = *built.table;
    const wci::IndexResult win = wci::weak_clean_index(r, index_threads);
    const wci::IndexResult in = wci::clean_index(r, index_threads);
    const json doc = {{"win", win.value},
                      {"win_argmax", win.argmax},
                      {"in", in.value},
                      {"in_argmax", in.argmax},
                      {"order", r.order()}};
    const std::string fmt = index_out.resolved();
    if (fmt == "csv")
      throw wci::InputError("csv output is not available for index");
    std::string text;
    if (fmt == "json") {
      text = doc.dump(2) + "\n";
    } else {
      std::ostringstream s;
      s << "win: " << win.value << " (argmax " << win.argmax << ")\n";
      s << "in: " << in.value << " (argmax " << in.argmax << ")\n";
      text = s.str();
    }
    write_output(index_out, text);
    return 0;
  }

  if (verify_cmd->parsed()) {
    wci::SuiteOptions opts;
    opts.seed = resolve_seed(seed_given, seed_val);
    opts.samples = samples;
    opts.window = window;
    opts.threads = verify_threads;
    opts.size_cap = int(verify_cap);
    const wci::Catalog cat = catalog_from(verify_catalog);
    const wci::VerificationReport rep = wci::run_suite(suite, cat, opts);
    const std::string fmt = verify_out.resolved();
    std::string text;
    if (fmt == "json")
      text = wci::report_to_json(rep, timing).dump(2) + "\n";
    else if (fmt == "csv")
      text = verify_csv(rep);
    else
      text = verify_text(rep, timing);
    write_output(verify_out, text);
    return rep.all_passed() ? 0 : 1;
  }

  if (search_cmd->parsed()) {
    wci::SuiteOptions opts;
    opts.threads = search_threads;
    opts.size_cap = int(search_cap);
    const wci::Catalog cat = catalog_from(search_catalog);
    const wci::Census census = wci::search_max_win(cat, opts);
    const std::string fmt = search_out.resolved();
    std::string text;
    if (fmt == "json")
      text = wci::census_to_json(census).dump(2) + "\n";
    else if (fmt == "csv")
      text = census_csv(census);
    else
      text = census_text(census);
    write_output(search_out, text);
    return census.violations.empty() && !census.win3_found ? 0 : 1;
  }

  // catalog
  const wci::Catalog cat = catalog_from(catalog_path);
  const std::vector<CatalogRow> rows = catalog_rows(cat, catalog_cap);
  const std::string fmt = catalog_out.resolved();
  std::string text;
  if (fmt == "json") {
    json arr = json::array();
    for (const CatalogRow& r : rows) {
      json row = {{"name", r.name}, {"kind", r.kind}};
      if (r.order >= 0)
        row["order"] = r.order;
      else
        row["order"] = nullptr;
      arr.push_back(std::move(row));
    }
    text = json{{"entries", arr}}.dump(2) + "\n";
  } else if (fmt == "csv") {
    std::ostringstream s;
    s << "name,kind,order\n";
    for (const CatalogRow& r : rows) {
      s << csv_field(r.name) << "," << csv_field(r.kind) << ",";
      if (r.order >= 0) s << r.order;
      s << "\n";
    }
    text = s.str();
  } else {
    std::ostringstream s;
    for (const CatalogRow& r : rows) {
      s << std::left << std::setw(18) << r.name << std::setw(14) << r.kind;
      if (r.order >= 0)
        s << "order " << r.order;
      else
        s << "symbolic";
      s << "\n";
    }
    text = s.str();
  }
  write_output(catalog_out, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
