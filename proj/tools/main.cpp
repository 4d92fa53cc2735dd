// Command-line front end: identity verification sweeps, per-tableau
// statistic dumps, tableau enumeration, Schur polynomials and crystal
// graph export.
//
// Exit codes: 0 success / all cases equal, 1 identity mismatch,
// 2 usage or validation error, 3 size-cap refusal.

#include "tokuyama/tokuyama.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace tokuyama;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": cannot parse integer '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string(what) + ": empty list");
  return out;
}

std::vector<std::vector<int>> parse_rows(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, '/')) {
    std::vector<int> entries;
    std::stringstream rs(row);
    int v = 0;
    while (rs >> v) entries.push_back(v);
    rows.push_back(std::move(entries));
  }
  if (rows.empty()) throw UsageError("--rows: no rows given");
  return rows;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file: " + path);
  f << payload;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  std::string expected;
  for (const char* a : allowed) {
    if (!expected.empty()) expected += "|";
    expected += a;
  }
  throw UsageError("unsupported format '" + format + "' (expected " + expected + ")");
}

// All weights with sum of coefficients <= max_level, in lexicographic order.
void each_weight(int rank, int max_level, const std::function<void(DominantWeight)>& fn) {
  std::vector<int> cur(static_cast<std::size_t>(rank), 0);
  auto rec = [&](auto&& self, int pos, int budget) -> void {
    if (pos == rank) {
      fn(DominantWeight(cur));
      return;
    }
    for (int a = 0; a <= budget; ++a) {
      cur[pos] = a;
      self(self, pos + 1, budget - a);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, max_level);
}

// ---- verify ----

struct VerifyOpts {
  int rank = 0;
  std::string lambda;
  bool sweep = false;
  int max_rank = 3;
  int max_level = 2;
  bool bounds_given = false;
  int shards = 1;
  std::string format = "text";
  std::string output;
  bool timings = false;
};

int run_verify(const VerifyOpts& o) {
  require_format(o.format, {"text", "json"});
  if (o.shards < 1) throw UsageError("--shards must be >= 1");
  std::vector<std::pair<Rank, DominantWeight>> cases;
  if (o.sweep) {
    for (int r = 1; r <= o.max_rank; ++r)
      each_weight(r, o.max_level,
                  [&](DominantWeight w) { cases.emplace_back(Rank(r), std::move(w)); });
    // the default sweep additionally covers rank 4 at lambda = 0
    if (!o.bounds_given && o.max_rank < 4)
      cases.emplace_back(Rank(4), DominantWeight(std::vector<int>(4, 0)));
  } else {
    if (o.rank < 1) throw UsageError("verify: give -r (with --lambda), or use --sweep");
    std::vector<int> lam = o.lambda.empty() ? std::vector<int>(static_cast<std::size_t>(o.rank), 0)
                                            : parse_int_list(o.lambda, "--lambda");
    if (static_cast<int>(lam.size()) != o.rank)
      throw UsageError("verify: --lambda has " + std::to_string(lam.size()) +
                       " entries but rank is " + std::to_string(o.rank));
    cases.emplace_back(Rank(o.rank), DominantWeight(std::move(lam)));
  }

  std::vector<VerificationReport> reports;
  reports.reserve(cases.size());
  bool all_equal = true;
  for (const auto& [rk, w] : cases) {
    reports.push_back(verify_identity(w, rk, o.shards));
    all_equal = all_equal && reports.back().equal;
  }

  std::string payload;
  if (o.format == "json") {
    Json doc;
    doc["all_equal"] = all_equal;
    Json list = Json::array();
    for (const auto& rep : reports) list.push_back(report_to_json(rep, o.timings));
    doc["cases"] = std::move(list);
    payload = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    for (const auto& rep : reports) out << report_to_text(rep, o.timings) << "\n";
    out << (all_equal ? "all equal: yes" : "all equal: NO") << "\n";
    payload = out.str();
  }
  write_output(o.output, payload);
  return all_equal ? 0 : 1;
}

// ---- stats ----

struct StatsOpts {
  std::string rows;
  std::string input;
  std::string format = "json";
  std::string output;
};

int run_stats(const StatsOpts& o) {
  require_format(o.format, {"json", "csv", "text"});
  if (o.rows.empty() == o.input.empty())
    throw UsageError("stats: give exactly one of --rows or --input");
  Tableau t = [&] {
    try {
      if (!o.rows.empty()) return Tableau::from_rows(parse_rows(o.rows));
      return tableau_from_json(Json::parse(read_input(o.input)));
    } catch (const Json::exception& e) {
      throw UsageError(std::string("stats: invalid tableau JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("stats: ") + e.what());
    }
  }();
  try {
    std::string payload;
    if (o.format == "json")
      payload = stats_record(t).dump(2) + "\n";
    else if (o.format == "csv")
      payload = stats_csv_header() + "\n" + stats_csv_row(t) + "\n";
    else
      payload = stats_to_text(t);
    write_output(o.output, payload);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("stats: ") + e.what());
  }
  return 0;
}

// ---- enumerate ----

struct EnumerateOpts {
  std::string shape;
  int max_entry = 0;
  std::int64_t cap = 1000000;
  std::string format = "json";
  std::string output;
};

int run_enumerate(const EnumerateOpts& o) {
  require_format(o.format, {"json", "csv", "text"});
  if (o.shape.empty()) throw UsageError("enumerate: --shape is required");
  if (o.max_entry < 1) throw UsageError("enumerate: -n/--max-entry is required");
  Shape shape = [&] {
    try {
      return Shape::partition(parse_int_list(o.shape, "--shape"));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("enumerate: ") + e.what());
    }
  }();
  if (o.max_entry < shape.row_count())
    throw UsageError("enumerate: max_entry below the row count, no filling exists");
  const Int dim = dimension(shape, o.max_entry);
  if (dim > o.cap) throw SizeCapExceeded(dim, Int(o.cap));

  // full statistic records need the crystal context
  const bool with_stats = shape.is_strict() && o.max_entry == shape.row_count() + 1;
  std::string payload;
  if (o.format == "json") {
    Json doc;
    doc["shape"] = shape.parts();
    doc["max_entry"] = o.max_entry;
    doc["count"] = to_int64(dim);
    Json list = Json::array();
    for_each_ssyt(shape, o.max_entry, [&](const Tableau& t) {
      if (with_stats) {
        list.push_back(stats_record(t));
      } else {
        Json rec;
        rec["rows"] = t.rows();
        rec["content"] = content(t, o.max_entry);
        list.push_back(std::move(rec));
      }
    });
    doc["tableaux"] = std::move(list);
    payload = doc.dump(2) + "\n";
  } else if (o.format == "csv") {
    if (!with_stats)
      throw UsageError(
          "enumerate: csv output needs the statistics context "
          "(strict shape with max_entry = rows + 1)");
    std::ostringstream out;
    out << stats_csv_header() << "\n";
    for_each_ssyt(shape, o.max_entry, [&](const Tableau& t) { out << stats_csv_row(t) << "\n"; });
    payload = out.str();
  } else {
    std::ostringstream out;
    for_each_ssyt(shape, o.max_entry, [&](const Tableau& t) {
      out << tableau_id(t);
      if (with_stats)
        out << "  seg=" << seg_count(t) << " flush=" << flush_count(t)
            << " C=" << unipoly_to_string(tokuyama_coefficient(t));
      out << "\n";
    });
    out << "count: " << dim << "\n";
    payload = out.str();
  }
  write_output(o.output, payload);
  return 0;
}

// ---- schur ----

struct SchurOpts {
  std::string partition;
  std::string lambda;
  int rank = 0;
  int variables = 0;
  std::int64_t cap = 1000000;
  std::string format = "json";
  std::string output;
};

int run_schur(const SchurOpts& o) {
  require_format(o.format, {"json", "text"});
  if (o.partition.empty() == o.lambda.empty())
    throw UsageError("schur: give exactly one of --partition or --lambda");
  Shape part = [&] {
    try {
      if (!o.partition.empty())
        return Shape::partition(parse_int_list(o.partition, "--partition"));
      if (o.rank < 1) throw UsageError("schur: --lambda needs -r");
      std::vector<int> lam = parse_int_list(o.lambda, "--lambda");
      if (static_cast<int>(lam.size()) != o.rank)
        throw UsageError("schur: --lambda length does not match -r");
      return partition_from_weight(DominantWeight(std::move(lam)));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("schur: ") + e.what());
    }
  }();
  int n = o.variables;
  if (n < 1) {
    if (o.lambda.empty()) throw UsageError("schur: -n/--variables is required with --partition");
    n = o.rank + 1;
  }
  if (part.row_count() > n)
    throw UsageError("schur: partition has more parts than variables");
  const Int dim = dimension(part, n);
  if (dim > o.cap) throw SizeCapExceeded(dim, Int(o.cap));

  const LaurentPoly s = schur(part, n);
  std::string payload = o.format == "json" ? laurent_to_json(s).dump(2) + "\n"
                                           : laurent_to_string(s) + "\n";
  write_output(o.output, payload);
  return 0;
}

// ---- graph ----

struct GraphOpts {
  std::string shape;
  std::string lambda;
  int rank = 0;
  std::int64_t cap = 1000000;
  std::string format = "dot";
  std::string output;
};

int run_graph(const GraphOpts& o) {
  require_format(o.format, {"dot", "json"});
  if (o.shape.empty() == o.lambda.empty())
    throw UsageError("graph: give exactly one of --shape or --lambda");
  Shape shape = [&] {
    try {
      if (!o.shape.empty()) return Shape::strict(parse_int_list(o.shape, "--shape"));
      if (o.rank < 1) throw UsageError("graph: --lambda needs -r");
      std::vector<int> lam = parse_int_list(o.lambda, "--lambda");
      if (static_cast<int>(lam.size()) != o.rank)
        throw UsageError("graph: --lambda length does not match -r");
      return shape_from_weight(DominantWeight(std::move(lam)), Rank(o.rank));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("graph: ") + e.what());
    }
  }();
  const int r = o.rank >= 1 ? o.rank : shape.row_count();
  if (r != shape.row_count())
    throw UsageError("graph: the shape must have exactly r rows");
  const CrystalGraph g = build_crystal(shape, Rank(r), Int(o.cap));
  std::string payload =
      o.format == "dot" ? graph_to_dot(g) : graph_to_json(g).dump(2) + "\n";
  write_output(o.output, payload);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tableau statistics and coefficient-level verification of the "
               "deformed character identity"};
  app.require_subcommand(1);

  VerifyOpts vo;
  CLI::App* verify = app.add_subcommand(
      "verify", "Verify the identity for one weight or a sweep of weights");
  verify->add_option("-r,--rank", vo.rank, "Rank r");
  verify->add_option("--lambda", vo.lambda,
                     "Fundamental weight coefficients a_1,...,a_r (comma separated)");
  verify->add_flag("--sweep", vo.sweep, "Verify a whole grid of weights");
  CLI::Option* mr = verify->add_option("--max-rank", vo.max_rank, "Sweep bound on r (default 3)");
  CLI::Option* ml =
      verify->add_option("--max-level", vo.max_level, "Sweep bound on sum a_i (default 2)");
  verify->add_option("--shards", vo.shards, "Shard the tableau sum over this many workers");
  verify->add_option("-f,--format", vo.format, "Output format: text|json");
  verify->add_option("-o,--output", vo.output, "Output path (default stdout)");
  verify->add_flag("--timings", vo.timings, "Include wall-clock timing in the report");

  StatsOpts so;
  CLI::App* stats = app.add_subcommand("stats", "Full statistic record of one tableau");
  stats->add_option("--rows", so.rows, "Rows, e.g. \"1 1 2 3 3 5 / 2 3 3 4 4 / 3 5 5 5 / 5\"");
  stats->add_option("-i,--input", so.input, "Tableau JSON file ('-' for stdin)");
  stats->add_option("-f,--format", so.format, "Output format: json|csv|text");
  stats->add_option("-o,--output", so.output, "Output path (default stdout)");

  EnumerateOpts eo;
  CLI::App* enumerate = app.add_subcommand("enumerate", "List all semistandard tableaux");
  enumerate->add_option("--shape", eo.shape, "Shape parts, comma separated");
  enumerate->add_option("-n,--max-entry", eo.max_entry, "Largest allowed entry");
  enumerate->add_option("--cap", eo.cap, "Refuse enumerations larger than this (default 10^6)");
  enumerate->add_option("-f,--format", eo.format, "Output format: json|csv|text");
  enumerate->add_option("-o,--output", eo.output, "Output path (default stdout)");

  SchurOpts co;
  CLI::App* schur_cmd = app.add_subcommand("schur", "Schur polynomial by tableau enumeration");
  schur_cmd->add_option("--partition", co.partition, "Partition parts, comma separated");
  schur_cmd->add_option("--lambda", co.lambda, "Fundamental weight coefficients (needs -r)");
  schur_cmd->add_option("-r,--rank", co.rank, "Rank r (with --lambda)");
  schur_cmd->add_option("-n,--variables", co.variables, "Number of variables");
  schur_cmd->add_option("--cap", co.cap, "Refuse enumerations larger than this (default 10^6)");
  schur_cmd->add_option("-f,--format", co.format, "Output format: json|text");
  schur_cmd->add_option("-o,--output", co.output, "Output path (default stdout)");

  GraphOpts go;
  CLI::App* graph = app.add_subcommand("graph", "Export the crystal graph with annotations");
  graph->add_option("--shape", go.shape, "Strict shape parts, comma separated");
  graph->add_option("--lambda", go.lambda, "Fundamental weight coefficients (needs -r)");
  graph->add_option("-r,--rank", go.rank, "Rank r (default: number of shape rows)");
  graph->add_option("--cap", go.cap, "Refuse crystals larger than this (default 10^6)");
  graph->add_option("-f,--format", go.format, "Output format: dot|json");
  graph->add_option("-o,--output", go.output, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  vo.bounds_given = (mr->count() > 0) || (ml->count() > 0);

  try {
    if (verify->parsed()) return run_verify(vo);
    if (stats->parsed()) return run_stats(so);
    if (enumerate->parsed()) return run_enumerate(eo);
    if (schur_cmd->parsed()) return run_schur(co);
    if (graph->parsed()) return run_graph(go);
    std::cerr << "error: no command given (see --help)\n";
    return 2;
  } catch (const SizeCapExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
