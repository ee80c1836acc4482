// Command-line front end: count, verify, polyedges, formulas.
// Exit codes: 0 success, 1 verification mismatch, 2 usage error.

#include "lozenge/lozenge.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int brute_force_guard() {
  const char* env = std::getenv("LOZENGE_BRUTE_GUARD");
  if (!env || !*env) return lozenge::kDefaultBruteForceGuard;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw UsageError(std::string("LOZENGE_BRUTE_GUARD is not an integer: ") + env);
  }
}

// Data goes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot open output file: " + path);
    }
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

lozenge::CountVector formula_vector(int n) {
  std::vector<lozenge::BigInt> counts;
  for (int l = 0; l <= 6; ++l) {
    const auto id = lozenge::lozenge_formula(l);
    if (n < lozenge::formula_min_n(id)) break;
    counts.push_back(lozenge::eval_formula(id, n));
  }
  return lozenge::CountVector(n, std::move(counts));
}

int run_count(int n, const std::string& method, const std::string& format, const std::string& out) {
  if (n < 1) throw UsageError("--n must be >= 1");
  const auto fmt = lozenge::parse_format(format);
  lozenge::CountVector v;
  if (method == "dp") {
    v = lozenge::count_dp(n);
  } else if (method == "brute") {
    v = lozenge::count_brute_force(n, brute_force_guard());
  } else if (method == "formula") {
    v = formula_vector(n);
  } else {
    throw UsageError("unknown method: " + method);
  }
  Sink sink(out);
  lozenge::write_counts(sink.get(), v, fmt);
  return 0;
}

int run_verify(int max_n, const std::string& suites, const std::string& out) {
  lozenge::Verifier verifier(max_n, &std::cerr);
  const auto report = verifier.run(lozenge::parse_suites(suites));
  Sink sink(out);
  report.print(sink.get());
  return report.all_passed() ? 0 : kExitMismatch;
}

int run_polyedges(int k, const std::string& cls, const std::string& format, const std::string& out) {
  std::vector<lozenge::FixedPolyedge> shapes;
  if (cls == "free") {
    for (const auto& s : lozenge::enumerate_free_polyedges(k)) shapes.push_back(s.canonical);
  } else if (cls == "forbidden") {
    lozenge::check_polyedge_guard(k);
    if (k >= 2) {
      for (const auto& s : lozenge::enumerate_forbidden_free(k)) shapes.push_back(s.canonical);
    }
  } else if (cls == "fixed-forbidden") {
    lozenge::check_polyedge_guard(k);
    if (k >= 2) {
      for (const auto& s : lozenge::indecomposable_fixed_forbidden(k)) shapes.push_back(s);
    }
  } else {
    throw UsageError("unknown class: " + cls);
  }
  Sink sink(out);
  if (format == "text") {
    lozenge::write_shapes(sink.get(), shapes, "k=" + std::to_string(k) + " class=" + cls);
  } else if (format == "json") {
    nlohmann::json j{{"k", k}, {"class", cls}, {"count", shapes.size()}, {"shapes", nlohmann::json::array()}};
    for (const auto& s : shapes) j["shapes"].push_back(lozenge::format_shape(s));
    sink.get() << j.dump() << '\n';
  } else {
    throw UsageError("unknown format: " + format);
  }
  return 0;
}

int run_formulas(int min_n, int max_n, const std::string& format, const std::string& out) {
  if (min_n < 1 || max_n < min_n) throw UsageError("need 1 <= --n <= --max-n");
  Sink sink(out);
  auto& os = sink.get();
  if (format == "csv") {
    os << lozenge::kCsvHeader << '\n';
    for (int n = min_n; n <= max_n; ++n) lozenge::write_csv_rows(os, formula_vector(n));
  } else if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = min_n; n <= max_n; ++n) rows.push_back(lozenge::to_json(formula_vector(n)));
    os << rows.dump() << '\n';
  } else if (format == "plain") {
    for (int n = min_n; n <= max_n; ++n) {
      for (int l = 0; l <= 6; ++l) {
        const auto id = lozenge::lozenge_formula(l);
        os << lozenge::formula_name(id) << "(" << n << ") = ";
        if (n < lozenge::formula_min_n(id)) {
          os << "out of domain (n >= " << lozenge::formula_min_n(id) << ")\n";
        } else {
          os << lozenge::eval_formula(id, n) << '\n';
        }
      }
    }
  } else {
    throw UsageError("unknown format: " + format);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of partial lozenge tilings of the triangle"};
  app.require_subcommand(1);

  int n = 0;
  int max_n = lozenge::kVerifyMaxN;
  int k = 0;
  std::string method = "dp", format = "csv", suites = "table,formulas,conjectures,polyedges,identities";
  std::string shape_class = "forbidden", shape_format = "text", out;

  auto* count = app.add_subcommand("count", "Tabulate L(n, l) for one n");
  count->add_option("--n", n, "Side length")->required();
  count->add_option("--method", method, "dp | brute | formula")->check(CLI::IsMember({"dp", "brute", "formula"}));
  count->add_option("--format", format, "csv | json | plain")->check(CLI::IsMember({"csv", "json", "plain"}));
  count->add_option("--out", out, "Write data to this file");

  auto* verify = app.add_subcommand("verify", "Check computations against the reference data and identities");
  verify->add_option("--max-n", max_n, "Largest side length (<= 15)");
  verify->add_option("--suites", suites, "Comma list of table,formulas,conjectures,polyedges,identities");
  verify->add_option("--out", out, "Write the report to this file");

  auto* poly = app.add_subcommand("polyedges", "List polyedges of the triangular lattice");
  poly->add_option("--k", k, "Number of edges")->required();
  poly->add_option("--class", shape_class, "free | forbidden | fixed-forbidden")
      ->check(CLI::IsMember({"free", "forbidden", "fixed-forbidden"}));
  poly->add_option("--format", shape_format, "text | json")->check(CLI::IsMember({"text", "json"}));
  poly->add_option("--out", out, "Write data to this file");

  int formula_n = 1;
  auto* formulas = app.add_subcommand("formulas", "Tabulate the closed forms for l <= 6");
  formulas->add_option("--n", formula_n, "Smallest side length");
  formulas->add_option("--max-n", max_n, "Largest side length");
  formulas->add_option("--format", format, "csv | json | plain")->check(CLI::IsMember({"csv", "json", "plain"}));
  formulas->add_option("--out", out, "Write data to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (count->parsed()) return run_count(n, method, format, out);
    if (verify->parsed()) return run_verify(max_n, suites, out);
    if (poly->parsed()) return run_polyedges(k, shape_class, shape_format, out);
    if (formulas->parsed()) return run_formulas(formula_n, max_n, format, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
