#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "tlgjs/eval.hpp"
#include "tlgjs/gns.hpp"
#include "tlgjs/json_io.hpp"
#include "tlgjs/verify.hpp"

namespace {

using nlohmann::json;
using namespace tlgjs;

constexpr int kExitOk = 0;
constexpr int kExitGateFailure = 1;
constexpr int kExitConfigError = 2;

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << payload;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file " + path);
  json j;
  in >> j;
  return j;
}

int bottom_budget(int fallback) {
  if (const char* env = std::getenv("GJS_BOTTOM_BUDGET")) {
    const int v = std::atoi(env);
    if (v >= 4) return v;
    throw std::runtime_error("GJS_BOTTOM_BUDGET must be an integer >= 4");
  }
  return fallback;
}

int cmd_check(const std::string& delta_text, int max_level, int max_bottom, std::uint64_t seed,
              const std::vector<std::string>& suites, const std::string& out_path) {
  SuiteConfig cfg;
  cfg.delta = parse_rational(delta_text);
  cfg.max_level = max_level;
  cfg.max_bottom = bottom_budget(max_bottom);
  cfg.seed = seed;
  cfg.suites = suites;
  const Report report = run_suites(cfg);
  write_output(out_path, report.to_json_lines());
  return report.all_gates_pass() ? kExitOk : kExitGateFailure;
}

int cmd_eval(const std::string& expr_path, const std::string& out_path) {
  const json tree = read_json_file(expr_path);
  write_output(out_path, evaluate_expression(tree).dump(2) + "\n");
  return kExitOk;
}

int cmd_norm(const std::string& input_path, int p_max, const std::string& out_path) {
  const json j = read_json_file(input_path);
  const Rational delta = graded_delta_from_json(j);
  LoopParameter checked(delta);
  const GradedElement a = graded_from_json(j);

  int corner = -1;
  for (const auto& [k, f] : a.terms()) {
    if (k.l != k.r || (corner != -1 && k.l != corner))
      throw std::runtime_error("element is not in a diagonal corner; found component (" + std::to_string(k.l) + "," +
                               std::to_string(k.r) + ")");
    corner = k.l;
  }
  if (corner < 0) corner = 0;

  const auto estimates = moment_norm_estimates(delta, a, corner, p_max, bottom_budget(24));
  json out{{"delta", rational_to_string(delta)}, {"corner", corner}, {"p_max", p_max}};
  out["estimates"] = estimates;
  if (a.ground_only()) out["gns_norm"] = GroundAlgebraGns(delta, corner).operator_norm(a);
  write_output(out_path, out.dump(2) + "\n");
  return kExitOk;
}

int cmd_dims(int max_n, const std::string& out_path) {
  json entries = json::array();
  for (const auto& e : dimension_table(max_n))
    entries.push_back(json{{"b", e.b}, {"l", e.l}, {"r", e.r}, {"dim", e.dim}});
  write_output(out_path, json{{"max_n", max_n}, {"entries", entries}}.dump() + "\n");
  return kExitOk;
}

int cmd_nc(int points, const std::string& out_path) {
  const auto pairings = enumerate_nc_pairings(points);
  json out{{"points", points}, {"count", pairings.size()}};
  json arr = json::array();
  for (const auto& p : pairings) arr.push_back(pairing_to_json(p));
  out["pairings"] = arr;
  write_output(out_path, out.dump() + "\n");
  return kExitOk;
}

int cmd_fock(const std::string& vector_path, const std::vector<std::string>& creates,
             const std::vector<std::string>& annihilates, const std::string& out_path) {
  const json vj = read_json_file(vector_path);
  const Rational delta = [&] {
    for (const auto& [key, val] : vj.at("sectors").items()) return graded_delta_from_json(val);
    throw std::runtime_error("fock vector has no sectors to read the loop parameter from");
  }();
  LoopParameter checked(delta);
  FockVector v = fock_from_json(vj);
  for (const auto& path : creates) v = create(delta, CreationSymbol(graded_from_json(read_json_file(path))), v);
  for (const auto& path : annihilates) v = annihilate(delta, CreationSymbol(graded_from_json(read_json_file(path))), v);
  write_output(out_path, fock_to_json(v, delta).dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact diagram calculus for the graded loop-parameter algebras, their corners and bimodules"};
  app.require_subcommand(1);

  std::string delta = "5/2", out = "-", expr, input, vector_path;
  int max_level = 5, max_bottom = 24, p_max = 64, max_n = 5, points = 0;
  std::uint64_t seed = 42;
  std::vector<std::string> suites, creates, annihilates;

  auto* check = app.add_subcommand("check", "run verification suites and write a JSON-lines report");
  check->add_option("--delta", delta, "loop parameter as a rational p/q, must be > 2");
  check->add_option("--max-level", max_level, "largest strand level exercised");
  check->add_option("--max-bottom", max_bottom, "bottom-string budget for moment computations");
  check->add_option("--seed", seed, "sampling seed recorded in the run");
  check->add_option("--suite", suites, "suite names to run (repeatable; default all)");
  check->add_option("--out", out, "report destination, '-' for stdout");

  auto* eval = app.add_subcommand("eval", "evaluate a JSON expression tree exactly");
  eval->add_option("--expr", expr, "expression file")->required();
  eval->add_option("--out", out, "result destination");

  auto* norm = app.add_subcommand("norm", "monotone moment norm estimates of a corner element");
  norm->add_option("--input", input, "serialized element")->required();
  norm->add_option("--p-max", p_max, "largest moment order, a power of two");
  norm->add_option("--out", out, "result destination");

  auto* dims = app.add_subcommand("dims", "table of diagram space dimensions");
  dims->add_option("--max-n", max_n, "level bound, at most 10");
  dims->add_option("--out", out, "result destination");

  auto* nc = app.add_subcommand("nc", "enumerate non-crossing pairings");
  nc->add_option("--points", points, "even number of boundary points")->required();
  nc->add_option("--out", out, "result destination");

  auto* fock = app.add_subcommand("fock", "apply creation/annihilation operators to a vector");
  fock->add_option("--vector", vector_path, "serialized fock vector")->required();
  fock->add_option("--create", creates, "symbol files applied as creation operators (repeatable)");
  fock->add_option("--annihilate", annihilates, "symbol files applied as annihilation operators (repeatable)");
  fock->add_option("--out", out, "result destination");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(delta, max_level, max_bottom, seed, suites, out);
    if (eval->parsed()) return cmd_eval(expr, out);
    if (norm->parsed()) return cmd_norm(input, p_max, out);
    if (dims->parsed()) return cmd_dims(max_n, out);
    if (nc->parsed()) return cmd_nc(points, out);
    if (fock->parsed()) return cmd_fock(vector_path, creates, annihilates, out);
  } catch (const tlgjs::EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const tlgjs::BottomBudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON input: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}
