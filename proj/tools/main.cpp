#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "symlex/flatten.hpp"
#include "symlex/solve.hpp"

using namespace symlex;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string readFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Model loadModel(const std::string &path) {
  Model m = parse_model(readFile(path));
  std::vector<std::string> diags = typecheck(m);
  if (!diags.empty()) {
    for (const std::string &d : diags)
      std::cerr << path << ": " << d << "\n";
    throw Error(std::to_string(diags.size()) + " type error" +
                (diags.size() == 1 ? "" : "s") + " in " + path);
  }
  return m;
}

void applyBudgetEnv(SolveOptions &opts) {
  const char *env = std::getenv("SYMBREAK_BUDGET");
  if (!env || !*env)
    return;
  char *end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0')
    throw Error("SYMBREAK_BUDGET must be a positive integer, got '" +
                std::string(env) + "'");
  opts.cellBudget = v;
  opts.assignmentBudget = v;
}

BreakMode parseMode(const std::string &s) {
  if (s == "independently")
    return BreakMode::Independently;
  if (s == "altogether")
    return BreakMode::Altogether;
  return BreakMode::NoBreaking;
}

GeneratorFlag parseGens(const std::string &s) {
  if (s == "consecutive")
    return GeneratorFlag::Consecutive;
  if (s == "allpairs")
    return GeneratorFlag::AllPairs;
  return GeneratorFlag::AllPermutations;
}

std::string solutionLine(const Assignment &a) {
  if (a.byVar.empty())
    return "()";
  std::string out;
  for (std::size_t i = 0; i < a.byVar.size(); ++i) {
    if (i)
      out += "; ";
    out += a.byVar[i].first + " = " + print_value(a.byVar[i].second);
  }
  return out;
}

ordered_json solutionJson(const Assignment &a) {
  ordered_json j = ordered_json::object();
  for (const auto &[name, v] : a.byVar)
    j[name] = print_value(v);
  return j;
}

struct SolveArgs {
  std::string path;
  std::string mode = "altogether";
  std::string gens = "allpermutations";
  bool countOnly = false;
  bool oracle = false;
  bool emitConstraints = false;
  bool json = false;
  int threads = 1;
};

int runSolve(const SolveArgs &a) {
  Model m = loadModel(a.path);
  SolveOptions opts;
  opts.cfg = {parseMode(a.mode), parseGens(a.gens)};
  opts.threads = a.threads;
  applyBudgetEnv(opts);
  std::string base = std::filesystem::path(a.path).filename().string();

  if (a.emitConstraints) {
    FlatSpace fs = flatten(m, opts.cellBudget);
    std::vector<LexConstraint> cs = compile_lex_leader(m, fs, opts.cfg);
    std::cout << dump_constraints(fs, cs);
    return 0;
  }

  SolveResult r = enumerate_solutions(m, opts);
  OrbitInfo oi;
  if (a.oracle)
    oi = orbit_oracle(m, opts);

  if (a.json) {
    ordered_json j;
    j["model"] = base;
    j["mode"] = a.mode;
    j["gens"] = a.gens;
    j["counts"] = ordered_json{{"assignments", r.checked},
                               {"constraints", r.constraintCount},
                               {"solutions", r.solutions.size()}};
    if (!a.countOnly) {
      ordered_json sols = ordered_json::array();
      for (const Assignment &s : r.solutions)
        sols.push_back(solutionJson(s));
      j["solutions"] = std::move(sols);
    }
    if (a.oracle)
      j["oracle"] = ordered_json{{"solutions", oi.solutionCount},
                                 {"orbits", oi.orbitCount},
                                 {"matchesSolutionCount", oi.orbitCount == r.solutions.size()}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (!a.countOnly)
    for (const Assignment &s : r.solutions)
      std::cout << solutionLine(s) << "\n";
  std::cout << "model: " << base << "\n"
            << "mode: " << a.mode << "\n"
            << "gens: " << a.gens << "\n"
            << "assignments: " << r.checked << "\n"
            << "constraints: " << r.constraintCount << "\n"
            << "solutions: " << r.solutions.size() << "\n";
  if (a.oracle)
    std::cout << "oracle solutions: " << oi.solutionCount << "\n"
              << "orbits: " << oi.orbitCount << "\n"
              << "orbits match solutions: "
              << (oi.orbitCount == r.solutions.size() ? "yes" : "no") << "\n";
  return 0;
}

struct OrbitArgs {
  std::string path;
  bool json = false;
  int threads = 1;
};

int runOrbits(const OrbitArgs &a) {
  Model m = loadModel(a.path);
  SolveOptions opts;
  opts.threads = a.threads;
  applyBudgetEnv(opts);
  OrbitInfo oi = orbit_oracle(m, opts);
  std::string base = std::filesystem::path(a.path).filename().string();
  if (a.json) {
    ordered_json j;
    j["model"] = base;
    j["counts"] = ordered_json{{"solutions", oi.solutionCount}, {"orbits", oi.orbitCount}};
    ordered_json reps = ordered_json::array();
    for (const Assignment &rep : oi.orbitReps)
      reps.push_back(solutionJson(rep));
    j["representatives"] = std::move(reps);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const Assignment &rep : oi.orbitReps)
    std::cout << solutionLine(rep) << "\n";
  std::cout << "model: " << base << "\n"
            << "solutions: " << oi.solutionCount << "\n"
            << "orbits: " << oi.orbitCount << "\n";
  return 0;
}

struct TransformArgs {
  std::string perm;
  std::string tag;
  std::string value;
  std::string modelPath;
};

int maxPoint(const std::string &permText) {
  int best = 0;
  for (std::size_t i = 0; i < permText.size();) {
    if (std::isdigit(static_cast<unsigned char>(permText[i]))) {
      int v = 0;
      while (i < permText.size() && std::isdigit(static_cast<unsigned char>(permText[i])))
        v = v * 10 + (permText[i++] - '0');
      best = std::max(best, v);
    } else {
      ++i;
    }
  }
  return best;
}

int runTransform(const TransformArgs &a) {
  TypeContext ctx;
  int size = 0;
  if (!a.modelPath.empty()) {
    Model m = loadModel(a.modelPath);
    ctx = m.typeContext();
    size = m.tagSize(a.tag);
    if (size < 0)
      throw Error("unknown unnamed type " + a.tag + " in " + a.modelPath);
  }
  Value v = parse_value(a.value, ctx);
  if (a.modelPath.empty()) {
    auto it = ctx.tagSizes.find(a.tag);
    size = std::max(it == ctx.tagSizes.end() ? 1 : it->second, maxPoint(a.perm));
  }
  Permutation p = parse_cycles(a.perm, a.tag, size);
  std::cout << print_value(transform(p, v)) << "\n";
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"lex-leader symmetry breaking over interchangeable atoms"};
  app.require_subcommand(1);

  SolveArgs sa;
  CLI::App *solve = app.add_subcommand("solve", "enumerate solutions of a model");
  solve->add_option("model", sa.path, "model file")->required();
  solve->add_option("--mode", sa.mode, "breaking mode")
      ->check(CLI::IsMember({"independently", "altogether", "none"}));
  solve->add_option("--gens", sa.gens, "generator choice per type")
      ->check(CLI::IsMember({"consecutive", "allpairs", "allpermutations"}));
  solve->add_flag("--count", sa.countOnly, "print counts only");
  solve->add_flag("--oracle", sa.oracle, "also run the orbit oracle and compare");
  solve->add_flag("--emit-constraints", sa.emitConstraints,
                  "print the compiled lex constraints instead of solving");
  solve->add_flag("--json", sa.json, "machine-readable output");
  solve->add_option("--threads", sa.threads, "worker threads")->check(CLI::PositiveNumber);

  OrbitArgs oa;
  CLI::App *orbits = app.add_subcommand("orbits", "partition all solutions into orbits");
  orbits->add_option("model", oa.path, "model file")->required();
  orbits->add_flag("--json", oa.json, "machine-readable output");
  orbits->add_option("--threads", oa.threads, "worker threads")->check(CLI::PositiveNumber);

  TransformArgs ta;
  CLI::App *tr = app.add_subcommand("transform", "apply a permutation to a value");
  tr->add_option("perm", ta.perm, "permutation in cycle syntax, e.g. \"(1 2)\"")->required();
  tr->add_option("tag", ta.tag, "unnamed type the permutation acts on")->required();
  tr->add_option("value", ta.value, "value literal")->required();
  tr->add_option("model", ta.modelPath, "optional model file fixing type sizes");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed())
      return runSolve(sa);
    if (orbits->parsed())
      return runOrbits(oa);
    return runTransform(ta);
  } catch (const BudgetError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
