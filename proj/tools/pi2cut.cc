#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "pi2cut/error.h"
#include "pi2cut/problem.h"
#include "pi2cut/sn.h"
#include "pi2cut/solver.h"

using namespace pi2cut;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kNoSolution = 1;
constexpr int kInputError = 2;
constexpr int kCheckFailure = 3;

struct SolveArgs {
  std::string file;
  std::string pool = "gstar";
  size_t max_clauses = 3;
  size_t max_clause_size = 3;
  size_t max_candidates = 1000000;
  bool all = false;
  std::string emit;
  bool verify = false;
  bool json = false;
  bool serial = false;
  std::string condition = "positional";
};

std::vector<std::string> SetTexts(const std::vector<ClauseSet>& sets) {
  std::vector<std::string> out;
  for (const ClauseSet& c : sets) out.push_back(ClauseSetText(c));
  return out;
}

void Row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(22) << key << value << '\n';
}

std::string YesNo(bool b) { return b ? "yes" : "no"; }

ordered_json ReportJson(const SolutionReport& r, const std::string& pool) {
  ordered_json j;
  j["status"] = StatusName(r.status);
  j["pool"] = pool;
  j["pool_size"] = r.pool_size;
  j["unifiable"] = r.unifiable;
  j["leaves"] = r.leaves;
  j["start_clauses"] = r.start_clauses;
  j["candidates"] = r.candidates;
  j["cap_hit"] = r.cap_hit;
  j["solutions"] = SetTexts(r.solutions);
  if (r.status == SolveStatus::kSolved) {
    j["cut_formula"] = r.cut_formula->text();
    j["verified"] = r.verified;
    j["balanced"] = r.balanced;
    j["proof_ok"] = r.proof_ok;
    j["proof"] = {{"q", r.proof_complexity.q},
                  {"l", r.proof_complexity.l},
                  {"s", r.proof_complexity.s}};
    j["eh_complexity"] = r.eh_complexity;
    j["eh_shared_complexity"] = r.eh_shared_complexity;
  }
  return j;
}

void PrintReport(std::ostream& out, const SolutionReport& r,
                 const std::string& pool) {
  Row(out, "status", StatusName(r.status));
  Row(out, "pool", pool + " (" + std::to_string(r.pool_size) + " literals" +
                       (r.unifiable ? "" : ", some leaf not unifiable") + ")");
  Row(out, "leaves", std::to_string(r.leaves));
  Row(out, "start clauses", std::to_string(r.start_clauses));
  Row(out, "candidates", std::to_string(r.candidates) +
                             (r.cap_hit ? " (cap reached)" : ""));
  for (size_t i = 0; i < r.solutions.size(); ++i)
    Row(out, i == 0 ? "solution" : "", ClauseSetText(r.solutions[i]));
  if (r.status != SolveStatus::kSolved) return;
  Row(out, "cut formula", r.cut_formula->text());
  Row(out, "verified", YesNo(r.verified));
  Row(out, "balanced", YesNo(r.balanced));
  Row(out, "proof check", r.proof_ok ? "ok" : "FAILED: " + r.check_reason);
  Row(out, "proof q l s", std::to_string(r.proof_complexity.q) + " " +
                              std::to_string(r.proof_complexity.l) + " " +
                              std::to_string(r.proof_complexity.s));
  Row(out, "eh complexity", std::to_string(r.eh_complexity) + " (shared " +
                                std::to_string(r.eh_shared_complexity) + ")");
}

int RunSolve(const SolveArgs& a) {
  ProblemFile pf = LoadProblem(a.file);
  SolveOptions opt;
  opt.caps = {a.max_clauses, a.max_clause_size, a.max_candidates};
  opt.all = a.all;
  opt.exec = a.serial ? Exec::kSerial : Exec::kParallel;
  if (a.condition == "positional")
    opt.condition = SolCondition::kPositional;
  else if (a.condition == "allowed-set")
    opt.condition = SolCondition::kAllowedSet;
  else
    throw Error("unknown --sol-condition " + a.condition);
  if (a.pool == "gstar") {
    opt.pool = PoolKind::kGStar;
  } else if (a.pool == "naive") {
    opt.pool = PoolKind::kNaive;
  } else if (a.pool.rfind("file:", 0) == 0) {
    opt.pool = PoolKind::kFile;
    opt.file_start =
        ParseStartingSet(ReadFile(a.pool.substr(5)), pf.problem.sig);
  } else {
    throw Error("unknown --pool " + a.pool);
  }
  SolveOutcome res = IntroduceCut(pf.problem, pf.grammar, opt);
  const SolutionReport& r = res.report;
  if (a.json)
    std::cout << ReportJson(r, a.pool).dump(2) << '\n';
  else
    PrintReport(std::cout, r, a.pool);
  if (r.status != SolveStatus::kSolved) return kNoSolution;
  if (!a.emit.empty()) {
    std::ofstream out(a.emit);
    if (!out) throw Error("cannot write " + a.emit);
    out << PrintProof(*res.proof);
  }
  if (a.verify) {
    Sehs sehs = BuildSehs(pf.problem, pf.grammar);
    for (const ClauseSet& c : r.solutions)
      if (!VerifySolution(sehs, c)) return kCheckFailure;
    if (!r.proof_ok) return kCheckFailure;
  }
  return kOk;
}

int RunCheck(const std::string& path) {
  Proof p = ParseProof(ReadFile(path));
  CheckReport rep = CheckProof(p);
  if (!rep.ok) {
    std::cout << "FAILED at " << (rep.path.empty() ? "root" : rep.path)
              << ": " << rep.reason << '\n';
    return kCheckFailure;
  }
  Complexity c = Complexities(p);
  std::cout << "ok q=" << c.q << " l=" << c.l << " s=" << c.s << '\n';
  return kOk;
}

int RunLanguage(const std::string& path) {
  ProblemFile pf = LoadProblem(path);
  for (const Term& t : RigidLanguage(pf.grammar)) std::cout << t.text() << '\n';
  if (pf.herbrand) {
    bool covers = Covers(pf.grammar, HerbrandTermSet(pf.problem, *pf.herbrand));
    std::cerr << "covers herbrand terms: " << YesNo(covers) << '\n';
    if (!covers) return kCheckFailure;
  }
  return kOk;
}

int RunBenchSn(int n, bool cut_free, bool json) {
  SnInstance sn = GenerateSn(n);
  auto t0 = std::chrono::steady_clock::now();
  SolveOutcome res = IntroduceCut(sn.file.problem, sn.file.grammar);
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0).count();
  const SolutionReport& r = res.report;
  if (r.status != SolveStatus::kSolved) {
    std::cout << "no cut found for n=" << n << '\n';
    return kNoSolution;
  }
  ordered_json j;
  j["n"] = n;
  j["solution"] = ClauseSetText(r.solutions.front());
  j["cut_proof"] = {{"q", r.proof_complexity.q},
                    {"l", r.proof_complexity.l},
                    {"s", r.proof_complexity.s},
                    {"q_expected", 4 * n + 3}};
  j["proof_ok"] = r.proof_ok;
  j["seconds"] = secs;
  if (cut_free) {
    CutFreeCount cf = MinimalCutFreeInstances(n);
    j["cut_free"] = {{"valid", cf.valid},
                     {"sharp", cf.sharp},
                     {"sharp_f", cf.f_sharp},
                     {"sharp_g", cf.g_sharp},
                     {"n_pow_n", cf.n_pow_n},
                     {"closed_form", cf.closed_form}};
  }
  if (json) {
    std::cout << j.dump(2) << '\n';
  } else {
    Row(std::cout, "n", std::to_string(n));
    Row(std::cout, "solution", ClauseSetText(r.solutions.front()));
    Row(std::cout, "cut proof q l s",
        std::to_string(r.proof_complexity.q) + " " +
            std::to_string(r.proof_complexity.l) + " " +
            std::to_string(r.proof_complexity.s));
    Row(std::cout, "4n+3", std::to_string(4 * n + 3));
    Row(std::cout, "proof check", r.proof_ok ? "ok" : "FAILED");
    if (cut_free) {
      CutFreeCount cf = MinimalCutFreeInstances(n);
      Row(std::cout, "cut-free midsequent", cf.valid ? "valid" : "INVALID");
      Row(std::cout, "cut-free sharp count",
          std::to_string(cf.sharp) + " (F " + std::to_string(cf.f_sharp) +
              ", G " + std::to_string(cf.g_sharp) + ")");
      Row(std::cout, "n^n", std::to_string(cf.n_pow_n));
      Row(std::cout, "closed form", std::to_string(cf.closed_form));
    }
  }
  return r.proof_ok ? kOk : kCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pi2-cut introduction"};
  app.require_subcommand(1);

  SolveArgs sa;
  CLI::App* solve = app.add_subcommand("solve", "introduce a Pi2-cut");
  solve->add_option("file", sa.file, "problem file")->required();
  solve->add_option("--pool", sa.pool, "gstar | naive | file:<path>");
  solve->add_option("--max-clauses", sa.max_clauses, "clauses per candidate (3)");
  solve->add_option("--max-clause-size", sa.max_clause_size, "literals per clause (3)");
  solve->add_option("--max-candidates", sa.max_candidates, "candidate cap (1000000)");
  solve->add_flag("--all", sa.all, "report every solution");
  solve->add_option("--emit-proof", sa.emit, "write the proof to this file");
  solve->add_flag("--verify", sa.verify, "exit 3 unless every check passes");
  solve->add_flag("--json", sa.json, "print the report as JSON");
  solve->add_flag("--serial", sa.serial, "no OpenMP");
  solve->add_option("--sol-condition", sa.condition, "positional | allowed-set");

  std::string proof_path;
  CLI::App* check = app.add_subcommand("check", "check a proof file");
  check->add_option("proof", proof_path)->required();

  std::string lang_path;
  CLI::App* lang = app.add_subcommand("language", "print the rigid language");
  lang->add_option("file", lang_path)->required();

  int n = 2;
  bool cut_free = false, bench_json = false;
  CLI::App* bench = app.add_subcommand("bench-sn", "S_n complexity table");
  bench->add_option("--n", n, "instance size, at least 2")->required();
  bench->add_flag("--cut-free", cut_free, "also count a minimal cut-free proof (n <= 6)");
  bench->add_flag("--json", bench_json, "print the table as JSON");

  int gen_n = 2;
  CLI::App* gen = app.add_subcommand("gen-sn", "print the S_n problem file");
  gen->add_option("--n", gen_n, "instance size, at least 2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve) return RunSolve(sa);
    if (*check) return RunCheck(proof_path);
    if (*lang) return RunLanguage(lang_path);
    if (*bench) return RunBenchSn(n, cut_free, bench_json);
    if (*gen) {
      std::cout << PrintProblem(GenerateSn(gen_n).file);
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
