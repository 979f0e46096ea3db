/*
 * End-to-end acceptance gate.  Runs every mathematical claim the library
 * makes at its full advertised size, each with a wall-clock ceiling, and
 * prints exactly one PASS/FAIL line per criterion.
 *
 *   usage: acceptance [path-to-cli] [golden-dir]
 */
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cfhp/numerator.hpp"
#include "cfhp/verify.hpp"

using namespace cfhp;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli = "./build/cfhp";
std::string g_golden = "tests/golden";
int g_jobs = 1;
int g_failures = 0;
int g_index = 0;

void criterion(const std::string& name, double limit_s,
               const std::function<std::string()>& run) {
  ++g_index;
  auto start = Clock::now();
  std::string note;
  try {
    note = run();
  } catch (const std::exception& e) {
    note = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (note.empty() && secs > limit_s) {
    std::ostringstream os;
    os << "took " << secs << "s, limit " << limit_s << "s";
    note = os.str();
  }
  std::printf("[%s] %02d %s (%.2fs, limit %.0fs)%s%s\n",
              note.empty() ? "PASS" : "FAIL", g_index, name.c_str(), secs,
              limit_s, note.empty() ? "" : ": ", note.c_str());
  std::fflush(stdout);
  if (!note.empty()) ++g_failures;
}

Poly golden(int n) {
  std::string path = g_golden + "/numerator_n" + std::to_string(n) + ".json";
  std::ifstream in(path);
  if (!in.good()) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return Poly::from_json(j);
}

struct CliRun {
  int exit_code;
  std::string out, err;
};

CliRun run_cli(const std::string& args) {
  std::string errfile =
      "/tmp/cfhp_acceptance_" + std::to_string(getpid()) + ".err";
  std::string cmd = "'" + g_cli + "' " + args + " 2>'" + errfile + "'";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  std::ifstream ein(errfile);
  std::stringstream ess;
  ess << ein.rdbuf();
  std::remove(errfile.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return CliRun{code, out, ess.str()};
}

std::string suite_sweep(const std::string& suite, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    SuiteResult res = run_verify_suite(suite, n, g_jobs);
    if (!res.passed)
      return suite + " failed at n=" + std::to_string(n) + ": " + res.detail;
  }
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  if (argc > 2) g_golden = argv[2];
  g_jobs = std::max(1u, std::thread::hardware_concurrency());

  criterion("frozen numerator values, n <= 3", 600, [] {
    for (int n = 1; n <= 3; ++n) {
      Poly expect = golden(n);
      if (numerator_via_chains(n) != expect ||
          numerator_via_rlabeling(n) != expect ||
          numerator_via_statistic(n) != expect)
        return "mismatch against the frozen value at n=" + std::to_string(n);
    }
    auto start = Clock::now();
    Poly again = numerator_via_chains(2);
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (again != golden(2)) return std::string("n=2 recompute mismatch");
    if (secs > 0.1) return "n=2 took " + std::to_string(secs) + "s, limit 0.1s";
    return std::string();
  });

  criterion("three-way agreement through the command line, n <= 5", 60, [] {
    for (int n = 1; n <= 5; ++n) {
      CliRun r = run_cli("numerator --n " + std::to_string(n) +
                         " --method all --format json --jobs " +
                         std::to_string(g_jobs));
      if (r.exit_code != 0)
        return "exit code " + std::to_string(r.exit_code) + " at n=" +
               std::to_string(n);
      nlohmann::json j = nlohmann::json::parse(r.out);
      if (j.at("agree") != true)
        return "methods disagree at n=" + std::to_string(n);
      if (j.at("methods").size() != 3) return std::string("missing methods");
      if (n <= 3)
        for (const auto& m : j["methods"])
          if (Poly::from_json(m["poly"]) != golden(n))
            return "CLI value differs from frozen value at n=" +
                   std::to_string(n);
      std::istringstream lines(r.err);
      std::string line;
      int timed = 0;
      while (std::getline(lines, line)) {
        char name[32];
        double secs = 0;
        if (std::sscanf(line.c_str(), "method %31[^:]: %lfs", name, &secs) ==
            2) {
          ++timed;
          if (secs > 2.0)
            return std::string(name) + " took " + std::to_string(secs) +
                   "s at n=" + std::to_string(n) + ", limit 2s";
        }
      }
      if (timed != 3) return std::string("expected three timing lines");
    }
    return std::string();
  });

  criterion("ascent/descent statistic identity, n <= 6", 600,
            [] { return suite_sweep("thm15", 6); });

  criterion("refined label identity, n <= 5", 120,
            [] { return suite_sweep("thm16", 5); });

  criterion("closed forms at y=1 and t=0, n <= 5", 600,
            [] { return suite_sweep("closedform", 5); });

  criterion("label multiset lemma, n <= 5", 600,
            [] { return suite_sweep("lemma22", 5); });

  criterion("last-bar position lemma, n <= 5", 600,
            [] { return suite_sweep("lemma23", 5); });

  criterion("labeled poset fibers, n <= 5", 600,
            [] { return suite_sweep("pwy", 5); });

  criterion("chain-and-sign-set bijection, n <= 4", 600,
            [] { return suite_sweep("bijection", 4); });

  criterion("rising chain uniqueness and qsym equalities, n <= 4", 60, [] {
    std::string a = suite_sweep("rlabeling", 4);
    if (!a.empty()) return a;
    return suite_sweep("qsym", 4);
  });

  if (g_failures == 0) {
    std::printf("acceptance: all %d criteria passed\n", g_index);
    return 0;
  }
  std::printf("acceptance: %d of %d criteria FAILED\n", g_failures, g_index);
  return 1;
}
