#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "cfhp/numerator.hpp"
#include "cfhp/parallel.hpp"
#include "cfhp/pwy.hpp"
#include "cfhp/qsym.hpp"
#include "cfhp/verify.hpp"

namespace {

using namespace cfhp;

/* payload goes to stdout (or --output) and stays deterministic; timings and
 * diagnostics go to stderr */
void emit(const std::string& payload, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open " + output_path);
  out << payload;
}

Permutation parse_perm_arg(const std::string& s, const std::string& flag) {
  auto p = Permutation::parse(s);
  if (!p) throw std::invalid_argument("malformed permutation for " + flag +
                                      ": " + s);
  return *p;
}

std::vector<int> parse_int_csv(const std::string& s) {
  std::vector<int> vals;
  if (s.empty()) return vals;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("malformed list: " + s);
    vals.push_back(std::stoi(item));
  }
  return vals;
}

std::string poly_to_csv(const Poly& p) {
  std::set<Variable> vars;
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m.factors()) vars.insert(v);
  std::vector<const std::map<Monomial, Integer>::value_type*> order;
  for (const auto& kv : p.terms()) order.push_back(&kv);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    return display_less(a->first, b->first);
  });
  std::string s = "coeff";
  for (const auto& v : vars) s += "," + v.name();
  s += "\n";
  for (const auto* kv : order) {
    s += kv->second.str();
    for (const auto& v : vars)
      s += "," + std::to_string(kv->first.exponent(v));
    s += "\n";
  }
  return s;
}

std::string render_poly(const Poly& p, const std::string& format) {
  if (format == "json") return p.to_json().dump(2) + "\n";
  if (format == "latex") return p.to_latex() + "\n";
  if (format == "csv") return poly_to_csv(p);
  return p.to_string() + "\n";
}

int cmd_numerator(int n, const std::string& method, const std::string& format,
                  int jobs, const std::string& output) {
  NumeratorReport rep = numerator_report(n, {method}, jobs);
  for (const auto& run : rep.runs)
    std::fprintf(stderr, "method %s: %.3fs\n", run.method.c_str(),
                 run.seconds);
  if (!rep.agree) {
    for (const auto& run : rep.runs)
      std::fprintf(stderr, "%s: %s\n", run.method.c_str(),
                   run.value.to_string().c_str());
    std::fprintf(stderr, "methods disagree\n");
    return 3;
  }
  std::string payload;
  if (format == "text") {
    payload = "n = " + std::to_string(n) + "\n";
    for (const auto& run : rep.runs)
      payload += run.method + ": " + run.value.to_string() + "\n";
    payload += "agree: yes\n";
  } else if (format == "json") {
    payload = rep.to_json().dump(2) + "\n";
  } else {
    payload = render_poly(rep.value(), format);
  }
  emit(payload, output);
  return 0;
}

int cmd_label(const std::string& ws, const std::string& ss,
              const std::string& format, const std::string& output) {
  Permutation w = parse_perm_arg(ws, "--w");
  Permutation sigma = parse_perm_arg(ss, "--sigma");
  auto chain = chain_from_pair(w, sigma);
  SignedWord lam = lambda(w, sigma);
  auto iset = ino_set(w, sigma);

  std::string payload;
  if (format == "json") {
    nlohmann::json j;
    j["w"] = w.to_string();
    j["sigma"] = sigma.to_string();
    nlohmann::json ch = nlohmann::json::array();
    for (const auto& comp : chain) ch.push_back(comp.to_string());
    j["chain"] = ch;
    j["lambda"] = lam.entries();
    j["ino_set"] = iset;
    j["ino"] = iset.size();
    payload = j.dump(2) + "\n";
  } else {
    payload = "w = " + w.to_string() + ", sigma = " + sigma.to_string() + "\n";
    for (std::size_t i = 0; i < chain.size(); ++i)
      payload += (i ? " < " : "") + chain[i].to_string();
    payload += "\nlambda = " + lam.to_string() + "\nIno = {";
    for (std::size_t i = 0; i < iset.size(); ++i)
      payload += (i ? ", " : "") + std::to_string(iset[i]);
    payload += "}\nino = " + std::to_string(iset.size()) + "\n";
  }
  emit(payload, output);
  return 0;
}

int cmd_poset(const std::string& ws, const std::string& ys,
              const std::string& format, bool list_extensions,
              const std::string& output) {
  Permutation w = parse_perm_arg(ws, "--w");
  PwyPoset p = build_pwy(w, parse_int_csv(ys));

  std::string payload;
  if (format == "dot") {
    payload = pwy_to_dot(p);
  } else if (format == "json") {
    nlohmann::json j = pwy_to_json(p);
    if (list_extensions) {
      nlohmann::json exts = nlohmann::json::array();
      for (const auto& sigma : p.poset.linear_extensions())
        exts.push_back({{"sigma", sigma.to_string()},
                        {"word", vertex_word(p, sigma).entries()}});
      j["linear_extensions"] = exts;
    }
    payload = j.dump(2) + "\n";
  } else {
    payload = "P_{w,Y}: w = " + w.to_string() + ", Y = {";
    for (std::size_t i = 0; i < p.y.size(); ++i)
      payload += (i ? ", " : "") + std::to_string(p.y[i]);
    payload += "}\nlabels:";
    for (int b = 1; b <= p.poset.size(); ++b)
      payload += " " + std::to_string(b) + ":" +
                 std::to_string(p.lambda[b - 1]);
    payload += "\ncovers:";
    if (p.poset.covers().empty()) payload += " none";
    bool first = true;
    for (const auto& [a, b] : p.poset.covers()) {
      payload += (first ? " " : ", ") + std::to_string(a + 1) + " < " +
                 std::to_string(b + 1);
      first = false;
    }
    payload += "\n";
    if (list_extensions) {
      payload += "linear extensions:\n";
      for (const auto& sigma : p.poset.linear_extensions())
        payload += "  " + sigma.to_string() + " -> " +
                   vertex_word(p, sigma).to_string() + "\n";
    }
  }
  emit(payload, output);
  return 0;
}

int cmd_verify(int n, const std::string& suites_csv, int jobs,
               const std::string& format, const std::string& output) {
  std::vector<std::string> selected;
  std::vector<std::string> skipped;
  if (suites_csv.empty()) {
    for (const auto& name : verify_suites())
      (n <= verify_budget(name) ? selected : skipped).push_back(name);
    if (selected.empty())
      throw BudgetError("verify", n, verify_budget("thm15"));
  } else {
    std::stringstream ss(suites_csv);
    std::string item;
    while (std::getline(ss, item, ',')) selected.push_back(item);
    for (const auto& name : selected)
      verify_budget(name);  // unknown suite -> invalid_argument
  }

  std::vector<SuiteResult> results;
  bool all_passed = true;
  for (const auto& name : selected) {
    SuiteResult res = run_verify_suite(name, n, jobs);
    std::fprintf(stderr, "suite %s: %.3fs\n", name.c_str(), res.seconds);
    all_passed = all_passed && res.passed;
    results.push_back(std::move(res));
  }

  std::string payload;
  if (format == "json") {
    nlohmann::json j;
    j["n"] = n;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& res : results)
      arr.push_back({{"suite", res.suite},
                     {"passed", res.passed},
                     {"checks", res.checks},
                     {"detail", res.detail}});
    j["suites"] = arr;
    j["skipped"] = skipped;
    j["passed"] = all_passed;
    payload = j.dump(2) + "\n";
  } else {
    for (const auto& res : results)
      payload += res.suite + " (n=" + std::to_string(n) + "): " +
                 (res.passed ? "PASS" : "FAIL") +
                 " [checks=" + std::to_string(res.checks) + "] " + res.detail +
                 "\n";
    if (!skipped.empty()) {
      payload += "skipped (over budget):";
      for (const auto& name : skipped) payload += " " + name;
      payload += "\n";
    }
    payload += all_passed ? "all selected suites passed\n"
                          : "some suites FAILED\n";
  }
  emit(payload, output);
  return all_passed ? 0 : 1;
}

int cmd_qsym_check(int n, int m, const std::string& format,
                   const std::string& output) {
  if (n < 1 || n > budgets::kQsymSweep)
    throw BudgetError("qsym-check", n, budgets::kQsymSweep);
  long long posets = 0, comparisons = 0;
  std::string first_failure;
  for_each_permutation(n + 1, [&](const std::vector<int>& wv) {
    Permutation w(wv);
    for (const auto& y : admissible_label_sets(w)) {
      PwyPoset p = build_pwy(w, y);
      posets++;
      for (int mm = 1; mm <= m; ++mm) {
        comparisons++;
        if (k_p_omega(p.poset, p.lambda, mm) !=
                k_via_fundamental(p.poset, p.lambda, mm) &&
            first_failure.empty())
          first_failure = "w = " + w.to_string() + ", m = " +
                          std::to_string(mm);
      }
    }
  });
  bool passed = first_failure.empty();
  std::string payload;
  if (format == "json") {
    nlohmann::json j;
    j["n"] = n;
    j["m"] = m;
    j["posets"] = posets;
    j["comparisons"] = comparisons;
    j["passed"] = passed;
    if (!passed) j["first_failure"] = first_failure;
    payload = j.dump(2) + "\n";
  } else {
    payload = "checked " + std::to_string(posets) + " posets, " +
              std::to_string(comparisons) + " comparisons at m = 1.." +
              std::to_string(m) + ": " +
              (passed ? "all agree" : "FAIL at " + first_failure) + "\n";
  }
  emit(payload, output);
  return passed ? 0 : 1;
}

int cmd_eulerian(int n, const std::string& format, const std::string& output) {
  emit(render_poly(eulerian_polynomial(n), format), output);
  return 0;
}

int cmd_refined(const std::string& ws, const std::string& format,
                const std::string& output) {
  Permutation w = parse_perm_arg(ws, "--w");
  RefinedSides sides = refined_sides(w);
  bool equal = sides.by_ascents == sides.by_descents;
  std::string payload;
  if (format == "json") {
    nlohmann::json j;
    j["w"] = w.to_string();
    j["by_ascents"] = sides.by_ascents.to_json();
    j["by_descents"] = sides.by_descents.to_json();
    j["equal"] = equal;
    payload = j.dump(2) + "\n";
  } else {
    payload = "w = " + w.to_string() + "\n" +
              "by ascents:  " + sides.by_ascents.to_string() + "\n" +
              "by descents: " + sides.by_descents.to_string() + "\n" +
              "equal: " + (equal ? "yes" : "NO") + "\n";
  }
  emit(payload, output);
  return equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "numerator of the coarse flag Hilbert-Poincare series of braid "
      "arrangements, with exhaustive identity checks"};
  app.require_subcommand(1);

  int n = 2, m_vars = 3, jobs = 0;
  std::string method = "all", format = "text", output, w_arg, sigma_arg,
              y_arg, suites_arg;
  bool list_extensions = false;

  auto* num = app.add_subcommand("numerator", "compute N(y,t) for B_n");
  num->add_option("--n", n, "arrangement size")->required();
  num->add_option("--method", method,
                  "chains|rlabeling|statistic|all (default all)");
  num->add_option("--format", format, "text|json|latex|csv");
  num->add_option("--jobs", jobs, "worker threads (default: CFHP_JOBS or 1)");
  num->add_option("--output", output, "write payload to a file");

  auto* lab = app.add_subcommand("label", "bar-deletion chain of (w, sigma)");
  lab->add_option("--w", w_arg, "permutation of {1..n+1}")->required();
  lab->add_option("--sigma", sigma_arg, "deletion order on {1..n}")
      ->required();
  lab->add_option("--format", format, "text|json");
  lab->add_option("--output", output, "write payload to a file");

  auto* pos = app.add_subcommand("poset", "build the labeled poset P_{w,Y}");
  pos->add_option("--w", w_arg, "permutation of {1..n+1}")->required();
  pos->add_option("--y", y_arg, "label values, e.g. 3,5,6 (default empty)");
  pos->add_option("--format", format, "text|json|dot");
  pos->add_flag("--list-extensions", list_extensions,
                "also list Lin(P) with vertex words");
  pos->add_option("--output", output, "write payload to a file");

  auto* ver = app.add_subcommand("verify", "run identity suites at size n");
  ver->add_option("--n", n, "arrangement size")->required();
  ver->add_option("--suites", suites_arg,
                  "comma list; default: all suites within budget");
  ver->add_option("--jobs", jobs, "worker threads (default: CFHP_JOBS or 1)");
  ver->add_option("--format", format, "text|json");
  ver->add_option("--output", output, "write payload to a file");

  auto* qs = app.add_subcommand(
      "qsym-check", "compare partition generating functions on all P_{w,Y}");
  qs->add_option("--n", n, "arrangement size")->required();
  qs->add_option("--m", m_vars, "truncate to x_1..x_m (default 3)");
  qs->add_option("--format", format, "text|json");
  qs->add_option("--output", output, "write payload to a file");

  auto* eul = app.add_subcommand("eulerian", "Eulerian polynomial E_n(t)");
  eul->add_option("--n", n, "degree")->required();
  eul->add_option("--format", format, "text|json|latex|csv");
  eul->add_option("--output", output, "write payload to a file");

  auto* ref = app.add_subcommand("refined",
                                 "both sides of the refined identity at w");
  ref->add_option("--w", w_arg, "permutation of {1..n+1}")->required();
  ref->add_option("--format", format, "text|json");
  ref->add_option("--output", output, "write payload to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (num->parsed()) return cmd_numerator(n, method, format, jobs, output);
    if (lab->parsed()) return cmd_label(w_arg, sigma_arg, format, output);
    if (pos->parsed())
      return cmd_poset(w_arg, y_arg, format, list_extensions, output);
    if (ver->parsed())
      return cmd_verify(n, suites_arg, jobs, format, output);
    if (qs->parsed()) return cmd_qsym_check(n, m_vars, format, output);
    if (eul->parsed()) return cmd_eulerian(n, format, output);
    if (ref->parsed()) return cmd_refined(w_arg, format, output);
  } catch (const cfhp::BudgetError& e) {
    std::fprintf(stderr, "refused: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
  return 0;
}
