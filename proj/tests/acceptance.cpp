// One PASS/FAIL line per criterion. Usage: acceptance [--criterion N]
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "rootharm/hyper.hpp"
#include "suites.hpp"

using namespace rootharm;
using namespace rootharm::cli;

namespace {

struct Run {
  std::string suite;
  RunConfig cfg;
};

struct Criterion {
  int id;
  std::string name;
  std::vector<Run> runs;
  double budget;  // seconds, per run
  // Extra assertions on the reports; returns an empty string when satisfied.
  std::function<std::string(const std::vector<Report>&)> extra;
};

RunConfig typed(const std::string& label, int height = -1, const std::string& k = {}) {
  RunConfig c;
  c.type = label;
  c.height = height;
  c.k = k;
  return c;
}

const Json* find_case(const Report& r, const std::string& type, const std::string& k) {
  for (const auto& c : r.details["cases"])
    if (c["details"]["case"]["type"] == type && c["details"]["case"]["k"] == k) return &c["details"];
  return nullptr;
}

std::string expect_ct(const Report& r, const std::string& type, const std::string& k, const std::string& value) {
  const Json* d = find_case(r, type, k);
  if (!d || !d->contains("<1,1>")) return "no <1,1> for " + type + " k=" + k;
  if ((*d)["<1,1>"] != value) return type + " k=" + k + " <1,1>=" + (*d)["<1,1>"].get<std::string>();
  return {};
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> cs;
  cs.push_back({1, "commutativity", {}, 60, nullptr});
  cs.push_back({2, "hecke relations", {}, 60, nullptr});
  for (const char* t : {"A2", "B2", "BC1"}) {
    cs[0].runs.push_back({"commutativity", typed(t, 4, "symbolic")});
    cs[1].runs.push_back({"hecke", typed(t, 4, "symbolic")});
  }
  cs[1].runs.push_back({"center", {}});
  cs.push_back({3, "adjointness", {{"adjoint", {}}}, 30, nullptr});
  cs.push_back({4, "jacobi orthogonality and norms",
                {{"jacobi-orthogonality", {}}, {"norms", {}}, {"constant-term", {}}},
                120,
                [](const std::vector<Report>& r) {
                  for (auto [k, v] : {std::pair{"1", "1"}, {"2", "3"}, {"3", "10"}})
                    if (auto e = expect_ct(r[1], "A1", k, v); !e.empty()) return e;
                  return expect_ct(r[2], "A2", "2", "15");
                }});
  cs.push_back({5, "raising operator", {{"shift-raise", {}}}, 60, nullptr});
  cs.push_back({6, "nonsymmetric shift operator", {{"shift-nonsym", {}}}, 300,
                [](const std::vector<Report>& r) -> std::string {
                  for (const auto& c : r[0].details["cases"])
                    if (c["details"]["kernel_dimension"] != 0) return "nonzero kernel";
                  return {};
                }});
  cs.push_back({7, "compositional identities", {{"shift-compose", {}}}, 300, nullptr});
  cs.push_back({8, "lowering adjoint and nonexistence", {{"shift-lowering-nonexist", {}}}, 120, nullptr});
  cs.push_back({9, "radial laplacian", {{"radial-laplacian", {}}}, 30, nullptr});
  cs.push_back({10, "satake", {{"satake", {}}}, 60, nullptr});
  cs.push_back({11, "rank one hypergeometric", {{"hyper-rank1", {}}}, 30,
                [](const std::vector<Report>&) -> std::string {
                  const MapSelection& sel = argument_map_selection();
                  if (sel.printed_ok == sel.standard_ok) return "argument map self-test did not single out one map";
                  return {};
                }});
  return cs;
}

bool run(const Criterion& c) {
  std::vector<Report> reports;
  std::string problem;
  double total = 0, worst = 0;
  for (const auto& r : c.runs) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      reports.push_back(run_suite(r.suite, r.cfg));
    } catch (const std::exception& e) {
      reports.emplace_back(r.suite);
      reports.back().fail(Json{{"exception", e.what()}});
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    total += dt;
    worst = std::max(worst, dt);
    const Report& rep = reports.back();
    if (problem.empty() && !rep.pass) problem = r.suite + ": " + rep.witness.dump();
    if (problem.empty() && dt > c.budget)
      problem = r.suite + " exceeded " + std::to_string(c.budget) + "s";
  }
  if (problem.empty() && c.extra) problem = c.extra(reports);
  bool ok = problem.empty();
  std::printf("CRITERION %d %s: %s (%.2fs total, slowest run %.2fs, budget %.0fs per run)%s%s\n", c.id,
              c.name.c_str(), ok ? "PASS" : "FAIL", total, worst, c.budget, ok ? "" : " -- ", problem.c_str());
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  bool all = true;
  int ran = 0;
  for (const auto& c : criteria()) {
    if (only && c.id != only) continue;
    all = run(c) && all;
    ++ran;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  return all ? 0 : 1;
}
