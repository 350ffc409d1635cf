// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Tolerances are fixed here and are not tunable.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pcrfuse/cli.hpp"
#include "pcrfuse/conjunctive.hpp"
#include "pcrfuse/importance.hpp"
#include "pcrfuse/pcr.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "support/random_instances.hpp"

using namespace pcrfuse;
using pcrfuse::testing::WorkedExample;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
  void near(double got, double want, double tol, const std::string& what) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s: got %.9f want %.9f (tol %.0e)", what.c_str(), got,
                  want, tol);
    expect(std::abs(got - want) <= tol, buf);
  }
};

Frame random_frame(std::mt19937_64& rng) { return pcrfuse::testing::random_frame(rng, 2, 4); }

MassFunction random_mass(std::mt19937_64& rng, const Frame& f) {
  return pcrfuse::testing::random_mass(rng, f, 2, 4);
}

std::vector<MassFunction> random_sources(std::mt19937_64& rng, std::size_t n, const Frame& f) {
  std::vector<MassFunction> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_mass(rng, f));
  return out;
}

Verdict conjunctive_tables() {
  WorkedExample ex;
  Verdict v;
  const MassFunction pair[] = {ex.m1(), ex.m2()};
  const auto r12 = conjunctive_combine(pair);
  v.near(r12.mass(ex.a), 0.17, 1e-9, "m12(A)");
  v.near(r12.mass(ex.b), 0.44, 1e-9, "m12(B)");
  v.near(r12.mass(ex.ab), 0.10, 1e-9, "m12(A|B)");
  v.near(r12.conflict, 0.29, 1e-9, "m12 conflict");
  const MassFunction triple[] = {ex.m1(), ex.m2(), ex.m2()};
  const auto r122 = conjunctive_combine(triple);
  v.near(r122.mass(ex.a), 0.193, 1e-9, "m122(A)");
  v.near(r122.mass(ex.b), 0.274, 1e-9, "m122(B)");
  v.near(r122.mass(ex.ab), 0.050, 1e-9, "m122(A|B)");
  v.near(r122.conflict, 0.483, 1e-9, "m122 conflict");
  return v;
}

Verdict three_source_pcr5() {
  WorkedExample ex;
  Verdict v;
  const WeightedSource ws[] = {{ex.m1(), 1}, {ex.m2(), 2}};
  const auto fused = std::get<MassFunction>(fuse_with_importance(ws, FusionRule::pcr5));
  v.near(fused.mass(ex.a), 0.345262, 5e-6, "A");
  v.near(fused.mass(ex.b), 0.505522, 5e-6, "B");
  v.near(fused.mass(ex.ab), 0.149216, 5e-6, "A|B");
  return v;
}

Verdict trace_fidelity() {
  WorkedExample ex;
  Verdict v;
  const MassFunction srcs[] = {ex.m1(), ex.m2(), ex.m2()};
  const auto tr = trace(srcs, PcrRule::pcr5);
  v.expect(tr.entries.size() == 12, "expected 12 trace entries");

  // Locate a system by its per-source focal assignment.
  const auto find = [&](FocalSet s1, FocalSet s2, FocalSet s3) -> const TraceEntry* {
    for (const auto& e : tr.entries) {
      const auto& m = e.tuple.members;
      if (m[0].set == s1 && m[1].set == s2 && m[2].set == s3) return &e;
    }
    return nullptr;
  };
  const TraceEntry* sys2 = find(ex.b, ex.a, ex.ab);   // 0.7, 0.4, 0.5
  const TraceEntry* sys7 = find(ex.a, ex.b, ex.b);    // 0.1, 0.1, 0.1
  const TraceEntry* sys12 = find(ex.b, ex.a, ex.a);   // 0.7, 0.4, 0.4
  v.expect(sys2 && sys7 && sys12, "systems 2, 7, 12 not found in trace");
  if (!v.pass) return v;
  v.near(sys2->shares.share(ex.a), 0.035000, 2e-6, "x_2A");
  v.near(sys2->shares.share(ex.b), 0.061250, 2e-6, "y_2B");
  v.near(sys2->shares.share(ex.ab), 0.043750, 2e-6, "z_2");
  v.near(sys7->shares.share(ex.a), 0.000909, 2e-6, "x_7A");
  v.near(sys7->shares.share(ex.b), 0.000091, 2e-6, "y_7B");
  v.near(sys12->shares.share(ex.a), 0.020837, 2e-6, "x_12A");
  v.near(sys12->shares.share(ex.b), 0.091163, 2e-6, "y_12B");
  return v;
}

Verdict two_source_erratum() {
  WorkedExample ex;
  Verdict v;
  const MassFunction pair[] = {ex.m1(), ex.m2()};
  const MassFunction fused = fuse_pcr5(pair);
  v.near(fused.mass(ex.a), 0.276818, 1e-6, "A");
  v.near(fused.mass(ex.b), 0.623182, 1e-6, "B");
  v.near(fused.mass(ex.ab), 0.100000, 1e-6, "A|B");
  return v;
}

Verdict closed_form_equivalence() {
  Verdict v;
  std::mt19937_64 rng(0xC105ED);
  double worst5 = 0.0, worst6 = 0.0;
  for (int i = 0; i < 500; ++i) {
    const Frame f = random_frame(rng);
    const auto s = random_sources(rng, 3, f);
    worst5 = std::max(worst5, max_distance(closed_form_pcr5_3(s[0], s[1], s[2]), fuse_pcr5(s)));
    worst6 = std::max(worst6, max_distance(closed_form_pcr6_3(s[0], s[1], s[2]), fuse_pcr6(s)));
  }
  v.near(worst5, 0.0, 1e-12, "max PCR5 closed-form gap over 500 instances");
  v.near(worst6, 0.0, 1e-12, "max PCR6 closed-form gap over 500 instances");
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  std::mt19937_64 rng(0x0AC1E);
  std::uniform_int_distribution<std::size_t> count(2, 4);
  double worst = 0.0, worst_sum = 0.0, worst_empty = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Frame f = random_frame(rng);
    const auto s = random_sources(rng, count(rng), f);
    for (PcrRule rule : {PcrRule::pcr5, PcrRule::pcr6}) {
      const MassFunction prod = fuse_pcr(s, rule);
      worst = std::max(worst, max_distance(prod, pcrfuse::testing::oracle_fuse(s, rule)));
      worst_sum = std::max(worst_sum, std::abs(prod.total() - 1.0));
      worst_empty = std::max(worst_empty, prod.mass(FocalSet()));
    }
  }
  v.near(worst, 0.0, 1e-10, "max oracle gap over 1000 instances");
  v.near(worst_sum, 0.0, 1e-9, "max |sum - 1|");
  v.expect(worst_empty == 0.0, "empty set carries mass");
  return v;
}

Verdict two_source_coincidence() {
  Verdict v;
  std::mt19937_64 rng(0x2C0);
  int mismatches = 0;
  for (int i = 0; i < 500; ++i) {
    const Frame f = random_frame(rng);
    const auto s = random_sources(rng, 2, f);
    if (!(fuse_pcr5(s) == fuse_pcr6(s))) ++mismatches;
  }
  v.expect(mismatches == 0, std::to_string(mismatches) + " of 500 instances differ");
  return v;
}

Verdict importance_invariance() {
  Verdict v;
  WorkedExample ex;
  const auto fuse = [](const MassFunction& a, std::uint64_t wa, const MassFunction& b,
                       std::uint64_t wb, FusionRule rule) {
    const WeightedSource ws[] = {{a, wa}, {b, wb}};
    return fuse_with_importance(ws, rule);
  };
  for (FusionRule rule : {FusionRule::conjunctive, FusionRule::pcr5, FusionRule::pcr6}) {
    const auto x = fuse(ex.m1(), 2, ex.m2(), 4, rule);
    const auto y = fuse(ex.m1(), 1, ex.m2(), 2, rule);
    if (rule == FusionRule::conjunctive) {
      const auto& cx = std::get<ConjunctiveResult>(x);
      const auto& cy = std::get<ConjunctiveResult>(y);
      v.expect(cx.masses == cy.masses && cx.conflict == cy.conflict,
               "worked example differs under conjunctive");
    } else {
      v.expect(std::get<MassFunction>(x) == std::get<MassFunction>(y),
               "worked example differs under " + std::string(to_string(rule)));
    }
  }
  std::mt19937_64 rng(0x1AB);
  for (int i = 0; i < 200; ++i) {
    const Frame f = random_frame(rng);
    const auto a = random_mass(rng, f);
    const auto b = random_mass(rng, f);
    const FusionRule rule = i % 2 ? FusionRule::pcr5 : FusionRule::pcr6;
    v.expect(std::get<MassFunction>(fuse(a, 2, b, 4, rule)) ==
                 std::get<MassFunction>(fuse(a, 1, b, 2, rule)),
             "random instance differs");
  }
  return v;
}

Verdict convergence_profile_check() {
  Verdict v;
  WorkedExample ex;
  const auto profile = convergence_profile(ex.m1(), ex.m2(), PcrRule::pcr5, 5);
  v.expect(profile.size() == 5, "expected 5 profile points");
  if (!v.pass) return v;
  v.near(profile[0].distance, 0.523182, 1e-6, "profile(1)");
  v.near(profile[1].distance, 0.405522, 1e-6, "profile(2)");
  for (std::size_t i = 1; i < profile.size(); ++i) {
    v.expect(profile[i].distance < profile[i - 1].distance,
             "not strictly decreasing at k=" + std::to_string(i + 1));
  }
  return v;
}

Verdict cli_contract() {
  namespace fs = std::filesystem;
  Verdict v;
  const fs::path dir = fs::temp_directory_path();
  const auto write = [&](const std::string& name, const std::string& body) {
    const fs::path p = dir / ("pcrfuse_acceptance_" + name + ".json");
    std::ofstream(p) << body;
    return p.string();
  };
  const auto run = [](std::vector<std::string> args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    if (out_text) *out_text = out.str();
    return code;
  };

  const std::string weighted = write("weighted", R"({"frame": ["A", "B"], "sources": [
      {"name": "m1", "masses": {"A": 0.1, "B": 0.7, "A|B": 0.2}},
      {"name": "m2", "weight": 2, "masses": {"A": 0.4, "B": 0.1, "A|B": 0.5}}]})");
  std::string table;
  v.expect(run({"fuse", weighted, "--rule", "pcr5", "--precision", "6"}, &table) == 0,
           "fuse on the weighted document did not exit 0");
  std::map<std::string, std::string> printed;
  std::istringstream in(table);
  for (std::string key, value; in >> key >> value;) printed[key] = value;
  const std::map<std::string, double> want = {
      {"A", 0.345262}, {"B", 0.505522}, {"A|B", 0.149216}};
  for (const auto& [key, value] : want) {
    const auto it = printed.find(key);
    v.expect(it != printed.end(), "row " + key + " missing");
    if (it == printed.end()) continue;
    v.expect(it->second.size() == it->second.find('.') + 7, "row " + key + " not 6 decimals");
    v.near(std::stod(it->second), value, 5e-6, "printed " + key);
  }

  const std::string bad = write("badsum", R"({"frame": ["A", "B"], "sources": [
      {"name": "m1", "masses": {"A": 0.5, "B": 0.4}},
      {"name": "m2", "masses": {"A": 1}}]})");
  v.expect(run({"fuse", bad}) == 1, "mass sum 0.9 did not exit 1");

  const std::string thirteen = write("thirteen", R"({"frame": ["A", "B"], "sources": [
      {"name": "m1", "masses": {"A": 0.1, "B": 0.7, "A|B": 0.2}},
      {"name": "m2", "weight": 12, "masses": {"A": 0.4, "B": 0.1, "A|B": 0.5}}]})");
  v.expect(run({"fuse", thirteen, "--rule", "pcr5"}) == 2, "13-source expansion did not exit 2");
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"1  conjunctive tables", conjunctive_tables},
      {"2  three-source PCR5", three_source_pcr5},
      {"3  trace fidelity", trace_fidelity},
      {"4  two-source PCR5 (derived, erratum)", two_source_erratum},
      {"5  closed-form equivalence", closed_form_equivalence},
      {"6  oracle equivalence", oracle_equivalence},
      {"7  two-source PCR5 == PCR6", two_source_coincidence},
      {"8  importance weight invariance", importance_invariance},
      {"9  convergence profile", convergence_profile_check},
      {"10 CLI contract", cli_contract},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s%s%s\n", v.pass ? "PASS" : "FAIL", name.c_str(),
                v.pass ? "" : " -- ", v.detail.c_str());
    failures += v.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
