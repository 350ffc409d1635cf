#include <algorithm>
#include <ostream>
#include <variant>

#include "CLI11.hpp"
#include "pcrfuse/cli.hpp"
#include "pcrfuse/conjunctive.hpp"
#include "pcrfuse/error.hpp"
#include "pcrfuse/importance.hpp"
#include "pcrfuse/pcr.hpp"

namespace pcrfuse::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<WeightedSource> weighted_sources(const InputDocument& doc) {
  std::vector<WeightedSource> out;
  out.reserve(doc.sources.size());
  for (const auto& s : doc.sources) out.push_back({s.mass, s.weight});
  return out;
}

/// "m2#1", "m2#2", ... for a source repeated after gcd reduction, the bare
/// name otherwise.
std::vector<std::string> expanded_labels(const InputDocument& doc) {
  std::vector<std::uint64_t> raw;
  for (const auto& s : doc.sources) raw.push_back(s.weight);
  const auto weights = reduce_weights(raw);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < doc.sources.size(); ++i) {
    for (std::uint64_t r = 0; r < weights[i]; ++r) {
      labels.push_back(weights[i] == 1 ? doc.sources[i].name
                                       : doc.sources[i].name + "#" + std::to_string(r + 1));
    }
  }
  return labels;
}

Report report_of(std::string rule, const Frame& frame, std::span<const MassEntry> masses,
                 std::optional<double> conflict = std::nullopt) {
  Report r{std::move(rule), {}, conflict};
  for (const auto& e : masses) r.masses.emplace_back(frame.label(e.set), e.mass);
  return r;
}

void cmd_fuse(const InputDocument& doc, const std::string& rule, int precision,
              const std::string& format, std::ostream& out) {
  const auto sources = weighted_sources(doc);
  Report report;
  if (rule == "conjunctive" || rule == "dempster") {
    const auto result =
        std::get<ConjunctiveResult>(fuse_with_importance(sources, FusionRule::conjunctive));
    if (rule == "conjunctive") {
      report = report_of(rule, doc.frame, result.masses, result.conflict);
    } else {
      const MassFunction normalized = dempster_normalize(result);
      report = report_of(rule, doc.frame, normalized.entries());
    }
  } else {
    const FusionRule r = rule == "pcr5" ? FusionRule::pcr5 : FusionRule::pcr6;
    const auto fused = std::get<MassFunction>(fuse_with_importance(sources, r));
    report = report_of(rule, doc.frame, fused.entries());
  }
  out << (format == "json" ? render_json(report, precision)
                           : render_table(report, precision));
}

std::string join_weights(const Frame& frame, std::span<const MassEntry> items,
                         int precision) {
  std::string s;
  for (const auto& e : items) {
    if (!s.empty()) s += ' ';
    s += frame.label(e.set) + '=' + format_fixed(e.mass, precision);
  }
  return s;
}

void cmd_trace(const InputDocument& doc, PcrRule rule, int precision, std::ostream& out) {
  const auto flat = expand_weighted(weighted_sources(doc));
  const auto labels = expanded_labels(doc);
  const RedistributionTrace tr = trace(flat, rule);
  const Frame& frame = doc.frame;
  const auto fix = [&](double v) { return format_fixed(v, precision); };

  out << "rule " << to_string(rule) << ", " << flat.size() << " sources: ";
  for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? " " : "") << labels[i];
  out << '\n';

  if (tr.entries.empty()) {
    out << "no conflicting tuples\n";
    for (const auto& e : tr.conjunctive.masses) {
      out << frame.label(e.set) << ' ' << fix(e.mass) << '\n';
    }
    return;
  }

  for (std::size_t n = 0; n < tr.entries.size(); ++n) {
    const TraceEntry& entry = tr.entries[n];
    out << "\ntuple " << n + 1 << ':';
    for (const auto& m : entry.tuple.members) {
      out << ' ' << labels[m.source] << '=' << frame.label(m.set) << '(' << fix(m.mass)
          << ')';
    }
    double weight_sum = 0.0;
    for (const auto& w : entry.weights) weight_sum += w.mass;
    out << "\n  product " << fix(entry.tuple.product) << '\n'
        << "  weights " << join_weights(frame, entry.weights, precision) << " (sum "
        << fix(weight_sum) << ")\n"
        << "  shares  " << join_weights(frame, entry.shares.shares, precision) << '\n';
  }

  out << "\n" << tr.entries.size() << " conflicting tuples, total conflict "
      << fix(tr.conjunctive.conflict) << '\n'
      << "set conjunctive redistributed fused\n";
  std::vector<FocalSet> sets;
  for (const auto& e : tr.conjunctive.masses) sets.push_back(e.set);
  for (const auto& e : tr.fused.entries()) sets.push_back(e.set);
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  for (FocalSet s : sets) {
    out << frame.label(s) << ' ' << fix(tr.conjunctive.mass(s)) << ' '
        << fix(tr.redistributed(s)) << ' ' << fix(tr.fused.mass(s)) << '\n';
  }
}

void cmd_converge(const InputDocument& doc, PcrRule rule, std::size_t k_max, int precision,
                  std::ostream& out) {
  if (doc.sources.size() != 2) {
    throw UsageError("converge needs exactly two sources (base, repeated), got " +
                     std::to_string(doc.sources.size()));
  }
  const MassFunction& repeated = doc.sources[1].mass;
  const auto profile = convergence_profile(doc.sources[0].mass, repeated, rule, k_max);

  std::vector<FocalSet> sets;
  for (const auto& e : repeated.entries()) sets.push_back(e.set);
  for (const auto& p : profile) {
    for (const auto& e : p.fused.entries()) sets.push_back(e.set);
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  out << "k distance";
  for (FocalSet s : sets) out << ' ' << doc.frame.label(s);
  out << '\n';
  for (const auto& p : profile) {
    out << p.k << ' ' << format_fixed(p.distance, precision);
    for (FocalSet s : sets) out << ' ' << format_fixed(p.fused.mass(s), precision);
    out << '\n';
  }
}

PcrRule pcr_rule(const std::string& name) {
  return name == "pcr6" ? PcrRule::pcr6 : PcrRule::pcr5;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pcrfuse: belief-function fusion with proportional conflict redistribution"};
  app.require_subcommand(1);

  std::string input;
  std::string rule = "pcr5";
  std::string format = "table";
  int precision = 6;
  std::size_t k_max = 5;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "JSON input document")->required();
    cmd->add_option("--precision", precision, "decimals printed (default 6)")
        ->check(CLI::Range(0, 15));
  };

  auto* fuse = app.add_subcommand("fuse", "fuse the document's sources, honoring weights");
  add_common(fuse);
  fuse->add_option("--rule", rule,
                   "conjunctive | dempster | pcr5 | pcr6 (default pcr5); dempster is the "
                   "classical normalized baseline, not a PCR rule")
      ->check(CLI::IsMember({"conjunctive", "dempster", "pcr5", "pcr6"}));
  fuse->add_option("--format", format, "table | json (default table)")
      ->check(CLI::IsMember({"table", "json"}));

  auto* trace_cmd = app.add_subcommand("trace", "print every conflicting tuple and its shares");
  add_common(trace_cmd);
  trace_cmd->add_option("--rule", rule, "pcr5 | pcr6 (default pcr5)")
      ->check(CLI::IsMember({"pcr5", "pcr6"}));

  auto* converge = app.add_subcommand(
      "converge", "fuse the first source with the second repeated k = 1..kmax times");
  add_common(converge);
  converge->add_option("--rule", rule, "pcr5 | pcr6 (default pcr5)")
      ->check(CLI::IsMember({"pcr5", "pcr6"}));
  converge->add_option("--kmax", k_max, "largest repetition count (default 5)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kConstraintError;
  }

  try {
    const InputDocument doc = load_document(input);
    if (fuse->parsed()) {
      cmd_fuse(doc, rule, precision, format, out);
    } else if (trace_cmd->parsed()) {
      cmd_trace(doc, pcr_rule(rule), precision, out);
    } else {
      cmd_converge(doc, pcr_rule(rule), k_max, precision, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kConstraintError;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kConstraintError;
  }
  return kSuccess;
}

}  // namespace pcrfuse::cli
