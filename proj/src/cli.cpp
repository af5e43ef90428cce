#include "hypermod/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "hypermod/arrangement.hpp"
#include "hypermod/extension.hpp"
#include "hypermod/matio.hpp"
#include "hypermod/modularity.hpp"
#include "hypermod/realize.hpp"

namespace hypermod::cli {

void Report::render(std::ostream& os, bool machine) const {
  for (const auto& [key, value] : entries_) os << key << (machine ? "=" : ": ") << value << '\n';
}

namespace {

/// A command-line usage or input problem; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

std::string set_text(const ElementSet& s) { return s.to_string(); }

ElementSet parse_element_list(const std::string& text) {
  ElementSet s;
  std::string token;
  std::istringstream in(text);
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw UsageError("bad element '" + token + "' in list '" + text + "'");
    if (v >= ElementSet::kCapacity) throw UsageError("element " + token + " out of range");
    s.insert(static_cast<Element>(v));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return s;
}

MatroidDocument load(const std::string& path, bool verify = true) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  try {
    return parse_matroid_document(text, ParseOptions{verify});
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void add_profile(Report& report, const std::string& key, const Matroid& m) {
  report.add(key, join(profile(m).counts));
}

void emit_document(const std::optional<std::string>& path, const std::string& text, Report& report,
                   std::ostream& out) {
  if (path) {
    write_file(*path, text);
    report.add("output", *path);
  } else {
    out << text;
  }
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
  std::string kind;
  std::int64_t q = 2;
  int r = 0;
  std::size_t n = 0;
  std::string deleted;
  std::optional<std::string> output;
  std::optional<std::string> points_output;
};

CommandOutcome cmd_generate(const GenerateArgs& args, std::ostream& out) {
  CommandOutcome outcome;
  std::optional<Matroid> m;
  std::string name;
  std::optional<PointConfig> points;
  if (args.kind == "pg3") {
    if (!is_prime(args.q)) throw UsageError("q must be prime, got " + std::to_string(args.q));
    points = pg3_points(args.q);
    m = matroid_from_points(*points);
    name = "PG3_" + std::to_string(args.q);
  } else if (args.kind == "uniform") {
    if (args.r < 0 || static_cast<std::size_t>(args.r) > args.n) {
      throw UsageError("uniform needs 0 <= r <= n");
    }
    m = uniform(args.r, args.n);
    name = "U" + std::to_string(args.r) + "_" + std::to_string(args.n);
  } else if (args.kind == "vamos") {
    m = vamos();
    name = "Vamos";
  } else {
    throw UsageError("unknown kind '" + args.kind + "' (pg3, uniform, vamos)");
  }

  if (!args.deleted.empty()) {
    const ElementSet removed = parse_element_list(args.deleted);
    if (!removed.all_below(m->ground_size())) throw UsageError("deleted element out of range");
    m = deletion(*m, removed).matroid;
    if (points) {
      PointConfig kept{points->prime, points->dim, {}};
      for (Element e = 0; e < points->points.size(); ++e) {
        if (!removed.contains(e)) kept.points.push_back(points->points[e]);
      }
      points = kept;
    }
    for (Element e : removed.members()) name += "_del" + std::to_string(e);
  }

  outcome.report.add("name", name);
  outcome.report.add("ground", std::to_string(m->ground_size()));
  outcome.report.add("rank", std::to_string(m->rank()));
  add_profile(outcome.report, "profile", *m);
  emit_document(args.output, serialize_matroid(*m, name), outcome.report, out);
  if (args.points_output) {
    if (!points) throw UsageError("--points is only available for pg3");
    write_file(*args.points_output, serialize_points(*points, name));
    outcome.report.add("points_output", *args.points_output);
  }
  return outcome;
}

CommandOutcome cmd_analyze(const std::string& path) {
  const MatroidDocument doc = load(path);
  const Matroid& m = doc.matroid;
  CommandOutcome outcome;
  Report& r = outcome.report;
  r.add("name", doc.name);
  r.add("ground", std::to_string(m.ground_size()));
  r.add("rank", std::to_string(m.rank()));
  add_profile(r, "profile", m);
  r.add("kappa", std::to_string(component_count(m)));
  r.add("loopless", yes_no(m.is_loopless()));
  if (m.rank() >= 3) {
    const auto witness = hypermodularity_witness(m);
    r.add("hypermodular", yes_no(!witness));
    if (witness) r.add("hypermodular_witness", set_text(witness->first) + " " + set_text(witness->second));
  } else {
    r.add("hypermodular", "n/a");
  }
  r.add("modular", yes_no(is_modular(m)));
  const DefectReport defects = total_modular_defect(m);
  r.add("total_defect", std::to_string(defects.total));
  r.add("defect_pairs", std::to_string(defects.pair_defects.size()));
  r.add("disjoint_flags", std::to_string(defects.disjoint_flags.size()));
  return outcome;
}

void add_context(Report& r, const ExtensionContext& ctx) {
  r.add("flag_rank3", set_text(ctx.rank3_flat));
  r.add("flag_rank2", set_text(ctx.rank2_flat));
  r.add("n", std::to_string(ctx.n()));
  r.add("transversals", std::to_string(ctx.transversals.size()));
  r.add("marked_lines", std::to_string(ctx.marked_lines.size()));
  r.add("marked_planes", std::to_string(ctx.marked_planes.size()));
}

void add_failure(Report& r, const std::string& prefix, const FlagFailure& f) {
  r.add(prefix + "flag", set_text(f.flag.first) + " " + set_text(f.flag.second));
  r.add(prefix + "lines", set_text(f.lines.first) + " " + set_text(f.lines.second));
  r.add(prefix + "join", set_text(f.join));
}

void require_extendable_input(const Matroid& m) {
  if (m.rank() != 4) throw UsageError("extension needs rank 4, got rank " + std::to_string(m.rank()));
  if (!m.is_loopless()) throw UsageError("extension needs a loopless matroid");
  if (!is_hypermodular(m)) throw UsageError("extension needs a hypermodular matroid");
}

struct ExtendArgs {
  std::string path;
  std::string rank3;
  std::string rank2;
  std::optional<std::string> output;
};

CommandOutcome cmd_extend(const ExtendArgs& args, std::ostream& out) {
  const MatroidDocument doc = load(args.path);
  const Matroid& m = doc.matroid;
  require_extendable_input(m);
  CommandOutcome outcome;
  Report& r = outcome.report;

  std::optional<ExtensionContext> ctx;
  if (!args.rank3.empty() || !args.rank2.empty()) {
    if (args.rank3.empty() || args.rank2.empty()) throw UsageError("--f and --l go together");
    ctx = build_context(m, parse_element_list(args.rank3), parse_element_list(args.rank2));
    const auto verdict = criterion_holds(m, *ctx);
    add_context(r, *ctx);
    r.add("criterion", yes_no(verdict.holds));
    if (!verdict.holds) {
      add_failure(r, "witness_", {FlatPair{ctx->rank3_flat, ctx->rank2_flat}, *verdict.witness,
                                  verdict.witness_join});
      outcome.exit_code = kPropertyFalse;
      return outcome;
    }
  } else {
    if (disjoint_rank32_pairs(m).empty()) {
      r.add("result", "no disjoint flag; the matroid is modular");
      outcome.exit_code = kPropertyFalse;
      return outcome;
    }
    FlagSearch search = find_extendable_flag(m);
    r.add("flags_tried", std::to_string(search.flags_tried));
    if (!search.context) {
      r.add("criterion", "false");
      for (std::size_t i = 0; i < search.failures.size(); ++i) {
        add_failure(r, "witness_" + std::to_string(i + 1) + "_", search.failures[i]);
      }
      outcome.exit_code = kPropertyFalse;
      return outcome;
    }
    ctx = std::move(search.context);
    add_context(r, *ctx);
    r.add("criterion", "true");
  }

  const ExtensionResult ext = extend_once(m, *ctx);
  r.add("new_element", std::to_string(ext.new_element));
  r.add("defect", std::to_string(ext.defect_before) + " -> " + std::to_string(ext.defect_after));
  add_profile(r, "profile", ext.extended);
  r.add("modular", yes_no(is_modular(ext.extended)));
  emit_document(args.output, serialize_matroid(ext.extended, doc.name + "_ext"), r, out);
  return outcome;
}

CommandOutcome cmd_complete(const std::string& path, const std::optional<std::string>& output,
                            std::optional<std::size_t> max_steps, std::ostream& out) {
  const MatroidDocument doc = load(path);
  require_extendable_input(doc.matroid);
  CommandOutcome outcome;
  Report& r = outcome.report;
  std::optional<CompletionResult> result;
  try {
    result = complete_to_modular(doc.matroid, max_steps);
  } catch (const std::runtime_error& e) {
    r.add("completed", "false");
    r.add("error", e.what());
    outcome.exit_code = kPropertyFalse;
    return outcome;
  }
  r.add("completed", yes_no(result->completed));
  r.add("steps", std::to_string(result->steps.size()));
  for (std::size_t i = 0; i < result->steps.size(); ++i) {
    const auto& s = result->steps[i];
    const std::string prefix = "step_" + std::to_string(i + 1) + "_";
    r.add(prefix + "flag", set_text(s.flag.first) + " " + set_text(s.flag.second));
    r.add(prefix + "new_element", std::to_string(s.new_element));
    r.add(prefix + "defect", std::to_string(s.defect_before) + " -> " + std::to_string(s.defect_after));
  }
  add_profile(r, "final_profile", result->matroid);
  if (!result->completed) {
    for (std::size_t i = 0; i < result->dead_end.size(); ++i) {
      add_failure(r, "witness_" + std::to_string(i + 1) + "_", result->dead_end[i]);
    }
    outcome.exit_code = kPropertyFalse;
    return outcome;
  }
  emit_document(output, serialize_matroid(result->matroid, doc.name + "_modular"), r, out);
  return outcome;
}

void add_violations(Report& r, const std::string& prefix, const AxiomReport& report) {
  r.add(prefix, report.passed() ? "pass" : "fail");
  r.add(prefix + "_violations", std::to_string(report.total_violations));
  for (std::size_t i = 0; i < report.violations.size() && i < 8; ++i) {
    const auto& v = report.violations[i];
    std::string w;
    for (const auto& s : v.witnesses) w += " " + set_text(s);
    r.add(prefix + "_violation_" + std::to_string(i + 1), v.axiom + ":" + w + " (" + v.explanation + ")");
  }
}

CommandOutcome cmd_verify(const std::string& path, bool exhaustive, std::uint64_t seed,
                          std::size_t trials) {
  const MatroidDocument doc = load(path, false);
  const Matroid& m = doc.matroid;
  if (exhaustive && m.ground_size() > kExhaustiveRankLimit) {
    throw UsageError("--exhaustive needs at most " + std::to_string(kExhaustiveRankLimit) + " elements");
  }
  CommandOutcome outcome;
  Report& r = outcome.report;
  r.add("name", doc.name);
  const AxiomReport flats = verify_flat_axioms(m);
  add_violations(r, "flat_axioms", flats);
  const RankCheckMode mode = exhaustive ? RankCheckMode::exhaustive() : RankCheckMode::sampled(seed, trials);
  r.add("rank_mode", exhaustive ? "exhaustive" : "sampled seed=" + std::to_string(seed) +
                                                     " trials=" + std::to_string(trials));
  const AxiomReport ranks = verify_rank_axioms(m, mode);
  add_violations(r, "rank_axioms", ranks);
  if (!flats.passed() || !ranks.passed()) outcome.exit_code = kPropertyFalse;
  return outcome;
}

CommandOutcome cmd_iso(const std::string& a, const std::string& b) {
  const Matroid m1 = load(a).matroid;
  const Matroid m2 = load(b).matroid;
  CommandOutcome outcome;
  std::optional<std::vector<Element>> phi;
  try {
    phi = is_isomorphic(m1, m2);
  } catch (const std::length_error& e) {
    throw UsageError(e.what());
  }
  outcome.report.add("isomorphic", yes_no(phi.has_value()));
  if (phi) {
    std::ostringstream os;
    for (std::size_t i = 0; i < phi->size(); ++i) os << (i ? " " : "") << i << "->" << (*phi)[i];
    outcome.report.add("bijection", os.str());
  } else {
    outcome.exit_code = kPropertyFalse;
  }
  return outcome;
}

CommandOutcome cmd_arrangement(const std::string& path, std::uint64_t seed, std::size_t samples) {
  const MatroidDocument doc = load(path);
  const Matroid& m = doc.matroid;
  CommandOutcome outcome;
  Report& r = outcome.report;
  r.add("name", doc.name);
  r.add("labeled_hyperplanes", std::to_string(labeled_hyperplanes(m).size()));
  const auto dims = subspaces_by_dimension(m);
  for (std::size_t d = 0; d < dims.size(); ++d) {
    r.add("sdim_" + std::to_string(d), std::to_string(dims[d].size()));
  }
  if (m.rank() != 4 || !m.is_loopless()) {
    r.add("classification", "n/a (needs a loopless rank-4 matroid)");
    return outcome;
  }
  const Classification c = classify(m);
  r.add("points", std::to_string(c.points.size()));
  r.add("lines", std::to_string(c.lines.size()));
  r.add("planes", std::to_string(c.planes.size()));
  const AxiomReport lines = check_line_connectivity(m);
  add_violations(r, "line_connectivity", lines);
  r.add("hypermodular", yes_no(is_hypermodular(m)));

  // Bezout spot checks on random tuples of distinct proper flats.
  std::vector<ElementSet> proper;
  for (int k = 0; k < m.rank(); ++k) {
    for (const auto& f : m.flats_of_rank(k)) proper.push_back(f);
  }
  std::mt19937_64 rng(seed);
  std::size_t agree = 0;
  std::size_t meets = 0;
  for (std::size_t t = 0; t < samples; ++t) {
    std::uniform_int_distribution<std::size_t> size_dist(2, 3);
    std::uniform_int_distribution<std::size_t> pick(0, proper.size() - 1);
    const std::size_t k = std::min(size_dist(rng), proper.size());
    std::vector<ElementSet> tuple;
    while (tuple.size() < k) {
      const ElementSet& f = proper[pick(rng)];
      if (std::find(tuple.begin(), tuple.end(), f) == tuple.end()) tuple.push_back(f);
    }
    ElementSet all;
    for (const auto& f : tuple) all |= f;
    const bool meet = meet_at_point(m, tuple);
    meets += meet ? 1 : 0;
    agree += (meet == (m.rank_of(all) == m.rank() - 1)) ? 1 : 0;
  }
  r.add("bezout_samples", std::to_string(samples));
  r.add("bezout_meet_at_point", std::to_string(meets));
  r.add("bezout_agree", std::to_string(agree));
  if (agree != samples) outcome.exit_code = kInternal;
  return outcome;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matroids by lattice of flats: modularity, hypermodularity, rank-4 modular extension"};
  app.require_subcommand(1);
  app.fallthrough();  // inherited by subcommands, so global flags work anywhere
  bool machine = false;
  app.add_flag("--machine", machine, "Print key=value lines instead of the human report");

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a fixture matroid (.mat)");
  generate->add_option("kind", gen.kind, "pg3 | uniform | vamos")->required();
  generate->add_option("--q", gen.q, "Field order for pg3 (prime)");
  generate->add_option("--r", gen.r, "Rank for uniform");
  generate->add_option("--n", gen.n, "Ground size for uniform");
  generate->add_option("--delete", gen.deleted, "Elements to delete, e.g. 0,5");
  generate->add_option("-o,--output", gen.output, "Output .mat path (default stdout)");
  generate->add_option("--points", gen.points_output, "Also write the pg3 point configuration (.pts)");

  std::string path;
  auto* analyze = app.add_subcommand("analyze", "Rank, profile, connectivity and modularity report");
  analyze->add_option("path", path, "Matroid file")->required();

  ExtendArgs ext;
  auto* extend = app.add_subcommand("extend", "One modular-defect-reducing single-element extension");
  extend->add_option("path", ext.path, "Matroid file")->required();
  extend->add_option("--f", ext.rank3, "Rank-3 flat of the flag, e.g. 0,1,2");
  extend->add_option("--l", ext.rank2, "Rank-2 flat of the flag");
  extend->add_flag("--auto", "Pick the first extendable flag (default)");
  extend->add_option("-o,--output", ext.output, "Output .mat path");

  std::optional<std::string> complete_out;
  std::optional<std::size_t> max_steps;
  auto* complete = app.add_subcommand("complete", "Extend repeatedly until modular");
  complete->add_option("path", path, "Matroid file")->required();
  complete->add_option("-o,--output", complete_out, "Output .mat path");
  complete->add_option("--max-steps", max_steps, "Step guard (default: initial total defect + 1)");

  bool exhaustive = false;
  std::uint64_t seed = 1;
  std::size_t trials = 10000;
  auto* verify = app.add_subcommand("verify", "Check flat and rank axioms");
  verify->add_option("path", path, "Matroid file")->required();
  verify->add_flag("--exhaustive", exhaustive, "Exhaustive rank checks (at most 14 elements)");
  verify->add_option("--seed", seed, "Seed for sampled rank checks");
  verify->add_option("--trials", trials, "Sampled subset pairs");

  std::string other;
  auto* iso = app.add_subcommand("iso", "Search for an isomorphism between two matroids");
  iso->add_option("a", path, "First matroid")->required();
  iso->add_option("b", other, "Second matroid")->required();

  std::size_t samples = 64;
  auto* arrangement = app.add_subcommand("arrangement", "Hyperplane-arrangement view and Bezout checks");
  arrangement->add_option("path", path, "Matroid file")->required();
  arrangement->add_option("--seed", seed, "Seed for Bezout spot checks");
  arrangement->add_option("--samples", samples, "Number of Bezout spot checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    CommandOutcome outcome;
    if (*generate) {
      outcome = cmd_generate(gen, out);
    } else if (*analyze) {
      outcome = cmd_analyze(path);
    } else if (*extend) {
      outcome = cmd_extend(ext, out);
    } else if (*complete) {
      outcome = cmd_complete(path, complete_out, max_steps, out);
    } else if (*verify) {
      outcome = cmd_verify(path, exhaustive, seed, trials);
    } else if (*iso) {
      outcome = cmd_iso(path, other);
    } else if (*arrangement) {
      outcome = cmd_arrangement(path, seed, samples);
    }
    // Reports go to stderr when the document itself went to stdout.
    const bool document_on_stdout = (*generate && !gen.output) || (*extend && !ext.output && outcome.exit_code == 0) ||
                                    (*complete && !complete_out && outcome.exit_code == 0);
    outcome.report.render(document_on_stdout ? err : out, machine);
    return outcome.exit_code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace hypermod::cli
