#include "wap/cli/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wap/analysis.hpp"
#include "wap/cli/plot.hpp"
#include "wap/cli/report.hpp"
#include "wap/deciders.hpp"
#include "wap/error.hpp"
#include "wap/graphic.hpp"
#include "wap/subshift.hpp"
#include "wap/word_spec.hpp"

namespace wap::cli {

namespace {

constexpr std::size_t kMaxListedPositions = 1000;
constexpr std::size_t kMaxSvgPrefix = 1'000'000;

struct Output {
  std::string path;  // empty: standard output
  ReportFormat format = ReportFormat::json;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary);
    if (!file) throw InputError("cannot write '" + path + "'");
    file << text;
    if (!file.flush()) throw InputError("cannot write '" + path + "'");
  }
  std::filesystem::rename(tmp, target);
}

Rational parse_slope(const std::string& text) {
  const Rational r = Rational::parse(text);
  if (r < Rational(0) || r > Rational(1)) {
    throw InputError("slope " + text + " outside [0, 1]");
  }
  return r;
}

// Farey fraction of order q_max closest to x; the smaller one wins ties.
Rational nearest_fraction(const Rational& x, std::int64_t q_max) {
  const auto fractions = farey_sequence(q_max);
  Rational best = fractions.front();
  Rational best_dist = x - best < Rational(0) ? best - x : x - best;
  for (const auto& f : fractions) {
    const Rational d = x - f < Rational(0) ? f - x : x - f;
    if (d < best_dist) {
      best = f;
      best_dist = d;
    }
  }
  return best;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  std::string spec;
  std::size_t prefix = 0;
  std::string out;
};

int run_generate(const GenerateArgs& args, std::ostream& out) {
  WordSpec spec = parse_word_spec(args.spec);
  const FiniteWord u = prefix(spec.stream, args.prefix);
  emit(u.str() + "\n", args.out, out);
  return kExitOk;
}

// ----------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string spec;
  std::size_t prefix = 100000;
  std::optional<std::string> slope;
  std::int64_t max_denominator = 8;
  std::size_t min_hits = 50;
  std::optional<std::size_t> max_gap;
  bool no_recency = false;
  bool require_witness = false;
  std::size_t max_witnesses = 10;
  std::size_t balance_window = 64;
  Output output;
};

Json certificates_of(const WordSpec& spec) {
  Json verdict{{"wap", "unknown"}, {"bounded_wap", "unknown"}, {"certificates", Json::array()}};
  if (!spec.morphism) return verdict;
  const Morphism& m = *spec.morphism;
  if (m.alphabet_size() != 2 || !m.is_uniform() || m.uniform_length() < 2) return verdict;
  const WapCertificate cert = decide_wap(m, spec.start);
  const BoundedWapVerdict bounded = decide_bounded_wap(m);
  verdict["wap"] = cert.wap ? "yes" : "no";
  verdict["bounded_wap"] = bounded.bounded_wap ? "yes" : "no";
  verdict["certificates"].push_back(to_json(cert));
  verdict["bounded"] = to_json(bounded);
  return verdict;
}

int run_analyze(const AnalyzeArgs& args, std::ostream& out) {
  WordSpec spec = parse_word_spec(args.spec);
  const FiniteWord u = prefix(spec.stream, args.prefix);
  if (u.empty()) throw InputError("analyze needs a non-empty prefix");
  const int sigma = u.alphabet_size();

  WitnessOptions options;
  options.prefix = u.size();
  options.max_denominator = args.max_denominator;
  options.min_hits = args.min_hits;
  options.max_gap = args.max_gap;
  options.recency = !args.no_recency;
  std::optional<Rational> slope;
  if (args.slope) {
    slope = parse_slope(*args.slope);
    if (sigma == 2) options.slope = slope;
  }
  const WitnessSearchResult search = wap_witness_search(u, options);

  Json report = make_report("analyze");
  report["word_spec"] = spec.text;
  report["prefix_length"] = u.size();
  report["alphabet_size"] = sigma;

  const ParikhVector counts = parikh(u);
  Json ratios = Json::array();
  for (int a = 0; a < sigma; ++a) {
    ratios.push_back(to_json(Rational(counts[static_cast<Letter>(a)],
                                      static_cast<std::int64_t>(u.size()))));
  }
  const OscillationReport osc = frequency_oscillation(finite_stream(u), u.size());
  Json low = Json::array();
  Json high = Json::array();
  for (int a = 0; a < sigma; ++a) {
    low.push_back(to_json(osc.low[static_cast<std::size_t>(a)]));
    high.push_back(to_json(osc.high[static_cast<std::size_t>(a)]));
  }
  report["frequencies"] = Json{{"counts", to_json(counts)},
                               {"ratios", ratios},
                               {"tail_window_begin", osc.window_begin},
                               {"tail_low", low},
                               {"tail_high", high}};

  if (!slope) {
    if (sigma == 2 && !search.witnesses.empty()) {
      slope = search.witnesses.front().slope();
    } else {
      slope = nearest_fraction(Rational(counts[0], static_cast<std::int64_t>(u.size())),
                               args.max_denominator);
    }
  }
  const DiscrepancyProfile profile = DiscrepancyProfile::compute(u, *slope);
  const WidthEstimate est = width(profile);
  report["discrepancy"] = Json{{"slope", to_json(*slope)},
                               {"focus", 0},
                               {"min", est.min},
                               {"max", est.max},
                               {"width", est.width()},
                               {"pigeonhole_bound", pigeonhole_bound(u.size(), est.width())}};

  Json witnesses = Json::array();
  for (std::size_t i = 0; i < search.witnesses.size() && i < args.max_witnesses; ++i) {
    const WitnessReport& w = search.witnesses[i];
    Json item = to_json(w);
    if (sigma == 2 && w.slope() == *slope) {
      const LineHits hits = line_hits(profile, w.level());
      const std::size_t shown = std::min(hits.positions.size(), kMaxListedPositions);
      item["positions"] = std::vector<std::size_t>(hits.positions.begin(),
                                                   hits.positions.begin() + shown);
      item["positions_truncated"] = shown < hits.positions.size();
    }
    witnesses.push_back(std::move(item));
  }
  report["witnesses"] = witnesses;
  report["witness_count"] = search.witnesses.size();
  report["witness_tag"] = to_string(search.tag());

  const std::size_t window = std::min(args.balance_window, u.size());
  if (window >= 1) {
    const BalanceReport balance = balance_profile(u, window);
    report["balance"] = Json{{"max_window", balance.max_window},
                             {"constant", balance.constant},
                             {"constant_window", balance.constant_window}};
  }
  Json verdicts = certificates_of(spec);
  verdicts["witness_tag"] = to_string(search.tag());
  report["verdicts"] = verdicts;
  report["budgets"] = Json{{"prefix_requested", args.prefix},
                           {"prefix_scanned", u.size()},
                           {"max_denominator", args.max_denominator},
                           {"min_hits", args.min_hits},
                           {"max_gap", args.max_gap ? Json(*args.max_gap) : Json("10q")},
                           {"recency", options.recency},
                           {"balance_window", window}};

  emit(render(report, args.output.format), args.output.path, out);
  if (args.require_witness && search.tag() == WitnessTag::none_in_budget) {
    return kExitBudget;
  }
  return kExitOk;
}

// ------------------------------------------------------------------ decide

struct DecideArgs {
  std::string img0;
  std::string img1;
  int start = 0;
  Output output;
};

int run_decide(const DecideArgs& args, std::ostream& out) {
  if (args.start < 0 || args.start > 1) throw InputError("--start must be 0 or 1");
  const Morphism m({FiniteWord::parse(args.img0, 2), FiniteWord::parse(args.img1, 2)});
  const WapCertificate cert = decide_wap(m, static_cast<Letter>(args.start));
  const BoundedWapVerdict bounded = decide_bounded_wap(m);
  const MorphismMatrix mm = MorphismMatrix::of(m);
  Json report = make_report("decide");
  report["morphism"] = m.str();
  report["start"] = args.start;
  report["matrix"] = to_json(mm);
  report["frequency0"] = to_json(mm.frequency0());
  report["wap"] = cert.wap ? "yes" : "no";
  report["condition"] = to_string(cert.condition);
  report["bounded_wap"] = bounded.bounded_wap ? "yes" : "no";
  report["reason"] = to_string(bounded.reason);
  report["certificate"] = to_json(cert);
  report["bounded"] = to_json(bounded);
  emit(render(report, args.output.format), args.output.path, out);
  return kExitOk;
}

// ------------------------------------------------------------------ census

struct CensusArgs {
  std::size_t length = 2;
  std::size_t prefix = 0;
  std::size_t decay_prefix = 0;
  std::size_t min_hits = 50;
  unsigned threads = 0;
  std::string out;
};

int run_census(const CensusArgs& args, std::ostream& out) {
  CensusOptions options;
  options.k = args.length;
  options.prefix = args.prefix;
  options.decay_prefix = args.decay_prefix;
  options.min_hits = args.min_hits;
  options.threads = args.threads;
  const auto rows = enumerate_census(options);
  std::ostringstream csv;
  write_census_csv(csv, rows);
  emit(csv.str(), args.out, out);
  return kExitOk;
}

// ------------------------------------------------------------------- orbit

struct OrbitArgs {
  std::string spec;
  std::optional<std::string> target;
  std::size_t depth = 5;
  std::size_t budget = 100000;
  std::size_t max_work = 50'000'000;
  bool declare_irrational = false;
  Output output;
};

int run_orbit(const OrbitArgs& args, std::ostream& out) {
  WordSpec spec = parse_word_spec(args.spec);
  Json report = make_report("orbit");
  report["word_spec"] = spec.text;
  if (args.declare_irrational) {
    report["annotation"] =
        "declared irrational uniform frequency: no point of the orbit closure is WAP";
    report["depth_reached"] = 0;
    emit(render(report, args.output.format), args.output.path, out);
    return kExitOk;
  }
  if (!args.target) throw InputError("orbit needs --target p/q");
  const Rational target = Rational::parse(*args.target);
  OrbitOptions options;
  options.depth = args.depth;
  options.budget = args.budget;
  options.max_work = args.max_work;
  const OrbitResult result = build_wap_orbit_point(spec.stream, target, options);
  const OrbitBuilderState& state = result.state;

  report["target"] = to_json(target);
  report["depth_requested"] = args.depth;
  report["depth_reached"] = state.depth_reached;
  report["status"] = to_string(state.status);
  Json levels = Json::array();
  for (const auto& level : state.levels) levels.push_back(to_json(level));
  report["levels"] = levels;
  report["next_relation"] = to_string(state.next_relation);
  report["constructed_length"] = result.constructed.size();
  report["constructed"] = result.constructed.str();
  report["witness"] = Json{{"slope", to_json(target)},
                           {"level", result.level},
                           {"hits", result.hits.size()},
                           {"positions", result.hits}};
  report["budgets"] = Json{{"budget", state.budget},
                           {"max_work", args.max_work},
                           {"work", state.work}};
  emit(render(report, args.output.format), args.output.path, out);
  return state.status == OrbitStatus::complete ? kExitOk : kExitBudget;
}

// -------------------------------------------------------------------- plot

struct PlotArgs {
  std::string spec;
  std::size_t prefix = 64;
  std::string format = "ascii";
  std::string vectors = "1,-1/1,1";
  std::size_t columns = 100;
  std::size_t rows = 30;
  std::string out;
};

int run_plot(const PlotArgs& args, std::ostream& out) {
  const StepVectors vectors = parse_vectors(args.vectors);
  if (args.format == "svg" && args.prefix > kMaxSvgPrefix) {
    throw InputError("svg plots are limited to 1000000 letters");
  }
  WordSpec spec = parse_word_spec(args.spec);
  if (spec.stream.alphabet_size() != 2) throw InputError("plot needs a binary word");
  const FiniteWord u = prefix(spec.stream, args.prefix);
  const GraphicPath path = graphic_points(u, vectors);
  const std::string text = args.format == "svg"
                               ? render_svg(path)
                               : render_ascii(path, Viewport{args.columns, args.rows});
  emit(text, args.out, out);
  return kExitOk;
}

void add_output(CLI::App* cmd, Output& output) {
  cmd->add_option("--out", output.path, "Write the report to this file");
  cmd->add_option_function<std::string>(
         "--report",
         [&output](const std::string& v) {
           output.format = v == "text" ? ReportFormat::text : ReportFormat::json;
         },
         "Report format")
      ->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak abelian periodicity toolkit", "wap"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Print a prefix of a word");
  generate->add_option("spec", gen.spec, "Word spec")->required();
  generate->add_option("--prefix", gen.prefix, "Number of letters")->required();
  generate->add_option("--out", gen.out, "Output file");

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Frequencies, discrepancy and witnesses");
  analyze->add_option("spec", an.spec, "Word spec")->required();
  analyze->add_option("--prefix", an.prefix, "Prefix length N");
  analyze->add_option("--slope", an.slope, "Restrict to slope p/q");
  analyze->add_option("--max-denominator", an.max_denominator, "Largest denominator Q")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--min-hits", an.min_hits, "Witness threshold H");
  analyze->add_option("--max-gap", an.max_gap, "Bounded-witness gap G");
  analyze->add_flag("--no-recency", an.no_recency, "Disable the span filter");
  analyze->add_flag("--require-witness", an.require_witness,
                    "Exit 3 when no witness is found");
  analyze->add_option("--max-witnesses", an.max_witnesses, "Witnesses listed");
  analyze->add_option("--balance-window", an.balance_window, "Balance window L");
  add_output(analyze, an.output);

  DecideArgs de;
  auto* decide = app.add_subcommand("decide", "Exact WAP verdicts for a uniform morphism");
  decide->add_option("img0", de.img0, "Image of 0")->required();
  decide->add_option("img1", de.img1, "Image of 1")->required();
  decide->add_option("--start", de.start, "Start letter of the fixed point");
  add_output(decide, de.output);

  CensusArgs ce;
  auto* census = app.add_subcommand("census", "Verdicts for every morphism of length k");
  census->add_option("--length", ce.length, "Image length k")->required();
  census->add_option("--prefix", ce.prefix, "Empirical check prefix (0: off)");
  census->add_option("--decay-prefix", ce.decay_prefix, "Decay check prefix");
  census->add_option("--min-hits", ce.min_hits, "Hits required for a WAP row");
  census->add_option("--threads", ce.threads, "Worker threads (0: all)");
  census->add_option("--out", ce.out, "CSV output file");

  OrbitArgs ob;
  auto* orbit = app.add_subcommand("orbit", "Build a WAP point of the orbit closure");
  orbit->add_option("spec", ob.spec, "Word spec")->required();
  orbit->add_option("--target", ob.target, "Target frequency p/q");
  orbit->add_option("--depth", ob.depth, "Nesting depth");
  orbit->add_option("--budget", ob.budget, "Prefix scanned");
  orbit->add_option("--max-work", ob.max_work, "Candidate factors examined at most");
  orbit->add_flag("--declare-irrational", ob.declare_irrational,
                  "The word's uniform frequency is irrational");
  add_output(orbit, ob.output);

  PlotArgs pl;
  auto* plot = app.add_subcommand("plot", "Draw the graphic");
  plot->add_option("spec", pl.spec, "Word spec")->required();
  plot->add_option("--prefix", pl.prefix, "Number of letters");
  plot->add_option("--format", pl.format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  plot->add_option("--vectors", pl.vectors, "Steps bx,by/cx,cy");
  plot->add_option("--columns", pl.columns, "ASCII viewport width");
  plot->add_option("--rows", pl.rows, "ASCII viewport height");
  plot->add_option("--out", pl.out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "wap: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*generate) return run_generate(gen, out);
    if (*analyze) return run_analyze(an, out);
    if (*decide) return run_decide(de, out);
    if (*census) return run_census(ce, out);
    if (*orbit) return run_orbit(ob, out);
    if (*plot) return run_plot(pl, out);
  } catch (const BudgetError& e) {
    err << "wap: budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InputError& e) {
    err << "wap: invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    err << "wap: invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "wap: invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "wap: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace wap::cli
