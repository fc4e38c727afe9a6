// permsimple: command-line surface over the permutation-structure library.
// Exit codes: 0 success, 1 usage error, 2 invalid permutation or domain
// precondition, 3 guard exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permsimple/classify.hpp"
#include "permsimple/essential.hpp"
#include "permsimple/enumerate.hpp"
#include "permsimple/intervals.hpp"
#include "permsimple/json_io.hpp"
#include "permsimple/plot.hpp"
#include "permsimple/stats.hpp"

namespace {

using nlohmann::json;
using namespace permsimple;

std::string window_text(const IntervalWindow& w) {
  std::ostringstream os;
  os << "[" << w.i << ", " << w.j << "] values " << w.vmin << ".." << w.vmax;
  return os.str();
}

std::string entry_text(const EntryRef& e) {
  std::ostringstream os;
  os << "(" << e.position << ", " << e.value << ")";
  return os.str();
}

/// Inputs for the per-permutation subcommands: either the positional
/// argument or the lines of --file (newline-delimited, '#' comments).
std::vector<Permutation> gather_inputs(const std::string& perm_text,
                                       const std::string& file) {
  if (!perm_text.empty() && !file.empty())
    throw CLI::ValidationError("give a permutation or --file, not both");
  if (perm_text.empty() && file.empty())
    throw CLI::ValidationError("a permutation argument or --file is required");
  std::vector<Permutation> out;
  if (!perm_text.empty()) {
    out.push_back(Permutation::parse(perm_text));
    return out;
  }
  std::ifstream in(file);
  if (!in) throw Error("cannot read " + file);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (blank) continue;
    out.push_back(Permutation::parse(line));
  }
  if (out.empty()) throw Error("no permutations in " + file);
  return out;
}

void emit(bool as_json, json doc, const std::string& text) {
  if (as_json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

/// Collects per-permutation reports so a --file batch becomes one JSON
/// array and a concatenated text body.
struct BatchOut {
  bool as_json;
  json arr = json::array();
  std::ostringstream text;
  void add(json j, const std::string& t) {
    arr.push_back(std::move(j));
    text << t;
  }
  void flush() {
    if (as_json)
      std::cout << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
    else
      std::cout << text.str();
  }
};

int dispatch(int argc, char** argv) {
  CLI::App app{"Structure toolkit for simple permutations: intervals, "
               "parallel alternations, inessential entries, extension "
               "census, enumeration, sampling, and plots"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  // check
  auto* cmd_check = app.add_subcommand("check", "simplicity report");
  std::string check_perm, check_file;
  cmd_check->add_option("perm", check_perm, "permutation (e.g. \"2 4 1 3\")");
  cmd_check->add_option("--file", check_file, "newline-delimited input file")
      ->check(CLI::ExistingFile);
  cmd_check->callback([&] {
    BatchOut out{as_json};
    for (const Permutation& p : gather_inputs(check_perm, check_file)) {
      SimplicityReport rep = is_simple(p);
      json j(rep);
      j["permutation"] = p;
      std::ostringstream os;
      os << p.str() << ": "
         << (rep.simple ? "simple"
                        : "not simple; witness " + window_text(*rep.witness))
         << "\n";
      out.add(std::move(j), os.str());
    }
    out.flush();
  });

  // intervals
  auto* cmd_intervals =
      app.add_subcommand("intervals", "nontrivial proper intervals");
  std::string iv_perm, iv_file;
  bool iv_minimal = false;
  cmd_intervals->add_option("perm", iv_perm, "permutation");
  cmd_intervals->add_option("--file", iv_file, "newline-delimited input file")
      ->check(CLI::ExistingFile);
  cmd_intervals->add_flag("--minimal", iv_minimal,
                          "only inclusion-minimal intervals");
  cmd_intervals->callback([&] {
    BatchOut out{as_json};
    for (const Permutation& p : gather_inputs(iv_perm, iv_file)) {
      auto windows =
          iv_minimal ? minimal_nontrivial_intervals(p) : nontrivial_intervals(p);
      json j{{"permutation", p},
             {"minimal", iv_minimal},
             {"intervals", windows}};
      std::ostringstream os;
      os << p.str() << ":";
      if (windows.empty()) {
        os << " no nontrivial intervals\n";
      } else {
        os << "\n";
        for (const auto& w : windows) os << "  " << window_text(w) << "\n";
      }
      out.add(std::move(j), os.str());
    }
    out.flush();
  });

  // classify
  auto* cmd_classify =
      app.add_subcommand("classify", "parallel-alternation recognition");
  std::string cl_perm, cl_file;
  bool cl_repair = false;
  cmd_classify->add_option("perm", cl_perm, "permutation");
  cmd_classify->add_option("--file", cl_file, "newline-delimited input file")
      ->check(CLI::ExistingFile);
  cmd_classify->add_flag("--repair", cl_repair,
                         "also show a <=2-entry removal to a simple pattern");
  cmd_classify->callback([&] {
    BatchOut out{as_json};
    for (const Permutation& p : gather_inputs(cl_perm, cl_file)) {
      auto witness = is_parallel_alternation(p);
      json j{{"permutation", p},
             {"parallel_alternation", witness.has_value()}};
      std::ostringstream os;
      os << p.str() << ": ";
      if (!witness) {
        os << "not a parallel alternation\n";
      } else {
        j["witness"] = *witness;
        os << "parallel alternation ("
           << (witness->axis == SplitAxis::Value ? "value split"
                                                 : "position split")
           << ", both "
           << (witness->direction == Direction::Increasing ? "increasing"
                                                           : "decreasing")
           << ")\n";
        if (cl_repair) {
          AlternationRepair rep = simplify_parallel_alternation(p);
          j["repair"] = rep;
          os << "  repair: remove {";
          for (std::size_t k = 0; k < rep.removed.size(); ++k)
            os << (k ? ", " : "") << entry_text(rep.removed[k]);
          os << "} -> " << rep.result.str() << "\n";
        }
      }
      out.add(std::move(j), os.str());
    }
    out.flush();
  });

  // inessential
  auto* cmd_iness =
      app.add_subcommand("inessential", "entry essentiality of a simple "
                                        "permutation");
  std::string in_perm, in_file;
  cmd_iness->add_option("perm", in_perm, "permutation");
  cmd_iness->add_option("--file", in_file, "newline-delimited input file")
      ->check(CLI::ExistingFile);
  cmd_iness->callback([&] {
    BatchOut out{as_json};
    for (const Permutation& p : gather_inputs(in_perm, in_file)) {
      EssentialityReport rep = inessential_entries(p);
      std::ostringstream os;
      os << p.str() << ": " << rep.inessential_count()
         << " inessential of " << p.size() << "\n";
      for (const auto& e : rep.entries) {
        os << "  " << entry_text(e.entry) << ": "
           << (e.inessential ? "inessential -> " + e.pattern->str()
                             : "essential")
           << "\n";
      }
      out.add(json(rep), os.str());
    }
    out.flush();
  });

  // enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "all simple permutations "
                                                   "of a length");
  int en_length = 0;
  std::string en_method = "extension";
  bool en_count_only = false;
  int en_guard = -1;
  cmd_enum->add_option("--length", en_length, "target length")->required();
  cmd_enum->add_option("--method", en_method, "brute or extension")
      ->check(CLI::IsMember({"brute", "extension"}));
  cmd_enum->add_flag("--count-only", en_count_only, "emit only the count");
  cmd_enum->add_option("--guard", en_guard,
                       "length cap (default 9 brute, 11 extension)");
  cmd_enum->callback([&] {
    SimpleSet set =
        en_method == "brute"
            ? all_simple_bruteforce(en_length,
                                    en_guard < 0 ? kBruteForceGuard : en_guard)
            : simple_via_extension(en_length,
                                   en_guard < 0 ? kExtensionGuard : en_guard);
    json j(set);
    std::ostringstream os;
    if (en_count_only) {
      j.erase("permutations");
      os << set.count() << "\n";
    } else {
      for (const Permutation& p : set.perms) os << p.str() << "\n";
    }
    emit(as_json, std::move(j), os.str());
  });

  // verify-theorem
  auto* cmd_verify = app.add_subcommand(
      "verify-theorem", "exhaustive check that every simple permutation is "
                        "a parallel alternation or has an inessential entry");
  int vt_max = 0, vt_guard = kDefaultExhaustiveGuard, vt_workers = 1;
  cmd_verify->add_option("--max-length", vt_max, "check lengths 1..N")
      ->required();
  cmd_verify->add_option("--guard", vt_guard, "refuse lengths beyond this");
  cmd_verify->add_option("--workers", vt_workers, "worker threads");
  cmd_verify->callback([&] {
    if (vt_max > vt_guard)
      throw TooLarge("max length " + std::to_string(vt_max) +
                     " exceeds the guard " + std::to_string(vt_guard));
    if (vt_max < 1) throw BadArguments("max length must be at least 1");
    json arr = json::array();
    std::ostringstream os;
    bool all_clear = true;
    for (int n = 1; n <= vt_max; ++n) {
      TheoremReport rep = verify_theorem(n, vt_guard, vt_workers);
      arr.push_back(json(rep));
      os << "n=" << n << ": " << rep.simple_count << " simple, "
         << rep.parallel_alternation_simple_count << " parallel alternations, "
         << rep.simple_with_inessential_count << " with inessential entries, "
         << rep.counterexamples.size() << " counterexamples\n";
      for (const Permutation& c : rep.counterexamples) {
        os << "  counterexample: " << c.str() << "\n";
        all_clear = false;
      }
    }
    os << (all_clear ? "theorem holds on every checked length\n"
                     : "counterexamples found\n");
    emit(as_json, std::move(arr), os.str());
  });

  // extensions
  auto* cmd_ext =
      app.add_subcommand("extensions", "one-point extension census of a "
                                       "simple permutation");
  std::string ex_perm, ex_file;
  cmd_ext->add_option("perm", ex_perm, "permutation");
  cmd_ext->add_option("--file", ex_file, "newline-delimited input file")
      ->check(CLI::ExistingFile);
  cmd_ext->callback([&] {
    BatchOut out{as_json};
    for (const Permutation& p : gather_inputs(ex_perm, ex_file)) {
      ExtensionReport rep = extension_analysis(p);
      std::ostringstream os;
      os << "base " << p.str() << " (n=" << rep.n << "): "
         << rep.doubleton_slots << " doubleton, " << rep.corner_slots
         << " corner, " << rep.simple_slots << " simple, " << rep.other_slots
         << " other of " << (rep.n + 1) * (rep.n + 1) << " slots\n"
         << "  distinct results: " << rep.distinct_results
         << " (doubleton results: " << rep.distinct_doubleton_results
         << "); naive estimate " << rep.naive_simple_estimate
         << " vs measured " << rep.simple_slots << "\n";
      os << "  simple extensions:";
      for (const Permutation& s : rep.simple_results)
        os << "  " << s.str() << ";";
      os << "\n  slot grid (rows = position, cols = value, "
            "d/c/s/o):\n";
      for (const auto& row : rep.slot_classes) {
        os << "    ";
        for (SlotClass c : row) os << slot_class_name(c)[0];
        os << "\n";
      }
      out.add(json(rep), os.str());
    }
    out.flush();
  });

  // double-count
  auto* cmd_dc = app.add_subcommand(
      "double-count", "pair count (simple sigma, inessential entry) "
                      "computed two ways");
  int dc_length = 0, dc_guard = kDefaultExhaustiveGuard, dc_workers = 1;
  cmd_dc->add_option("--length", dc_length, "base length n")->required();
  cmd_dc->add_option("--guard", dc_guard, "refuse lengths beyond this");
  cmd_dc->add_option("--workers", dc_workers, "worker threads");
  cmd_dc->callback([&] {
    DoubleCountReport rep = double_count_check(dc_length, dc_guard, dc_workers);
    std::ostringstream os;
    os << "n=" << rep.n << ": inessential pairs " << rep.inessential_pairs
       << ", simple extension slots " << rep.simple_extension_slots << " ("
       << (rep.equal() ? "equal" : "NOT EQUAL") << ")\n";
    emit(as_json, json(rep), os.str());
  });

  // stats
  auto* cmd_stats = app.add_subcommand(
      "stats", "interval-count distribution of random permutations");
  int st_length = 0, st_workers = 1, st_guard = kTrendGuard;
  long long st_samples = 0;
  std::uint64_t st_seed = 0;
  bool st_csv = false, st_exhaustive = false;
  auto* opt_samples =
      cmd_stats->add_option("--samples", st_samples, "sample count");
  auto* opt_seed = cmd_stats->add_option(
      "--seed", st_seed, "RNG seed (required when sampling; no wall-clock "
                         "default)");
  cmd_stats->add_option("--length", st_length, "permutation length")
      ->required();
  cmd_stats->add_flag("--exhaustive", st_exhaustive,
                      "use all n! permutations instead of sampling");
  cmd_stats->add_option("--workers", st_workers, "worker threads");
  cmd_stats->add_option("--guard", st_guard,
                        "length cap for --exhaustive");
  cmd_stats->add_flag("--csv", st_csv, "histogram as CSV rows");
  cmd_stats->callback([&] {
    if (st_csv && as_json)
      throw CLI::ValidationError("--csv and --json are mutually exclusive");
    StatsReport rep;
    if (st_exhaustive) {
      rep = interval_count_exhaustive(st_length, st_guard);
    } else {
      if (opt_samples->count() == 0 || opt_seed->count() == 0)
        throw CLI::ValidationError(
            "--samples and --seed are required unless --exhaustive");
      rep = interval_count_experiment(st_length, st_samples, st_seed,
                                      st_workers);
    }
    if (st_csv) {
      std::cout << "intervals,count,frequency,poisson_pmf\n";
      for (const auto& [k, cnt] : rep.histogram) {
        double freq = static_cast<double>(cnt) /
                      static_cast<double>(rep.samples);
        std::cout << k << "," << cnt << "," << freq << ","
                  << rep.poisson_reference[static_cast<std::size_t>(k)]
                  << "\n";
      }
      return;
    }
    std::ostringstream os;
    os << "n=" << rep.n << ", " << rep.samples << " samples (" << rep.generator
       << ", seed " << rep.seed << ")\n"
       << "  simple fraction " << rep.simple_fraction << " (e^-2 = "
       << rep.e_minus_2 << ")\n"
       << "  mean interval count " << rep.mean_intervals << "\n"
       << "  TV distance to Poisson(2) " << rep.tv_distance << "\n"
       << "  fraction with an interval of size >= 3: "
       << rep.large_interval_fraction << "\n"
       << "  histogram (intervals: count):\n";
    for (const auto& [k, cnt] : rep.histogram)
      os << "    " << k << ": " << cnt << "\n";
    os << "  note: " << rep.note << "\n";
    emit(as_json, json(rep), os.str());
  });

  // trend
  auto* cmd_trend = app.add_subcommand(
      "trend", "mean inessential entries per length, exhaustive");
  int tr_max = 0, tr_min = 5, tr_guard = kTrendGuard;
  bool tr_csv = false;
  cmd_trend->add_option("--max-length", tr_max, "last length")->required();
  cmd_trend->add_option("--min-length", tr_min, "first length (4 or 5)");
  cmd_trend->add_option("--guard", tr_guard, "refuse lengths beyond this");
  cmd_trend->add_flag("--csv", tr_csv, "rows as CSV");
  cmd_trend->callback([&] {
    if (tr_csv && as_json)
      throw CLI::ValidationError("--csv and --json are mutually exclusive");
    InessentialTrend trend = inessential_trend(tr_max, tr_min, tr_guard);
    if (tr_csv) {
      std::cout
          << "n,simple_count,total_inessential,mean_inessential,mean_over_n,"
             "cross_validated\n";
      for (const TrendRow& r : trend.rows) {
        std::cout << r.n << "," << r.simple_count << "," << r.total_inessential
                  << "," << r.mean_inessential << "," << r.mean_over_n << ","
                  << (r.cross_validated
                          ? (*r.cross_validated ? "true" : "false")
                          : "")
                  << "\n";
      }
      return;
    }
    std::ostringstream os;
    for (const TrendRow& r : trend.rows) {
      os << "n=" << r.n << ": " << r.simple_count << " simple, "
         << r.total_inessential << " inessential entries, mean "
         << r.mean_inessential << ", mean/n " << r.mean_over_n;
      if (r.cross_validated)
        os << (*r.cross_validated ? " (cross-validated)"
                                  : " (MISMATCH with slot census)");
      os << "\n";
    }
    emit(as_json, json(trend), os.str());
  });

  // plot
  auto* cmd_plot = app.add_subcommand("plot", "SVG or ASCII plot");
  std::string pl_perm, pl_format = "svg";
  std::vector<std::string> pl_highlights;
  int pl_cell = 20;
  cmd_plot->add_option("perm", pl_perm, "permutation")->required();
  cmd_plot->add_option("--highlight", pl_highlights,
                       "window i,j to shade (repeatable)");
  cmd_plot->add_option("--format", pl_format, "svg or ascii")
      ->check(CLI::IsMember({"svg", "ascii"}));
  cmd_plot->add_option("--cell", pl_cell, "SVG cell size in pixels");
  cmd_plot->callback([&] {
    PlotSpec spec{.perm = Permutation::parse(pl_perm),
                  .highlights = {},
                  .format = pl_format == "svg" ? PlotSpec::Format::Svg
                                               : PlotSpec::Format::Ascii,
                  .cell = pl_cell};
    for (const std::string& h : pl_highlights) {
      int i = 0, j = 0;
      char comma = 0;
      std::istringstream is(h);
      if (!(is >> i >> comma >> j) || comma != ',' || !is.eof())
        throw CLI::ValidationError("--highlight expects i,j");
      spec.highlights.push_back(window_of(spec.perm, i, j));
    }
    std::string doc = emit_plot(spec);
    if (as_json) {
      json j{{"permutation", spec.perm},
             {"format", pl_format},
             {"document", doc}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << doc;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: cannot parse permutation at offset " << e.position
              << ": " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
