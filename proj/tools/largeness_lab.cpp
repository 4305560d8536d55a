// largeness-lab: check, sweep, enumerate and demo front end.
#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "largeness/error.hpp"
#include "largeness/io.hpp"
#include "largeness/jset.hpp"
#include "largeness/largeness.hpp"
#include "largeness/nwindow.hpp"
#include "largeness/sweep.hpp"

using namespace largeness;
using io::json;

namespace {

  std::atomic<bool> interrupted{false};

  extern "C" void on_interrupt(int) {
    interrupted.store(true);
  }

  // argv without the flags that must not change a report
  json command_echo(int argc, char** argv) {
    json out = json::array();
    for (int i = 1; i < argc; ++i) {
      std::string const arg = argv[i];
      if (arg == "--timing") {
        continue;
      }
      if (arg == "--jobs" || arg == "-j" || arg == "--output" || arg == "-o") {
        ++i;
        continue;
      }
      if (arg.rfind("--jobs=", 0) == 0 || arg.rfind("--output=", 0) == 0) {
        continue;
      }
      out.push_back(arg);
    }
    return out;
  }

  json new_report(json const& echo, std::string const& digest) {
    json r;
    r["format"]        = io::format_version;
    r["kind"]          = "report";
    r["command"]       = echo;
    r["inputs_digest"] = digest;
    r["verdicts"]      = json::array();
    return r;
  }

  void emit(json const& report, std::string const& output) {
    std::string const text = report.dump(2) + "\n";
    if (output.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      throw Error(Errc::Parse, output + ": cannot write report");
    }
    out << text;
  }

  json verdict_row(std::string const& check, Verdict const& v) {
    json row     = io::to_json(v);
    row["check"] = check;
    return row;
  }

  struct CheckArgs {
    std::string semigroup;
    std::string set;
    std::string kind;
    std::string filter;
    std::string core;
    std::string family;
    std::string route = "closed-form";
    bool        assert_verdict = false;
  };

  int run_check(CheckArgs const& a, json const& echo, std::string const& output) {
    FiniteSemigroup const S = io::load_semigroup(a.semigroup);
    SubsetMask const      A = io::parse_set_literal(a.set, S.size());

    std::optional<FilterBase> F;
    if (!a.filter.empty() && !a.core.empty()) {
      throw Error(Errc::InvalidArgument, "give either --filter or --core, not both");
    }
    if (!a.filter.empty()) {
      F = io::load_filter(S, a.filter);
    } else if (!a.core.empty()) {
      F = principal_filter(S, io::parse_set_literal(a.core, S.size()));
    }

    std::string digest_input = io::to_json(S).dump() + "|" + io::to_json(A).dump() + "|" + a.kind;
    if (F) {
      digest_input += "|" + io::to_json(*F).dump();
    }

    Verdict verdict;
    json    extra;
    if (a.kind == "j" || a.kind == "f-j") {
      if (a.family.empty()) {
        throw Error(Errc::InvalidArgument, "kind " + a.kind + " needs --family");
      }
      SequenceFamily const family = io::load_family(S, a.family);
      digest_input += "|" + io::to_json(family).dump();
      JSearchResult result;
      if (a.kind == "f-j") {
        if (!F) {
          throw Error(Errc::InvalidArgument, "kind f-j needs --filter or --core");
        }
        result = f_j_witness(S, *F, A, family);
      } else {
        result = j_witness(S, A, family);
      }
      if (result.witness) {
        verdict = Verdict::pass(Evidence{"j-witness", {}, result.witness->a});
        extra   = io::to_json(*result.witness);
      } else {
        verdict = Verdict::fail(Evidence{"refuted", {}, {}});
      }
    } else {
      auto const kind = parse_kind(a.kind);
      if (!kind) {
        throw Error(Errc::InvalidArgument, "unknown kind: " + a.kind);
      }
      auto const route = parse_route(a.route);
      if (!route) {
        throw Error(Errc::InvalidArgument, "unknown route: " + a.route);
      }
      if (is_filter_relative(*kind) && !F) {
        throw Error(Errc::InvalidArgument, "kind " + a.kind + " needs --filter or --core");
      }
      verdict = check_largeness(S, F ? &*F : nullptr, A, *kind, *route);
    }

    json report = new_report(echo, io::fnv1a_hex(digest_input));
    json row    = verdict_row(a.kind, verdict);
    if (!extra.is_null()) {
      row["j_witness"] = extra;
    }
    report["verdicts"].push_back(row);
    emit(report, output);
    return a.assert_verdict && !verdict.holds ? 1 : 0;
  }

  struct SweepArgs {
    std::string                id;
    std::size_t                order = 2;
    std::optional<std::size_t> sample;
    std::uint64_t              seed  = 1;
    std::size_t                jobs  = 1;
    bool                       monoids_only = false;
    bool                       timing       = false;
    bool                       list         = false;
  };

  int run_sweep_cmd(SweepArgs const& a, json const& echo, std::string const& output) {
    if (a.list) {
      for (auto const& info : sweep_catalog()) {
        std::printf("%-32s order<=%zu%s%s  %s\n", info.id.c_str(), info.max_order,
                    info.supports_sample ? " sample" : "       ", info.exploratory ? " exploratory" : "            ",
                    info.summary.c_str());
      }
      return 0;
    }
    if (a.id.empty()) {
      throw Error(Errc::InvalidArgument, "sweep needs an id (see --list)");
    }
    SweepOptions o;
    o.order        = a.order;
    o.sample       = a.sample;
    o.seed         = a.seed;
    o.jobs         = std::max<std::size_t>(1, a.jobs);
    o.monoids_only = a.monoids_only;
    o.cancel       = &interrupted;

    std::signal(SIGINT, on_interrupt);
    auto const        start  = std::chrono::steady_clock::now();
    SweepReport const report = run_sweep(a.id, o);
    auto const        stop   = std::chrono::steady_clock::now();

    json out = new_report(echo, io::fnv1a_hex(a.id + "|" + std::to_string(a.order) + "|"
                                              + (a.sample ? std::to_string(*a.sample) : "-") + "|"
                                              + std::to_string(a.seed) + "|" + (a.monoids_only ? "m" : "-")));
    out["sweep"] = io::to_json(report);
    json stats;
    stats["instances"]       = report.instances;
    stats["hypothesis_hits"] = report.hypothesis_hits;
    stats["violations"]      = report.violations;
    if (a.timing) {
      stats["elapsed_seconds"] = std::chrono::duration<double>(stop - start).count();
    }
    out["stats"] = stats;
    emit(out, output);
    if (report.partial) {
      return 1;
    }
    return report.passed() ? 0 : 1;
  }

  int run_enumerate(std::size_t order, bool count, bool emit_records, std::string const& output) {
    if (count == emit_records) {
      throw Error(Errc::InvalidArgument, "enumerate needs exactly one of --count and --emit");
    }
    if (order > max_enumeration_order || order == 0) {
      throw Error(Errc::BoundExceeded, "enumeration supports orders 1.." + std::to_string(max_enumeration_order),
                  {order});
    }
    std::ofstream file;
    if (!output.empty()) {
      file.open(output, std::ios::binary);
      if (!file) {
        throw Error(Errc::Parse, output + ": cannot write");
      }
    }
    std::ostream& out = output.empty() ? std::cout : file;
    std::size_t   total = 0;
    for_each_semigroup(order, [&](FiniteSemigroup const& S) {
      ++total;
      if (emit_records) {
        out << io::to_json(S).dump() << '\n';
      }
      return false;
    });
    if (count) {
      out << total << '\n';
    }
    return 0;
  }

  struct DemoArgs {
    std::string                name;
    std::size_t                window = 100;
    std::vector<std::size_t>   generators;
    std::optional<std::size_t> syndetic;
    std::optional<std::size_t> thick;
    std::vector<std::size_t>   pws;
  };

  int run_demo(DemoArgs const& a, json const& echo, std::string const& output) {
    WindowSet const ws = a.name == "fs" ? fs_set(a.generators, a.window) : builtin_set(a.name, a.window);
    std::vector<WindowCheck> checks;
    if (a.syndetic) {
      checks.push_back(WindowCheck::syndetic(*a.syndetic));
    }
    if (a.thick) {
      checks.push_back(WindowCheck::thick(*a.thick));
    }
    if (!a.pws.empty()) {
      if (a.pws.size() != 2) {
        throw Error(Errc::InvalidArgument, "--pws takes GAP,RUN");
      }
      checks.push_back(WindowCheck::pws(a.pws[0], a.pws[1]));
    }
    if (checks.empty()) {
      throw Error(Errc::InvalidArgument, "demo needs at least one of --syndetic, --thick, --pws");
    }
    std::string digest_input = ws.label + "|" + std::to_string(ws.window);
    for (auto const& c : checks) {
      digest_input += "|" + to_string(c);
    }
    json report = new_report(echo, io::fnv1a_hex(digest_input));
    report["set"] = json{{"label", ws.label}, {"window", ws.window}, {"size", ws.members.size()}};
    for (auto const& c : checks) {
      report["verdicts"].push_back(verdict_row(to_string(c), windowed_check(ws, c)));
    }
    emit(report, output);
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact largeness checks and theorem sweeps on finite semigroups"};
  app.require_subcommand(1);
  std::string output;

  CheckArgs check;
  auto*     cmd_check = app.add_subcommand("check", "Decide one largeness property of a set");
  cmd_check->add_option("--semigroup,-s", check.semigroup, "Semigroup file or builtin:NAME")->required();
  cmd_check->add_option("--set,-a", check.set, "Set literal such as 0,2")->required();
  cmd_check->add_option("--kind,-k", check.kind,
                        "thick, syndetic, pws, f-thick, f-syndetic, pws-f, pws-f-fip, central, f-central, "
                        "f-quasi-central, j, f-j")
      ->required();
  cmd_check->add_option("--filter,-f", check.filter, "Filter file");
  cmd_check->add_option("--core", check.core, "Principal filter given by its core, as a set literal");
  cmd_check->add_option("--family", check.family, "Sequence family file (kinds j and f-j)");
  cmd_check->add_option("--route", check.route, "closed-form, definitional or kernel");
  cmd_check->add_flag("--assert", check.assert_verdict, "Exit 1 when the verdict fails");
  cmd_check->add_option("--output,-o", output, "Write the report here instead of standard output");

  SweepArgs sweep;
  auto*     cmd_sweep = app.add_subcommand("sweep", "Run a theorem sweep or probe");
  cmd_sweep->add_option("id", sweep.id, "Sweep id");
  cmd_sweep->add_flag("--list", sweep.list, "List the available sweeps");
  cmd_sweep->add_option("--order", sweep.order, "Largest semigroup order");
  cmd_sweep->add_option("--sample", sweep.sample, "Draw this many random instances");
  cmd_sweep->add_option("--seed", sweep.seed, "Sampling seed");
  cmd_sweep->add_option("--jobs,-j", sweep.jobs, "Worker threads")->envname("LARGENESS_LAB_JOBS");
  cmd_sweep->add_flag("--monoids-only", sweep.monoids_only, "Restrict the universe to monoids");
  cmd_sweep->add_flag("--timing", sweep.timing, "Include elapsed time in the report");
  cmd_sweep->add_option("--output,-o", output, "Write the report here instead of standard output");

  std::size_t enum_order = 0;
  bool        enum_count = false;
  bool        enum_emit  = false;
  auto*       cmd_enum   = app.add_subcommand("enumerate", "Count or list every semigroup of one order");
  cmd_enum->add_option("order", enum_order, "Order 1..4")->required();
  cmd_enum->add_flag("--count", enum_count, "Print the number of tables");
  cmd_enum->add_flag("--emit", enum_emit, "Print one semigroup document per line");
  cmd_enum->add_option("--output,-o", output, "Write here instead of standard output");

  DemoArgs demo;
  auto*    cmd_demo = app.add_subcommand("demo", "Windowed checks on subsets of N");
  cmd_demo->add_option("name", demo.name, "evens, paper_thick, paper_pws or fs")->required();
  cmd_demo->add_option("--window,-w", demo.window, "Window [1, W]");
  cmd_demo->add_option("--generators", demo.generators, "Generators for fs")->delimiter(',');
  cmd_demo->add_option("--syndetic", demo.syndetic, "Gap bound");
  cmd_demo->add_option("--thick", demo.thick, "Run length");
  cmd_demo->add_option("--pws", demo.pws, "GAP,RUN")->delimiter(',')->expected(2);
  cmd_demo->add_option("--output,-o", output, "Write the report here instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }

  json const echo = command_echo(argc, argv);
  try {
    if (cmd_check->parsed()) {
      return run_check(check, echo, output);
    }
    if (cmd_sweep->parsed()) {
      return run_sweep_cmd(sweep, echo, output);
    }
    if (cmd_enum->parsed()) {
      return run_enumerate(enum_order, enum_count, enum_emit, output);
    }
    if (cmd_demo->parsed()) {
      return run_demo(demo, echo, output);
    }
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
