#ifndef SIGNULL_TOOLS_CLI_HPP
#define SIGNULL_TOOLS_CLI_HPP

// Command-line front end. run_command is the whole program minus process
// plumbing so tests can drive it with in-memory streams.
//
// Exit status: 0 success, 1 verification violations, 2 usage errors,
// 3 input/output errors (unreadable or malformed graph files).

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "signull/signull.hpp"

namespace signull::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw InputError("error reading '" + path + "'");
  return buf.str();
}

inline std::string usage_footer() {
  return std::string("Environment:\n  ") + kCeilingEnv +
         "  enumeration ceiling for verify/catalog (default " +
         std::to_string(EnumerationLimits::kDefaultCeiling) + ", at most " +
         std::to_string(EnumerationLimits::kHardCeiling) + ")\n";
}

inline std::string theorem_help() {
  std::string s = "Sweep id. One of:";
  for (const auto& sweep : kSweeps) s += "\n  " + std::string(sweep.id) + ": " + std::string(sweep.summary);
  s += "\nAliases:";
  for (const auto& [alias, target] : kSweepAliases) s += " " + std::string(alias);
  return s;
}

inline int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"signull: exact nullity toolkit for signed graphs", "signull"};
  app.footer(usage_footer());
  app.require_subcommand(1);

  std::string file;
  std::string to_format = "dot";
  std::string theorem;
  std::size_t max_n = 0;
  std::size_t min_n = 1;
  std::size_t threads = 1;
  std::size_t cat_n = 0;
  std::size_t cat_k = 0;
  bool balanced_only = false;
  bool timing = false;
  bool contract = false;

  auto* nullity_cmd = app.add_subcommand("nullity", "Print order, rank and nullity of a graph file");
  nullity_cmd->add_option("file", file, "Graph file ('-' for stdin)")->required();

  auto* balance_cmd = app.add_subcommand("balance", "Decide balance and print a witness");
  balance_cmd->add_option("file", file, "Graph file ('-' for stdin)")->required();

  auto* classify_cmd = app.add_subcommand(
      "classify", "Rank-2/rank-3 verdicts, bicyclic base and unbalanced-bicyclic verdict");
  classify_cmd->add_option("file", file, "Graph file ('-' for stdin)")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Delete pendant pairs to a fixpoint and print the trace");
  reduce_cmd->add_option("file", file, "Graph file ('-' for stdin)")->required();
  reduce_cmd->add_flag("--contract", contract, "Also contract special paths (after normalizing signs)");

  auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive verification sweep");
  verify_cmd->add_option("--theorem", theorem, theorem_help())->required();
  verify_cmd->add_option("--max-n", max_n, "Largest order (cycle length for cycle-nullity)")->required();
  verify_cmd->add_option("--min-n", min_n, "Smallest order");
  verify_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--timing", timing, "Include elapsed seconds in the report");

  auto* catalog_cmd = app.add_subcommand("catalog", "Catalog bicyclic classes with nullity n - k");
  catalog_cmd->add_option("--n", cat_n, "Order")->required();
  catalog_cmd->add_option("--k", cat_k, "Nullity class is n - k")->required();
  catalog_cmd->add_flag("--balanced-only", balanced_only, "Only the all-positive signature");
  catalog_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* convert_cmd = app.add_subcommand("convert", "Convert a graph file");
  convert_cmd->add_option("file", file, "Graph file ('-' for stdin)")->required();
  convert_cmd->add_option("--to", to_format, "Output format: dot or edges")
      ->check(CLI::IsMember({"dot", "edges"}));

  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  SweepOptions sweep;
  sweep.threads = threads;
  sweep.limits = EnumerationLimits::from_environment();

  try {
    if (*verify_cmd) {
      const auto report = verify_theorem(theorem, min_n, max_n, sweep);
      const std::string input = "verify " + report.theorem_id + " " + std::to_string(min_n) + " " +
                                std::to_string(max_n);
      out << dump_document(report_document("theorem-report", input, to_json(report, timing)));
      if (!report.ok()) {
        err << report.violations.size() << " violation(s)\n";
        return kExitViolations;
      }
      return kExitOk;
    }
    if (*catalog_cmd) {
      if (cat_n > EnumerationLimits::kDefaultCeiling && cat_n <= sweep.limits.ceiling) {
        err << "warning: catalogs above order " << EnumerationLimits::kDefaultCeiling
            << " may take minutes\n";
      }
      CatalogOptions copts;
      copts.balanced_only = balanced_only;
      copts.sweep = sweep;
      const auto cat = catalog_nullity_classes(cat_n, cat_k, copts);
      const std::string input = "catalog " + std::to_string(cat_n) + " " + std::to_string(cat_k) +
                                (balanced_only ? " balanced-only" : "");
      out << dump_document(report_document("nullity-catalog", input, to_json(cat)));
      return kExitOk;
    }

    const std::string text = read_input(file);
    const SignedGraph g = parse_graph(text);

    if (*nullity_cmd) {
      const auto r = graph_rank(g);
      out << "n=" << g.order() << " rank=" << r << " nullity=" << g.order() - r << "\n";
    } else if (*balance_cmd) {
      const auto w = is_balanced(g);
      if (w.balanced()) {
        out << "balanced theta=" << sign_string(w.theta()).get<std::string>() << "\n";
      } else {
        out << "unbalanced cycle=";
        const auto& vs = w.cycle().vertices;
        for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
        out << "\n";
      }
    } else if (*classify_cmd) {
      const auto r = graph_rank(g);
      Json body{{"order", g.order()},
                {"rank", r},
                {"nullity", g.order() - r},
                {"balanced", is_balanced(g).balanced()},
                {"rank2", to_json(recognize_rank2(g))},
                {"rank3", to_json(recognize_rank3(g))}};
      const auto base = bicyclic_base(g);
      body["bicyclic_base"] = base ? to_json(*base) : Json(nullptr);
      if (base && !is_balanced(g).balanced()) {
        const auto v = theorem31_verdict(g);
        body["unbalanced_bicyclic"] = {{"bound_holds", v.bound_holds}, {"is_extremal", v.is_extremal}};
      } else {
        body["unbalanced_bicyclic"] = nullptr;
      }
      out << dump_document(report_document("classification", text, std::move(body)));
    } else if (*reduce_cmd) {
      ReduceOptions ropts;
      ropts.contract_special_paths = contract;
      const auto [reduced, trace] = reduce(g, ropts);
      Json body{{"input_nullity", nullity(g)},
                {"reduced_nullity", nullity(reduced)},
                {"reduced", serialize_graph(reduced)},
                {"trace", to_json(trace)}};
      out << dump_document(report_document("reduction", text, std::move(body)));
    } else if (*convert_cmd) {
      out << (to_format == "dot" ? to_dot(g) : serialize_graph(g));
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ParseError& e) {
    err << "error: " << file << ": " << e.what() << "\n";
    return kExitIo;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const UnknownTheorem& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace signull::cli

#endif  // SIGNULL_TOOLS_CLI_HPP
