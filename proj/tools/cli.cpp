#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "endrank/brandt.hpp"
#include "endrank/endo.hpp"
#include "endrank/errors.hpp"
#include "endrank/json_io.hpp"
#include "endrank/table_io.hpp"

namespace endrank::cli {

namespace {

std::string braces(SemigroupTable const& t, ElementSet const& s) {
  std::string out = "{";
  for (auto const& l : t.labels_of(s)) {
    out += (out.size() > 1 ? ", " : "") + l;
  }
  return out + "}";
}

// Output goes to --out when given, otherwise to the command's stream.
class Sink {
 public:
  Sink(RunConfig const& config, std::ostream& fallback) : stream_(&fallback) {
    if (config.out_path) {
      file_.open(*config.out_path);
      if (!file_) {
        throw input_error("cannot write " + *config.out_path);
      }
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int cmd_brandt(RunConfig const& config, std::ostream& out, std::ostream& err) {
  auto const table = build_brandt(config.n.value_or(0));
  Sink       sink(config, out);
  write_table(*sink, table);
  (config.out_path ? out : err) << "|B_" << *config.n << "| = " << table.size()
                                << '\n';
  return 0;
}

int cmd_endo(RunConfig const& config, std::ostream& out, std::ostream& err) {
  auto const monoid = enumerate_endomorphisms_structural(config.n.value_or(0));
  if (config.out_path) {
    write_table_file(*config.out_path, monoid.table());
    std::ofstream sidecar(*config.out_path + ".json");
    sidecar << to_json(monoid).dump(2) << '\n';
    out << "|End(B_" << monoid.n() << ")| = " << monoid.size() << '\n';
  } else if (config.format == OutputFormat::json) {
    out << to_json(monoid).dump(2) << '\n';
  } else {
    write_table(out, monoid.table());
  }
  if (config.oracle) {
    auto const found   = enumerate_endomorphisms_oracle(monoid.n());
    bool const matches = found == monoid.elements();
    (config.out_path ? out : err)
        << "oracle enumeration: " << found.size() << " homomorphisms, "
        << (matches ? "matches" : "DIFFERS FROM") << " the structural list\n";
    if (!matches) {
      return 1;
    }
  }
  return 0;
}

void print_report(std::ostream& os, RankReport const& report,
                  SemigroupTable const& table) {
  if (report.n) {
    os << "End(B_" << *report.n << "): ";
  }
  os << report.size << " elements\n";
  static constexpr char const* witness_name[]
      = {"", "generating set", "independent generating set",
         "independent set", "smallest prime subset"};
  for (std::size_t k = 0; k < 5; ++k) {
    auto const& v = report.ranks[k];
    if (!v) {
      continue;
    }
    os << "r" << k + 1;
    if (v->exact) {
      os << " = ";
    } else {
      os << ((k == 1 || k == 4) ? " <= " : " >= ");
    }
    os << v->value << "  [" << to_string(v->method)
       << (v->exact ? "" : ", budget exhausted") << "]";
    if (v->certificate) {
      os << "  " << witness_name[k] << " " << braces(table, *v->certificate);
    }
    os << '\n';
  }
}

int cmd_ranks(RunConfig const& config, std::ostream& out, std::ostream& err) {
  std::optional<EndoMonoid>     monoid;
  std::optional<SemigroupTable> loaded;
  if (config.n) {
    monoid.emplace(enumerate_endomorphisms_structural(*config.n));
  } else {
    loaded.emplace(read_table_file(*config.table_path));
    if (auto v = validate(*loaded); !v.ok()) {
      auto const& [a, b, c] = *v.violation;
      err << "error: table is not associative: (" << a << "*" << b << ")*"
          << c << " != " << a << "*(" << b << "*" << c << ") at (a,b,c) = ("
          << a << "," << b << "," << c << ")\n";
      return 1;
    }
  }
  auto const& table = monoid ? monoid->table() : *loaded;
  auto const  report
      = rank_report(table, Budget::seconds(config.budget_seconds),
                    config.which, config.n);
  Sink sink(config, out);
  if (config.format == OutputFormat::json) {
    *sink << to_json(report, table).dump(2) << '\n';
  } else {
    print_report(*sink, report, table);
  }
  return 0;
}

char const* status_word(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "PASS";
    case CheckStatus::fail:
      return "FAIL";
    case CheckStatus::skipped:
      return "SKIPPED";
  }
  return "?";
}

int cmd_verify(RunConfig const& config, std::ostream& out, std::ostream&) {
  auto const checks = claim_checklist(config.n.value_or(0),
                                        Budget::seconds(config.budget_seconds));
  Sink sink(config, out);
  bool failed = false;
  if (config.format == OutputFormat::json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (auto const& c : checks) {
      j.push_back({{"check", c.name},
                   {"status", status_word(c.status)},
                   {"detail", c.detail}});
    }
    *sink << nlohmann::ordered_json{{"n", *config.n}, {"checks", j}}.dump(2) << '\n';
  }
  for (auto const& c : checks) {
    if (config.format == OutputFormat::text) {
      *sink << status_word(c.status) << "  " << c.name;
      if (!c.detail.empty()) {
        *sink << "  (" << c.detail << ")";
      }
      *sink << '\n';
    }
    failed = failed || c.status == CheckStatus::fail;
  }
  return failed ? 1 : 0;
}

int cmd_conjecture(RunConfig const& config, std::ostream& out, std::ostream&) {
  auto const n      = config.n.value_or(0);
  auto const report = verify_conjecture(n, Budget::seconds(config.budget_seconds));
  auto const monoid = enumerate_endomorphisms_structural(n);
  auto const& table = monoid.table();
  Sink        sink(config, out);
  if (config.format == OutputFormat::json) {
    *sink << to_json(report, table).dump(2) << '\n';
  } else {
    *sink << "End(B_" << n << "): predicted r4 = n + 2 = " << report.predicted
          << '\n'
          << "independent witness " << braces(table, report.lower_bound_witness)
          << '\n';
    switch (report.verdict) {
      case Verdict::confirmed:
        *sink << "no independent set of size " << n + 3 << " exists; r4 = "
              << report.best_size << "\nverdict: confirmed";
        break;
      case Verdict::refuted_with_witness:
        *sink << "independent set of size " << report.best_size << ": "
              << braces(table, *report.refutation)
              << "\nverdict: refuted-with-witness";
        break;
      case Verdict::inconclusive:
        *sink << "budget exhausted; r4 >= " << report.best_size
              << "\nverdict: inconclusive";
        break;
    }
    *sink << " (" << report.nodes << " search nodes)\n";
  }
  return report.verdict == Verdict::refuted_with_witness ? 2 : 0;
}

RankSelection parse_which(std::vector<std::string> const& names) {
  if (names.empty()) {
    return all_ranks;
  }
  RankSelection which{};
  for (auto const& name : names) {
    if (name.size() != 2 || name[0] != 'r' || name[1] < '1' || name[1] > '5') {
      throw input_error("--which expects a list of r1..r5, got '" + name + "'");
    }
    which[name[1] - '1'] = true;
  }
  return which;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"endrank: ranks of finite semigroups and of End(B_n)"};
  app.require_subcommand(1);

  RunConfig                config;
  std::size_t              n = 0;
  std::string              table_path;
  std::string              out_path;
  bool                     json = false;
  std::vector<std::string> which;

  auto add_n = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--n", n, "Degree n of B_n");
    if (required) {
      opt->required();
    }
    return opt;
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", config.budget_seconds,
                    "Wall-clock seconds per search")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Write the output to this file");
  };
  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "JSON output");
  };

  auto* brandt = app.add_subcommand("brandt", "Emit the Cayley table of B_n");
  add_n(brandt, true);
  add_out(brandt);

  auto* endo = app.add_subcommand(
      "endo", "Emit the composition table of End(B_n) with a JSON sidecar");
  add_n(endo, true);
  add_out(endo);
  add_json(endo);
  endo->add_flag("--oracle", config.oracle,
                 "Cross-check against the backtracking enumeration (n <= 3)");

  auto* ranks = app.add_subcommand(
      "ranks", "Compute r1..r5 of End(B_n) or of a table file");
  auto* ranks_n     = add_n(ranks, false);
  auto* ranks_table = ranks->add_option("--table", table_path,
                                        "Cayley-table text file");
  ranks_n->excludes(ranks_table);
  ranks_table->excludes(ranks_n);
  add_json(ranks);
  add_budget(ranks);
  add_out(ranks);
  ranks->add_option("--which", which, "Subset of r1,r2,r3,r4,r5")
      ->delimiter(',');

  auto* verify = app.add_subcommand(
      "verify", "Check every claim about End(B_n) for one n");
  add_n(verify, true);
  add_json(verify);
  add_budget(verify);
  add_out(verify);

  auto* conjecture = app.add_subcommand(
      "conjecture", "Search for an independent set of size n + 3 in End(B_n)");
  add_n(conjecture, true);
  add_json(conjecture);
  add_budget(conjecture);
  add_out(conjecture);

  std::vector<std::string> argv_storage{"endrank"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char const*> argv;
  for (auto const& a : argv_storage) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  auto* chosen      = app.get_subcommands().front();
  config.subcommand = chosen->get_name();
  if (chosen->count("--n") > 0) {
    config.n = n;
  }
  if (!table_path.empty()) {
    config.table_path = table_path;
  }
  if (!out_path.empty()) {
    config.out_path = out_path;
  }
  config.format = json ? OutputFormat::json : OutputFormat::text;

  try {
    config.which = parse_which(which);
    if (config.subcommand == "brandt") {
      return cmd_brandt(config, out, err);
    }
    if (config.subcommand == "endo") {
      return cmd_endo(config, out, err);
    }
    if (config.subcommand == "ranks") {
      if (!config.n && !config.table_path) {
        throw input_error("ranks needs exactly one of --n or --table");
      }
      return cmd_ranks(config, out, err);
    }
    if (config.subcommand == "verify") {
      return cmd_verify(config, out, err);
    }
    return cmd_conjecture(config, out, err);
  } catch (input_error const& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (resource_error const& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace endrank::cli
