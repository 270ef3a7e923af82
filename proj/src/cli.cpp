#include "lct/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lct/counting.hpp"
#include "lct/enumerate.hpp"
#include "lct/involution.hpp"
#include "lct/record.hpp"

namespace lct {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;
constexpr int kExitInvalidConfig = 4;
constexpr int kExitIo = 5;

int run_seq(int n_max, const std::string& format, std::ostream& out) {
  SequenceTable table = sequence(n_max);
  if (format == "bfile") {
    out << to_bfile(table);
  } else {
    for (const auto& [n, a] : table.entries)
      out << "{\"n\":" << n << ",\"a\":\"" << a << "\"}\n";
  }
  return kExitOk;
}

int run_verify(int n, const std::string& mode, bool force, int jobs, bool json,
               std::ostream& out, std::ostream& err) {
  force = enumeration_force(force);
  if (n > kGConfigGuard && !force) {
    err << "verify: n=" << n << " exceeds the enumeration guard ("
        << kGConfigGuard << "); pass --force to override\n";
    return kExitGuard;
  }
  bool run_counts = mode == "all" || mode == "counts";
  bool run_involution = mode == "all" || mode == "involution";

  BigInt fc = formula_count(n);
  bool ok = true;
  std::string first_failure;
  auto fail = [&](const std::string& msg) {
    ok = false;
    if (first_failure.empty()) first_failure = msg;
  };

  nlohmann::ordered_json report;
  report["n"] = n;
  report["formula_count"] = fc.str();

  BigInt bf = 0, swt = 0;
  GConfigTally tally;
  if (run_counts) {
    bf = brute_force_count(n, force);
    tally = tally_gconfigs(n, jobs, force);
    swt = tally.signed_total;
    if (bf != fc) fail("brute_force_count != formula_count");
    if (swt != fc) fail("signed_weight_total != formula_count");
    for (int k = 1; k <= n; ++k) {
      BigInt enumerated = tally.count_by_k.count(k) ? tally.count_by_k.at(k) : 0;
      if (enumerated != gconfig_count_by_k(n, k))
        fail("per-k count mismatch at k=" + std::to_string(k));
    }
    report["brute_force_count"] = bf.str();
    report["signed_weight_total"] = swt.str();
    nlohmann::ordered_json per_k;
    for (const auto& [k, c] : tally.count_by_k)
      per_k[std::to_string(k)] = c;
    report["configs_by_k"] = per_k;
  }

  InvolutionReport inv;
  if (run_involution) {
    inv = verify_involution(n, jobs, force);
    if (!inv.clean()) fail(inv.first_counterexample);
    if (inv.fixed_count != fc) fail("fixed-point count != formula_count");
    report["total_configs"] = inv.total_configs;
    report["pair_count"] = inv.pair_count;
    report["fixed_count"] = inv.fixed_count;
    report["signed_total"] = inv.signed_total;
    report["violations"] = inv.violations;
    if (!inv.first_counterexample.empty())
      report["first_counterexample"] = inv.first_counterexample;
  }
  report["pass"] = ok;

  if (json) {
    out << report.dump() << '\n';
  } else {
    out << "n=" << n << ": formula count " << fc << '\n';
    if (run_counts) {
      out << "brute-force tree count: " << bf << '\n';
      out << "signed configuration total: " << swt << '\n';
      std::ostringstream per_k;
      for (const auto& [k, c] : tally.count_by_k)
        per_k << " k=" << k << ":" << c;
      out << "configs per k:" << per_k.str() << '\n';
    }
    if (run_involution) {
      out << inv.total_configs << " configs, " << inv.pair_count << " pairs, "
          << inv.fixed_count << " fixed, total " << inv.signed_total << '\n';
      out << "involution violations: " << inv.violations << '\n';
    }
    out << (ok ? "PASS" : "FAIL: " + first_failure) << '\n';
  }
  return ok ? kExitOk : kExitCheckFailed;
}

std::optional<GConfiguration> load_record(const std::string& path,
                                          std::ostream& err, int& exit_code) {
  std::ifstream in(path);
  if (!in) {
    err << "cannot open " << path << '\n';
    exit_code = kExitIo;
    return std::nullopt;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return record_parse(buf.str());
  } catch (const RecordError& e) {
    err << "invalid configuration:\n";
    for (const auto& v : e.violations()) err << "  " << v << '\n';
    exit_code = kExitInvalidConfig;
    return std::nullopt;
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    exit_code = kExitInvalidConfig;
    return std::nullopt;
  }
}

int run_pair(const std::string& path, std::ostream& out, std::ostream& err) {
  int exit_code = kExitOk;
  auto config = load_record(path, err, exit_code);
  if (!config) return exit_code;
  auto tag = classify(*config);
  if (!tag) {
    err << "fixed point\n";
    out << "FIXED\n" << tree_to_text(config->tree) << '\n';
    return kExitOk;
  }
  err << to_string(*tag) << '\n';
  InvolutionOutcome outcome = apply(*config);
  out << record_serialize(std::get<GConfiguration>(outcome)) << '\n';
  return kExitOk;
}

int run_export(const std::string& in_path, const std::string& out_path,
               std::ostream& err) {
  int exit_code = kExitOk;
  auto config = load_record(in_path, err, exit_code);
  if (!config) return exit_code;
  std::ofstream out(out_path);
  if (!out) {
    err << "cannot open " << out_path << " for writing\n";
    return kExitIo;
  }
  out << export_dot(*config);
  out.flush();
  if (!out) {
    err << "write failed on " << out_path << '\n';
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace

bool enumeration_force(bool force_flag) {
  if (force_flag) return true;
  const char* v = std::getenv("LCT_FORCE");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact counting of labeled lone-child-avoiding rooted trees"};
  app.require_subcommand(1);

  int seq_n_max = 0;
  std::string seq_format = "bfile";
  auto* seq_cmd = app.add_subcommand(
      "seq", "print the counting sequence a(1)..a(n_max)");
  seq_cmd->add_option("n_max", seq_n_max, "last index to print")
      ->required()
      ->check(CLI::PositiveNumber);
  seq_cmd->add_option("--format", seq_format, "bfile or records")
      ->check(CLI::IsMember({"bfile", "records"}));

  int verify_n = 0;
  std::string verify_mode = "all";
  bool verify_force = false;
  bool verify_json = false;
  int jobs = 1;
  auto* verify_cmd = app.add_subcommand(
      "verify", "exhaustively check the involution and the count oracles");
  verify_cmd->add_option("n", verify_n, "size to verify")
      ->required()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--mode", verify_mode, "all, involution or counts")
      ->check(CLI::IsMember({"all", "involution", "counts"}));
  verify_cmd->add_flag("--force", verify_force,
                       "override the enumeration guard");
  verify_cmd->add_flag("--json", verify_json, "machine-readable report");
  verify_cmd->add_option("--jobs", jobs, "enumeration worker threads")
      ->check(CLI::PositiveNumber);

  std::string pair_path;
  auto* pair_cmd = app.add_subcommand(
      "pair", "apply the involution to a configuration record");
  pair_cmd->add_option("input", pair_path, "configuration record file")
      ->required();

  std::string export_in, export_out;
  auto* export_cmd =
      app.add_subcommand("export", "write a Graphviz view of a record");
  export_cmd->add_option("input", export_in, "configuration record file")
      ->required();
  export_cmd->add_option("output", export_out, "DOT file to write")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (seq_cmd->parsed()) return run_seq(seq_n_max, seq_format, out);
    if (verify_cmd->parsed())
      return run_verify(verify_n, verify_mode, verify_force, jobs, verify_json,
                        out, err);
    if (pair_cmd->parsed()) return run_pair(pair_path, out, err);
    if (export_cmd->parsed()) return run_export(export_in, export_out, err);
  } catch (const GuardExceeded& e) {
    err << e.what() << '\n';
    return kExitGuard;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace lct
