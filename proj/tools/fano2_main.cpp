// fano2 -- exact verification of two-ray link numerics on weak Fano threefolds
//
// subcommands:
//   verify   recompute every derived column of the shipped tables and compare
//   certify  emit the K3 smallness certificate of an E1 host
//   solve    enumerate numerically consistent completions of a host
//   export   regenerate the canonical data files and diff them against disk

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fano2/report.hpp"
#include "fano2/version.hpp"

namespace {

using namespace fano2;

// ===========================================================================
// shared option plumbing
// ===========================================================================

struct CaseRef {
  TableId table;
  int no;
};

CaseRef parse_case(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("case reference must look like e1e1:10, got '" + text + "'");
  auto id = parse_table_id(text.substr(0, colon));
  if (!id) throw std::invalid_argument("unknown table id '" + text.substr(0, colon) + "'");
  int no = 0;
  try {
    size_t used = 0;
    no = std::stoi(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad row number in case reference '" + text + "'");
  }
  return {*id, no};
}

const TableRow& find_builtin_row(const CaseRef& ref) {
  for (const TableRow& row : builtin_rows(ref.table))
    if (row.no == ref.no) return row;
  throw std::invalid_argument("no row " + std::to_string(ref.no) + " in table " +
                              table_id_str(ref.table));
}

struct HostFlags {
  std::string case_ref;
  std::string kind = "E1";
  int r = 0, d = 0, g = 0;
  std::string ky3;
};

void add_host_flags(CLI::App* cmd, HostFlags& hf, bool kinds) {
  cmd->add_option("--case", hf.case_ref, "table row reference (e.g. e1e1:10)");
  if (kinds)
    cmd->add_option("--kind", hf.kind, "host kind: E1, E2, E3E4, E5")
        ->check(CLI::IsMember({"E1", "E2", "E3E4", "E5"}));
  cmd->add_option("--r", hf.r, "blow-up curve: index r of the host Fano");
  cmd->add_option("--d", hf.d, "blow-up curve: degree d");
  cmd->add_option("--g", hf.g, "blow-up curve: genus g");
  cmd->add_option("--ky3", hf.ky3, "host anticanonical degree -K_Y^3 (rational)");
}

HostKind parse_kind(const std::string& text) {
  if (text == "E1") return HostKind::E1;
  if (text == "E2") return HostKind::E2;
  if (text == "E3E4") return HostKind::E3E4;
  return HostKind::E5;
}

// (model, case id) from either a --case reference or raw host flags
std::pair<HostModel, std::string> resolve_host(const HostFlags& hf) {
  if (!hf.case_ref.empty()) {
    CaseRef ref = parse_case(hf.case_ref);
    return {host_model_for_row(find_builtin_row(ref)), hf.case_ref};
  }
  if (hf.ky3.empty())
    throw std::invalid_argument("need either --case or an explicit host (--ky3 ...)");
  Rational ky3 = Rational::parse(hf.ky3);
  HostKind kind = parse_kind(hf.kind);
  if (kind != HostKind::E1) return {make_point_host(kind, ky3), hf.kind};
  if (hf.r < 1 || hf.d < 1)
    throw std::invalid_argument("an E1 host needs --r, --d (and --g, --ky3)");
  std::ostringstream id;
  id << "E1(" << hf.r << "," << hf.d << "," << hf.g << ")";
  return {make_e1_host(hf.r, ky3, hf.d, hf.g), id.str()};
}

// ===========================================================================
// subcommands
// ===========================================================================

int cmd_verify(const std::string& table, const std::vector<int>& rows,
               const std::string& data_dir, const std::string& format,
               const std::string& report_path) {
  Selection sel;
  if (!table.empty()) {
    auto id = parse_table_id(table);
    if (!id) throw std::invalid_argument("unknown table id '" + table + "'");
    sel.table = *id;
  }
  sel.rows = rows;
  if (!data_dir.empty()) sel.data_dir = std::filesystem::path(data_dir);

  VerificationReport rep = run_verification(sel);
  if (format == "json")
    std::cout << report_json(rep).dump(2) << "\n";
  else if (format == "csv")
    render_report_csv(rep, std::cout);
  else
    render_report_human(rep, std::cout);
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write report file '" + report_path + "'");
    out << report_json(rep).dump(2) << "\n";
  }
  return rep.fail == 0 ? 0 : 1;
}

int cmd_certify(const HostFlags& hf, const std::string& format) {
  auto [model, case_id] = resolve_host(hf);
  SmallnessCertificate cert = certify_smallness(model, case_id);
  if (!hf.case_ref.empty()) {
    // completion-type caveats (open rows) ride along on stderr
    const TableRow& row = find_builtin_row(parse_case(hf.case_ref));
    for (const std::string& w : verify_link(model, row).warnings)
      std::cerr << "fano2: warning: " << w << "\n";
  }
  if (format == "json") {
    std::cout << certificate_json(cert).dump(2) << "\n";
  } else {
    std::cout << "case " << cert.case_id << "\n"
              << "restriction  c1 = " << cert.c1 << ", c2 = " << cert.c2 << "\n"
              << "contracted   D = (" << cert.d_class.a << ", " << cert.d_class.b << ")\n"
              << "gram         (" << cert.gram.hh << ", " << cert.gram.hc << ", "
              << cert.gram.cc << ")\n"
              << "D^2 on S     " << cert.square << "\n"
              << "point case   " << (cert.point_excluded ? "excluded" : "not excluded") << "\n"
              << "curve case   " << curve_reason_str(cert.curve_reason) << "\n";
    switch (cert.rep.outcome) {
      case RepOutcome::Yes:
        std::cout << "-2 class     represented, witness (" << cert.rep.witness->first << ", "
                  << cert.rep.witness->second << ")\n";
        break;
      case RepOutcome::No:
        if (cert.rep.definite)
          std::cout << "-2 class     impossible (form is positive definite)\n";
        else
          std::cout << "-2 class     impossible (obstruction mod " << *cert.rep.modulus
                    << ")\n";
        break;
      case RepOutcome::Unknown:
        std::cout << "-2 class     undecided within search bounds\n";
        break;
    }
    std::cout << "verdict      " << verdict_str(cert.verdict) << "\n";
  }
  if (cert.verdict == Verdict::Inconclusive)
    std::cerr << "fano2: note: smallness not certified for " << cert.case_id << "\n";
  return 0;
}

int cmd_solve(const HostFlags& hf, const std::vector<int>& bounds, const std::string& format) {
  auto [model, case_id] = resolve_host(hf);
  SearchBounds sb;
  if (!bounds.empty()) {
    if (bounds.size() != 2 || bounds[0] < 1 || bounds[1] < 0)
      throw std::invalid_argument("--bounds wants dmax,gmax with dmax >= 1, gmax >= 0");
    sb.dmax = bounds[0];
    sb.gmax = bounds[1];
  }
  std::vector<LinkCandidate> cands = enumerate_completions(model, sb);
  if (format == "json")
    std::cout << candidates_json(cands).dump(2) << "\n";
  else if (format == "csv")
    render_candidates_csv(cands, std::cout);
  else {
    std::cout << "host " << case_id << ", -K_X^3 = " << canonical_degrees(model).k3.str()
              << ", bounds d+ <= " << sb.dmax << ", g+ <= " << sb.gmax << "\n";
    render_candidates_human(cands, std::cout);
  }
  return 0;
}

int cmd_export(const std::string& data_dir, bool data_dir_set, const std::string& out_dir,
               const std::string& format) {
  std::map<std::string, std::string> files = regenerate_tables();
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (const auto& [name, text] : files) {
      std::ofstream out(std::filesystem::path(out_dir) / name, std::ios::binary);
      if (!out) throw std::invalid_argument("cannot write '" + name + "' under " + out_dir);
      out << text;
    }
  }
  if (!out_dir.empty() && !data_dir_set) return 0;  // pure export, nothing to diff

  bool clean = true;
  ordered_json jfiles = ordered_json::array();
  std::ostringstream human;
  for (const auto& [name, text] : files) {
    std::filesystem::path disk_path = std::filesystem::path(data_dir) / name;
    std::ifstream in(disk_path, std::ios::binary);
    ordered_json jf;
    jf["file"] = name;
    if (!in) {
      clean = false;
      jf["identical"] = false;
      jf["diff"] = "missing on disk";
      human << name << ": missing under " << data_dir << "\n";
    } else {
      std::ostringstream buf;
      buf << in.rdbuf();
      std::string diff = unified_diff(disk_path.string(), "regenerated/" + name,
                                      buf.str(), text);
      jf["identical"] = diff.empty();
      jf["diff"] = diff;
      if (diff.empty()) {
        human << name << ": ok (" << text.size() << " bytes)\n";
      } else {
        clean = false;
        human << diff;
      }
    }
    jfiles.push_back(jf);
  }
  if (format == "json") {
    ordered_json j;
    j["identical"] = clean;
    j["files"] = jfiles;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << human.str()
              << (clean ? "all datasets match the engine output\n"
                        : "datasets differ from the engine output\n");
  }
  return clean ? 0 : 1;
}

}  // namespace

// ===========================================================================

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for two-ray links of rank-2 weak Fano threefolds"};
  app.set_version_flag("--version", std::string("fano2 ") + kEngineVersion);
  app.require_subcommand(1);

  std::string table, data_dir = "", format = "human", report_path, out_dir;
  std::vector<int> rows, bounds;
  HostFlags cert_hf, solve_hf;

  CLI::App* verify = app.add_subcommand("verify", "recompute and compare the shipped tables");
  CLI::Option* all_opt = verify->add_flag("--all", "verify every row of every table (default)");
  all_opt->excludes(verify->add_option("--table", table, "restrict to one table id (e.g. e1e1)"));
  all_opt->excludes(verify->add_option("--rows", rows, "restrict to these row numbers")
                        ->delimiter(','));
  verify->add_option("--data-dir", data_dir, "read tables from this directory");
  verify->add_option("--format", format, "human, json or csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));
  verify->add_option("--report", report_path, "also write the full JSON report here");

  CLI::App* certify = app.add_subcommand("certify", "K3 smallness certificate of an E1 host");
  add_host_flags(certify, cert_hf, false);
  certify->add_option("--format", format, "human or json")
      ->check(CLI::IsMember({"human", "json"}));

  CLI::App* solve = app.add_subcommand("solve", "enumerate consistent completions of a host");
  add_host_flags(solve, solve_hf, true);
  solve->add_option("--bounds", bounds, "search bounds dmax,gmax (default 20,20)")
      ->delimiter(',');
  solve->add_option("--format", format, "human, json or csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));

  CLI::App* exp = app.add_subcommand("export", "regenerate canonical data files and diff");
  CLI::Option* exp_dir = exp->add_option("--data-dir", data_dir, "directory to diff against");
  exp->add_option("--out", out_dir, "write the regenerated files to this directory");
  exp->add_option("--format", format, "human or json")
      ->check(CLI::IsMember({"human", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits 0, every usage error exits 2
  }

  try {
    if (verify->parsed()) return cmd_verify(table, rows, data_dir, format, report_path);
    if (certify->parsed()) return cmd_certify(cert_hf, format == "csv" ? "human" : format);
    if (solve->parsed()) return cmd_solve(solve_hf, bounds, format);
    if (exp->parsed()) {
      if (data_dir.empty()) data_dir = "data";
      return cmd_export(data_dir, exp_dir->count() > 0, out_dir, format);
    }
  } catch (const std::exception& e) {
    std::cerr << "fano2: error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
