#include "fano2/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "fano2/version.hpp"

namespace fano2 {

std::vector<TableRow> load_all_rows(const std::optional<std::filesystem::path>& data_dir) {
  if (!data_dir) return all_builtin_rows();
  std::vector<TableRow> rows;
  for (TableId id : kAllTables) {
    auto part = load_table(*data_dir / table_file_name(id));
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

VerificationReport run_verification(const Selection& sel) {
  VerificationReport report;
  report.engine_version = kEngineVersion;
  std::vector<TableRow> universe = load_all_rows(sel.data_dir);
  for (const TableRow& row : universe) {
    if (sel.table && row.table != *sel.table) { ++report.skipped; continue; }
    if (!sel.rows.empty() &&
        std::find(sel.rows.begin(), sel.rows.end(), row.no) == sel.rows.end()) {
      ++report.skipped;
      continue;
    }
    RowReport rr;
    HostModel m = host_model_for_row(row);
    rr.check = verify_link(m, row);
    if (row.table == TableId::e1e1)
      rr.certificate = certify_smallness(m, "e1e1:" + std::to_string(row.no));
    if (!rr.check.all_pass) ++report.fail;
    if (row.status == RowStatus::open) ++report.open;
    else if (rr.check.all_pass) ++report.pass;
    report.rows.push_back(std::move(rr));
  }
  return report;
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

ordered_json certificate_json(const SmallnessCertificate& cert) {
  ordered_json j;
  j["case_id"] = cert.case_id;
  j["c1"] = cert.c1;
  j["c2"] = cert.c2;
  j["D"] = {cert.d_class.a, cert.d_class.b};
  j["gram"] = {cert.gram.hh, cert.gram.hc, cert.gram.cc};
  j["square"] = cert.square;
  j["point_excluded"] = cert.point_excluded;
  j["curve_reason"] = curve_reason_str(cert.curve_reason);
  j["verdict"] = verdict_str(cert.verdict);
  return j;
}

namespace {

ordered_json pairs_json(const std::vector<std::pair<Rational, Rational>>& ps) {
  ordered_json arr = ordered_json::array();
  for (const auto& [a, b] : ps) arr.push_back({a.str(), b.str()});
  return arr;
}

ordered_json row_json(const RowReport& rr) {
  const RowVerification& rv = rr.check;
  ordered_json j;
  j["table"] = table_id_str(rv.table);
  j["no"] = rv.no;
  j["status"] = status_str(rv.status);
  j["pass"] = rv.all_pass;
  ordered_json checks = ordered_json::array();
  for (const FieldCheck& c : rv.fields) {
    ordered_json cj;
    cj["field"] = c.field;
    if (c.applicable) cj["printed"] = c.printed;
    else cj["printed"] = nullptr;
    cj["computed"] = c.computed;
    cj["pass"] = c.pass;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["solutions"] = {{"degenerate", rv.solutions.degenerate},
                    {"accepted", pairs_json(rv.solutions.accepted)},
                    {"rejected", pairs_json(rv.solutions.rejected)}};
  j["warnings"] = rv.warnings;
  if (rr.certificate) j["certificate"] = certificate_json(*rr.certificate);
  return j;
}

std::string computed_of(const RowVerification& rv, std::string_view field) {
  for (const FieldCheck& c : rv.fields)
    if (c.field == field) return c.computed;
  return "-";
}

}  // namespace

ordered_json report_json(const VerificationReport& report) {
  ordered_json j;
  j["engine_version"] = report.engine_version;
  j["counts"] = {{"pass", report.pass},
                 {"fail", report.fail},
                 {"open", report.open},
                 {"skipped", report.skipped}};
  ordered_json rows = ordered_json::array();
  for (const RowReport& rr : report.rows) rows.push_back(row_json(rr));
  j["rows"] = rows;
  return j;
}

void render_report_human(const VerificationReport& report, std::ostream& out) {
  out << "fano2 " << report.engine_version << " table verification\n";
  out << std::left << std::setw(7) << "table" << std::setw(5) << "no" << std::setw(12)
      << "status" << std::setw(7) << "kx3" << std::setw(7) << "kyp3" << std::setw(7) << "alpha"
      << std::setw(6) << "beta" << std::setw(7) << "e" << std::setw(16) << "smallness"
      << "result\n";
  for (const RowReport& rr : report.rows) {
    const RowVerification& rv = rr.check;
    out << std::left << std::setw(7) << table_id_str(rv.table) << std::setw(5) << rv.no
        << std::setw(12) << status_str(rv.status) << std::setw(7) << computed_of(rv, "kx3")
        << std::setw(7) << computed_of(rv, "kyp3") << std::setw(7) << computed_of(rv, "alpha")
        << std::setw(6) << computed_of(rv, "beta") << std::setw(7) << computed_of(rv, "e")
        << std::setw(16) << (rr.certificate ? verdict_str(rr.certificate->verdict) : "-")
        << (rv.all_pass ? "PASS" : "FAIL") << "\n";
    for (const FieldCheck& c : rv.fields)
      if (!c.pass)
        out << "       mismatch " << c.field << ": printed " << c.printed << ", recomputed "
            << c.computed << "\n";
    for (const std::string& w : rv.warnings) out << "       warning: " << w << "\n";
  }
  out << "pass " << report.pass << "  fail " << report.fail << "  open " << report.open
      << "  skipped " << report.skipped << "\n";
}

void render_report_csv(const VerificationReport& report, std::ostream& out) {
  out << "table_id,no,status,kx3,kyp3,alpha,beta,e,smallness,result\n";
  for (const RowReport& rr : report.rows) {
    const RowVerification& rv = rr.check;
    out << table_id_str(rv.table) << ',' << rv.no << ',' << status_str(rv.status) << ','
        << computed_of(rv, "kx3") << ',' << computed_of(rv, "kyp3") << ','
        << computed_of(rv, "alpha") << ',' << computed_of(rv, "beta") << ','
        << computed_of(rv, "e") << ','
        << (rr.certificate ? verdict_str(rr.certificate->verdict) : "") << ','
        << (rv.all_pass ? "PASS" : "FAIL") << "\n";
  }
}

ordered_json candidates_json(const std::vector<LinkCandidate>& cands) {
  ordered_json arr = ordered_json::array();
  for (const LinkCandidate& c : cands) {
    ordered_json j;
    j["kind"] = kind_name(c.completion.kind);
    if (c.completion.kind == HostKind::E1) {
      j["rp"] = c.completion.rp;
      j["dp"] = c.completion.dp;
      j["gp"] = c.completion.gp;
    } else {
      j["rp"] = nullptr;
      j["dp"] = nullptr;
      j["gp"] = nullptr;
    }
    j["alpha"] = c.alpha.str();
    j["beta"] = c.beta.str();
    j["e"] = c.e.str();
    j["ky_plus3"] = c.ky_plus3.str();
    j["e_plus"] = {c.e_plus.a.str(), c.e_plus.b.str()};
    arr.push_back(j);
  }
  return arr;
}

void render_candidates_human(const std::vector<LinkCandidate>& cands, std::ostream& out) {
  out << std::left << std::setw(6) << "kind" << std::setw(4) << "r+" << std::setw(4) << "d+"
      << std::setw(4) << "g+" << std::setw(8) << "alpha" << std::setw(7) << "beta"
      << std::setw(7) << "e" << std::setw(11) << "-K_{Y+}^3" << "E+\n";
  for (const LinkCandidate& c : cands) {
    bool e1 = c.completion.kind == HostKind::E1;
    out << std::left << std::setw(6) << kind_name(c.completion.kind) << std::setw(4)
        << (e1 ? std::to_string(c.completion.rp) : "-") << std::setw(4)
        << (e1 ? std::to_string(c.completion.dp) : "-") << std::setw(4)
        << (e1 ? std::to_string(c.completion.gp) : "-") << std::setw(8) << c.alpha.str()
        << std::setw(7) << c.beta.str() << std::setw(7) << c.e.str() << std::setw(11)
        << c.ky_plus3.str() << "(" << c.e_plus.a.str() << ", " << c.e_plus.b.str() << ")\n";
  }
  out << cands.size() << " candidate" << (cands.size() == 1 ? "" : "s") << "\n";
}

void render_candidates_csv(const std::vector<LinkCandidate>& cands, std::ostream& out) {
  out << "kind,rp,dp,gp,alpha,beta,e,ky_plus3,e_plus_a,e_plus_b\n";
  for (const LinkCandidate& c : cands) {
    bool e1 = c.completion.kind == HostKind::E1;
    out << kind_name(c.completion.kind) << ',' << (e1 ? std::to_string(c.completion.rp) : "")
        << ',' << (e1 ? std::to_string(c.completion.dp) : "") << ','
        << (e1 ? std::to_string(c.completion.gp) : "") << ',' << c.alpha.str() << ','
        << c.beta.str() << ',' << c.e.str() << ',' << c.ky_plus3.str() << ','
        << c.e_plus.a.str() << ',' << c.e_plus.b.str() << "\n";
  }
}

// ---------------------------------------------------------------------------
// table regeneration
// ---------------------------------------------------------------------------

std::map<std::string, std::string> regenerate_tables() {
  std::map<std::string, std::string> files;
  for (TableId id : kAllTables) {
    std::vector<TableRow> rows = builtin_rows(id);
    for (TableRow& row : rows) {
      HostModel m = host_model_for_row(row);
      CanonicalDegrees deg = canonical_degrees(m);
      CompletionKind target = target_for_row(row);
      TargetSignature sig = target_signature(target);
      AlphaBetaSolutions sols = solve_alpha_beta(deg, sig);
      if (sols.accepted.size() != 1)
        throw std::logic_error("catalog row " + table_id_str(id) + ":" +
                               std::to_string(row.no) + " has no unique completion root");
      const auto& [alpha, beta] = sols.accepted.front();
      ComputedE ce = compute_e(m, alpha, beta, sig);
      if (ce.degenerate)
        throw std::logic_error("catalog row " + table_id_str(id) + ":" +
                               std::to_string(row.no) + " has degenerate flop pairing");
      row.kx3 = deg.k3;
      if (row.kyp3) {
        row.kyp3 = target.kind == HostKind::E1
                       ? deg.k3 + Rational(2 * static_cast<std::int64_t>(target.rp) * target.dp -
                                           2 * target.gp + 2)
                       : deg.k3 + point_degree_drop(target.kind);
      }
      row.alpha = alpha;
      row.beta = beta;
      row.e = ce.e;
    }
    files[table_file_name(id)] = format_rows_csv(rows);
  }
  return files;
}

// ---------------------------------------------------------------------------
// unified diff (line-based LCS; inputs are small table files)
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) { lines.push_back(text.substr(pos)); break; }
    lines.push_back(text.substr(pos, eol - pos));
    pos = eol + 1;
  }
  return lines;
}

}  // namespace

std::string unified_diff(const std::string& from_label, const std::string& to_label,
                         const std::string& from_text, const std::string& to_text) {
  if (from_text == to_text) return "";
  std::vector<std::string> a = split_lines(from_text), b = split_lines(to_text);
  const size_t n = a.size(), mm = b.size();
  std::vector<std::vector<size_t>> lcs(n + 1, std::vector<size_t>(mm + 1, 0));
  for (size_t i = n; i-- > 0;)
    for (size_t j = mm; j-- > 0;)
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);

  // ops: ' ' common, '-' delete, '+' insert; deletions first on ties
  std::vector<std::pair<char, std::string>> ops;
  for (size_t i = 0, j = 0;;) {
    if (i < n && j < mm && a[i] == b[j]) { ops.push_back({' ', a[i]}); ++i; ++j; }
    else if (i < n && (j == mm || lcs[i + 1][j] >= lcs[i][j + 1])) { ops.push_back({'-', a[i]}); ++i; }
    else if (j < mm) { ops.push_back({'+', b[j]}); ++j; }
    else break;
  }

  constexpr size_t ctx = 3;
  std::ostringstream out;
  out << "--- " << from_label << "\n+++ " << to_label << "\n";
  size_t k = 0, ai = 0, bi = 0;
  while (k < ops.size()) {
    if (ops[k].first == ' ') { ++k; ++ai; ++bi; continue; }
    // hunk around ops[k]
    size_t start = k, lead = 0;
    while (start > 0 && lead < ctx && ops[start - 1].first == ' ') { --start; ++lead; }
    size_t a_start = ai - lead, b_start = bi - lead;
    size_t end = k, gap = 0;
    for (size_t t = k; t < ops.size(); ++t) {
      if (ops[t].first == ' ') {
        if (++gap > 2 * ctx) break;
      } else {
        gap = 0;
        end = t;
      }
    }
    size_t stop = std::min(end + ctx + 1, ops.size());
    size_t a_count = 0, b_count = 0;
    for (size_t t = start; t < stop; ++t) {
      if (ops[t].first != '+') ++a_count;
      if (ops[t].first != '-') ++b_count;
    }
    out << "@@ -" << a_start + 1 << "," << a_count << " +" << b_start + 1 << "," << b_count
        << " @@\n";
    for (size_t t = start; t < stop; ++t) out << ops[t].first << ops[t].second << "\n";
    for (size_t t = k; t < stop; ++t) {
      if (ops[t].first != '+') ++ai;
      if (ops[t].first != '-') ++bi;
    }
    k = stop;
  }
  return out.str();
}

}  // namespace fano2
