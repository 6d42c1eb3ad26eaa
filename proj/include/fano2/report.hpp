#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fano2/catalog.hpp"
#include "fano2/link.hpp"
#include "fano2/smallness.hpp"

namespace fano2 {

// =========================================================================
// verification reports, serialization, table regeneration
// =========================================================================

using ordered_json = nlohmann::ordered_json;

struct Selection {
  std::optional<TableId> table;  // absent: all tables
  std::vector<int> rows;         // empty: all rows of the selected table(s)
  std::optional<std::filesystem::path> data_dir;  // absent: builtin datasets
};

// all rows of the selection universe (data dir or builtin); throws CatalogError
std::vector<TableRow> load_all_rows(const std::optional<std::filesystem::path>& data_dir);

struct RowReport {
  RowVerification check;
  std::optional<SmallnessCertificate> certificate;  // E1-E1 rows
};

struct VerificationReport {
  std::string engine_version;
  std::vector<RowReport> rows;
  int pass = 0;     // non-open rows with every column matching
  int fail = 0;     // rows with any column mismatch
  int open = 0;     // rows with status open (verified, tallied separately)
  int skipped = 0;  // rows excluded by the selection
};

// runs verify_link on every selected row and certify_smallness on every
// selected E1-E1 row; deterministic
VerificationReport run_verification(const Selection& sel);

// fixed-order certificate object:
// {case_id, c1, c2, D, gram, square, point_excluded, curve_reason, verdict}
ordered_json certificate_json(const SmallnessCertificate& cert);

ordered_json report_json(const VerificationReport& report);
void render_report_human(const VerificationReport& report, std::ostream& out);
void render_report_csv(const VerificationReport& report, std::ostream& out);

ordered_json candidates_json(const std::vector<LinkCandidate>& cands);
void render_candidates_human(const std::vector<LinkCandidate>& cands, std::ostream& out);
void render_candidates_csv(const std::vector<LinkCandidate>& cands, std::ostream& out);

// canonical data files regenerated from the builtin catalog with the computed
// columns (kx3, kyp3 where applicable, alpha, beta, e) recomputed by the
// engine; keyed by file name
std::map<std::string, std::string> regenerate_tables();

// minimal line-based unified diff ("" when equal)
std::string unified_diff(const std::string& from_label, const std::string& to_label,
                         const std::string& from_text, const std::string& to_text);

}  // namespace fano2
