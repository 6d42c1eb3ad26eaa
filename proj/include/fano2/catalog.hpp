#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fano2/lattice.hpp"
#include "fano2/rational.hpp"

namespace fano2 {

// =========================================================================
// rank-1 host admissibility and the shipped classification tables
// =========================================================================

// anticanonical degree sets of smooth rank-1 Gorenstein Fano threefolds
// r=1: {2,4,...,18,22} (no 20), r=2: {8,...,40}, r=3: {54}, r=4: {64}
bool validate_host(int r, const Rational& minus_k3);

// a point-blow-up leg only fixes -K_Y^3, not the index: union of the four sets
bool admissible_point_degree(const Rational& minus_k3);

// non-Gorenstein E5 leg: positive with denominator exactly 2
bool admissible_e5_degree(const Rational& minus_k3);

enum class TableId { e1e1, e1e2, e1e34, e1e5, e2e2, e3e3, e5e5 };
enum class RowStatus { exists, not_exists, open };

constexpr TableId kAllTables[] = {TableId::e1e1, TableId::e1e2, TableId::e1e34,
                                  TableId::e1e5, TableId::e2e2, TableId::e3e3,
                                  TableId::e5e5};

std::string table_id_str(TableId id);
std::optional<TableId> parse_table_id(std::string_view text);
std::string status_str(RowStatus s);

// host-leg / second-leg contraction kinds of a table
HostKind table_host_kind(TableId id);
HostKind table_target_kind(TableId id);

struct TableRow {
  TableId table = TableId::e1e1;
  int no = 0;
  Rational kx3;                  // -K_X^3
  Rational ky3;                  // -K_Y^3 (host leg)
  std::optional<Rational> kyp3;  // -K_{Y+}^3; absent in point-point tables
  Rational alpha, beta;          // E+ = alpha*(-K) + beta*E
  std::optional<int> r, d, g;    // E1 host-leg curve data
  std::optional<int> rp, dp, gp; // E1 second-leg curve data
  Rational e;                    // flopping correction, gauge t(D) = aq + bp
  RowStatus status = RowStatus::exists;
  std::string ref;
};

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// schema: table_id,no,kx3,ky3,kyp3,alpha,beta,r,d,g,rp,dp,gp,e,status,ref
// (one header line; ref is the final field and absorbs the rest of the line,
// so citation strings may contain commas). throws CatalogError on malformed
// numbers, unknown status tokens, or duplicate (table_id, no).
std::vector<TableRow> parse_rows_csv(std::string_view text);

// canonical byte-exact serialization (fractions "p/q", integers bare)
std::string format_rows_csv(const std::vector<TableRow>& rows);

std::vector<TableRow> load_table(const std::filesystem::path& file);

// shipped datasets, one per table id, embedded in the library
const std::vector<TableRow>& builtin_rows(TableId id);
std::string_view builtin_csv(TableId id);
std::vector<TableRow> all_builtin_rows();

// data-file name for a table id ("e1e1.csv", ...)
std::string table_file_name(TableId id);

// host model of a row's listed (left) leg
HostModel host_model_for_row(const TableRow& row);

}  // namespace fano2
