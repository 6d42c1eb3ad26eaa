#include "fano2/catalog.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace fano2 {

// ---------------------------------------------------------------------------
// admissibility
// ---------------------------------------------------------------------------

namespace {
const std::set<std::int64_t> kIndex1{2, 4, 6, 8, 10, 12, 14, 16, 18, 22};
const std::set<std::int64_t> kIndex2{8, 16, 24, 32, 40};
const std::set<std::int64_t> kIndex3{54};
const std::set<std::int64_t> kIndex4{64};
}  // namespace

bool validate_host(int r, const Rational& minus_k3) {
  if (!minus_k3.is_integer()) return false;
  std::int64_t v = minus_k3.num();
  switch (r) {
    case 1: return kIndex1.count(v) > 0;
    case 2: return kIndex2.count(v) > 0;
    case 3: return kIndex3.count(v) > 0;
    case 4: return kIndex4.count(v) > 0;
    default: return false;
  }
}

bool admissible_point_degree(const Rational& minus_k3) {
  for (int r = 1; r <= 4; ++r)
    if (validate_host(r, minus_k3)) return true;
  return false;
}

bool admissible_e5_degree(const Rational& minus_k3) {
  return minus_k3.sign() > 0 && minus_k3.den() == 2;
}

// ---------------------------------------------------------------------------
// table ids
// ---------------------------------------------------------------------------

std::string table_id_str(TableId id) {
  switch (id) {
    case TableId::e1e1: return "e1e1";
    case TableId::e1e2: return "e1e2";
    case TableId::e1e34: return "e1e34";
    case TableId::e1e5: return "e1e5";
    case TableId::e2e2: return "e2e2";
    case TableId::e3e3: return "e3e3";
    case TableId::e5e5: return "e5e5";
  }
  return "?";
}

std::optional<TableId> parse_table_id(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  for (TableId id : kAllTables)
    if (s == table_id_str(id)) return id;
  return std::nullopt;
}

std::string status_str(RowStatus s) {
  switch (s) {
    case RowStatus::exists: return "exists";
    case RowStatus::not_exists: return "not_exists";
    case RowStatus::open: return "open";
  }
  return "?";
}

HostKind table_host_kind(TableId id) {
  switch (id) {
    case TableId::e2e2: return HostKind::E2;
    case TableId::e3e3: return HostKind::E3E4;
    case TableId::e5e5: return HostKind::E5;
    default: return HostKind::E1;
  }
}

HostKind table_target_kind(TableId id) {
  switch (id) {
    case TableId::e1e1: return HostKind::E1;
    case TableId::e1e2: case TableId::e2e2: return HostKind::E2;
    case TableId::e1e34: case TableId::e3e3: return HostKind::E3E4;
    case TableId::e1e5: case TableId::e5e5: return HostKind::E5;
  }
  return HostKind::E1;
}

std::string table_file_name(TableId id) { return table_id_str(id) + ".csv"; }

// ---------------------------------------------------------------------------
// csv parsing / formatting
// ---------------------------------------------------------------------------

namespace {

constexpr std::string_view kHeader =
    "table_id,no,kx3,ky3,kyp3,alpha,beta,r,d,g,rp,dp,gp,e,status,ref";
constexpr int kFieldCount = 16;

// split into exactly kFieldCount fields; the final field takes the rest of
// the line verbatim (citation strings may contain commas)
std::array<std::string_view, kFieldCount> split_fields(std::string_view line, int lineno) {
  std::array<std::string_view, kFieldCount> out;
  size_t pos = 0;
  for (int i = 0; i < kFieldCount - 1; ++i) {
    size_t comma = line.find(',', pos);
    if (comma == std::string_view::npos)
      throw CatalogError("line " + std::to_string(lineno) + ": expected 16 fields");
    out[i] = line.substr(pos, comma - pos);
    pos = comma + 1;
  }
  out[kFieldCount - 1] = line.substr(pos);
  return out;
}

Rational field_rational(std::string_view f, std::string_view name, int lineno) {
  try {
    return Rational::parse(f);
  } catch (const std::exception& ex) {
    throw CatalogError("line " + std::to_string(lineno) + ": bad " + std::string(name) +
                       ": " + ex.what());
  }
}

std::optional<int> field_opt_int(std::string_view f, std::string_view name, int lineno) {
  if (f.empty()) return std::nullopt;
  Rational v = field_rational(f, name, lineno);
  if (!v.is_integer())
    throw CatalogError("line " + std::to_string(lineno) + ": " + std::string(name) +
                       " must be an integer");
  return static_cast<int>(v.num());
}

}  // namespace

std::vector<TableRow> parse_rows_csv(std::string_view text) {
  std::vector<TableRow> rows;
  std::set<std::pair<TableId, int>> seen;
  int lineno = 0;
  size_t pos = 0;
  bool saw_header = false;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != kHeader)
        throw CatalogError("line 1: bad header, expected '" + std::string(kHeader) + "'");
      saw_header = true;
      continue;
    }
    auto f = split_fields(line, lineno);
    TableRow row;
    auto id = parse_table_id(f[0]);
    if (!id) throw CatalogError("line " + std::to_string(lineno) + ": unknown table_id '" +
                                std::string(f[0]) + "'");
    row.table = *id;
    auto no = field_opt_int(f[1], "no", lineno);
    if (!no) throw CatalogError("line " + std::to_string(lineno) + ": missing row number");
    row.no = *no;
    row.kx3 = field_rational(f[2], "kx3", lineno);
    row.ky3 = field_rational(f[3], "ky3", lineno);
    if (!f[4].empty()) row.kyp3 = field_rational(f[4], "kyp3", lineno);
    row.alpha = field_rational(f[5], "alpha", lineno);
    row.beta = field_rational(f[6], "beta", lineno);
    row.r = field_opt_int(f[7], "r", lineno);
    row.d = field_opt_int(f[8], "d", lineno);
    row.g = field_opt_int(f[9], "g", lineno);
    row.rp = field_opt_int(f[10], "rp", lineno);
    row.dp = field_opt_int(f[11], "dp", lineno);
    row.gp = field_opt_int(f[12], "gp", lineno);
    row.e = field_rational(f[13], "e", lineno);
    if (f[14] == "exists") row.status = RowStatus::exists;
    else if (f[14] == "not_exists") row.status = RowStatus::not_exists;
    else if (f[14] == "open") row.status = RowStatus::open;
    else throw CatalogError("line " + std::to_string(lineno) + ": unknown status token '" +
                            std::string(f[14]) + "'");
    row.ref = std::string(f[15]);
    if (!seen.insert({row.table, row.no}).second)
      throw CatalogError("line " + std::to_string(lineno) + ": duplicate row " +
                         table_id_str(row.table) + ":" + std::to_string(row.no));
    rows.push_back(std::move(row));
  }
  if (!saw_header) throw CatalogError("empty table file");
  return rows;
}

std::string format_rows_csv(const std::vector<TableRow>& rows) {
  std::string out(kHeader);
  out += '\n';
  auto opt_int = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  for (const TableRow& row : rows) {
    out += table_id_str(row.table);
    out += ',' + std::to_string(row.no);
    out += ',' + row.kx3.str();
    out += ',' + row.ky3.str();
    out += ',' + (row.kyp3 ? row.kyp3->str() : std::string());
    out += ',' + row.alpha.str();
    out += ',' + row.beta.str();
    out += ',' + opt_int(row.r);
    out += ',' + opt_int(row.d);
    out += ',' + opt_int(row.g);
    out += ',' + opt_int(row.rp);
    out += ',' + opt_int(row.dp);
    out += ',' + opt_int(row.gp);
    out += ',' + row.e.str();
    out += ',' + status_str(row.status);
    out += ',' + row.ref;
    out += '\n';
  }
  return out;
}

std::vector<TableRow> load_table(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw CatalogError("cannot open table file: " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_rows_csv(buf.str());
}

HostModel host_model_for_row(const TableRow& row) {
  HostKind hk = table_host_kind(row.table);
  if (hk == HostKind::E1) {
    if (!row.r || !row.d || !row.g)
      throw CatalogError("row " + table_id_str(row.table) + ":" + std::to_string(row.no) +
                         ": E1 host leg needs r, d, g");
    return make_e1_host(*row.r, row.ky3, *row.d, *row.g);
  }
  return make_point_host(hk, row.ky3);
}

// ---------------------------------------------------------------------------
// builtin datasets (byte-identical to the shipped data files)
// ---------------------------------------------------------------------------

namespace {

constexpr std::string_view k_e1e2_csv = R"csv(table_id,no,kx3,ky3,kyp3,alpha,beta,r,d,g,rp,dp,gp,e,status,ref
e1e2,1,4,40,12,5/2,-1/2,2,12,7,,,,24,not_exists,Kal09
e1e2,2,6,24,14,3/2,-1/2,2,4,0,,,,16,exists,Tak89
e1e2,3,14,64,22,3/4,-1/4,4,6,0,,,,6,exists,Tak89
)csv";

constexpr std::string_view k_e1e34_csv = R"csv(table_id,no,kx3,ky3,kyp3,alpha,beta,r,d,g,rp,dp,gp,e,status,ref
e1e34,4,10,64,12,3/4,-1/4,4,8,6,,,,5,exists,CM13
e1e34,5,12,54,14,2/3,-1/3,3,8,4,,,,4,exists,CM13
e1e34,6,14,32,16,1/2,-1/2,2,4,0,,,,4,exists,CM13
e1e34,7,16,40,18,1/2,-1/2,2,6,1,,,,3,exists,CM13
)csv";

constexpr std::string_view k_e1e5_csv = R"csv(table_id,no,kx3,ky3,kyp3,alpha,beta,r,d,g,rp,dp,gp,e,status,ref
e1e5,3,8,64,17/2,3/4,-1/4,4,9,9,,,,6,exists,CM13
e1e5,4,10,24,21/2,1/2,-1/2,2,3,0,,,,6,exists,CM13
e1e5,5,10,54,21/2,2/3,-1/3,3,9,6,,,,5,exists,CM13
e1e5,6,12,32,25/2,1/2,-1/2,2,5,1,,,,5,exists,CM13
e1e5,7,14,40,29/2,1/2,-1/2,2,7,2,,,,4,exists,CM13
)csv";

constexpr std::string_view k_e2e2_csv = R"csv(table_id,no,kx3,ky3,kyp3,alpha,beta,r,d,g,rp,dp,gp,e,status,ref
e2e2,1,8,16,,1,-1,,,,,,,12,exists,Tak89
e2e2,2,4,12,,2,-1,,,,,,,30,exists,Kal09
e2e2,3,2,10,,4,-1,,,,,,,90,exists,Thm 2
)csv";

constexpr std::string_view k_e3e3_csv = R"csv(table_id,no,kx3,ky3,kyp3,alpha,beta,r,d,g,rp,dp,gp,e,status,ref
e3e3,1,4,6,,1,-1,,,,,,,12,exists,Kal09
e3e3,2,2,4,,2,-1,,,,,,,24,exists,Puk88
)csv";

constexpr std::string_view k_e5e5_csv = R"csv(table_id,no,kx3,ky3,kyp3,alpha,beta,r,d,g,rp,dp,gp,e,status,ref
e5e5,1,2,5/2,,1,-1,,,,,,,15,exists,CP10
)csv";

constexpr std::string_view k_e1e1_csv = R"csv(table_id,no,kx3,ky3,kyp3,alpha,beta,r,d,g,rp,dp,gp,e,status,ref
e1e1,1,2,6,6,3,-1,1,1,0,1,1,0,47,exists,Isk78
e1e1,2,2,8,8,4,-1,1,2,0,1,2,0,88,exists,Thm 1
e1e1,3,2,10,10,5,-1,1,3,0,1,3,0,153,exists,ACM17
e1e1,4,2,12,12,6,-1,1,4,0,1,4,0,248,exists,ACM17
e1e1,5,2,14,14,7,-1,1,5,0,1,5,0,379,exists,ACM17
e1e1,6,2,16,16,8,-1,1,6,0,1,6,0,552,exists,ACM17
e1e1,7,2,18,18,9,-1,1,7,0,1,7,0,773,exists,ACM17
e1e1,8,2,22,22,11,-1,1,9,0,1,9,0,1383,exists,ACM17
e1e1,10,2,10,10,4,-1,1,4,1,1,4,1,56,exists,Thm 1
e1e1,11,2,12,12,5,-1,1,5,1,1,5,1,115,exists,ACM17
e1e1,12,2,14,14,6,-1,1,6,1,1,6,1,204,exists,ACM17
e1e1,13,2,16,16,7,-1,1,7,1,1,7,1,329,exists,ACM17
e1e1,14,2,18,18,8,-1,1,8,1,1,8,1,496,exists,ACM17
e1e1,15,2,22,22,10,-1,1,10,1,1,10,1,980,exists,ACM17
e1e1,18,2,16,16,6,-1,1,8,2,1,8,2,160,exists,ACM17
e1e1,19,2,18,18,7,-1,1,9,2,1,9,2,279,exists,ACM17
e1e1,20,2,22,22,9,-1,1,11,2,1,11,2,649,exists,ACM17
e1e1,23,2,22,22,8,-1,1,12,3,1,12,3,384,exists,ACM17
e1e1,28,2,16,16,8,-1,2,3,0,2,3,0,69,open,
e1e1,29,2,24,24,12,-1,2,5,0,2,5,0,223,exists,CM13
e1e1,30,2,32,32,16,-1,2,7,0,2,7,0,521,exists,ACM17
e1e1,31,2,40,40,20,-1,2,9,0,2,9,0,1011,exists,ACM17
e1e1,33,2,24,24,10,-1,2,6,2,2,6,2,114,exists,CM13
e1e1,34,2,32,32,14,-1,2,8,2,2,8,2,328,exists,ACM17
e1e1,35,2,40,40,18,-1,2,10,2,2,10,2,710,exists,ACM17
e1e1,37,2,32,32,12,-1,2,9,4,2,9,4,183,exists,ACM17
e1e1,38,2,40,40,16,-1,2,11,4,2,11,4,469,exists,ACM17
e1e1,39,2,32,32,10,-1,2,10,6,2,10,6,80,exists,Thm 1
e1e1,40,2,40,40,14,-1,2,12,6,2,12,6,282,exists,ACM17
e1e1,41,2,32,32,8,-1,2,11,8,2,11,8,13,exists,ACM17
e1e1,42,2,40,40,12,-1,2,13,8,2,13,8,143,exists,ACM17
e1e1,44,2,54,54,25,-1,3,9,2,3,9,2,571,exists,ACM17
e1e1,45,2,54,54,22,-1,3,10,5,3,10,5,372,exists,ACM17
e1e1,46,2,54,54,19,-1,3,11,8,3,11,8,221,exists,ACM17
e1e1,47,2,54,54,16,-1,3,12,11,3,12,11,112,exists,Thm 1
e1e1,48,2,54,54,13,-1,3,13,14,3,13,14,39,exists,ACM17
e1e1,49,2,64,64,30,-1,4,8,2,4,8,2,418,exists,CM13
e1e1,50,2,64,64,26,-1,4,9,6,4,9,6,261,exists,CM13
e1e1,51,2,64,64,22,-1,4,10,10,4,10,10,146,exists,CM13
e1e1,52,2,64,64,18,-1,4,11,14,4,11,14,67,exists,CM13
e1e1,54,4,10,10,2,-1,1,2,0,1,2,0,28,exists,Tak89
e1e1,55,4,14,14,3,-1,1,4,0,1,4,0,68,exists,ACM17
e1e1,56,4,18,18,4,-1,1,6,0,1,6,0,144,exists,ACM17
e1e1,57,4,22,22,5,-1,1,8,0,1,8,0,268,exists,ACM17
e1e1,59,4,16,16,3,-1,1,6,1,1,6,1,42,open,
e1e1,61,4,22,22,4,-1,1,10,2,1,10,2,80,open,
e1e1,63,4,24,14,5/2,-1/2,2,5,1,1,5,1,25,exists,Isk78
e1e1,64,4,32,18,7/2,-1/2,2,7,1,1,7,1,77,exists,ACM17
e1e1,65,4,40,22,9/2,-1/2,2,9,1,1,9,1,171,exists,ACM17
e1e1,67,4,32,32,6,-1,2,8,3,2,8,3,40,exists,Thm 1
e1e1,68,4,40,40,8,-1,2,10,3,2,10,3,110,exists,ACM17
e1e1,69,4,40,40,6,-1,2,12,7,2,12,7,18,exists,ACM17
e1e1,70,4,54,16,11/3,-1/3,3,9,3,1,5,0,103,exists,ACM17
e1e1,71,4,54,54,13,-1,3,8,0,3,8,0,164,exists,ACM17
e1e1,72,4,54,54,10,-1,3,10,6,3,10,6,60,exists,Thm 1
e1e1,74,4,64,12,11/4,-1/4,4,9,7,1,3,0,45,exists,[Tak89,IP99]
e1e1,75,4,64,64,14,-1,4,8,3,4,8,3,82,exists,CM13
e1e1,76,4,64,64,10,-1,4,10,11,4,10,11,20,exists,JPR05
e1e1,77,6,10,10,1,-1,1,1,0,1,1,0,11,exists,Isk78
e1e1,78,6,16,16,2,-1,1,4,0,1,4,0,32,exists,Thm 1
e1e1,79,6,22,22,3,-1,1,7,0,1,7,0,89,exists,ACM17
e1e1,80,6,18,18,2,-1,1,6,1,1,6,1,12,open,
e1e1,81,6,40,18,5/2,-1/2,2,9,2,1,5,0,47,exists,ACM17
e1e1,83,6,40,40,6,-1,2,8,0,2,8,0,82,exists,ACM17
e1e1,84,6,32,32,4,-1,2,7,2,2,7,2,17,exists,ACM17
e1e1,86,6,54,22,8/3,-1/3,3,8,1,1,8,1,48,exists,ACM17
e1e1,87,6,54,12,5/3,-1/3,3,10,7,1,2,0,14,exists,[Tak89
e1e1,88,6,54,54,7,-1,3,9,4,3,9,4,31,exists,ACM17
e1e1,89,6,64,40,9/2,-1/2,4,8,4,2,10,4,24,exists,CM13
e1e1,90,6,64,64,10,-1,4,7,0,4,7,0,47,exists,CM13
e1e1,92,8,14,14,1,-1,1,2,0,1,2,0,10,exists,Tak89
e1e1,93,8,22,22,2,-1,1,6,0,1,6,0,36,exists,ACM17
e1e1,94,8,40,16,3/2,-1/2,2,9,3,1,3,0,12,exists,ACM17
e1e1,96,8,40,40,4,-1,2,8,1,2,8,1,28,exists,ACM17
e1e1,97,8,54,18,5/3,-1/3,3,8,2,1,4,0,20,exists,ACM17
e1e1,98,8,64,22,7/4,-1/4,4,7,1,1,7,1,14,exists,CM13
e1e1,99,8,64,64,6,-1,4,8,5,4,8,5,10,exists,BL12
e1e1,100,10,18,18,1,-1,1,3,0,1,3,0,9,exists,ACM17
e1e1,101,10,40,22,3/2,-1/2,2,7,0,1,5,0,18,exists,ACM17
e1e1,102,10,54,54,4,-1,3,8,3,3,8,3,8,exists,Thm 1
e1e1,103,10,64,32,5/2,-1/2,4,7,2,2,5,0,9,exists,CM13
e1e1,104,12,22,22,1,-1,1,4,0,1,4,0,8,exists,ACM17
e1e1,105,12,54,40,7/3,-2/3,3,7,1,2,7,1,7,exists,ACM17
e1e1,106,12,64,16,3/4,-1/4,4,7,3,1,1,0,5,exists,Isk78
e1e1,107,14,40,40,2,-1,2,6,0,2,6,0,6,exists,ChSh11
e1e1,108,14,54,18,2/3,-1/3,3,7,2,1,1,0,4,exists,Isk78
e1e1,109,16,54,22,2/3,-1/3,3,6,0,1,2,0,4,exists,Tak89
e1e1,110,18,40,22,1/2,-1/2,2,5,0,1,1,0,3,exists,Isk78
e1e1,111,22,64,64,2,-1,4,5,0,4,5,0,1,exists,CM13
)csv";

std::string_view builtin_text(TableId id) {
  switch (id) {
    case TableId::e1e1: return k_e1e1_csv;
    case TableId::e1e2: return k_e1e2_csv;
    case TableId::e1e34: return k_e1e34_csv;
    case TableId::e1e5: return k_e1e5_csv;
    case TableId::e2e2: return k_e2e2_csv;
    case TableId::e3e3: return k_e3e3_csv;
    case TableId::e5e5: return k_e5e5_csv;
  }
  return {};
}

}  // namespace

std::string_view builtin_csv(TableId id) { return builtin_text(id); }

const std::vector<TableRow>& builtin_rows(TableId id) {
  static const std::map<TableId, std::vector<TableRow>> cache = [] {
    std::map<TableId, std::vector<TableRow>> m;
    for (TableId t : kAllTables) m.emplace(t, parse_rows_csv(builtin_text(t)));
    return m;
  }();
  return cache.at(id);
}

std::vector<TableRow> all_builtin_rows() {
  std::vector<TableRow> rows;
  for (TableId t : kAllTables) {
    const auto& part = builtin_rows(t);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

}  // namespace fano2
