#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fano2/link.hpp"
#include "fano2/report.hpp"

using namespace fano2;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

bool has_line(const std::string& text, const std::string& wanted) {
  for (const std::string& line : lines_of(text))
    if (line == wanted) return true;
  return false;
}

// materializes the builtin datasets, optionally corrupting one byte sequence
std::filesystem::path write_data_dir(const std::string& name, const std::string& from = "",
                                     const std::string& to = "") {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::create_directories(dir);
  for (TableId id : kAllTables) {
    std::string text(builtin_csv(id));
    if (!from.empty()) {
      if (auto pos = text.find(from); pos != std::string::npos)
        text.replace(pos, from.size(), to);
    }
    std::ofstream out(dir / table_file_name(id), std::ios::binary);
    out << text;
  }
  return dir;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("full verification sweep") {
  VerificationReport rep = run_verification({});
  CHECK(rep.rows.size() == 107);
  CHECK(rep.pass == 103);
  CHECK(rep.fail == 0);
  CHECK(rep.open == 4);
  CHECK(rep.skipped == 0);
  for (const RowReport& rr : rep.rows) {
    CHECK(rr.check.all_pass);
    CHECK(rr.certificate.has_value() == (rr.check.table == TableId::e1e1));
  }
}

TEST_CASE("selections skip everything else") {
  Selection sel;
  sel.table = TableId::e2e2;
  VerificationReport rep = run_verification(sel);
  CHECK(rep.rows.size() == 3);
  CHECK(rep.skipped == 104);

  sel.rows = {3};
  rep = run_verification(sel);
  CHECK(rep.rows.size() == 1);
  CHECK(rep.rows[0].check.no == 3);

  Selection by_no;
  by_no.rows = {2};  // one row number, every table that has it
  rep = run_verification(by_no);
  CHECK(rep.rows.size() == 4);
}

TEST_CASE("verification reads external data directories") {
  SUBCASE("pristine copy passes") {
    Selection sel;
    sel.data_dir = write_data_dir("fano2_test_pristine");
    VerificationReport rep = run_verification(sel);
    CHECK(rep.fail == 0);
    CHECK(rep.rows.size() == 107);
  }
  SUBCASE("a corrupted correction term is caught") {
    Selection sel;
    sel.data_dir = write_data_dir("fano2_test_corrupt",
                                  "e1e1,2,2,8,8,4,-1,1,2,0,1,2,0,88,exists",
                                  "e1e1,2,2,8,8,4,-1,1,2,0,1,2,0,87,exists");
    VerificationReport rep = run_verification(sel);
    CHECK(rep.fail == 1);
    CHECK(rep.pass == 102);
    for (const RowReport& rr : rep.rows)
      if (rr.check.table == TableId::e1e1 && rr.check.no == 2) {
        CHECK_FALSE(rr.check.all_pass);
        CHECK(rr.check.fields[4].printed == "87");
        CHECK(rr.check.fields[4].computed == "88");
      }
  }
  SUBCASE("missing files raise catalog errors") {
    Selection sel;
    sel.data_dir = std::filesystem::temp_directory_path() / "fano2_test_absent";
    CHECK_THROWS_AS(run_verification(sel), CatalogError);
  }
}

TEST_CASE("json report layout") {
  Selection sel;
  sel.table = TableId::e1e1;
  sel.rows = {2, 63};
  ordered_json j = report_json(run_verification(sel));
  CHECK(j["engine_version"].is_string());
  CHECK(j["counts"]["pass"] == 2);
  CHECK(j["counts"]["fail"] == 0);
  CHECK(j["counts"]["skipped"] == 105);
  REQUIRE(j["rows"].size() == 2);

  const ordered_json& row = j["rows"][0];
  CHECK(row["table"] == "e1e1");
  CHECK(row["no"] == 2);
  CHECK(row["status"] == "exists");
  CHECK(row["pass"] == true);
  REQUIRE(row["checks"].size() == 5);
  CHECK(row["checks"][0]["field"] == "kx3");
  CHECK(row["checks"][0]["printed"] == "2");
  CHECK(row["checks"][0]["computed"] == "2");
  CHECK(row["solutions"]["accepted"].size() == 1);
  CHECK(row["solutions"]["degenerate"] == false);
  CHECK(row["certificate"]["case_id"] == "e1e1:2");

  SUBCASE("inapplicable columns serialize as null") {
    Selection pp;
    pp.table = TableId::e5e5;
    ordered_json jj = report_json(run_verification(pp));
    CHECK(jj["rows"][0]["checks"][1]["field"] == "kyp3");
    CHECK(jj["rows"][0]["checks"][1]["printed"].is_null());
  }
}

TEST_CASE("certificate json is stable, field for field") {
  SmallnessCertificate cert;
  for (const RowReport& rr : run_verification({}).rows)
    if (rr.check.table == TableId::e1e1 && rr.check.no == 2) cert = *rr.certificate;
  CHECK(certificate_json(cert).dump() ==
        "{\"case_id\":\"e1e1:2\",\"c1\":6,\"c2\":4,\"D\":[2,-3],\"gram\":[8,2,-2],"
        "\"square\":-10,\"point_excluded\":true,\"curve_reason\":\"nonminus2square\","
        "\"verdict\":\"SmallCertified\"}");
}

TEST_CASE("rendered reports") {
  VerificationReport rep = run_verification({});

  SUBCASE("csv") {
    std::ostringstream out;
    render_report_csv(rep, out);
    std::vector<std::string> lines = lines_of(out.str());
    REQUIRE(lines.size() == 108);
    CHECK(lines[0] == "table_id,no,status,kx3,kyp3,alpha,beta,e,smallness,result");
    CHECK(has_line(out.str(), "e1e1,2,exists,2,8,4,-1,88,SmallCertified,PASS"));
    CHECK(has_line(out.str(), "e1e1,63,exists,4,14,5/2,-1/2,25,SmallCertified,PASS"));
    CHECK(has_line(out.str(), "e2e2,3,exists,2,10,4,-1,90,,PASS"));
    CHECK(has_line(out.str(), "e5e5,1,exists,2,5/2,1,-1,15,,PASS"));
  }

  SUBCASE("human") {
    std::ostringstream out;
    render_report_human(rep, out);
    CHECK(out.str().find("pass 103  fail 0  open 4  skipped 0") != std::string::npos);
    CHECK(out.str().find("FAIL") == std::string::npos);
    CHECK(out.str().find("completion type open") != std::string::npos);
  }
}

TEST_CASE("candidate serialization") {
  HostModel m = make_e1_host(1, Rational(8), 2, 0);
  std::vector<LinkCandidate> cands = enumerate_completions(m);
  REQUIRE(cands.size() == 4);

  ordered_json arr = candidates_json(cands);
  CHECK(arr.size() == 4);
  CHECK(arr[0]["kind"] == "E1");
  CHECK(arr[0]["rp"] == 1);
  CHECK(arr[0]["alpha"] == "4");
  CHECK(arr[0]["e"] == "88");
  CHECK(arr[3]["kind"] == "E2");
  CHECK(arr[3]["rp"].is_null());
  CHECK(arr[3]["e_plus"][1] == "-5");

  std::ostringstream csv;
  render_candidates_csv(cands, csv);
  std::vector<std::string> lines = lines_of(csv.str());
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "kind,rp,dp,gp,alpha,beta,e,ky_plus3,e_plus_a,e_plus_b");
  CHECK(lines[1] == "E1,1,2,0,4,-1,88,8,4,-5");
  CHECK(lines[4] == "E2,,,,4,-1,89,10,4,-5");

  std::ostringstream human;
  render_candidates_human(cands, human);
  CHECK(human.str().find("4 candidates") != std::string::npos);
}

TEST_CASE("regenerated tables are byte-identical to the shipped ones") {
  std::map<std::string, std::string> files = regenerate_tables();
  REQUIRE(files.size() == 7);
  for (TableId id : kAllTables) {
    CAPTURE(table_id_str(id));
    REQUIRE(files.count(table_file_name(id)) == 1);
    CHECK(files[table_file_name(id)] == std::string(builtin_csv(id)));
  }
}

TEST_CASE("unified diff") {
  CHECK(unified_diff("a", "b", "same\ntext\n", "same\ntext\n").empty());

  std::string from = "h\n1\n2\n3\n4\n5\n6\n7\n8\n9\n";
  std::string to = "h\n1\n2\n3\n4\nX\n6\n7\n8\n9\n";
  std::string diff = unified_diff("old", "new", from, to);
  CHECK(diff.find("--- old\n+++ new\n") == 0);
  CHECK(diff.find("-5\n") != std::string::npos);
  CHECK(diff.find("+X\n") != std::string::npos);
  CHECK(diff.find("@@ -3,7 +3,7 @@") != std::string::npos);

  SUBCASE("insertions and deletions") {
    std::string plus = unified_diff("a", "b", "1\n2\n", "1\nmid\n2\n");
    CHECK(plus.find("+mid\n") != std::string::npos);
    std::string minus = unified_diff("a", "b", "1\nmid\n2\n", "1\n2\n");
    CHECK(minus.find("-mid\n") != std::string::npos);
  }
}

}  // TEST_SUITE
