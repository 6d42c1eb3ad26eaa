#include "doctest.h"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "fano2/catalog.hpp"
#include "fano2/smallness.hpp"

using namespace fano2;

namespace {

struct CertFixture {
  int no;
  std::int64_t c1, c2;
  IntClass d_class;
  K3Gram gram;
  std::int64_t square;
  CurveReason reason;
};

HostModel host_of(int no) {
  for (const TableRow& row : builtin_rows(TableId::e1e1))
    if (row.no == no) return host_model_for_row(row);
  throw std::logic_error("missing fixture row");
}

}  // namespace

TEST_SUITE("smallness") {

TEST_CASE("contracted class is primitive and oriented") {
  IntClass d = contracted_class(6, 4);
  CHECK(d.a == 2);
  CHECK(d.b == -3);
  CHECK(contracted_class(10, 20) == IntClass{2, -1});
  CHECK(contracted_class(-6, 4) == IntClass{2, 3});
  CHECK(contracted_class(0, 5) == IntClass{1, 0});
  CHECK(contracted_class(5, 0) == IntClass{0, 1});
  CHECK_THROWS_AS(contracted_class(0, 0), std::invalid_argument);

  SUBCASE("orthogonality by construction") {
    const std::vector<std::pair<std::int64_t, std::int64_t>> cs = {
        {6, 4}, {12, 6}, {-8, 20}, {7, -21}, {1, 0}};
    for (auto [c1, c2] : cs) {
      IntClass e = contracted_class(c1, c2);
      CHECK(c1 * e.a + c2 * e.b == 0);
      CHECK(std::gcd(e.a, e.b) == 1);
    }
  }
}

TEST_CASE("gram matrix of the anticanonical section") {
  K3Gram g = k3_gram(host_of(10));
  CHECK(g.hh == 10);
  CHECK(g.hc == 4);
  CHECK(g.cc == 0);
  g = k3_gram(host_of(78));
  CHECK(g.hh == 16);
  CHECK(g.hc == 4);
  CHECK(g.cc == -2);
  CHECK_THROWS_AS(k3_gram(make_point_host(HostKind::E2, Rational(10))),
                  std::invalid_argument);
}

TEST_CASE("restriction squares are even") {
  CHECK(restriction_square({8, 2, -2}, {2, -3}) == -10);
  CHECK(restriction_square({16, 6, 0}, {3, -5}) == -36);
  for (int no : {2, 10, 59, 67, 111}) {
    K3Gram g = k3_gram(host_of(no));
    for (std::int64_t a = -12; a <= 12; ++a)
      for (std::int64_t b = -12; b <= 12; ++b)
        CHECK(restriction_square(g, {a, b}) % 2 == 0);
  }
}

TEST_CASE("representing -2: witnesses, obstructions, definiteness") {
  RepResult r = represents_minus_two({2, 0, -2});
  CHECK(r.outcome == RepOutcome::Yes);
  REQUIRE(r.witness.has_value());
  CHECK(restriction_square({2, 0, -2}, {r.witness->first, r.witness->second}) == -2);
  CHECK(r.witness->first == 0);  // found on the smallest slice

  r = represents_minus_two({10, 4, 0});
  CHECK(r.outcome == RepOutcome::No);
  CHECK_FALSE(r.definite);
  REQUIRE(r.modulus.has_value());
  CHECK(*r.modulus == 8);

  r = represents_minus_two({8, 8, 4});
  CHECK(r.outcome == RepOutcome::No);
  CHECK(*r.modulus == 4);

  r = represents_minus_two({16, 6, 0});
  CHECK(r.outcome == RepOutcome::No);
  CHECK(*r.modulus == 4);

  r = represents_minus_two({2, 0, 2});
  CHECK(r.outcome == RepOutcome::No);
  CHECK(r.definite);
  CHECK_FALSE(r.modulus.has_value());
}

TEST_CASE("certificates reproduce the frozen audit") {
  const CertFixture fixtures[] = {
      {2, 6, 4, {2, -3}, {8, 2, -2}, -10, CurveReason::nonminus2square},
      {10, 6, 4, {2, -3}, {10, 4, 0}, -8, CurveReason::primitivity},
      {39, 6, 10, {5, -3}, {8, 10, 10}, -10, CurveReason::nonminus2square},
      {47, 6, 16, {8, -3}, {6, 12, 20}, -12, CurveReason::nonminus2square},
      {59, 10, 6, {3, -5}, {16, 6, 0}, -36, CurveReason::no_minus2_class},
      {67, 8, 12, {3, -2}, {8, 8, 4}, -8, CurveReason::no_minus2_class},
      {72, 8, 20, {5, -2}, {6, 10, 10}, -10, CurveReason::nonminus2square},
      {78, 12, 6, {1, -2}, {16, 4, -2}, -8, CurveReason::primitivity},
      {102, 10, 20, {2, -1}, {6, 8, 4}, -4, CurveReason::nonminus2square},
  };
  for (const CertFixture& f : fixtures) {
    CAPTURE(f.no);
    SmallnessCertificate cert =
        certify_smallness(host_of(f.no), "e1e1:" + std::to_string(f.no));
    CHECK(cert.case_id == "e1e1:" + std::to_string(f.no));
    CHECK(cert.c1 == f.c1);
    CHECK(cert.c2 == f.c2);
    CHECK(cert.d_class == f.d_class);
    CHECK(cert.gram.hh == f.gram.hh);
    CHECK(cert.gram.hc == f.gram.hc);
    CHECK(cert.gram.cc == f.gram.cc);
    CHECK(cert.square == f.square);
    CHECK(cert.point_excluded);
    CHECK(cert.curve_reason == f.reason);
    CHECK(cert.verdict == Verdict::SmallCertified);
  }

  SUBCASE("obstruction detail behind the imprimitive case") {
    SmallnessCertificate cert = certify_smallness(host_of(67));
    CHECK(cert.rep.outcome == RepOutcome::No);
    REQUIRE(cert.rep.modulus.has_value());
    CHECK(*cert.rep.modulus == 4);
  }

  SUBCASE("every cataloged host certifies") {
    for (const TableRow& row : builtin_rows(TableId::e1e1)) {
      CAPTURE(row.no);
      SmallnessCertificate cert = certify_smallness(host_model_for_row(row));
      CHECK(cert.verdict == Verdict::SmallCertified);
      CHECK(cert.point_excluded);
      CHECK(cert.curve_reason != CurveReason::none);
    }
  }

  SUBCASE("point hosts have no certificate") {
    CHECK_THROWS_AS(certify_smallness(make_point_host(HostKind::E5, Rational(5, 2))),
                    std::invalid_argument);
  }
}

TEST_CASE("reason and verdict names") {
  CHECK(curve_reason_str(CurveReason::nonminus2square) == "nonminus2square");
  CHECK(curve_reason_str(CurveReason::primitivity) == "primitivity");
  CHECK(curve_reason_str(CurveReason::no_minus2_class) == "no_minus2_class");
  CHECK(curve_reason_str(CurveReason::none) == "none");
  CHECK(verdict_str(Verdict::SmallCertified) == "SmallCertified");
  CHECK(verdict_str(Verdict::Inconclusive) == "Inconclusive");
}

}  // TEST_SUITE
