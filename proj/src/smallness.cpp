#include "fano2/smallness.hpp"

#include <cmath>
#include <numeric>
#include <set>

namespace fano2 {

IntClass contracted_class(std::int64_t c1, std::int64_t c2) {
  if (c1 == 0 && c2 == 0)
    throw std::invalid_argument("degenerate host: (-K)^2 vanishes on the whole lattice");
  std::int64_t g = std::gcd(c1 < 0 ? -c1 : c1, c2 < 0 ? -c2 : c2);
  std::int64_t a = c2 / g, b = -c1 / g;
  if (a < 0 || (a == 0 && b < 0)) { a = -a; b = -b; }
  return {a, b};
}

K3Gram k3_gram(const HostModel& m) {
  if (m.kind != HostKind::E1)
    throw std::invalid_argument("K3 section gram is defined for E1 hosts only");
  return {m.r * m.h3.num(), m.d, 2 * static_cast<std::int64_t>(m.g) - 2};
}

std::int64_t restriction_square(const K3Gram& gram, const IntClass& dd) {
  return gram.hh * dd.a * dd.a + 2 * gram.hc * dd.a * dd.b + gram.cc * dd.b * dd.b;
}

namespace {

std::optional<std::int64_t> isqrt_exact(std::int64_t v) {
  if (v < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
  for (std::int64_t c = r > 1 ? r - 1 : 0; c <= r + 1; ++c)
    if (c * c == v) return c;
  return std::nullopt;
}

}  // namespace

RepResult represents_minus_two(const K3Gram& gram, const RepOptions& opt) {
  RepResult res;
  const std::int64_t hh = gram.hh, hc = gram.hc, cc = gram.cc;
  const std::int64_t disc = hc * hc - hh * cc;
  if (disc < 0 && hh > 0) {  // positive definite: Q >= 0 > -2 everywhere
    res.outcome = RepOutcome::No;
    res.definite = true;
    return res;
  }
  // witness search: fix x, solve the quadratic in y exactly
  // ((x,y) -> (-x,-y) preserves Q, so x >= 0 suffices)
  for (std::int64_t x = 0; x <= opt.witness_bound; ++x) {
    if (cc == 0) {
      if (x == 0 || hc == 0) continue;
      std::int64_t num = -2 - hh * x * x, den = 2 * hc * x;
      if (num % den == 0) {
        res.outcome = RepOutcome::Yes;
        res.witness = {x, num / den};
        return res;
      }
      continue;
    }
    std::int64_t dq = 4 * (disc * x * x - 2 * cc);
    auto s = isqrt_exact(dq);
    if (!s) continue;
    for (std::int64_t sg : {*s, -*s}) {
      std::int64_t num = -2 * hc * x + sg;
      if (num % (2 * cc) == 0) {
        res.outcome = RepOutcome::Yes;
        res.witness = {x, num / (2 * cc)};
        return res;
      }
      if (*s == 0) break;
    }
  }
  // modular sweep: the smallest modulus on which -2 is not a value of Q
  for (int m = 2; m <= opt.max_modulus; ++m) {
    std::set<std::int64_t> values;
    for (std::int64_t x = 0; x < m; ++x)
      for (std::int64_t y = 0; y < m; ++y)
        values.insert(((hh * x * x + 2 * hc * x * y + cc * y * y) % m + m) % m);
    if (values.count(((-2) % m + m) % m) == 0) {
      res.outcome = RepOutcome::No;
      res.modulus = m;
      return res;
    }
  }
  return res;  // Unknown
}

std::string curve_reason_str(CurveReason r) {
  switch (r) {
    case CurveReason::nonminus2square: return "nonminus2square";
    case CurveReason::primitivity: return "primitivity";
    case CurveReason::no_minus2_class: return "no_minus2_class";
    case CurveReason::none: return "none";
  }
  return "?";
}

std::string verdict_str(Verdict v) {
  return v == Verdict::SmallCertified ? "SmallCertified" : "Inconclusive";
}

SmallnessCertificate certify_smallness(const HostModel& m, const std::string& case_id,
                                       const RepOptions& opt) {
  if (m.kind != HostKind::E1)
    throw std::invalid_argument("smallness certificates apply to E1 hosts only");
  SmallnessCertificate cert;
  cert.case_id = case_id;
  // (-K)^2 H and (-K)^2 E via the trilinear form
  DivisorClass k = anticanonical(m);
  Rational c1 = triple_product(m, k, k, DivisorClass{1, 0});
  Rational c2 = triple_product(m, k, k, DivisorClass{0, 1});
  cert.c1 = c1.num();
  cert.c2 = c2.num();
  cert.d_class = contracted_class(cert.c1, cert.c2);
  cert.gram = k3_gram(m);
  cert.square = restriction_square(cert.gram, cert.d_class);
  cert.point_excluded = (cert.square != 0);
  cert.rep = represents_minus_two(cert.gram, opt);

  const std::int64_t content = std::gcd(std::gcd(cert.gram.hh, 2 * cert.gram.hc),
                                        cert.gram.cc < 0 ? -cert.gram.cc : cert.gram.cc);
  std::optional<std::int64_t> k_val;  // square = -2 k^2
  if (cert.square < 0 && cert.square % 2 == 0)
    k_val = isqrt_exact(-cert.square / 2);

  if (content != 1 && content != 2 && cert.rep.outcome == RepOutcome::No)
    cert.curve_reason = CurveReason::no_minus2_class;
  else if (!k_val)
    cert.curve_reason = CurveReason::nonminus2square;
  else if (*k_val >= 2)
    cert.curve_reason = CurveReason::primitivity;
  else if (cert.rep.outcome == RepOutcome::No)
    cert.curve_reason = CurveReason::no_minus2_class;
  else
    cert.curve_reason = CurveReason::none;

  cert.verdict = (cert.point_excluded && cert.curve_reason != CurveReason::none)
                     ? Verdict::SmallCertified
                     : Verdict::Inconclusive;
  return cert;
}

}  // namespace fano2
