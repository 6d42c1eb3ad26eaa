#include "fano2/link.hpp"

#include <algorithm>

namespace fano2 {

TargetSignature target_signature(const CompletionKind& kind) {
  TargetSignature sig;
  sig.kind = kind;
  switch (kind.kind) {
    case HostKind::E1: {
      if (kind.rp < 1 || kind.rp > 4 || kind.dp < 1 || kind.gp < 0)
        throw std::invalid_argument("invalid E1 completion parameters");
      std::int64_t rd = static_cast<std::int64_t>(kind.rp) * kind.dp;
      sig.s1 = Rational(rd + 2 - 2 * kind.gp);
      sig.s2 = Rational(2 * kind.gp - 2);
      sig.s3 = Rational(-rd + 2 - 2 * kind.gp);
      break;
    }
    case HostKind::E2: sig.s1 = 4; sig.s2 = -2; sig.s3 = 1; break;
    case HostKind::E3E4: sig.s1 = 2; sig.s2 = -2; sig.s3 = 2; break;
    case HostKind::E5: sig.s1 = 1; sig.s2 = -2; sig.s3 = 4; break;
  }
  return sig;
}

Rational gamma_coefficient(const HostModel& m, const DivisorClass& dd) {
  return dd.a * m.q + dd.b * m.p;
}

Rational flopped_triple(const HostModel& m, const DivisorClass& d1, const DivisorClass& d2,
                        const DivisorClass& d3, const Rational& e) {
  return triple_product(m, d1, d2, d3) -
         gamma_coefficient(m, d1) * gamma_coefficient(m, d2) * gamma_coefficient(m, d3) * e;
}

AlphaBetaSolutions solve_alpha_beta(const CanonicalDegrees& deg, const TargetSignature& sig) {
  AlphaBetaSolutions out;
  const Rational &k3 = deg.k3, &kkE = deg.kkE, &kEE = deg.kEE;
  if (k3.sign() <= 0) throw std::invalid_argument("solve_alpha_beta needs (-K)^3 > 0");
  // substituting alpha = (s1 - beta kkE)/k3 into the quadratic pairing leaves
  //   s1^2 + beta^2 (k3 kEE - kkE^2) = k3 s2
  Rational den = k3 * kEE - kkE * kkE;
  if (den.is_zero()) {
    out.degenerate = true;
    return out;
  }
  Rational b2 = (k3 * sig.s2 - sig.s1 * sig.s1) / den;
  auto root = Rational::sqrt(b2);
  if (!root) return out;  // no rational root: candidate rejected
  std::vector<Rational> betas{*root};
  if (root->sign() != 0) betas.push_back(-*root);
  for (const Rational& beta : betas) {
    Rational alpha = (sig.s1 - kkE * beta) / k3;
    if (alpha.sign() > 0 && beta.sign() < 0)
      out.accepted.emplace_back(alpha, beta);
    else
      out.rejected.emplace_back(alpha, beta);
  }
  return out;
}

ComputedE compute_e(const HostModel& m, const Rational& alpha, const Rational& beta,
                    const TargetSignature& sig) {
  ComputedE out;
  DivisorClass k = anticanonical(m);
  out.e_plus = {alpha * k.a, alpha * k.b + beta};
  Rational t = gamma_coefficient(m, out.e_plus);
  if (t.is_zero()) {
    out.degenerate = true;
    return out;
  }
  out.e = (triple_product(m, out.e_plus, out.e_plus, out.e_plus) - sig.s3) / (t * t * t);
  return out;
}

namespace {

// -K_{Y+}^3 admissibility and E1-side integrality checks; fills candidate
bool accept_candidate(const HostModel& m, const CompletionKind& kind, const Rational& alpha,
                      const Rational& beta, LinkCandidate& cand) {
  TargetSignature sig = target_signature(kind);
  ComputedE ce = compute_e(m, alpha, beta, sig);
  if (ce.degenerate) return false;
  if (ce.e.sign() <= 0 || !ce.e.is_integer()) return false;
  Rational kx3 = canonical_degrees(m).k3;
  const bool integral_host = m.kind != HostKind::E5;
  Rational kyp3;
  if (kind.kind == HostKind::E1) {
    kyp3 = kx3 + Rational(2 * static_cast<std::int64_t>(kind.rp) * kind.dp - 2 * kind.gp + 2);
    Rational h3p = kyp3 / Rational(kind.rp * kind.rp * kind.rp);
    if (!h3p.is_integer() || h3p.sign() <= 0) return false;
    if (!validate_host(kind.rp, kyp3)) return false;
    DivisorClass k = anticanonical(m);
    DivisorClass hp{(k.a + ce.e_plus.a) / Rational(kind.rp),
                    (k.b + ce.e_plus.b) / Rational(kind.rp)};
    if (integral_host && !(ce.e_plus.a.is_integer() && ce.e_plus.b.is_integer() &&
                           hp.a.is_integer() && hp.b.is_integer()))
      return false;
  } else {
    kyp3 = kx3 + point_degree_drop(kind.kind);
    if (kind.kind == HostKind::E5) {
      if (!admissible_e5_degree(kyp3)) return false;
    } else {
      if (!admissible_point_degree(kyp3)) return false;
    }
    if (integral_host && !(ce.e_plus.a.is_integer() && ce.e_plus.b.is_integer())) return false;
  }
  cand.completion = kind;
  cand.alpha = alpha;
  cand.beta = beta;
  cand.e = ce.e;
  cand.e_plus = ce.e_plus;
  cand.ky_plus3 = kyp3;
  return true;
}

}  // namespace

std::vector<LinkCandidate> enumerate_completions(const HostModel& m, SearchBounds bounds) {
  std::vector<LinkCandidate> out;
  CanonicalDegrees deg = canonical_degrees(m);
  std::vector<CompletionKind> grid;
  for (int rp = 1; rp <= 4; ++rp)
    for (int dp = 1; dp <= bounds.dmax; ++dp)
      for (int gp = 0; gp <= bounds.gmax; ++gp)
        grid.push_back({HostKind::E1, rp, dp, gp});
  grid.push_back({HostKind::E2});
  grid.push_back({HostKind::E3E4});
  grid.push_back({HostKind::E5});
  for (const CompletionKind& kind : grid) {
    AlphaBetaSolutions sols = solve_alpha_beta(deg, target_signature(kind));
    for (const auto& [alpha, beta] : sols.accepted) {
      LinkCandidate cand;
      if (accept_candidate(m, kind, alpha, beta, cand)) out.push_back(cand);
    }
  }
  auto rank = [](const LinkCandidate& c) {
    return std::tuple(static_cast<int>(c.completion.kind), c.completion.rp, c.completion.dp,
                      c.completion.gp);
  };
  std::sort(out.begin(), out.end(),
            [&](const LinkCandidate& x, const LinkCandidate& y) { return rank(x) < rank(y); });
  return out;
}

CompletionKind target_for_row(const TableRow& row) {
  HostKind tk = table_target_kind(row.table);
  if (tk != HostKind::E1) return {tk};
  if (!row.rp || !row.dp || !row.gp)
    throw CatalogError("row " + table_id_str(row.table) + ":" + std::to_string(row.no) +
                       ": E1 second leg needs rp, dp, gp");
  return {HostKind::E1, *row.rp, *row.dp, *row.gp};
}

namespace {

FieldCheck make_check(std::string field, const std::string& printed, const std::string& computed,
                      bool applicable = true) {
  FieldCheck c;
  c.field = std::move(field);
  c.printed = printed;
  c.computed = computed;
  c.applicable = applicable;
  c.pass = !applicable || printed == computed;
  return c;
}

}  // namespace

RowVerification verify_link(const HostModel& m, const TableRow& row) {
  RowVerification rv;
  rv.table = row.table;
  rv.no = row.no;
  rv.status = row.status;

  CanonicalDegrees deg = canonical_degrees(m);
  CompletionKind target = target_for_row(row);
  TargetSignature sig = target_signature(target);
  rv.solutions = solve_alpha_beta(deg, sig);

  rv.fields.push_back(make_check("kx3", row.kx3.str(), deg.k3.str()));

  Rational kyp3 = target.kind == HostKind::E1
                      ? deg.k3 + Rational(2 * static_cast<std::int64_t>(target.rp) * target.dp -
                                          2 * target.gp + 2)
                      : deg.k3 + point_degree_drop(target.kind);
  rv.fields.push_back(make_check("kyp3", row.kyp3 ? row.kyp3->str() : std::string(), kyp3.str(),
                                 row.kyp3.has_value()));

  if (rv.solutions.accepted.size() == 1) {
    const auto& [alpha, beta] = rv.solutions.accepted.front();
    rv.fields.push_back(make_check("alpha", row.alpha.str(), alpha.str()));
    rv.fields.push_back(make_check("beta", row.beta.str(), beta.str()));
    ComputedE ce = compute_e(m, alpha, beta, sig);
    rv.fields.push_back(make_check("e", row.e.str(), ce.degenerate ? "-" : ce.e.str()));
  } else {
    // no (or no unique) accepted root: nothing reproduces the printed values
    rv.fields.push_back(make_check("alpha", row.alpha.str(), "-"));
    rv.fields.push_back(make_check("beta", row.beta.str(), "-"));
    rv.fields.push_back(make_check("e", row.e.str(), "-"));
  }

  rv.all_pass = std::all_of(rv.fields.begin(), rv.fields.end(),
                            [](const FieldCheck& c) { return c.pass; });

  if (row.status == RowStatus::open) {
    switch (row.no) {
      case 28:
        rv.warnings.push_back("completion type open: index-2 host falls outside the "
                              "type-determination argument");
        break;
      case 59:
      case 80:
        rv.warnings.push_back("completion type open: an E1-dP link with the same numerics "
                              "is not excluded");
        break;
      case 61:
        rv.warnings.push_back("completion type open: an E1-CB link with the same numerics "
                              "is not excluded");
        break;
      default:
        rv.warnings.push_back("completion type open");
        break;
    }
  }
  return rv;
}

}  // namespace fano2
