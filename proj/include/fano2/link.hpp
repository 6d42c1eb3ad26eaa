#pragma once

#include <utility>
#include <vector>

#include "fano2/catalog.hpp"
#include "fano2/lattice.hpp"

namespace fano2 {

// =========================================================================
// flop transform and second-leg reconstruction
// =========================================================================
//
// Writing E+ = alpha*(-K) + beta*E, the flop-invariant pairings (-K)^2 E+ and
// (-K) E+^2 must equal the X+-side mirror degrees (s1, s2); the cubic defect
// against s3 = E+^3|_{X+} is carried by finitely many flopping curves and
// defines the correction e in the gauge t(aH + bE) = a q + b p (t(-K) = 0).

struct CompletionKind {
  HostKind kind = HostKind::E1;
  int rp = 0, dp = 0, gp = 0;  // E1 targets only

  friend bool operator==(const CompletionKind& x, const CompletionKind& y) {
    return x.kind == y.kind && (x.kind != HostKind::E1 ||
                                (x.rp == y.rp && x.dp == y.dp && x.gp == y.gp));
  }
};

struct TargetSignature {
  Rational s1, s2, s3;
  CompletionKind kind;
};

// E1(r+,d+,g+): (r+d+ + 2 - 2g+, 2g+ - 2, -r+d+ + 2 - 2g+);
// E2: (4,-2,1); E3E4: (2,-2,2); E5: (1,-2,4)
TargetSignature target_signature(const CompletionKind& kind);

// pairing of D against the flopping-curve class: t(aH + bE) = a q + b p
Rational gamma_coefficient(const HostModel& m, const DivisorClass& dd);

// (D1+ D2+ D3+) = D1 D2 D3 - t(D1) t(D2) t(D3) * e
Rational flopped_triple(const HostModel& m, const DivisorClass& d1, const DivisorClass& d2,
                        const DivisorClass& d3, const Rational& e);

struct AlphaBetaSolutions {
  std::vector<std::pair<Rational, Rational>> accepted;  // alpha > 0, beta < 0
  std::vector<std::pair<Rational, Rational>> rejected;  // other rational roots
  bool degenerate = false;  // k3*kEE == kkE^2: conic degenerates, no isolated roots
};

// all exact solutions of  a*k3 + b*kkE = s1,  a^2*k3 + 2ab*kkE + b^2*kEE = s2
AlphaBetaSolutions solve_alpha_beta(const CanonicalDegrees& deg, const TargetSignature& sig);

// solves E+^3|_X - t(E+)^3 e = s3 for e; requires t(E+) != 0
struct ComputedE {
  bool degenerate = false;  // t(E+) = 0, correction indeterminable
  Rational e;
  DivisorClass e_plus;
};
ComputedE compute_e(const HostModel& m, const Rational& alpha, const Rational& beta,
                    const TargetSignature& sig);

struct LinkCandidate {
  CompletionKind completion;
  Rational alpha, beta, e;
  DivisorClass e_plus;   // E+ in the (H,E) basis of X
  Rational ky_plus3;     // -K_{Y+}^3
};

struct SearchBounds {
  int dmax = 20;
  int gmax = 20;
};

// Tests every completion kind in bounds (E1 over r+ in 1..4, d+ <= dmax,
// g+ <= gmax, plus all point kinds) through solve_alpha_beta + compute_e.
// Accepted candidates satisfy: alpha > 0 > beta; e a positive integer;
// -K_{Y+}^3 = -K_X^3 + degree drop admissible for the target kind; E1 targets
// additionally have H+^3 = -K_{Y+}^3 / r+^3 a positive integer and, when the
// host lattice is integral (non-E5 host), integral E+ and H+ = (-K + E+)/r+.
// Numerical filters only: passing candidates are consistent, not proven links.
// Deterministic, sorted by (kind, r+, d+, g+).
std::vector<LinkCandidate> enumerate_completions(const HostModel& m, SearchBounds bounds = {});

// target completion kind encoded in a table row (second leg)
CompletionKind target_for_row(const TableRow& row);

// per-column comparison of printed vs recomputed values for one table row
struct FieldCheck {
  std::string field;
  std::string printed;   // canonical text of the printed value ("" if absent)
  std::string computed;  // canonical text of the recomputed value
  bool applicable = true;  // false: nothing printed to compare against
  bool pass = true;
};

struct RowVerification {
  TableId table = TableId::e1e1;
  int no = 0;
  RowStatus status = RowStatus::exists;
  std::vector<FieldCheck> fields;  // kx3, kyp3, alpha, beta, e
  bool all_pass = true;
  AlphaBetaSolutions solutions;    // solver output for the row's own target
  std::vector<std::string> warnings;  // e.g. completion-type ambiguity notes
};

// recomputes -K_X^3, -K_{Y+}^3, alpha, beta, e from the row's host data and
// compares exactly against the printed columns
RowVerification verify_link(const HostModel& m, const TableRow& row);

}  // namespace fano2
