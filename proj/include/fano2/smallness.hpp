#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "fano2/lattice.hpp"

namespace fano2 {

// =========================================================================
// certificate that the anticanonical morphism contracts no divisor
// =========================================================================
//
// A contracted divisor D = aH + bE satisfies (-K)^2 D = c1 a + c2 b = 0, so D
// lies on one primitive ray. Restricting to the rank-2 lattice of the
// anticanonical K3 section (gram matrix of (H_S, C)) excludes the point case
// (square != 0) and the conic-bundle case (square = -2k^2 with k dividing the
// primitive class, or no -2 class at all). A certificate is sufficient only:
// absence never proves a divisorial contraction.

struct K3Gram {
  std::int64_t hh = 0;  // (H_S)^2 = r * H^3
  std::int64_t hc = 0;  // H_S . C  = d
  std::int64_t cc = 0;  // C^2      = 2g - 2
};

struct IntClass {
  std::int64_t a = 0, b = 0;
  friend bool operator==(const IntClass& x, const IntClass& y) = default;
};

// primitive integral solution of c1*a + c2*b = 0, normalized to a > 0
// (or b > 0 when a = 0); requires (c1, c2) != (0, 0)
IntClass contracted_class(std::int64_t c1, std::int64_t c2);

// K3-section gram matrix of an E1 host; throws on point kinds
K3Gram k3_gram(const HostModel& m);

// hh a^2 + 2 hc a b + cc b^2; even for every integral class (even lattice)
std::int64_t restriction_square(const K3Gram& gram, const IntClass& dd);

enum class RepOutcome { Yes, No, Unknown };

struct RepResult {
  RepOutcome outcome = RepOutcome::Unknown;
  std::optional<std::pair<std::int64_t, std::int64_t>> witness;  // Yes
  std::optional<int> modulus;  // No via modular obstruction
  bool definite = false;       // No via positive definiteness (no modulus)
};

struct RepOptions {
  std::int64_t witness_bound = 10000;  // x-slice search range
  int max_modulus = 64;                // modular sweep limit
};

// does the gram form represent -2 over the integers? Three-valued: a bounded
// witness search may say Yes, a modular obstruction (or positive definiteness)
// says No, otherwise Unknown.
RepResult represents_minus_two(const K3Gram& gram, const RepOptions& opt = {});

enum class CurveReason { nonminus2square, primitivity, no_minus2_class, none };
enum class Verdict { SmallCertified, Inconclusive };

std::string curve_reason_str(CurveReason r);
std::string verdict_str(Verdict v);

struct SmallnessCertificate {
  std::string case_id;
  std::int64_t c1 = 0, c2 = 0;  // (-K)^2 H, (-K)^2 E
  IntClass d_class;
  K3Gram gram;
  std::int64_t square = 0;  // (D|_S)^2
  bool point_excluded = false;
  CurveReason curve_reason = CurveReason::none;
  Verdict verdict = Verdict::Inconclusive;
  RepResult rep;  // auxiliary detail behind no_minus2_class / Inconclusive
};

// E1 hosts only (throws otherwise). Point exclusion: square != 0. Curve
// exclusion, first applicable reason:
//   no_minus2_class  - the form's content already obstructs -2 (all values
//                      divisible by gcd(hh, 2hc, cc) which does not divide 2)
//                      and represents_minus_two confirms No;
//   nonminus2square  - square != -2k^2 for every integer k >= 1;
//   primitivity      - square = -2k^2 with k >= 2, impossible for a
//                      primitive class;
//   no_minus2_class  - general modular sweep returns No.
// square = -2 cannot be excluded (D itself restricts to a -2 class).
SmallnessCertificate certify_smallness(const HostModel& m, const std::string& case_id = "",
                                       const RepOptions& opt = {});

}  // namespace fano2
