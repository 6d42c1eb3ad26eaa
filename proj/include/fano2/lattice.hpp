#pragma once

#include <string>

#include "fano2/rational.hpp"

namespace fano2 {

// =========================================================================
// rank-2 intersection lattice of a divisorial extremal contraction X -> Y
// =========================================================================
//
// Basis (H, E): H the pullback of the anticanonical generator's data on the
// rank-1 host Y (for E1 hosts, H generates Pic Y and -K_Y = rH), E the
// exceptional divisor. The trilinear form is determined by the four numbers
// (H^3, H^2E, HE^2, E^3) with H^2E = 0 hard-coded per kind.

enum class HostKind { E1, E2, E3E4, E5 };

std::string kind_name(HostKind k);

// a*H + b*E; coefficients rational (E5 models are genuinely non-integral)
struct DivisorClass {
  Rational a, b;
};

struct HostModel {
  HostKind kind = HostKind::E1;
  int r = 0, d = 0, g = 0;  // E1 curve data: host index, curve degree, genus
  Rational ky3;             // -K_Y^3
  Rational p, q;            // -K_X = p*H - q*E
  Rational h3, h2e, he2, e3;
};

// E1: blow-up of a smooth curve of degree d, genus g on Y of index r.
//   H^3 = -K_Y^3 / r^3 (must be a positive integer), HE^2 = -d,
//   E^3 = -rd + 2 - 2g, -K_X = rH - E.
// throws std::invalid_argument on malformed parameters
HostModel make_e1_host(int r, const Rational& ky3, int d, int g);

// E2 / E3E4 / E5: blow-up of a point, H^3 = -K_Y^3, HE^2 = 0 and
//   (q, E^3) = (2, 1), (1, 2), (1/2, 4) respectively; -K_X = H - qE.
HostModel make_point_host(HostKind kind, const Rational& ky3);

// (-K)^3, (-K)^2 E, (-K) E^2 — the three flop-stable / flop-tracked pairings
struct CanonicalDegrees {
  Rational k3, kkE, kEE;
};

// full symmetric trilinear expansion over the (H,E) basis
Rational triple_product(const HostModel& m, const DivisorClass& d1,
                        const DivisorClass& d2, const DivisorClass& d3);

DivisorClass anticanonical(const HostModel& m);

CanonicalDegrees canonical_degrees(const HostModel& m);

// -K_Y^3 - (-K_X)^3: 2rd - 2g + 2 for E1 hosts, else the kind constant
Rational degree_drop(const HostModel& m);

// degree drop of a point kind alone: E2 -> 8, E3E4 -> 2, E5 -> 1/2
Rational point_degree_drop(HostKind kind);

}  // namespace fano2
