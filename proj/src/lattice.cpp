#include "fano2/lattice.hpp"

namespace fano2 {

std::string kind_name(HostKind k) {
  switch (k) {
    case HostKind::E1: return "E1";
    case HostKind::E2: return "E2";
    case HostKind::E3E4: return "E3E4";
    case HostKind::E5: return "E5";
  }
  return "?";
}

HostModel make_e1_host(int r, const Rational& ky3, int d, int g) {
  if (r < 1 || r > 4) throw std::invalid_argument("E1 host index r must be 1..4");
  if (d < 1) throw std::invalid_argument("E1 host curve degree must be >= 1");
  if (g < 0) throw std::invalid_argument("E1 host curve genus must be >= 0");
  Rational h3 = ky3 / Rational(r * r * r);
  if (!h3.is_integer() || h3.sign() <= 0)
    throw std::invalid_argument("E1 host needs -K_Y^3 = r^3 H^3 with H^3 a positive integer, got -K_Y^3 = " + ky3.str());
  HostModel m;
  m.kind = HostKind::E1;
  m.r = r;
  m.d = d;
  m.g = g;
  m.ky3 = ky3;
  m.p = Rational(r);
  m.q = Rational(1);
  m.h3 = h3;
  m.h2e = Rational(0);
  m.he2 = Rational(-d);
  m.e3 = Rational(-r * static_cast<std::int64_t>(d) + 2 - 2 * static_cast<std::int64_t>(g));
  return m;
}

HostModel make_point_host(HostKind kind, const Rational& ky3) {
  if (kind == HostKind::E1) throw std::invalid_argument("point host kind must be E2/E3E4/E5");
  if (ky3.sign() <= 0) throw std::invalid_argument("point host needs -K_Y^3 > 0");
  HostModel m;
  m.kind = kind;
  m.ky3 = ky3;
  m.p = Rational(1);
  m.h2e = Rational(0);
  m.he2 = Rational(0);
  m.h3 = ky3;
  switch (kind) {
    case HostKind::E2:
      m.q = Rational(2);
      m.e3 = Rational(1);
      break;
    case HostKind::E3E4:
      m.q = Rational(1);
      m.e3 = Rational(2);
      break;
    case HostKind::E5:
      m.q = Rational(1, 2);
      m.e3 = Rational(4);
      break;
    default: break;
  }
  if (kind == HostKind::E5) {
    if (ky3.den() > 2)
      throw std::invalid_argument("E5 host -K_Y^3 must be a half-integer, got " + ky3.str());
  } else if (!ky3.is_integer()) {
    throw std::invalid_argument("Gorenstein point host needs integral -K_Y^3, got " + ky3.str());
  }
  return m;
}

Rational triple_product(const HostModel& m, const DivisorClass& d1,
                        const DivisorClass& d2, const DivisorClass& d3) {
  const Rational &a1 = d1.a, &b1 = d1.b, &a2 = d2.a, &b2 = d2.b, &a3 = d3.a, &b3 = d3.b;
  return a1 * a2 * a3 * m.h3
       + (a1 * a2 * b3 + a1 * b2 * a3 + b1 * a2 * a3) * m.h2e
       + (a1 * b2 * b3 + b1 * a2 * b3 + b1 * b2 * a3) * m.he2
       + b1 * b2 * b3 * m.e3;
}

DivisorClass anticanonical(const HostModel& m) { return {m.p, -m.q}; }

CanonicalDegrees canonical_degrees(const HostModel& m) {
  DivisorClass k = anticanonical(m);
  DivisorClass e{Rational(0), Rational(1)};
  return {triple_product(m, k, k, k), triple_product(m, k, k, e), triple_product(m, k, e, e)};
}

Rational degree_drop(const HostModel& m) {
  if (m.kind == HostKind::E1)
    return Rational(2 * static_cast<std::int64_t>(m.r) * m.d - 2 * m.g + 2);
  return point_degree_drop(m.kind);
}

Rational point_degree_drop(HostKind kind) {
  switch (kind) {
    case HostKind::E2: return Rational(8);
    case HostKind::E3E4: return Rational(2);
    case HostKind::E5: return Rational(1, 2);
    default: throw std::invalid_argument("E1 has no fixed point degree drop");
  }
}

}  // namespace fano2
