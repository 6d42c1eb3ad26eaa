#include "fano2/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace fano2 {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || s.empty())
    throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::int64_t n = parse_int(s.substr(0, slash), text);
    std::int64_t d = parse_int(s.substr(slash + 1), text);
    return Rational(n, d);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view head = s.substr(0, dot), tail = s.substr(dot + 1);
    if (tail.empty() || tail.size() > 18)
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    bool neg = !head.empty() && head.front() == '-';
    if (!head.empty() && (head.front() == '-' || head.front() == '+')) head.remove_prefix(1);
    std::int64_t whole = head.empty() ? 0 : parse_int(head, text);
    std::int64_t frac = parse_int(tail, text);
    if (frac < 0) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
    Rational mag = Rational(whole) + Rational(frac, scale);
    return neg ? -mag : mag;
  }
  return Rational(parse_int(s, text));
}

std::optional<Rational> Rational::sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  auto isqrt_exact = [](std::int64_t v) -> std::optional<std::int64_t> {
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
    for (std::int64_t c = r > 1 ? r - 1 : 0; c <= r + 1; ++c)
      if (c * c == v) return c;
    return std::nullopt;
  };
  auto rn = isqrt_exact(x.num());
  auto rd = isqrt_exact(x.den());
  if (!rn || !rd) return std::nullopt;
  return Rational(*rn, *rd);
}

}  // namespace fano2
