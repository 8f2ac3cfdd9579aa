#include "rhor/bounds.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

#include "rhor/errors.hpp"

namespace rhor {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
  auto parse_i64 = [&](std::string_view s) {
    int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw ParseError("invalid rational '" + text + "'");
    return v;
  };
  const std::string_view s(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const int64_t den = parse_i64(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(parse_i64(s.substr(0, slash)), den);
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto frac = s.substr(dot + 1);
    if (frac.size() > 12) throw ParseError("too many decimals in '" + text + "'");
    int64_t scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const auto whole_part = s.substr(0, dot);
    const bool negative = !whole_part.empty() && whole_part.front() == '-';
    const int64_t whole = whole_part.empty() || whole_part == "-" ? 0 : parse_i64(whole_part);
    const int64_t f = frac.empty() ? 0 : parse_i64(frac);
    const Rational magnitude = Rational(negative ? -whole : whole) + Rational(f, scale);
    return negative ? -magnitude : magnitude;
  }
  return Rational(parse_i64(s));
}

int64_t edge_min_sum(const Profile& p) {
  int64_t e = 0;
  for (int i = 0; i + 1 < p.size(); ++i) e += std::min(p[i], p[i + 1]);
  return e;
}

bool lm1_check(const Profile& p) {
  const int64_t n = p.size();
  return p.total() + edge_min_sum(p) >= n * (n + 1) / 2;
}

bool sorted_floor_check(const Profile& p) {
  std::vector<int> sorted = p.orders();
  std::sort(sorted.begin(), sorted.end());
  for (int i = 1; i <= static_cast<int>(sorted.size()); ++i)
    if (sorted[i - 1] < (i + 1) / 2) return false;
  return true;
}

int64_t simple_lower(int n) {
  if (n < 0) throw DomainError("simple_lower needs n >= 0");
  int64_t total = 0;
  for (int i = 1; i <= n; ++i) total += (i + 1) / 2;
  return total;
}

void Th1Params::validate() const {
  const Rational half(1, 2);
  const std::pair<const char*, const Rational*> named[] = {
      {"a'", &a_prime}, {"a", &a}, {"b", &b}, {"c", &c}, {"d", &d}};
  for (auto [name, value] : named)
    if (*value < 0 || *value > half)
      throw ParameterError(std::string("parameter ") + name + " = " + to_string(*value) +
                           " is outside [0, 1/2]");
  if (!(b < a && a < a_prime)) throw ParameterError("condition 1 violated: need b < a < a'");
  const Rational load = a + Rational(3, 2) * c + d;
  if (load > a_prime) throw ParameterError("condition 2 violated: need a + 3c/2 + d <= a'");
  if (load > 2 * b) throw ParameterError("condition 3 violated: need a + 3c/2 + d <= 2b");
}

Th1Params Th1Params::corollary() {
  return {Rational(1, 2), Rational(1, 4) + Rational(1, 14), Rational(1, 4), Rational(1, 14),
          Rational(1, 14)};
}

Rational th1_value(int n, const Th1Params& params) {
  if (n < 0 || n % 2 != 0) throw DomainError("th1_value needs an even n >= 0");
  params.validate();
  const Rational half_n(n / 2);
  const Rational cn = params.c * n;
  const Rational clique_term = cn * (cn - 1) / 4;
  const Rational spread_term = params.d * (params.a - params.b) * n * n / 4;
  return half_n * (half_n + 1) + std::min(clique_term, spread_term);
}

Rational corollary_value(int n, bool as_stated) {
  if (n < 0 || n % 2 != 0) throw DomainError("corollary_value needs an even n >= 0");
  const Rational half_n(n / 2);
  const Rational square = Rational(n) * n / 784;
  if (as_stated) return half_n * (half_n + 1) + square;
  return half_n * (half_n + 1) + square - Rational(n, 56);
}

}  // namespace rhor
