#include "rhor/constructions.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "rhor/bounds.hpp"
#include "rhor/errors.hpp"

namespace rhor {
namespace {

std::vector<int> ascending(int from, int to) {
  std::vector<int> out;
  for (int x = from; x <= to; ++x) out.push_back(x);
  return out;
}

std::vector<int> repeated(int value, int count) { return std::vector<int>(std::max(count, 0), value); }

}  // namespace

DoubleStarSpec::DoubleStarSpec(int a_, int b_) : a(a_), b(b_) {
  if (a < 1 || b < a)
    throw ParameterError("double star needs 1 <= a <= b, got a=" + std::to_string(a) +
                         " b=" + std::to_string(b));
}

Profile path_ub_profile(int n) {
  if (n < 1) throw DomainError("path_ub_profile needs n >= 1");
  // s1, t1, s2, t2 in interleave order.
  std::array<std::vector<int>, 4> seq;
  switch (n % 4) {
    case 0: {
      const int q = n / 4;
      seq[0] = ascending(1, q);
      seq[1] = repeated(n / 2, q);
      seq[2] = ascending(q + 1, n / 2);
      seq[3] = repeated(q, q - 1);
      seq[3].push_back(n / 2);
      break;
    }
    case 1: {
      const int q = (n + 3) / 4;
      const int len = (n - 1) / 4;
      seq[0] = ascending(1, q);
      seq[1] = repeated(q, len);
      seq[2] = ascending(q + 1, (n + 1) / 2);
      seq[3] = repeated((n + 1) / 2, len - 1);
      if (len > 0) seq[3].push_back(q);
      break;
    }
    case 2: {
      const int q = (n + 2) / 4;
      seq[0] = ascending(1, q);
      seq[1] = repeated(n / 2, q);
      seq[2] = ascending(q + 1, n / 2);
      seq[3] = repeated(q, (n - 2) / 4);
      break;
    }
    default: {
      const int q = (n + 1) / 4;
      seq[0] = ascending(1, q);
      seq[1] = repeated(q, q);
      seq[2] = ascending(q + 1, (n + 1) / 2);
      seq[3] = repeated((n + 1) / 2, (n - 3) / 4);
      break;
    }
  }
  std::vector<int> out;
  out.reserve(n);
  for (size_t round = 0; static_cast<int>(out.size()) < n; ++round) {
    for (const auto& s : seq)
      if (round < s.size()) out.push_back(s[round]);
  }
  return Profile(std::move(out));
}

int64_t path_ub_value(int n) {
  if (n < 1) throw DomainError("path_ub_value needs n >= 1");
  const Rational m(n);
  Rational value = m * m / 4 + m * m / 16;
  switch (n % 4) {
    case 0: value += m / 2; break;
    case 1: value += Rational(3) * m / 8 + Rational(5, 16); break;
    case 2: value += m / 2 - Rational(1, 4); break;
    default: value += Rational(3) * m / 8 + Rational(1, 16); break;
  }
  if (value.denominator() != 1)
    throw std::logic_error("path upper bound is not integral for n=" + std::to_string(n));
  return value.numerator();
}

HostGraph double_star_graph(const DoubleStarSpec& spec) {
  HostGraph g(spec.order());
  for (int i = 0; i < spec.a; ++i) g.add_edge(spec.leaf_a(i), spec.center_c());
  g.add_edge(spec.center_c(), spec.center_d());
  for (int i = 0; i < spec.b; ++i) g.add_edge(spec.center_d(), spec.leaf_b(i));
  return g;
}

Profile double_star_profile(const DoubleStarSpec& spec) {
  const int g = spec.run_length();
  std::vector<int> orders(spec.order(), 0);
  // Leaves as runs r_0 A r_1 A ... A r_a of B leaves. Every run is at most g
  // and the inner ones are nonempty, so no two A leaves get adjacent orders.
  int order = 1, left = spec.b, next_b = 0;
  for (int run = 0; run <= spec.a; ++run) {
    const int inner_after = std::max(0, spec.a - 1 - run);
    const int len = std::min(g, left - inner_after);
    for (int i = 0; i < len; ++i) orders[spec.leaf_b(next_b++)] = order++;
    left -= len;
    if (run < spec.a) orders[spec.leaf_a(run)] = order++;
  }
  orders[spec.center_c()] = g + 1;
  orders[spec.center_d()] = 2;
  return Profile(std::move(orders));
}

int64_t double_star_value(const DoubleStarSpec& spec) {
  const int64_t n = spec.order();
  return (n - 2) * (n - 1) / 2 + spec.run_length() + 3;
}

Profile anticlique_profile(int n) {
  if (n < 1) throw DomainError("anticlique_profile needs n >= 1");
  return Profile(ascending(1, n));
}

}  // namespace rhor
