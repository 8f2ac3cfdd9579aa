#pragma once

// Lower bounds and necessary conditions for feasible path profiles.

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

#include "rhor/graph.hpp"

namespace rhor {

using Rational = boost::rational<int64_t>;

std::string to_string(const Rational& r);
/// Accepts "p/q", integers and finite decimals ("0.25").
Rational parse_rational(const std::string& text);

/// Sum of min(p[i], p[i+1]) over consecutive positions.
int64_t edge_min_sum(const Profile& p);

/// total + edge_min_sum >= n(n+1)/2. Necessary for feasibility on P_n.
bool lm1_check(const Profile& p);

/// The i-th smallest order (1-indexed) is at least ceil(i/2).
bool sorted_floor_check(const Profile& p);

/// Sum of ceil(i/2) for i = 1..n: the least total passing sorted_floor_check.
int64_t simple_lower(int n);

/// Parameters of the parametric lower bound. All lie in [0, 1/2] and satisfy
///   (1) b < a < a_prime
///   (2) a + 3c/2 + d <= a_prime
///   (3) a + 3c/2 + d <= 2b
struct Th1Params {
  Rational a_prime;
  Rational a;
  Rational b;
  Rational c;
  Rational d;

  /// Throws ParameterError naming the first violated condition.
  void validate() const;

  /// a' = 1/2, a = 1/4 + 1/14, b = 1/4, c = d = 1/14.
  static Th1Params corollary();
};

/// (n/2)(n/2+1) + min(cn(cn-1)/4, d(a-b)n^2/4) for even n.
Rational th1_value(int n, const Th1Params& params);

/// (n/2)(n/2+1) + n^2/784 - n/56, the value the parameter choice above
/// actually yields. With `as_stated`, returns the stronger
/// n^2/4 + n^2/784 + n/2 instead.
Rational corollary_value(int n, bool as_stated = false);

}  // namespace rhor
