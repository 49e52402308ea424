// Exact integer helpers shared by the bound evaluators and tests.
// Square-root bounds are floored through integer square roots so that
// every printed bound is bit-exact; no floating point on comparison paths.
#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace turan {

// Binomial coefficient, exact. Returns 0 for k < 0 or k > n.
long long binom(long long n, long long k);

// floor(sqrt(x)) for unsigned 64-bit x.
std::uint64_t isqrt_u64(std::uint64_t x);

// floor((a + b*sqrt(c)) / d) with a, b, c >= 0 and d > 0, exact.
long long floor_linear_sqrt(long long a, long long b, long long c, long long d);

// Sign of a + b*sqrt(c), c >= 0. Returns -1, 0 or 1.
int sign_linear_sqrt(long long a, long long b, long long c);

inline long long ceil_div(long long num, long long den) {
  if (den <= 0) throw std::invalid_argument("ceil_div: nonpositive denominator");
  return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

// Lexicographic k-subsets of {0..n-1}. Visitor gets each combination as a
// sorted vector; return false from the visitor to stop early.
void for_each_combination(int n, int k,
                          const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace turan
