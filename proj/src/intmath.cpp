#include "turan/intmath.hpp"

#include <cmath>

namespace turan {

long long binom(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  __int128 r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact: product of i consecutive ints divisible by i!
    if (r > (__int128)9e18) throw std::overflow_error("binom overflow");
  }
  return (long long)r;
}

std::uint64_t isqrt_u64(std::uint64_t x) {
  if (x == 0) return 0;
  std::uint64_t r = (std::uint64_t)std::sqrt((double)x);
  while (r != 0 && r > x / r) --r;
  while ((r + 1) <= x / (r + 1)) ++r;
  return r;
}

long long floor_linear_sqrt(long long a, long long b, long long c, long long d) {
  if (a < 0 || b < 0 || c < 0 || d <= 0)
    throw std::invalid_argument("floor_linear_sqrt: bad arguments");
  // floor((a + sqrt(b^2 c)) / d) == (a + isqrt(b^2 c)) / d: any integer j with
  // F < j <= sqrt(B) would contradict F = floor(sqrt(B)).
  __int128 B = (__int128)b * b * c;
  if (B > (__int128)UINT64_MAX) throw std::overflow_error("floor_linear_sqrt overflow");
  std::uint64_t F = isqrt_u64((std::uint64_t)B);
  return (long long)(((__int128)a + F) / d);
}

int sign_linear_sqrt(long long a, long long b, long long c) {
  if (c < 0) throw std::invalid_argument("sign_linear_sqrt: negative radicand");
  if (b == 0 || c == 0) return a > 0 ? 1 : (a < 0 ? -1 : 0);
  if (b > 0 && a >= 0) return 1;
  if (b < 0 && a <= 0) return -1;
  __int128 lhs = (__int128)a * a;
  __int128 rhs = (__int128)b * b * c;
  if (a > 0) {  // b < 0: compare a vs |b| sqrt(c)
    return lhs > rhs ? 1 : (lhs == rhs ? 0 : -1);
  }
  // a < 0, b > 0: compare b sqrt(c) vs |a|
  return rhs > lhs ? 1 : (rhs == lhs ? 0 : -1);
}

void for_each_combination(int n, int k,
                          const std::function<bool(const std::vector<int>&)>& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    if (!visit(c)) return;
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace turan
