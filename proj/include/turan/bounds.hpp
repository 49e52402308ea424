// Closed-form evaluators for the extremal edge-count formulas, with
// hypothesis checking. All comparisons and floors are exact integer
// arithmetic; square roots go through integer isqrt. Floating point appears
// only in display approximations and the profile envelopes.
#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "turan/extable.hpp"

namespace turan {

// ex(n, M_{s+1}). The classical value, clamped to the complete graph when
// n <= 2s+1 (the closed form's clique term assumes n is large enough to
// host it).
long long erdos_gallai(long long n, long long s);

// Edge count of the g1 family member at core size x:
//   (l-1)n + (t-1) C(x,l) + C(2(s-x)+1, 2) - ceil(x(l-1)/2)
long long f1_value(int x, int l, int t, int s, long long n);

enum class ExTag { Exact, Lower, Upper };

struct ExValue {
  long long value = 0;
  ExTag tag = ExTag::Exact;
  std::string source;
};

inline constexpr unsigned kAllowExact = 1u;
inline constexpr unsigned kAllowLower = 2u;
inline constexpr unsigned kAllowUpper = 4u;
inline constexpr unsigned kAllowAll = 7u;

// ex(m, K_{l,t}) resolution, in priority order: exact table entry; the
// complete-graph value C(m,2) when m <= l+t-1 (too few vertices for the
// biclique); a lower-only table entry; the square-root upper bounds for
// l = 2. Returns nothing if no allowed source answers.
std::optional<ExValue> resolve_ex(int m, int l, int t, const ExTable* table,
                                  unsigned allow);

// Edge count of the g2 family member at core size x:
//   (l-1)n + (t-1)C(x,l) + ex(2(s-x)+1, K_{l,t}) - ceil(x(l-1)/2) - (2(s-x)+1)(l-1)
// Tag inherited from the ex lookup; upper surrogates are refused since the
// formula is a lower-bound form.
std::optional<ExValue> f2_value(int x, int l, int t, int s, long long n,
                                const ExTable* table, unsigned allow);

// max F1(x) over the g1-feasible range max{2s-t+1, 2l} <= 2x <= 2s.
// Absent when the range is empty.
std::optional<long long> r1_value(int l, int t, int s, long long n);

// max F2(x) over 2l <= 2x <= 2s-t, using exact or lower-only lookups; x with
// no resolvable lookup are skipped. Absent when the range is empty or nothing
// resolves. Tag is Exact only if every x in the range resolved exactly.
std::optional<ExValue> r2_value(int l, int t, int s, long long n,
                                const ExTable* table);

// Minimum order hosting the core-x member: x + (t-1)C(x,l) + 2(s-x) + 1.
long long n_of_x(int x, int l, int t, int s);
// max over 0 <= x <= s (equals max{n(0), n(s)}; both routes are computed and
// must agree).
long long n1_value(int l, int t, int s);

struct SqrtBound {
  long long floor_value = 0;
  double approx = 0.0;
};

// ex(n, C_4) <= n(1 + sqrt(4n-3))/4.
SqrtBound c4_edge_bound(long long n);

// ex(n, K_{2,t}) <= n(1 + sqrt(4(t-1)n - (4t-5)))/4 for t >= 3, n >= 5.
SqrtBound k2t_edge_bound(long long n, int t);

// Per-x upper bound on the edges of a free graph whose largest qualifying
// deficiency set has size x. For x >= l the horn-counting bound; for
// 1 <= x <= l-1 the spliced-components bound, which needs
// ex(2(s-l+1)+1, K_{l,t}). Upper surrogates only.
std::optional<ExValue> per_x_upper(int x, int l, int t, int s, long long n,
                                   const ExTable* table, unsigned allow);

// Proof envelopes for l = 2: the per-x bound with the square-root surrogate
// substituted, as a real function (display/convexity sweeps only).
double c4_envelope(int x, int s, long long n);
double k2t_envelope(int x, int t, int s, long long n);

// Exact-rational checks used by the l=2 exactness proofs:
//   C(s,2) - ceil(s/2) + 3/4 >= (2s-3)/4 (1 + sqrt(8s-15))   and
//   C(s,2) - ceil(s/2) + 3/4 >= (2s-1)/4 (1 + sqrt(8s-7)) - 1.
bool c4_exact_regime_inequalities(int s);

// Exact sign of k2t_envelope(s) - k2t_envelope(1) (n-independent).
int k2t_envelope_gap_sign(int t, int s);

struct TheoremStatus {
  std::string name;
  bool applicable = false;
  std::string reason;
};

struct BoundReport {
  int l = 0, t = 0, s = 0;
  long long n = 0;

  std::vector<std::pair<int, long long>> f1_sweep;                 // (x, F1(x))
  std::vector<std::tuple<int, long long, ExTag>> f2_sweep;         // (x, F2(x), tag)
  std::vector<std::pair<int, long long>> n_sweep;                  // (x, n(x))
  std::optional<long long> r1;
  std::optional<ExValue> r2;
  long long n1 = 0;

  std::optional<long long> lower_bound;
  std::string lower_source;
  std::optional<long long> upper_bound;
  std::string upper_source;
  std::optional<long long> exact_value;
  std::string exact_source;

  std::vector<TheoremStatus> applicability;

  std::string to_json() const;
  std::string to_text() const;
};

// Evaluates every bound and theorem at (l, t, s, n). Hypotheses are checked,
// never assumed; results proved only for "s large enough" are reported as
// asymptotic and never asserted exact.
BoundReport evaluate_bounds(int l, int t, int s, long long n, const ExTable* table);

}  // namespace turan
