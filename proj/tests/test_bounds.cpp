#include <doctest.h>

#include <cmath>

#include "turan/bounds.hpp"
#include "turan/constructions.hpp"
#include "turan/intmath.hpp"
#include "turan/oracle.hpp"
#include "test_support.hpp"

using namespace turan;
using namespace turan::testsupport;

TEST_CASE("intmath helpers") {
  CHECK(binom(12, 2) == 66);
  CHECK(binom(4, 3) == 4);
  CHECK(binom(3, 5) == 0);
  CHECK(isqrt_u64(0) == 0);
  CHECK(isqrt_u64(80) == 8);
  CHECK(isqrt_u64(81) == 9);
  CHECK(ceil_div(7, 2) == 4);
  CHECK(ceil_div(6, 2) == 3);
  // floor((5 + 5 sqrt(17))/4) = floor(6.40..) = 6
  CHECK(floor_linear_sqrt(5, 5, 17, 4) == 6);
  CHECK(sign_linear_sqrt(3, -1, 8) == 1);   // 3 > sqrt(8)
  CHECK(sign_linear_sqrt(3, -1, 9) == 0);   // 3 = sqrt(9)
  CHECK(sign_linear_sqrt(3, -1, 10) == -1); // 3 < sqrt(10)
}

TEST_CASE("erdos_gallai") {
  // brute force at (5,1) over every edge subset
  CHECK(naive_exact_ex(5, {std::nullopt, 1}) == 4);
  CHECK(erdos_gallai(5, 1) == 4);
  CHECK(erdos_gallai(7, 2) == 11);
  for (int s = 1; s <= 4; ++s) CHECK(erdos_gallai(2 * s + 1, s) == binom(2 * s + 1, 2));
  // the clamped regime: the complete graph already has a bounded matching
  CHECK(erdos_gallai(5, 3) == 10);
  CHECK(erdos_gallai(4, 2) == 6);
}

TEST_CASE("f1 values") {
  CHECK(f1_value(12, 2, 2, 12, 79) == 139);
  // at x = s the clique term C(1,2) vanishes
  for (int l = 2; l <= 4; ++l)
    for (int t = l; t <= 6; ++t)
      for (int s = l + 1; s <= 9; ++s) {
        long long n = 500;
        long long direct = (l - 1) * n + (t - 1) * binom(s, l) - ceil_div(s * (l - 1), 2);
        CHECK(f1_value(s, l, t, s, n) == direct);
      }
}

TEST_CASE("n_of_x and n1") {
  CHECK(n_of_x(3, 2, 6, 3) == 19);
  for (int s = 3; s <= 10; ++s)
    CHECK(n_of_x(s, 2, 2, s) == s + binom(s, 2) + 1);
  CHECK(n1_value(2, 2, 12) == 79);  // max{25, 79}
  CHECK(n_of_x(0, 2, 2, 12) == 25);
}

TEST_CASE("r1 and r2 ranges") {
  // r2 range empty when 2s - t < 2l
  CHECK_FALSE(r2_value(2, 6, 3, 100, nullptr).has_value());
  CHECK(r1_value(2, 2, 12, 79).has_value());
  CHECK(*r1_value(2, 2, 12, 79) == 139);  // maximized at x = s = 12
  // with the complete-graph rule the whole r2 range can resolve exactly
  auto r2 = r2_value(3, 4, 5, 300, nullptr);  // range = {3}, piece order 5 <= l+t-1
  REQUIRE(r2.has_value());
  CHECK(r2->tag == ExTag::Exact);
  // an unresolvable x in the range downgrades the tag
  auto r2b = r2_value(3, 4, 6, 300, nullptr);  // x=3 needs ex(7, K_{3,4}): unknown
  REQUIRE(r2b.has_value());
  CHECK(r2b->tag == ExTag::Lower);
}

TEST_CASE("sqrt bounds") {
  CHECK(c4_edge_bound(5).floor_value == 6);
  CHECK(c4_edge_bound(4).floor_value == 4);
  CHECK(c4_edge_bound(1).floor_value == 0);
  CHECK(c4_edge_bound(5).approx == doctest::Approx(6.4039).epsilon(1e-3));

  CHECK(k2t_edge_bound(5, 3).approx == doctest::Approx(8.4307).epsilon(1e-3));
  CHECK(k2t_edge_bound(9, 3).approx == doctest::Approx(20.39).epsilon(1e-2));
  CHECK_THROWS_AS(k2t_edge_bound(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(k2t_edge_bound(9, 2), std::invalid_argument);
  // defining quadratic: 4e^2 - 2ne - (t-1)(n^3 - n^2) <= 0 at e = floor(bound)
  for (int t = 3; t <= 7; ++t)
    for (long long n = 5; n <= 40; ++n) {
      long long e = k2t_edge_bound(n, t).floor_value;
      CHECK(4 * e * e - 2 * n * e - (long long)(t - 1) * (n * n * n - n * n) <= 0);
    }
}

TEST_CASE("resolve_ex priorities") {
  // complete-graph rule
  auto v = resolve_ex(7, 2, 6, nullptr, kAllowAll);
  REQUIRE(v.has_value());
  CHECK(v->value == 21);
  CHECK(v->tag == ExTag::Exact);
  // sqrt fallback
  auto u = resolve_ex(21, 2, 2, nullptr, kAllowAll);
  REQUIRE(u.has_value());
  CHECK(u->tag == ExTag::Upper);
  CHECK(u->value == 52);  // floor(21(1+9)/4)
  CHECK_FALSE(resolve_ex(21, 2, 2, nullptr, kAllowExact).has_value());
  // exact table entries win
  ExTable table;
  TableEntry e;
  e.value = 6;
  e.exact = true;
  e.witness_g6 = "?";  // not verified through this path
  table.upsert(5, FamilySpec::forbid_klt(2, 2), std::nullopt, e);
  auto w = resolve_ex(5, 2, 2, &table, kAllowAll);
  REQUIRE(w.has_value());
  CHECK(w->value == 6);
  CHECK(w->tag == ExTag::Exact);
  CHECK(w->source == "table");
}

TEST_CASE("per_x_upper") {
  // x = s reduces to the f1 value
  CHECK(per_x_upper(12, 2, 2, 12, 79, nullptr, kAllowAll)->value ==
        f1_value(12, 2, 2, 12, 79));
  // x = 2 with the sqrt surrogate
  auto v = per_x_upper(2, 2, 2, 12, 79, nullptr, kAllowAll);
  REQUIRE(v.has_value());
  CHECK(v->value == 131);
  CHECK(v->tag == ExTag::Upper);
  // x = 1, l = 2: n + ex(2s-1, K_{2,t}) - 1
  auto w = per_x_upper(1, 2, 2, 3, 50, nullptr, kAllowAll);
  REQUIRE(w.has_value());
  CHECK(w->value == 50 + c4_edge_bound(5).floor_value - 1);
}

TEST_CASE("envelopes") {
  // f(2; s=12, n=79) = 1 + 79 - 1 + (21/4)(1 + 9) = 131.5
  CHECK(c4_envelope(2, 12, 79) == doctest::Approx(131.5));
  // f(s) from the definition: + (1/4)(1 + 1)
  CHECK(c4_envelope(12, 12, 79) ==
        doctest::Approx(79.0 + 66.0 - 6.0 + 0.5));
  // discrete convexity of the envelopes (numeric sweep)
  for (int s : {12, 30, 77, 200}) {
    long long n = 3 * (long long)s * s;
    for (int x = 2; x + 2 <= s; ++x) {
      double a = c4_envelope(x, s, n), b = c4_envelope(x + 1, s, n),
             c = c4_envelope(x + 2, s, n);
      CHECK(c - b >= b - a - 1e-7);
      for (int t : {3, 6, 9}) {
        double ha = k2t_envelope(x, t, s, n), hb = k2t_envelope(x + 1, t, s, n),
               hc = k2t_envelope(x + 2, t, s, n);
        CHECK(hc - hb >= hb - ha - 1e-7);
      }
    }
  }
}

TEST_CASE("f1 is discretely convex in x") {
  for (int l = 2; l <= 4; ++l)
    for (int t = l; t <= 7; ++t)
      for (int s = l + 2; s <= 20; ++s) {
        long long n = 10 * s * s;
        for (int x = l; x + 2 <= s; ++x) {
          long long a = f1_value(x, l, t, s, n), b = f1_value(x + 1, l, t, s, n),
                    c = f1_value(x + 2, l, t, s, n);
          CHECK(c - b >= b - a);
        }
      }
}

TEST_CASE("exact regime inequalities") {
  for (int s = 12; s <= 100; ++s) CHECK(c4_exact_regime_inequalities(s));
  CHECK_FALSE(c4_exact_regime_inequalities(5));
  // h(s) >= h(1) for t >= 6 on the s >= 3 range the exactness result uses
  for (int t : {6, 7, 10, 20})
    for (int s = 3; s <= 200; ++s) CHECK(k2t_envelope_gap_sign(t, s) >= 0);
  // boundary: at s = 2, t = 6 the gap is genuinely negative
  // (h(2) = n + 9/2 while h(1) = n - 1 + (3/4)(1 + sqrt(41)))
  CHECK(k2t_envelope_gap_sign(6, 2) < 0);
  for (int t = 7; t <= 20; ++t) CHECK(k2t_envelope_gap_sign(t, 2) >= 0);
}

TEST_CASE("report: known exact instances") {
  BoundReport r = evaluate_bounds(2, 2, 12, 79, nullptr);
  REQUIRE(r.exact_value.has_value());
  CHECK(*r.exact_value == 139);
  CHECK(r.exact_source == "c4-exact");
  REQUIRE(r.lower_bound.has_value());
  REQUIRE(r.upper_bound.has_value());
  CHECK(*r.lower_bound <= *r.upper_bound);
  CHECK(*r.lower_bound == 139);
  CHECK(*r.upper_bound == 139);

  BoundReport k = evaluate_bounds(2, 6, 3, 10, nullptr);
  REQUIRE(k.exact_value.has_value());
  CHECK(*k.exact_value == 23);
  CHECK(k.exact_source == "k2t-exact");

  // window: 2l+2 <= 2s <= 2l+t-2 at (3,4,4)
  long long n = std::max(2 * binom(12, 2), n_of_x(4, 3, 4, 4));
  BoundReport w = evaluate_bounds(3, 4, 4, n, nullptr);
  REQUIRE(w.exact_value.has_value());
  CHECK(*w.exact_value ==
        std::max(f1_value(3, 3, 4, 4, n), f1_value(4, 3, 4, 4, n)));
  CHECK(w.exact_source == "window-exact");
}

TEST_CASE("report: degenerate reductions") {
  // s <= l: only the matching constraint binds
  BoundReport r = evaluate_bounds(3, 3, 2, 30, nullptr);
  REQUIRE(r.exact_value.has_value());
  CHECK(*r.exact_value == erdos_gallai(30, 2));
  // s large theorems are never asserted exact
  BoundReport a = evaluate_bounds(3, 3, 9, 4000, nullptr);
  CHECK_FALSE(a.exact_value.has_value());
  bool saw_asymptotic = false;
  for (const auto& st : a.applicability)
    if (st.name == "asymptotic-exact-large-s" && st.applicable) saw_asymptotic = true;
  CHECK(saw_asymptotic);
}

TEST_CASE("report: lower <= upper and construction identity on a small grid") {
  for (int l = 2; l <= 3; ++l)
    for (int t = l; t <= 5; ++t)
      for (int s = l + 1; s <= 7; ++s) {
        long long n1 = n1_value(l, t, s);
        for (long long n : {n1, n1 + 3}) {
          BoundReport r = evaluate_bounds(l, t, s, n, nullptr);
          if (r.lower_bound && r.upper_bound) CHECK(*r.lower_bound <= *r.upper_bound);
          if (r.exact_value) {
            if (r.lower_bound) CHECK(*r.lower_bound <= *r.exact_value);
            if (r.upper_bound) CHECK(*r.exact_value <= *r.upper_bound);
          }
          // every f1 sweep entry is realized by an actual build
          for (auto [x, val] : r.f1_sweep) {
            ConstructionParams p{l, t, s, x, n, Variant::G1};
            CHECK(build_g1(p).graph.size() == val);
          }
        }
      }
}

TEST_CASE("report JSON and text render") {
  BoundReport r = evaluate_bounds(2, 2, 12, 79, nullptr);
  CHECK(r.to_json().find("\"exact\"") != std::string::npos);
  CHECK(r.to_text().find("139") != std::string::npos);
}
