// Copyright 2026 The gridnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <numeric>

#include "catch_amalgamated.hpp"
#include "gridnet/report.hpp"
#include "gridnet/search.hpp"
#include "oracle.hpp"

using namespace gridnet;

namespace {

/// Minimum over every ordered step pair, straight from the definition.
std::optional<int> brute_ds(std::int64_t n) {
  std::optional<int> best;
  for (std::int64_t a = 1; a < n; ++a) {
    for (std::int64_t b = 1; b < n; ++b) {
      if (a == b || a + b == n || std::gcd(n, std::gcd(a, b)) != 1) continue;
      const auto d = oracle::diameter(oracle::double_step(n, a, b));
      if (d && (!best || *d < *best)) best = d;
    }
  }
  return best;
}

/// Minimum over all odd alpha != beta, gamma != delta with zero step sum.
std::optional<int> brute_na(std::int64_t n) {
  std::optional<int> best;
  for (std::int64_t al = 1; al < n; al += 2) {
    for (std::int64_t be = 1; be < n; be += 2) {
      for (std::int64_t ga = 1; ga < n; ga += 2) {
        const auto de = oracle::mod(-(al + be + ga), n);
        if (al == be || ga == de) continue;
        const auto d = oracle::diameter(oracle::new_amsterdam(n, al, be, ga, de));
        if (d && (!best || *d < *best)) best = d;
      }
    }
  }
  return best;
}

int oracle_diameter(const FamilyParams& p) {
  return std::visit(
      [](const auto& q) -> int {
        using T = std::decay_t<decltype(q)>;
        const auto n = q.order();
        std::optional<int> d;
        if constexpr (std::is_same_v<T, DoubleStep>) {
          d = oracle::diameter(oracle::double_step(n, q.a(), q.b()));
        } else if constexpr (std::is_same_v<T, NewAmsterdam>) {
          const auto s = q.steps();
          d = oracle::diameter(oracle::new_amsterdam(n, s[0], s[1], s[2], s[3]));
        } else {
          const std::int64_t a[4] = {q.a(0), q.a(1), q.a(2), q.a(3)};
          const std::int64_t b[4] = {q.b(0), q.b(1), q.b(2), q.b(3)};
          d = oracle::diameter(oracle::manhattan(n, a, b));
        }
        return d.value_or(-1);
      },
      p);
}

void check_result(const SearchResult& r) {
  REQUIRE(r.min_diameter);
  CHECK(r.witnesses.size() <= kWitnessCap);
  CHECK(r.optima_count >= r.witnesses.size());
  CHECK(std::is_sorted(r.witnesses.begin(), r.witnesses.end()));
  CHECK(*r.min_diameter >= r.moore_lower_bound);
  REQUIRE(r.moore_bound_for_min);
  CHECK(r.order <= *r.moore_bound_for_min);
  for (const auto& w : r.witnesses) {
    INFO(format_params(w));
    CHECK(validate(w).ok());
    CHECK(oracle_diameter(w) == static_cast<int>(*r.min_diameter));
  }
}

bool has_witness(const SearchResult& r, const FamilyParams& p) {
  return std::find(r.witnesses.begin(), r.witnesses.end(), p) != r.witnesses.end();
}

}  // namespace

TEST_CASE("double-step search examples") {
  const auto r5 = search_ds(5);
  CHECK(r5.min_diameter == 1u);
  CHECK(has_witness(r5, DoubleStep(5, 1, 2)));
  const auto r13 = search_ds(13);
  CHECK(r13.min_diameter == 2u);
  CHECK(has_witness(r13, DoubleStep(13, 2, 3)));
  CHECK(r13.meets_prediction == Verdict::yes);
  check_result(r13);
}

TEST_CASE("double-step search matches brute force") {
  CHECK_FALSE(search_ds(3).min_diameter.has_value());
  CHECK_FALSE(brute_ds(3).has_value());
  for (std::int64_t n = 4; n <= 30; ++n) {
    INFO("N=" << n);
    const auto r = search_ds(n);
    REQUIRE(r.min_diameter);
    CHECK(static_cast<int>(*r.min_diameter) == brute_ds(n));
    check_result(r);
  }
}

TEST_CASE("New Amsterdam search matches brute force") {
  for (std::int64_t n = 4; n <= 18; n += 2) {
    INFO("N=" << n);
    const auto r = search_na(n);
    REQUIRE(r.min_diameter);
    CHECK(static_cast<int>(*r.min_diameter) == brute_na(n));
    check_result(r);
  }
}

TEST_CASE("New Amsterdam search examples") {
  const auto r10 = search_na(10);
  CHECK(r10.min_diameter == 3u);
  CHECK(has_witness(r10, NewAmsterdam(10, 1, 9, 3, 7)));
  CHECK(r10.meets_prediction == Verdict::yes);
  CHECK(search_na(16).min_diameter == 5u);
  const auto r14 = search_na(14);
  CHECK(r14.meets_prediction == Verdict::not_covered);
  CHECK_FALSE(r14.predicted.has_value());
}

TEST_CASE("Manhattan search via New Amsterdam") {
  const auto r = search_mh(20);
  CHECK(r.via_new_amsterdam);
  CHECK(r.min_diameter == 4u);
  CHECK(r.meets_prediction == Verdict::yes);
  CHECK(r.optima_count == search_na(10).optima_count);
  check_result(r);
}

TEST_CASE("Manhattan direct search agrees with the line-digraph route") {
  for (std::int64_t n = 8; n <= 24; n += 4) {
    INFO("N=" << n);
    SearchOptions direct;
    direct.direct = true;
    const auto d = search_mh(n, direct);
    check_result(d);
    const auto c = compare_manhattan_modes(n);
    CHECK(c.agree());
    CHECK(c.direct.min_diameter == d.min_diameter);
  }
}

TEST_CASE("class-residue filter keeps the modes in agreement") {
  SearchOptions filtered;
  filtered.direct = true;
  filtered.class_residue_filter = true;
  for (std::int64_t n = 8; n <= 36; n += 4) {
    INFO("N=" << n);
    const auto r = search_mh(n, filtered);
    check_result(r);
    CHECK(r.min_diameter == search_mh(n).min_diameter);
    for (const auto& w : r.witnesses) CHECK(validate(w).clean());
  }
}

TEST_CASE("unfiltered direct search undercuts the line-digraph route at 28 and 32") {
  // Optima admitted by the class sums alone, all outside the uniform
  // residue pattern a_j = 3, b_j = 1 (mod 4).
  for (const std::int64_t n : {28, 32}) {
    INFO("N=" << n);
    const auto c = compare_manhattan_modes(n);
    CHECK_FALSE(c.agree());
    CHECK(c.via_new_amsterdam.min_diameter == 6u);
    CHECK(c.direct.min_diameter == 5u);
    CHECK(c.authoritative().min_diameter == 5u);
    check_result(c.direct);
    for (const auto& w : c.direct.witnesses) CHECK(validate(w).has("class-residue"));
  }
}

TEST_CASE("search results do not depend on the worker count") {
  for (const auto& [f, n] : {std::pair{Family::new_amsterdam, std::int64_t{16}},
                             std::pair{Family::double_step, std::int64_t{40}},
                             std::pair{Family::new_amsterdam, std::int64_t{30}}}) {
    std::string first;
    for (const unsigned w : {1u, 2u, 3u, 8u}) {
      SearchOptions opts;
      opts.workers = w;
      const auto text = render(search(f, n, opts), OutputFormat::json);
      if (first.empty()) first = text;
      CHECK(text == first);
    }
  }
  SearchOptions direct;
  direct.direct = true;
  direct.workers = 4;
  SearchOptions single = direct;
  single.workers = 1;
  CHECK(render(search_mh(24, direct), OutputFormat::json) ==
        render(search_mh(24, single), OutputFormat::json));
}

TEST_CASE("search preconditions and caps") {
  CHECK_THROWS_AS(search_ds(2), std::invalid_argument);
  CHECK_THROWS_AS(search_ds(201), std::length_error);
  SearchOptions small;
  small.cap = 20;
  CHECK_THROWS_AS(search_ds(21, small), std::length_error);
  CHECK_THROWS_AS(search_na(9), std::invalid_argument);
  CHECK_THROWS_AS(search_na(122), std::length_error);
  CHECK_THROWS_AS(search_mh(30), std::invalid_argument);
  SearchOptions direct;
  direct.direct = true;
  CHECK_THROWS_AS(search_mh(52, direct), std::length_error);
}

TEST_CASE("witness list is capped but the optimum count is not") {
  SearchOptions opts;
  opts.witness_cap = 3;
  const auto r = search_na(20, opts);
  CHECK(r.witnesses.size() == 3);
  CHECK(r.optima_count > 3);
  const auto full = search_na(20);
  CHECK(std::equal(r.witnesses.begin(), r.witnesses.end(), full.witnesses.begin()));
}

TEST_CASE("dense instance sweeps") {
  for (const auto& [claim, k_max] : {std::pair{Claim::double_step_basic, 8},
                                     std::pair{Claim::new_amsterdam_dense, 4},
                                     std::pair{Claim::manhattan_dense, 3}}) {
    const auto rows = sweep_verify(claim, k_max);
    CHECK(all_pass(rows));
    for (const auto& row : rows) {
      if (row.informational) CHECK(row.case_label == "missing");
    }
  }
  const auto ds = sweep_verify(Claim::double_step_basic, 2);
  CHECK(ds.size() == 12);
  CHECK(ds.front().order == 2);
  CHECK_THROWS_AS(sweep_verify(Claim::double_step_basic, 0), std::invalid_argument);
}

TEST_CASE("searched sweeps confirm every covered case") {
  SweepOptions opts;
  opts.search = true;
  for (const auto claim : {Claim::new_amsterdam_dense, Claim::manhattan_dense}) {
    for (const auto& row : sweep_verify(claim, 2, opts)) {
      INFO("N=" << row.order);
      REQUIRE(row.searched);
      if (row.predicted) {
        CHECK(row.pass);
      } else {
        CHECK_FALSE(row.informational);
        CHECK(row.searched == search(claim == Claim::new_amsterdam_dense
                                         ? Family::new_amsterdam
                                         : Family::manhattan,
                                     row.order)
                                  .min_diameter);
      }
    }
  }
}
