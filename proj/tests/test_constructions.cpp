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

#include "catch_amalgamated.hpp"
#include "gridnet/constructions.hpp"
#include "gridnet/isomorphism.hpp"
#include "oracle.hpp"

using namespace gridnet;

namespace {

template <typename F>
void for_each_valid_ds(std::int64_t max_order, F&& f) {
  for (std::int64_t n = 3; n <= max_order; ++n) {
    for (std::int64_t a = 1; a < n; ++a) {
      for (std::int64_t b = 1; b < n; ++b) {
        const DoubleStep p(n, a, b);
        if (validate_ds(p).ok()) f(p);
      }
    }
  }
}

}  // namespace

TEST_CASE("translation examples") {
  const auto na = ds_to_na(DoubleStep(5, 1, 2));
  CHECK(na == NewAmsterdam(10, -1, 1, 3, -3));
  const auto mh = na_to_mh(na);
  CHECK(format_params(mh, StepStyle::symmetric) == "mh:20,1,7,-3,7,1,-5,1,-9");
  CHECK(ds_to_mh(DoubleStep(5, 1, 2)) == mh);
  CHECK(ds_to_na(DoubleStep(13, 2, 3)) == NewAmsterdam(26, -1, 1, 5, -5));
}

TEST_CASE("translations reject invalid sources") {
  CHECK_THROWS_AS(ds_to_na(DoubleStep(8, 2, 4)), InvalidParameters);
  CHECK_THROWS_AS(ds_to_mh(DoubleStep(10, 3, 7)), InvalidParameters);
  CHECK_NOTHROW(ds_to_na(DoubleStep(10, 3, 7), StepRule::distinct_values));
  CHECK_THROWS_AS(na_to_mh(NewAmsterdam(10, -1, 1, 3, 3)), InvalidParameters);
}

TEST_CASE("translated steps satisfy the linking conditions") {
  for_each_valid_ds(30, [](const DoubleStep& p) {
    const auto na = ds_to_na(p);
    const auto r = check_na_conditions(p, na);
    INFO(format_params(p));
    CHECK(r.clean());
    CHECK(validate_na(na).ok());
    const auto mh = na_to_mh(na);
    CHECK(check_mh_conditions(na, mh).clean());
    CHECK(validate_mh(mh).ok());
    CHECK(ds_to_mh(p) == mh);
  });
}

TEST_CASE("condition checkers catch mismatches") {
  const DoubleStep ds(5, 1, 2);
  CHECK(check_na_conditions(ds, NewAmsterdam(12, -1, 1, 3, -3)).has("order"));
  CHECK(check_na_conditions(ds, NewAmsterdam(10, -1, 1, 5, -5)).has("step-a"));
  const auto na = ds_to_na(ds);
  auto mh = na_to_mh(na);
  const Manhattan shifted(20, {mh.a(0), mh.a(1), mh.a(2), mh.a(3)},
                          {mh.b(0) + 2, mh.b(1), mh.b(2) - 2, mh.b(3)});
  CHECK(check_mh_conditions(na, shifted).has("gamma"));
  CHECK_FALSE(check_mh_conditions(na, shifted).has("step-sums"));
}

TEST_CASE("diameter sandwich against the matrix-power oracle") {
  for_each_valid_ds(14, [](const DoubleStep& p) {
    const auto k = oracle::diameter(oracle::double_step(p.order(), p.a(), p.b()));
    REQUIRE(k);
    const auto na = ds_to_na(p);
    const auto s = na.steps();
    const auto dna = oracle::diameter(oracle::new_amsterdam(na.order(), s[0], s[1], s[2], s[3]));
    const auto mh = ds_to_mh(p);
    const std::int64_t a[4] = {mh.a(0), mh.a(1), mh.a(2), mh.a(3)};
    const std::int64_t b[4] = {mh.b(0), mh.b(1), mh.b(2), mh.b(3)};
    const auto dmh = oracle::diameter(oracle::manhattan(mh.order(), a, b));
    INFO(format_params(p));
    REQUIRE(dna);
    REQUIRE(dmh);
    CHECK(*dna >= 2 * *k);
    CHECK(*dna <= 2 * *k + 1);
    CHECK(*dmh >= 2 * *k + 1);
    CHECK(*dmh <= 2 * *k + 2);

    const auto r = check_diameter_sandwich(Derivation::new_amsterdam, p);
    CHECK(r.holds);
    CHECK(static_cast<int>(r.k) == *k);
    CHECK(r.derived_diameter == static_cast<std::uint32_t>(*dna));
  });
}

TEST_CASE("sandwich sweep holds up to order 24") {
  for (const auto kind : {Derivation::new_amsterdam, Derivation::manhattan}) {
    const auto rows = sweep_sandwich(kind, 24);
    CHECK(rows.size() > 1000);
    for (const auto& r : rows) {
      INFO(format_params(r.source));
      CHECK(r.holds);
    }
  }
}

TEST_CASE("Manhattan translation is the line digraph of its source") {
  std::size_t checked = 0;
  for (std::int64_t n = 4; n <= 14; n += 2) {
    for_each_new_amsterdam(n, [&](const NewAmsterdam& p) {
      const auto g = compile_na(p);
      if (!diameter(g)) return;
      INFO(format_params(p));
      CHECK(are_isomorphic(compile_mh(na_to_mh(p)), line_digraph(g)));
      ++checked;
    });
  }
  CHECK(checked > 100);
}

TEST_CASE("residue labeling breaks the line digraph correspondence") {
  const NewAmsterdam na(10, -1, 1, 3, -3);
  const auto line = line_digraph(compile_na(na));
  const auto mh = na_to_mh(na);
  CHECK(are_isomorphic(compile_mh(mh, Admit::warnings, MhLabeling::reflected), line));
  CHECK_FALSE(
      are_isomorphic(compile_mh(mh, Admit::warnings, MhLabeling::residue), line));
}

TEST_CASE("line digraph law") {
  const auto exhaustive = sweep_line_digraph(16);
  CHECK(exhaustive.size() > 100);
  for (const auto& c : exhaustive) {
    INFO(format_params(c.source));
    CHECK(c.holds);
    CHECK(c.line_order == 2 * static_cast<std::size_t>(c.source.order()));
  }
  const auto sampled = sample_line_digraph(26, 61, 25, 42);
  CHECK(sampled.size() == 25);
  for (const auto& c : sampled) {
    INFO(format_params(c.source));
    CHECK(c.source.order() >= 26);
    CHECK(c.source.order() <= 60);
    CHECK(c.holds);
  }
  CHECK(sample_line_digraph(26, 61, 5, 42).front().source == sampled.front().source);
}

TEST_CASE("line digraph law needs a 2-regular strongly connected source") {
  CHECK_THROWS_AS(check_line_digraph_law(NewAmsterdam(12, 3, 9, 3, 9)), std::invalid_argument);
  CHECK_THROWS_AS(check_line_digraph_law(NewAmsterdam(8, 1, 5, 1, 1)), std::invalid_argument);
}
