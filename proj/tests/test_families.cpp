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

#include <random>

#include "catch_amalgamated.hpp"
#include "gridnet/distance.hpp"
#include "gridnet/families.hpp"
#include "oracle.hpp"

using namespace gridnet;

namespace {

oracle::Arcs arcs_of(const Digraph& g) {
  oracle::Arcs a(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    for (const Vertex w : g.out(v)) a[v].insert(static_cast<int>(w));
  }
  return a;
}

std::int64_t random_odd(std::mt19937_64& rng, std::int64_t n) {
  return 2 * std::uniform_int_distribution<std::int64_t>(0, n / 2 - 1)(rng) + 1;
}

}  // namespace

TEST_CASE("records reduce steps to residues") {
  const DoubleStep d(13, -2, 16);
  CHECK(d.a() == 11);
  CHECK(d.b() == 3);
  const NewAmsterdam na(10, -1, 1, 3, -3);
  CHECK(na.steps() == std::array<std::int64_t, 4>{9, 1, 3, 7});
  CHECK_THROWS_AS(DoubleStep(0, 1, 2), std::invalid_argument);
  CHECK(residue(-7, 5) == 3);
  CHECK(symmetric_residue(9, 10) == -1);
  CHECK(symmetric_residue(5, 10) == 5);
}

TEST_CASE("double-step validation") {
  CHECK(validate_ds(DoubleStep(13, 2, 3)).clean());
  CHECK(validate_ds(DoubleStep(8, 2, 4)).severity_of("gcd") == Severity::violation);
  CHECK(validate_ds(DoubleStep(10, 3, 3)).severity_of("equal-steps") == Severity::violation);
  CHECK(validate_ds(DoubleStep(10, 3, 7)).severity_of("opposite-steps") == Severity::violation);
  CHECK(validate_ds(DoubleStep(10, 3, 7), StepRule::distinct_values)
            .severity_of("opposite-steps") == Severity::warning);
  CHECK(validate_ds(DoubleStep(10, 0, 1)).severity_of("zero-step") == Severity::violation);
  const auto inv = validate_ds(DoubleStep(10, 5, 1));
  CHECK(inv.ok());
  CHECK(inv.severity_of("involution-step") == Severity::warning);
}

TEST_CASE("New Amsterdam validation") {
  CHECK(validate_na(NewAmsterdam(10, -1, 1, 3, -3)).clean());
  const auto bad = validate_na(NewAmsterdam(10, -1, 1, 3, 3));
  CHECK(bad.severity_of("step-sum") == Severity::violation);
  CHECK(bad.severity_of("equal-gamma-delta") == Severity::warning);
  CHECK(validate_na(NewAmsterdam(10, 2, 1, 3, 4)).has("even-step"));
  CHECK(validate_na(NewAmsterdam(9, 1, 3, 5, 0)).has("odd-order"));
  CHECK(validate_na(NewAmsterdam(10, 1, 1, 3, 5)).has("equal-alpha-beta"));
}

TEST_CASE("Manhattan validation") {
  const Manhattan conforming(16, {3, 3, 3, 7}, {1, 1, 5, 9});
  CHECK(validate_mh(conforming).clean());

  const Manhattan theorem_steps(20, {1, -3, 1, 1}, {7, 7, -5, -9});
  const auto r = validate_mh(theorem_steps);
  CHECK(r.ok());
  CHECK(r.severity_of("class-residue") == Severity::warning);

  CHECK(validate_mh(Manhattan(18, {1, 1, 1, 1}, {3, 3, 3, 3})).has("order-mod-4"));
  CHECK(validate_mh(Manhattan(16, {3, 3, 3, 7}, {3, 1, 5, 9})).has("equal-pair"));
  CHECK(validate_mh(Manhattan(16, {3, 3, 3, 7}, {1, 1, 5, 11})).has("step-sums"));
  CHECK(validate_mh(Manhattan(16, {2, 3, 3, 7}, {1, 1, 5, 9})).has("even-step"));
}

TEST_CASE("admission levels") {
  const NewAmsterdam warned(8, 1, 5, 1, 1);
  CHECK_NOTHROW(compile_na(warned, Admit::warnings));
  CHECK_THROWS_AS(compile_na(warned, Admit::clean), InvalidParameters);
  const NewAmsterdam broken(10, -1, 1, 3, 3);
  CHECK_THROWS_AS(compile_na(broken), InvalidParameters);
  CHECK(compile_na(broken, Admit::unchecked).order() == 10);
  try {
    compile_na(broken);
  } catch (const InvalidParameters& e) {
    CHECK(e.report().has("step-sum"));
  }
}

TEST_CASE("compiled arcs follow the defining rules") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = std::uniform_int_distribution<std::int64_t>(5, 40)(rng);
    const auto a = std::uniform_int_distribution<std::int64_t>(1, n - 1)(rng);
    const auto b = std::uniform_int_distribution<std::int64_t>(1, n - 1)(rng);
    const DoubleStep p(n, a, b);
    if (!validate_ds(p).ok()) continue;
    const auto g = compile_ds(p);
    CHECK(arcs_of(g) == oracle::double_step(n, a, b));
    for (Vertex u = 0; u < g.order(); ++u) {
      for (const Vertex v : g.out(u)) CHECK(g.has_arc(v, u));
    }
  }
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = 2 * std::uniform_int_distribution<std::int64_t>(3, 20)(rng);
    const auto al = random_odd(rng, n);
    const auto be = random_odd(rng, n);
    const auto ga = random_odd(rng, n);
    const NewAmsterdam p(n, al, be, ga, -(al + be + ga));
    if (!validate_na(p).ok()) continue;
    const auto g = compile_na(p);
    CHECK(arcs_of(g) == oracle::new_amsterdam(n, al, be, ga, -(al + be + ga)));
    for (Vertex u = 0; u < g.order(); ++u) {
      for (const Vertex v : g.out(u)) CHECK((u + v) % 2 == 1);
    }
  }
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = 4 * std::uniform_int_distribution<std::int64_t>(2, 10)(rng);
    const std::int64_t a0 = random_odd(rng, n), a1 = random_odd(rng, n),
                       a2 = random_odd(rng, n), b0 = random_odd(rng, n),
                       b1 = random_odd(rng, n);
    const auto s = a0 + a2;
    const std::int64_t a[4] = {a0, a1, a2, -s - a1};
    const std::int64_t b[4] = {b0, b1, s - b0, -s - b1};
    const Manhattan p(n, {a[0], a[1], a[2], a[3]}, {b[0], b[1], b[2], b[3]});
    if (!validate_mh(p).ok()) continue;
    CHECK(arcs_of(compile_mh(p)) == oracle::manhattan(n, a, b));
  }
}

TEST_CASE("Manhattan labelings differ by negating every step") {
  // i -> -i carries one onto the other.
  const Manhattan p(20, {1, -3, 1, 1}, {7, 7, -5, -9});
  const Manhattan neg(20, {-1, 3, -1, -1}, {-7, -7, 5, 9});
  const auto g = compile_mh(p, Admit::warnings, MhLabeling::reflected);
  const auto h = compile_mh(neg, Admit::warnings, MhLabeling::residue);
  REQUIRE(g.arc_count() == h.arc_count());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (const Vertex v : g.out(u)) {
      const auto neg_u = residue(-static_cast<std::int64_t>(u), 20);
      const auto neg_v = residue(-static_cast<std::int64_t>(v), 20);
      CHECK(h.has_arc(static_cast<Vertex>(neg_u), static_cast<Vertex>(neg_v)));
    }
  }
  CHECK(mh_class(1, MhLabeling::reflected) == 3);
  CHECK(mh_class(1, MhLabeling::residue) == 1);
  CHECK(mh_class(4, MhLabeling::reflected) == 0);
}

TEST_CASE("parameter text syntax") {
  CHECK(std::get<DoubleStep>(parse_params("ds:13,2,3")) == DoubleStep(13, 2, 3));
  CHECK(std::get<NewAmsterdam>(parse_params("na:10,-1,1,3,-3")) ==
        NewAmsterdam(10, -1, 1, 3, -3));
  const auto mh = std::get<Manhattan>(parse_params("mh:20,1,7,-3,7,1,-5,1,-9"));
  CHECK(mh.a(1) == 17);
  CHECK(mh.b(3) == 11);
  CHECK(format_params(mh, StepStyle::symmetric) == "mh:20,1,7,-3,7,1,-5,1,-9");
  CHECK(format_params(DoubleStep(13, -2, 3)) == "ds:13,11,3");

  CHECK_THROWS_AS(parse_params("ds13,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_params("xx:13,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_params("ds:13,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_params("ds:13,2,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_params("ds:13,,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_params("ds:0,1,2"), std::invalid_argument);
}

TEST_CASE("format then parse is the identity") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::int64_t> any(-100, 100);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = std::uniform_int_distribution<std::int64_t>(1, 60)(rng);
    const FamilyParams ps[] = {
        DoubleStep(n, any(rng), any(rng)),
        NewAmsterdam(n, any(rng), any(rng), any(rng), any(rng)),
        Manhattan(n, {any(rng), any(rng), any(rng), any(rng)},
                  {any(rng), any(rng), any(rng), any(rng)})};
    for (const auto& p : ps) {
      CHECK(parse_params(format_params(p)) == p);
      CHECK(parse_params(format_params(p, StepStyle::symmetric)) == p);
    }
  }
}
