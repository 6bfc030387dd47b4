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

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridnet/distance.hpp"
#include "gridnet/families.hpp"
#include "gridnet/line_digraph.hpp"

namespace gridnet {

// Step translations. Intermediate values are plain integers; the record
// constructors reduce them modulo the target order.

/// New Amsterdam digraph on 2N vertices with steps
/// (-1, 2(b-a)-1, 2a+1, -2b+1).
inline NewAmsterdam ds_to_na(const DoubleStep& p,
                             StepRule rule = StepRule::distinct_magnitudes) {
  if (auto r = validate_ds(p, rule); !r.ok()) throw InvalidParameters(std::move(r));
  const auto a = p.a();
  const auto b = p.b();
  return NewAmsterdam(2 * p.order(), -1, 2 * (b - a) - 1, 2 * a + 1, -2 * b + 1);
}

/// Manhattan digraph on 2N vertices with a = (1, 2alpha-1, 1, -2alpha-1) and
/// b = (2gamma+1, 2beta+2gamma-1, -2gamma+1, -2beta-2gamma-1).
inline Manhattan na_to_mh(const NewAmsterdam& p) {
  if (auto r = validate_na(p); !r.ok()) throw InvalidParameters(std::move(r));
  const auto al = p.alpha();
  const auto be = p.beta();
  const auto ga = p.gamma();
  return Manhattan(2 * p.order(), {1, 2 * al - 1, 1, -2 * al - 1},
                   {2 * ga + 1, 2 * be + 2 * ga - 1, -2 * ga + 1,
                    -2 * be - 2 * ga - 1});
}

/// Closed form of na_to_mh(ds_to_na(p)): 4N vertices, a = (1, -3, 1, 1),
/// b = (4a+3, 4b-1, -4a-1, -4b-1).
inline Manhattan ds_to_mh(const DoubleStep& p,
                          StepRule rule = StepRule::distinct_magnitudes) {
  if (auto r = validate_ds(p, rule); !r.ok()) throw InvalidParameters(std::move(r));
  const auto a = p.a();
  const auto b = p.b();
  return Manhattan(4 * p.order(), {1, -3, 1, 1},
                   {4 * a + 3, 4 * b - 1, -4 * a - 1, -4 * b - 1});
}

/// Checks that `na` solves the system linking it to `ds`: order 2N, all
/// steps odd, alpha+gamma = -beta-delta = 2a and beta+gamma = -alpha-delta
/// = 2b modulo 2N. Lets callers validate their own alternative solutions.
inline ValidationReport check_na_conditions(const DoubleStep& ds,
                                            const NewAmsterdam& na) {
  ValidationReport r;
  const auto n = na.order();
  if (n != 2 * ds.order()) {
    r.add(Severity::violation, "order", "expected order " +
                                            std::to_string(2 * ds.order()) +
                                            ", got " + std::to_string(n));
  }
  for (const auto s : na.steps()) {
    if (s % 2 == 0) {
      r.add(Severity::violation, "odd-steps", "step " + std::to_string(s) + " is even");
    }
  }
  const auto eq = [n](std::int64_t x, std::int64_t y) {
    return residue(x, n) == residue(y, n);
  };
  const auto al = na.alpha(), be = na.beta(), ga = na.gamma(), de = na.delta();
  if (!eq(al + ga, 2 * ds.a()) || !eq(-be - de, 2 * ds.a())) {
    r.add(Severity::violation, "step-a", "alpha+gamma = -beta-delta = 2a fails");
  }
  if (!eq(be + ga, 2 * ds.b()) || !eq(-al - de, 2 * ds.b())) {
    r.add(Severity::violation, "step-b", "beta+gamma = -alpha-delta = 2b fails");
  }
  return r;
}

/// Same for a Manhattan digraph built from a New Amsterdam one: order
/// 2N, odd steps, equal class sums, and a0+a1 = 2alpha, b1+b2 = 2beta,
/// b3-a1 = 2delta, b0-a0 = 2gamma modulo 2N.
inline ValidationReport check_mh_conditions(const NewAmsterdam& na,
                                            const Manhattan& mh) {
  ValidationReport r;
  const auto n = mh.order();
  if (n != 2 * na.order()) {
    r.add(Severity::violation, "order", "expected order " +
                                            std::to_string(2 * na.order()) +
                                            ", got " + std::to_string(n));
  }
  for (const auto s : mh.steps()) {
    if (s % 2 == 0) {
      r.add(Severity::violation, "odd-steps", "step " + std::to_string(s) + " is even");
    }
  }
  const auto eq = [n](std::int64_t x, std::int64_t y) {
    return residue(x, n) == residue(y, n);
  };
  const auto s = mh.a(0) + mh.a(2);
  if (!eq(-(mh.a(1) + mh.a(3)), s) || !eq(mh.b(0) + mh.b(2), s) ||
      !eq(-(mh.b(1) + mh.b(3)), s)) {
    r.add(Severity::violation, "step-sums", "class sums disagree");
  }
  if (!eq(mh.a(0) + mh.a(1), 2 * na.alpha())) {
    r.add(Severity::violation, "alpha", "a0+a1 != 2alpha");
  }
  if (!eq(mh.b(1) + mh.b(2), 2 * na.beta())) {
    r.add(Severity::violation, "beta", "b1+b2 != 2beta");
  }
  if (!eq(mh.b(3) - mh.a(1), 2 * na.delta())) {
    r.add(Severity::violation, "delta", "b3-a1 != 2delta");
  }
  if (!eq(mh.b(0) - mh.a(0), 2 * na.gamma())) {
    r.add(Severity::violation, "gamma", "b0-a0 != 2gamma");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Diameter sandwiches: a double-step graph of diameter k yields a New
// Amsterdam digraph of diameter 2k or 2k+1 and a Manhattan digraph of
// diameter 2k+1 or 2k+2.

enum class Derivation { new_amsterdam, manhattan };

struct SandwichReport {
  Derivation kind;
  DoubleStep source;
  std::uint32_t k = 0;
  std::optional<std::uint32_t> derived_diameter;
  std::uint32_t low = 0;
  std::uint32_t high = 0;
  bool holds = false;
};

inline SandwichReport check_diameter_sandwich(Derivation kind, const DoubleStep& p) {
  const auto k = diameter(compile_ds(p));
  if (!k) throw std::invalid_argument("double-step graph is not connected");
  const bool na = kind == Derivation::new_amsterdam;
  SandwichReport r{.kind = kind,
                   .source = p,
                   .k = *k,
                   .derived_diameter = na ? diameter(compile_na(ds_to_na(p)))
                                          : diameter(compile_mh(ds_to_mh(p))),
                   .low = na ? 2 * *k : 2 * *k + 1,
                   .high = na ? 2 * *k + 1 : 2 * *k + 2,
                   .holds = false};
  r.holds = r.derived_diameter && *r.derived_diameter >= r.low &&
            *r.derived_diameter <= r.high;
  return r;
}

/// Every valid double-step graph with 3 <= N <= max_order, over ordered
/// step residues (a, b); the translations depend on the representatives.
inline std::vector<SandwichReport> sweep_sandwich(Derivation kind,
                                                  std::int64_t max_order) {
  std::vector<SandwichReport> out;
  for (std::int64_t n = 3; n <= max_order; ++n) {
    for (std::int64_t a = 1; a < n; ++a) {
      for (std::int64_t b = 1; b < n; ++b) {
        const DoubleStep p(n, a, b);
        if (!validate_ds(p).ok()) continue;
        out.push_back(check_diameter_sandwich(kind, p));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Line digraph law on New Amsterdam digraphs.

struct LineDigraphCheck {
  NewAmsterdam source;
  std::uint32_t diameter = 0;
  std::size_t line_order = 0;
  std::optional<std::uint32_t> line_diameter;
  /// Diameter of compile_mh(na_to_mh(source)).
  std::optional<std::uint32_t> manhattan_diameter;
  bool holds = false;
};

/// Requires a strongly connected 2-regular source (gamma != delta).
inline LineDigraphCheck check_line_digraph_law(const NewAmsterdam& p) {
  const auto g = compile_na(p);
  if (g.regular_out_degree() != 2) {
    throw std::invalid_argument("line digraph law needs a 2-regular digraph");
  }
  const auto d = gridnet::diameter(g);
  if (!d) throw std::invalid_argument("New Amsterdam digraph is not strongly connected");
  const auto line = line_digraph(g);
  LineDigraphCheck c{.source = p,
                     .diameter = *d,
                     .line_order = line.order(),
                     .line_diameter = gridnet::diameter(line),
                     .manhattan_diameter = gridnet::diameter(compile_mh(na_to_mh(p))),
                     .holds = false};
  c.holds = c.line_order == 2 * g.order() && c.line_diameter == *d + 1 &&
            c.manhattan_diameter == *d + 1;
  return c;
}

/// Calls f(NewAmsterdam) for every valid 2-regular parameter set of order
/// n with alpha < beta and gamma < delta as residues.
template <typename F>
void for_each_new_amsterdam(std::int64_t n, F&& f) {
  if (n < 4 || n % 2 != 0) return;
  for (std::int64_t al = 1; al < n; al += 2) {
    for (std::int64_t be = al + 2; be < n; be += 2) {
      for (std::int64_t ga = 1; ga < n; ga += 2) {
        const auto de = residue(-(al + be + ga), n);
        if (de <= ga) continue;
        f(NewAmsterdam(n, al, be, ga, de));
      }
    }
  }
}

/// Exhaustive over even orders 4..max_order, strongly connected sources
/// only.
inline std::vector<LineDigraphCheck> sweep_line_digraph(std::int64_t max_order) {
  std::vector<LineDigraphCheck> out;
  for (std::int64_t n = 4; n <= max_order; n += 2) {
    for_each_new_amsterdam(n, [&](const NewAmsterdam& p) {
      if (!diameter(compile_na(p))) return;
      out.push_back(check_line_digraph_law(p));
    });
  }
  return out;
}

/// `count` sources drawn uniformly (fixed seed) from the even orders in
/// [min_order, max_order), each a random valid 2-regular strongly connected
/// parameter set. Draws that fail those conditions are redrawn.
inline std::vector<LineDigraphCheck> sample_line_digraph(std::int64_t min_order,
                                                         std::int64_t max_order,
                                                         std::size_t count,
                                                         std::uint64_t seed = 1) {
  if (min_order < 4 || max_order <= min_order) {
    throw std::invalid_argument("sample_line_digraph: need 4 <= min_order < max_order");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> half(min_order / 2 + min_order % 2,
                                                   (max_order - 1) / 2);
  std::vector<LineDigraphCheck> out;
  while (out.size() < count) {
    const auto n = 2 * half(rng);
    std::uniform_int_distribution<std::int64_t> odd(0, n / 2 - 1);
    const auto al = 2 * odd(rng) + 1;
    const auto be = 2 * odd(rng) + 1;
    const auto ga = 2 * odd(rng) + 1;
    const NewAmsterdam p(n, al, be, ga, -(al + be + ga));
    if (!validate_na(p).clean() || !diameter(compile_na(p))) continue;
    out.push_back(check_line_digraph_law(p));
  }
  return out;
}

}  // namespace gridnet
