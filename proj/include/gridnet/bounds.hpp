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
#include <stdexcept>
#include <string>
#include <string_view>

#include "gridnet/families.hpp"

namespace gridnet {

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Moore-like bounds: the largest order a family member of diameter k can
// have. Each has a closed form and the counting sum it comes from.

inline std::int64_t moore_ds(std::int64_t k) {
  detail::require(k >= 0, "moore_ds: k must be >= 0");
  return 2 * k * k + 2 * k + 1;
}

/// 1 + sum_{n=1..k} 4n.
inline std::int64_t moore_ds_by_sum(std::int64_t k) {
  detail::require(k >= 0, "moore_ds: k must be >= 0");
  std::int64_t total = 1;
  for (std::int64_t n = 1; n <= k; ++n) total += 4 * n;
  return total;
}

inline std::int64_t moore_na(std::int64_t k) {
  detail::require(k >= 1, "moore_na: k must be >= 1");
  return k % 2 != 0 ? k * k + 1 : k * k;
}

/// 2(1 + sum_{m=1..n} 4m) for k = 2n+1, 2 sum_{m=1..n} (4m-2) for k = 2n.
inline std::int64_t moore_na_by_sum(std::int64_t k) {
  detail::require(k >= 1, "moore_na: k must be >= 1");
  const auto n = k / 2;
  std::int64_t total = 0;
  if (k % 2 != 0) {
    total = 1;
    for (std::int64_t m = 1; m <= n; ++m) total += 4 * m;
  } else {
    for (std::int64_t m = 1; m <= n; ++m) total += 4 * m - 2;
  }
  return 2 * total;
}

inline std::int64_t moore_mh(std::int64_t k) {
  detail::require(k >= 2, "moore_mh: k must be >= 2");
  const auto s = (k - 1) * (k - 1);
  return k % 2 != 0 ? 2 * s : 2 * (s + 1);
}

/// A Manhattan digraph of diameter k is the line digraph of a New Amsterdam
/// digraph of diameter k-1, so its count is twice that one's.
inline std::int64_t moore_mh_by_sum(std::int64_t k) {
  detail::require(k >= 2, "moore_mh: k must be >= 2");
  return 2 * moore_na_by_sum(k - 1);
}

inline std::int64_t moore_bound(Family f, std::int64_t k) {
  switch (f) {
    case Family::double_step: return moore_ds(k);
    case Family::new_amsterdam: return moore_na(k);
    case Family::manhattan: return moore_mh(k);
  }
  throw std::logic_error("unreachable");
}

inline std::int64_t min_diameter_for(Family f) {
  switch (f) {
    case Family::double_step: return 0;
    case Family::new_amsterdam: return 1;
    case Family::manhattan: return 2;
  }
  throw std::logic_error("unreachable");
}

/// Smallest k whose Moore bound admits `order` vertices: a lower bound on
/// the diameter of any family member of that order.
inline std::int64_t moore_inverse(Family f, std::int64_t order) {
  detail::require(order >= 1, "moore_inverse: order must be positive");
  auto k = min_diameter_for(f);
  while (moore_bound(f, k) < order) ++k;
  return k;
}

// ---------------------------------------------------------------------------
// Orders reached by the dense constructions, per diameter D.

struct OrderRange {
  std::int64_t low = 0;
  std::int64_t high = 0;
  bool contains(std::int64_t n) const { return low <= n && n <= high; }
  friend bool operator==(const OrderRange&, const OrderRange&) = default;
};

/// Odd D >= 3: [(D-1)^2 - 2D + 10, D^2 + 1]. Even D >= 2:
/// [D^2 - 2D + 4, D^2 - 2D + 6], whose top order needs steps outside the
/// dense family.
inline OrderRange achievable_range_na(std::int64_t d) {
  if (d % 2 != 0) {
    detail::require(d >= 3, "achievable_range_na: odd D must be >= 3");
    return {(d - 1) * (d - 1) - 2 * d + 10, d * d + 1};
  }
  detail::require(d >= 2, "achievable_range_na: even D must be >= 2");
  return {d * d - 2 * d + 4, d * d - 2 * d + 6};
}

/// Even D >= 4: [2((D-2)^2 - 2(D-1) + 10), 2((D-1)^2 + 1)]. Odd D >= 5:
/// [2((D-1)^2 - 2(D-1) + 4), 2((D-1)^2 - 2(D-1) + 6)].
inline OrderRange achievable_range_mh(std::int64_t d) {
  if (d % 2 == 0) {
    detail::require(d >= 4, "achievable_range_mh: even D must be >= 4");
    return {2 * ((d - 2) * (d - 2) - 2 * (d - 1) + 10), 2 * ((d - 1) * (d - 1) + 1)};
  }
  detail::require(d >= 5, "achievable_range_mh: odd D must be >= 5");
  const auto s = (d - 1) * (d - 1) - 2 * (d - 1);
  return {2 * (s + 4), 2 * (s + 6)};
}

/// The order inside an achievable range that the dense steps miss, if any.
inline std::optional<std::int64_t> range_missing_order(Family f, std::int64_t d) {
  if (f == Family::new_amsterdam && d % 2 == 0 && d >= 4) {
    return achievable_range_na(d).high;
  }
  if (f == Family::manhattan && d % 2 != 0 && d >= 5) {
    return achievable_range_mh(d).high;
  }
  return std::nullopt;
}

/// Orders between the Moore bound for D-1 (exclusive) and for D, restricted
/// to the family's admissible orders: where diameter D would be optimal.
inline OrderRange moore_window(Family f, std::int64_t d) {
  const auto step = f == Family::double_step ? 1 : f == Family::new_amsterdam ? 2 : 4;
  const auto lo_bound = d - 1 >= min_diameter_for(f) ? moore_bound(f, d - 1) : 0;
  auto low = lo_bound + 1;
  while (low % step != 0) ++low;
  return {low, moore_bound(f, d)};
}

// ---------------------------------------------------------------------------
// Predicted diameters of the dense New Amsterdam (steps -1, 1, 2k+1,
// -2k-1) and Manhattan constructions.

struct DiameterExpectation {
  enum class Kind { predicted, missing, outside };
  Kind kind = Kind::outside;
  std::int64_t diameter = 0;
  std::string_view case_label;

  bool covered() const { return kind == Kind::predicted; }
};

/// Orders 4k^2+2 .. 4(k+1)^2+2 for k >= 1.
inline DiameterExpectation dense_na_expectation(std::int64_t n, std::int64_t k) {
  detail::require(k >= 1, "dense_na_expectation: k must be >= 1");
  using K = DiameterExpectation::Kind;
  const auto q = 4 * k * k;
  if (n % 2 != 0) return {K::outside, 0, "odd"};
  if (n == q + 2) return {K::predicted, 2 * k + 1, "companion"};
  if (n >= q + 4 && n <= q + 4 * k + 2) return {K::predicted, 2 * k + 1, "a"};
  if (n == q + 4 * k + 4) return {K::predicted, 2 * k + 2, "b"};
  if (n == q + 4 * k + 6) return {K::missing, 0, "missing"};
  if (n >= q + 4 * k + 8 && n <= 4 * (k + 1) * (k + 1) + 2) {
    return {K::predicted, 2 * k + 3, "c"};
  }
  return {K::outside, 0, "outside"};
}

/// Orders 8k^2+8 .. 8(k+1)^2+4 for k >= 1.
inline DiameterExpectation dense_mh_expectation(std::int64_t n, std::int64_t k) {
  detail::require(k >= 1, "dense_mh_expectation: k must be >= 1");
  using K = DiameterExpectation::Kind;
  const auto q = 8 * k * k;
  if (n % 4 != 0) return {K::outside, 0, "not-mod-4"};
  if (n >= q + 8 && n <= q + 8 * k + 4) return {K::predicted, 2 * k + 2, "first"};
  if (n == q + 8 * k + 8) return {K::predicted, 2 * k + 3, "second"};
  if (n == q + 8 * k + 12) return {K::missing, 0, "missing"};
  if (n >= q + 8 * k + 16 && n <= 8 * (k + 1) * (k + 1) + 4) {
    return {K::predicted, 2 * k + 4, "third"};
  }
  return {K::outside, 0, "outside"};
}

/// Smallest k >= 1 whose case ranges contain n.
inline std::optional<std::int64_t> infer_dense_k(Family f, std::int64_t n) {
  if (f == Family::double_step) return std::nullopt;
  for (std::int64_t k = 1;; ++k) {
    const auto top = f == Family::new_amsterdam ? 4 * (k + 1) * (k + 1) + 2
                                                : 8 * (k + 1) * (k + 1) + 4;
    const auto e = f == Family::new_amsterdam ? dense_na_expectation(n, k)
                                              : dense_mh_expectation(n, k);
    if (e.kind != DiameterExpectation::Kind::outside) return k;
    if (top >= n) return std::nullopt;
  }
}

/// Expected diameter for order n with k inferred from n; double-step
/// graphs use the basic pair (k, k+1), whose diameter is the Moore inverse.
inline DiameterExpectation expected_diameter(Family f, std::int64_t n) {
  if (f == Family::double_step) {
    if (n < 2) return {};
    return {DiameterExpectation::Kind::predicted, moore_inverse(f, n), "basic"};
  }
  const auto k = infer_dense_k(f, n);
  if (!k) return {};
  return f == Family::new_amsterdam ? dense_na_expectation(n, *k)
                                    : dense_mh_expectation(n, *k);
}

// ---------------------------------------------------------------------------

struct BoundsReport {
  Family family = Family::double_step;
  std::int64_t k = 0;
  std::int64_t moore_value = 0;
  std::int64_t moore_value_by_sum = 0;
  OrderRange moore_window;
  std::optional<OrderRange> achievable;
  std::optional<std::int64_t> missing_order;
};

inline BoundsReport bounds_report(Family f, std::int64_t k) {
  BoundsReport r;
  r.family = f;
  r.k = k;
  switch (f) {
    case Family::double_step:
      r.moore_value = moore_ds(k);
      r.moore_value_by_sum = moore_ds_by_sum(k);
      break;
    case Family::new_amsterdam:
      r.moore_value = moore_na(k);
      r.moore_value_by_sum = moore_na_by_sum(k);
      if (k >= 2 && (k % 2 == 0 || k >= 3)) r.achievable = achievable_range_na(k);
      break;
    case Family::manhattan:
      r.moore_value = moore_mh(k);
      r.moore_value_by_sum = moore_mh_by_sum(k);
      if ((k % 2 == 0 && k >= 4) || (k % 2 != 0 && k >= 5)) {
        r.achievable = achievable_range_mh(k);
      }
      break;
  }
  r.moore_window = moore_window(f, k);
  r.missing_order = range_missing_order(f, k);
  return r;
}

}  // namespace gridnet
