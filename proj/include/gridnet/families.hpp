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

#include <algorithm>
#include <array>
#include <charconv>
#include <compare>
#include <functional>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gridnet/digraph.hpp"

namespace gridnet {

enum class Family { double_step, new_amsterdam, manhattan };

inline std::string_view family_tag(Family f) {
  switch (f) {
    case Family::double_step: return "ds";
    case Family::new_amsterdam: return "na";
    case Family::manhattan: return "mh";
  }
  return "?";
}

inline std::optional<Family> family_from_tag(std::string_view tag) {
  if (tag == "ds") return Family::double_step;
  if (tag == "na") return Family::new_amsterdam;
  if (tag == "mh") return Family::manhattan;
  return std::nullopt;
}

/// x mod n in [0, n).
inline std::int64_t residue(std::int64_t x, std::int64_t n) {
  const auto r = x % n;
  return r < 0 ? r + n : r;
}

/// x mod n in (-n/2, n/2].
inline std::int64_t symmetric_residue(std::int64_t x, std::int64_t n) {
  const auto r = residue(x, n);
  return 2 * r > n ? r - n : r;
}

namespace detail {

inline std::int64_t checked_order(std::int64_t n) {
  if (n < 1) {
    throw std::invalid_argument("order must be positive, got " + std::to_string(n));
  }
  return n;
}

}  // namespace detail

/// G(N; +-a, +-b): vertex i joined to i+-a and i+-b.
class DoubleStep {
 public:
  static constexpr Family family = Family::double_step;
  static constexpr std::size_t step_count = 2;

  DoubleStep(std::int64_t order, std::int64_t a, std::int64_t b)
      : order_(detail::checked_order(order)),
        a_(residue(a, order)),
        b_(residue(b, order)) {}

  std::int64_t order() const { return order_; }
  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::array<std::int64_t, 2> steps() const { return {a_, b_}; }

  auto operator<=>(const DoubleStep&) const = default;

 private:
  std::int64_t order_;
  std::int64_t a_;
  std::int64_t b_;
};

/// NA(N; alpha, beta, gamma, delta): even vertices step by alpha, beta; odd
/// vertices by gamma, delta.
class NewAmsterdam {
 public:
  static constexpr Family family = Family::new_amsterdam;
  static constexpr std::size_t step_count = 4;

  NewAmsterdam(std::int64_t order, std::int64_t alpha, std::int64_t beta,
               std::int64_t gamma, std::int64_t delta)
      : order_(detail::checked_order(order)),
        steps_{residue(alpha, order), residue(beta, order),
               residue(gamma, order), residue(delta, order)} {}

  std::int64_t order() const { return order_; }
  std::int64_t alpha() const { return steps_[0]; }
  std::int64_t beta() const { return steps_[1]; }
  std::int64_t gamma() const { return steps_[2]; }
  std::int64_t delta() const { return steps_[3]; }
  const std::array<std::int64_t, 4>& steps() const { return steps_; }

  auto operator<=>(const NewAmsterdam&) const = default;

 private:
  std::int64_t order_;
  std::array<std::int64_t, 4> steps_;
};

/// MH(N; a0,b0,...,a3,b3): vertices of class j step by a_j and b_j.
class Manhattan {
 public:
  static constexpr Family family = Family::manhattan;
  static constexpr std::size_t step_count = 8;

  Manhattan(std::int64_t order, const std::array<std::int64_t, 4>& a,
            const std::array<std::int64_t, 4>& b)
      : order_(detail::checked_order(order)) {
    for (std::size_t j = 0; j < 4; ++j) {
      steps_[2 * j] = residue(a[j], order);
      steps_[2 * j + 1] = residue(b[j], order);
    }
  }

  std::int64_t order() const { return order_; }
  std::int64_t a(std::size_t j) const { return steps_.at(2 * j); }
  std::int64_t b(std::size_t j) const { return steps_.at(2 * j + 1); }
  /// a0, b0, a1, b1, a2, b2, a3, b3.
  const std::array<std::int64_t, 8>& steps() const { return steps_; }

  auto operator<=>(const Manhattan&) const = default;

 private:
  std::int64_t order_;
  std::array<std::int64_t, 8> steps_{};
};

using FamilyParams = std::variant<DoubleStep, NewAmsterdam, Manhattan>;

inline Family family_of(const FamilyParams& p) {
  return std::visit([](const auto& q) { return std::decay_t<decltype(q)>::family; }, p);
}

inline std::int64_t order_of(const FamilyParams& p) {
  return std::visit([](const auto& q) { return q.order(); }, p);
}

// ---------------------------------------------------------------------------
// Validation

enum class Severity { warning, violation };

struct Issue {
  Severity severity;
  std::string code;
  std::string detail;
};

struct ValidationReport {
  std::vector<Issue> issues;

  /// No hard violations (warnings allowed).
  bool ok() const {
    return std::none_of(issues.begin(), issues.end(), [](const Issue& i) {
      return i.severity == Severity::violation;
    });
  }
  bool clean() const { return issues.empty(); }

  bool has(std::string_view code) const {
    return std::any_of(issues.begin(), issues.end(),
                       [&](const Issue& i) { return i.code == code; });
  }

  std::optional<Severity> severity_of(std::string_view code) const {
    for (const auto& i : issues) {
      if (i.code == code) return i.severity;
    }
    return std::nullopt;
  }

  std::string summary() const {
    std::string out;
    for (const auto& i : issues) {
      if (!out.empty()) out += "; ";
      out += i.severity == Severity::violation ? "violation " : "warning ";
      out += i.code + ": " + i.detail;
    }
    return out;
  }

  void add(Severity s, std::string code, std::string detail) {
    issues.push_back({s, std::move(code), std::move(detail)});
  }
};

class InvalidParameters : public std::invalid_argument {
 public:
  explicit InvalidParameters(ValidationReport report)
      : std::invalid_argument("invalid parameters: " + report.summary()),
        report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// How strictly double-step steps must differ. `distinct_magnitudes` needs
/// a != +-b and nonzero steps, so the graph is genuinely 4-regular;
/// `distinct_values` only needs a != b and downgrades the rest to warnings.
enum class StepRule { distinct_magnitudes, distinct_values };

inline ValidationReport validate_ds(const DoubleStep& p,
                                    StepRule rule = StepRule::distinct_magnitudes) {
  ValidationReport r;
  const auto n = p.order();
  const auto a = p.a();
  const auto b = p.b();
  const auto soft =
      rule == StepRule::distinct_magnitudes ? Severity::violation : Severity::warning;
  if (a == 0 || b == 0) {
    r.add(soft, "zero-step", "a step is 0 mod " + std::to_string(n));
  }
  if (a == b) {
    r.add(Severity::violation, "equal-steps",
          "a = b = " + std::to_string(a) + " mod " + std::to_string(n));
  } else if (residue(a + b, n) == 0) {
    r.add(soft, "opposite-steps",
          "a = -b mod " + std::to_string(n) + " (" + std::to_string(a) + ", " +
              std::to_string(b) + ")");
  }
  const auto g = std::gcd(n, std::gcd(a, b));
  if (g != 1) {
    r.add(Severity::violation, "gcd",
          "gcd(N, a, b) = " + std::to_string(g) + ", must be 1");
  }
  for (const auto s : {a, b}) {
    if (s != 0 && residue(2 * s, n) == 0) {
      r.add(Severity::warning, "involution-step",
            "step " + std::to_string(s) + " equals its negative; degree drops");
    }
  }
  return r;
}

inline ValidationReport validate_na(const NewAmsterdam& p) {
  ValidationReport r;
  const auto n = p.order();
  if (n % 2 != 0) {
    r.add(Severity::violation, "odd-order",
          "order " + std::to_string(n) + " is not even");
  }
  static constexpr std::array<const char*, 4> names{"alpha", "beta", "gamma", "delta"};
  for (std::size_t i = 0; i < 4; ++i) {
    if (p.steps()[i] % 2 == 0) {
      r.add(Severity::violation, "even-step",
            std::string(names[i]) + " = " + std::to_string(p.steps()[i]) +
                " is even");
    }
  }
  if (p.alpha() == p.beta()) {
    r.add(Severity::violation, "equal-alpha-beta",
          "alpha = beta = " + std::to_string(p.alpha()));
  }
  if (p.gamma() == p.delta()) {
    r.add(Severity::warning, "equal-gamma-delta",
          "gamma = delta = " + std::to_string(p.gamma()) +
              "; odd vertices get a single out-arc");
  }
  const auto sum = residue(p.alpha() + p.beta() + p.gamma() + p.delta(), n);
  if (sum != 0) {
    r.add(Severity::violation, "step-sum",
          "alpha+beta+gamma+delta = " + std::to_string(sum) + " mod " +
              std::to_string(n) + ", must be 0");
  }
  return r;
}

inline ValidationReport validate_mh(const Manhattan& p) {
  ValidationReport r;
  const auto n = p.order();
  const bool classes_defined = n % 4 == 0;
  if (!classes_defined) {
    r.add(Severity::violation, "order-mod-4",
          "order " + std::to_string(n) + " is not a multiple of 4");
  }
  for (std::size_t j = 0; j < 4; ++j) {
    for (const auto& [name, s] : {std::pair{"a", p.a(j)}, std::pair{"b", p.b(j)}}) {
      if (s % 2 == 0) {
        r.add(Severity::violation, "even-step",
              std::string(name) + std::to_string(j) + " = " + std::to_string(s) +
                  " is even");
      }
    }
    if (p.a(j) == p.b(j)) {
      r.add(Severity::violation, "equal-pair",
            "a" + std::to_string(j) + " = b" + std::to_string(j) + " = " +
                std::to_string(p.a(j)));
    }
  }
  const std::array<std::int64_t, 4> sums{
      residue(p.a(0) + p.a(2), n), residue(-(p.a(1) + p.a(3)), n),
      residue(p.b(0) + p.b(2), n), residue(-(p.b(1) + p.b(3)), n)};
  if (std::adjacent_find(sums.begin(), sums.end(), std::not_equal_to<>()) !=
      sums.end()) {
    r.add(Severity::violation, "step-sums",
          "a0+a2, -(a1+a3), b0+b2, -(b1+b3) = " + std::to_string(sums[0]) +
              ", " + std::to_string(sums[1]) + ", " + std::to_string(sums[2]) +
              ", " + std::to_string(sums[3]) + " mod " + std::to_string(n) +
              "; must agree");
  }
  if (classes_defined) {
    std::string off;
    for (std::size_t j = 0; j < 4; ++j) {
      if (p.a(j) % 4 != 3) off += " a" + std::to_string(j);
      if (p.b(j) % 4 != 1) off += " b" + std::to_string(j);
    }
    if (!off.empty()) {
      r.add(Severity::warning, "class-residue",
            "expected a_j = 3, b_j = 1 mod 4; differs at" + off);
    }
  }
  return r;
}

inline ValidationReport validate(const FamilyParams& p) {
  return std::visit(
      [](const auto& q) -> ValidationReport {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, DoubleStep>) return validate_ds(q);
        else if constexpr (std::is_same_v<T, NewAmsterdam>) return validate_na(q);
        else return validate_mh(q);
      },
      p);
}

// ---------------------------------------------------------------------------
// Compilation to Digraph

/// What a compile call accepts: only issue-free parameters, parameters with
/// warnings but no violations, or anything structurally buildable.
enum class Admit { clean, warnings, unchecked };

/// Which step pair a Manhattan vertex uses. `reflected` gives vertex i the
/// pair of class (-i mod 4); `residue` the pair of class (i mod 4). The
/// translation formulas in constructions.hpp produce line digraphs of their
/// New Amsterdam source only under `reflected`. The two labelings are
/// related by negating every step.
enum class MhLabeling { reflected, residue };

namespace detail {

inline void admit_or_throw(const ValidationReport& r, Admit admit) {
  if (admit == Admit::unchecked) return;
  if (!r.ok() || (admit == Admit::clean && !r.clean())) throw InvalidParameters(r);
}

inline void push_head(std::vector<Vertex>& list, std::int64_t tail,
                      std::int64_t step, std::int64_t n) {
  const auto head = static_cast<Vertex>(residue(tail + step, n));
  if (head == static_cast<Vertex>(tail)) return;
  if (std::find(list.begin(), list.end(), head) == list.end()) list.push_back(head);
}

}  // namespace detail

/// Out-list of i is (i+a, i-a, i+b, i-b) with loops and repeats dropped.
inline Digraph compile_ds(const DoubleStep& p, Admit admit = Admit::warnings,
                          StepRule rule = StepRule::distinct_magnitudes) {
  detail::admit_or_throw(validate_ds(p, rule), admit);
  const auto n = p.order();
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    auto& list = adj[static_cast<std::size_t>(i)];
    for (const auto s : {p.a(), -p.a(), p.b(), -p.b()}) detail::push_head(list, i, s, n);
  }
  return Digraph(adj);
}

inline Digraph compile_na(const NewAmsterdam& p, Admit admit = Admit::warnings) {
  detail::admit_or_throw(validate_na(p), admit);
  const auto n = p.order();
  if (n % 2 != 0) throw std::invalid_argument("New Amsterdam order must be even");
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    auto& list = adj[static_cast<std::size_t>(i)];
    const bool even = i % 2 == 0;
    detail::push_head(list, i, even ? p.alpha() : p.gamma(), n);
    detail::push_head(list, i, even ? p.beta() : p.delta(), n);
  }
  return Digraph(adj);
}

inline std::size_t mh_class(std::int64_t vertex, MhLabeling labeling) {
  const auto r = static_cast<std::size_t>(vertex % 4);
  return labeling == MhLabeling::residue ? r : (4 - r) % 4;
}

inline Digraph compile_mh(const Manhattan& p, Admit admit = Admit::warnings,
                          MhLabeling labeling = MhLabeling::reflected) {
  detail::admit_or_throw(validate_mh(p), admit);
  const auto n = p.order();
  if (n % 4 != 0) throw std::invalid_argument("Manhattan order must be a multiple of 4");
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    auto& list = adj[static_cast<std::size_t>(i)];
    const auto j = mh_class(i, labeling);
    detail::push_head(list, i, p.a(j), n);
    detail::push_head(list, i, p.b(j), n);
  }
  return Digraph(adj);
}

inline Digraph compile(const FamilyParams& p, Admit admit = Admit::warnings) {
  return std::visit(
      [admit](const auto& q) -> Digraph {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, DoubleStep>) return compile_ds(q, admit);
        else if constexpr (std::is_same_v<T, NewAmsterdam>) return compile_na(q, admit);
        else return compile_mh(q, admit);
      },
      p);
}

// ---------------------------------------------------------------------------
// Text syntax: ds:N,a,b  na:N,alpha,beta,gamma,delta  mh:N,a0,b0,...,a3,b3

enum class StepStyle { residue, symmetric };

inline FamilyParams parse_params(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("expected <family>:<N>,<steps...>, got '" +
                                std::string(text) + "'");
  }
  const auto family = family_from_tag(text.substr(0, colon));
  if (!family) {
    throw std::invalid_argument("unknown family '" +
                                std::string(text.substr(0, colon)) + "'");
  }
  std::vector<std::int64_t> values;
  auto rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const auto field = rest.substr(0, comma);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw std::invalid_argument("bad integer '" + std::string(field) + "' in '" +
                                  std::string(text) + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  const auto expect = [&](std::size_t count) {
    if (values.size() != count) {
      throw std::invalid_argument(std::string(family_tag(*family)) + " takes " +
                                  std::to_string(count) + " integers, got " +
                                  std::to_string(values.size()));
    }
  };
  switch (*family) {
    case Family::double_step:
      expect(3);
      return DoubleStep(values[0], values[1], values[2]);
    case Family::new_amsterdam:
      expect(5);
      return NewAmsterdam(values[0], values[1], values[2], values[3], values[4]);
    case Family::manhattan:
      expect(9);
      return Manhattan(values[0], {values[1], values[3], values[5], values[7]},
                       {values[2], values[4], values[6], values[8]});
  }
  throw std::logic_error("unreachable");
}

inline std::string format_params(const FamilyParams& p,
                                 StepStyle style = StepStyle::residue) {
  return std::visit(
      [style](const auto& q) {
        std::string out(family_tag(std::decay_t<decltype(q)>::family));
        out += ':' + std::to_string(q.order());
        for (const auto s : q.steps()) {
          out += ',' + std::to_string(style == StepStyle::residue
                                          ? s
                                          : symmetric_residue(s, q.order()));
        }
        return out;
      },
      p);
}

}  // namespace gridnet
