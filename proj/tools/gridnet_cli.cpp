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

// gridnet: build, measure and search degree-2 and degree-4 step digraphs.
//
// Exit codes: 0 success, 1 invalid parameters, 2 verification mismatch,
// 64 usage error.

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gridnet/gridnet.hpp"

namespace {

using namespace gridnet;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kMismatch = 2;
constexpr int kUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Family parse_family(const std::string& tag) {
  const auto f = family_from_tag(tag);
  if (!f) throw UsageError("unknown family '" + tag + "' (expected ds, na or mh)");
  return *f;
}

FamilyParams parse_or_usage(const std::string& text) {
  try {
    return parse_params(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

/// Rejects violations (exit 1); warnings go to stderr.
void admit(const FamilyParams& p) {
  const auto r = validate(p);
  for (const auto& i : r.issues) {
    if (i.severity == Severity::warning) std::cerr << "warning: " << i.detail << '\n';
  }
  if (!r.ok()) throw InvalidParameters(r);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

OutputFormat output_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  return OutputFormat::text;
}

std::optional<Claim> claim_from_name(const std::string& name) {
  static const std::map<std::string, Claim> names{
      {"ds-basic", Claim::double_step_basic}, {"4.1", Claim::double_step_basic},
      {"na-dense", Claim::new_amsterdam_dense}, {"4.2", Claim::new_amsterdam_dense},
      {"mh-dense", Claim::manhattan_dense}, {"4.3", Claim::manhattan_dense}};
  const auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

int report_rows(const std::vector<SweepRow>& rows, OutputFormat fmt) {
  std::cout << render(rows, fmt);
  return all_pass(rows) ? kOk : kMismatch;
}

int report_sandwich(const std::vector<SandwichReport>& rows, Derivation kind) {
  std::size_t failures = 0;
  for (const auto& r : rows) {
    if (r.holds) continue;
    ++failures;
    std::cout << "FAIL " << format_params(r.source) << " k=" << r.k << " derived="
              << (r.derived_diameter ? std::to_string(*r.derived_diameter) : "none")
              << " expected " << r.low << ".." << r.high << '\n';
  }
  std::cout << (kind == Derivation::new_amsterdam ? "na" : "mh") << ": checked "
            << rows.size() << ", failures " << failures << '\n';
  return failures;
}

int report_line_law(const std::vector<LineDigraphCheck>& rows, std::string_view label) {
  std::size_t failures = 0;
  for (const auto& c : rows) {
    if (c.holds) continue;
    ++failures;
    std::cout << "FAIL " << format_params(c.source) << " D=" << c.diameter
              << " |V(L)|=" << c.line_order << '\n';
  }
  std::cout << label << ": checked " << rows.size() << ", failures " << failures << '\n';
  return failures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Step digraphs: generation, diameters, bounds and exhaustive search"};
  app.require_subcommand(1);
  std::function<int()> action;

  // gen
  std::string gen_params;
  std::string gen_format = "dot";
  auto* gen = app.add_subcommand("gen", "Emit the digraph for a parameter set");
  gen->add_option("params", gen_params, "e.g. ds:13,2,3  na:10,-1,1,3,-3  mh:20,...")
      ->required();
  gen->add_option("--format", gen_format)->check(CLI::IsMember({"dot", "json"}));
  gen->callback([&] {
    action = [&] {
      const auto p = parse_or_usage(gen_params);
      admit(p);
      const auto g = compile(p);
      std::cout << (gen_format == "json" ? to_json(g) + "\n" : to_dot(g));
      return kOk;
    };
  });

  // diameter
  std::string diam_params;
  std::string diam_input;
  auto* diam = app.add_subcommand("diameter", "Diameter of a parameter set or JSON digraph");
  auto* diam_p = diam->add_option("params", diam_params);
  auto* diam_i = diam->add_option("--input", diam_input, "JSON digraph file, - for stdin");
  diam_p->excludes(diam_i);
  diam->callback([&] {
    action = [&] {
      std::optional<Digraph> g;
      if (!diam_input.empty()) {
        try {
          g = digraph_from_json(read_input(diam_input));
        } catch (const std::invalid_argument& e) {
          throw UsageError(std::string("bad digraph JSON: ") + e.what());
        }
      } else if (!diam_params.empty()) {
        const auto p = parse_or_usage(diam_params);
        admit(p);
        g = compile(p);
      } else {
        throw UsageError("diameter needs parameters or --input");
      }
      const auto d = diameter(*g);
      std::cout << (d ? std::to_string(*d) : std::string("none (not strongly connected)"))
                << '\n';
      return kOk;
    };
  });

  // bounds
  std::string bounds_family;
  std::int64_t bounds_k = 0;
  bool bounds_json = false;
  auto* bounds = app.add_subcommand("bounds", "Moore bound and achievable orders");
  bounds->add_option("family", bounds_family)->required();
  bounds->add_option("--k", bounds_k, "diameter")->required();
  bounds->add_flag("--json", bounds_json);
  bounds->callback([&] {
    action = [&] {
      const auto f = parse_family(bounds_family);
      BoundsReport r;
      try {
        r = bounds_report(f, bounds_k);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      std::cout << render(r, bounds_json ? OutputFormat::json : OutputFormat::text);
      return kOk;
    };
  });

  // derive
  std::string derive_target;
  std::string derive_params;
  bool derive_signed = false;
  auto* derive = app.add_subcommand("derive", "Translate ds -> na, ds -> mh or na -> mh");
  derive->add_option("target", derive_target)->required()->check(CLI::IsMember({"na", "mh"}));
  derive->add_option("params", derive_params)->required();
  derive->add_flag("--signed", derive_signed, "print steps in (-N/2, N/2]");
  derive->callback([&] {
    action = [&] {
      const auto p = parse_or_usage(derive_params);
      admit(p);
      const auto style = derive_signed ? StepStyle::symmetric : StepStyle::residue;
      FamilyParams out = p;
      if (const auto* ds = std::get_if<DoubleStep>(&p)) {
        out = derive_target == "na" ? FamilyParams(ds_to_na(*ds)) : FamilyParams(ds_to_mh(*ds));
      } else if (const auto* na = std::get_if<NewAmsterdam>(&p); na && derive_target == "mh") {
        out = na_to_mh(*na);
      } else {
        throw UsageError("cannot derive " + derive_target + " from " +
                         std::string(family_tag(family_of(p))));
      }
      std::cout << format_params(out, style) << '\n';
      return kOk;
    };
  });

  // search
  std::string search_family;
  std::int64_t search_n = 0;
  std::optional<std::int64_t> search_cap;
  unsigned search_workers = 1;
  bool search_direct = false;
  bool search_mod4 = false;
  bool search_compare = false;
  std::string search_format = "text";
  auto* srch = app.add_subcommand("search", "Minimum diameter over all parameters of an order");
  srch->add_option("family", search_family)->required();
  srch->add_option("--n", search_n, "order")->required();
  srch->add_option("--cap", search_cap, "largest order allowed");
  srch->add_option("--workers", search_workers)->envname("GRIDNET_WORKERS")->check(CLI::Range(1u, 256u));
  srch->add_flag("--direct", search_direct, "mh: enumerate Manhattan steps directly");
  srch->add_flag("--mod4", search_mod4, "mh --direct: keep a_j = 3, b_j = 1 (mod 4)");
  srch->add_flag("--compare", search_compare, "mh: run both modes and report disagreement");
  srch->add_option("--format", search_format)->check(CLI::IsMember({"text", "json", "csv"}));
  srch->callback([&] {
    action = [&] {
      const auto f = parse_family(search_family);
      SearchOptions opts;
      opts.cap = search_cap;
      opts.workers = search_workers;
      opts.direct = search_direct;
      opts.class_residue_filter = search_mod4;
      const auto fmt = output_format(search_format);
      try {
        if (search_compare) {
          if (f != Family::manhattan) throw UsageError("--compare applies to mh only");
          const auto c = compare_manhattan_modes(search_n, opts);
          std::cout << render(c.via_new_amsterdam, fmt) << render(c.direct, fmt);
          if (!c.agree()) {
            std::cerr << "modes disagree at N=" << search_n << "; direct result stands\n";
          }
          return kOk;
        }
        std::cout << render(search(f, search_n, opts), fmt);
      } catch (const std::length_error& e) {
        throw UsageError(e.what());
      } catch (const InvalidParameters&) {
        throw;
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      return kOk;
    };
  });

  // verify
  std::string verify_claim;
  std::int64_t verify_k_max = 3;
  std::int64_t verify_n_max = 0;
  std::size_t verify_samples = 0;
  bool verify_search = false;
  bool verify_direct = false;
  unsigned verify_workers = 1;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "Check a closed-form claim over a range");
  verify->add_option("claim", verify_claim,
                     "ds-basic|na-dense|mh-dense (aliases 4.1|4.2|4.3), sandwich, "
                     "line-digraph")
      ->required();
  verify->add_option("--k-max", verify_k_max);
  verify->add_option("--n-max", verify_n_max, "sandwich: 40, line-digraph: 24");
  verify->add_option("--samples", verify_samples, "line-digraph: random sources above --n-max");
  verify->add_flag("--search", verify_search, "also run the exhaustive search per order");
  verify->add_flag("--direct", verify_direct, "with --search on mh: direct mode");
  verify->add_option("--workers", verify_workers)->envname("GRIDNET_WORKERS")->check(CLI::Range(1u, 256u));
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json", "csv"}));
  verify->callback([&] {
    action = [&]() -> int {
      if (verify_claim == "sandwich") {
        const auto n_max = verify_n_max ? verify_n_max : 40;
        const auto f1 = report_sandwich(sweep_sandwich(Derivation::new_amsterdam, n_max),
                                        Derivation::new_amsterdam);
        const auto f2 = report_sandwich(sweep_sandwich(Derivation::manhattan, n_max),
                                        Derivation::manhattan);
        return f1 + f2 == 0 ? kOk : kMismatch;
      }
      if (verify_claim == "line-digraph") {
        const auto n_max = verify_n_max ? verify_n_max : 24;
        auto failures = report_line_law(sweep_line_digraph(n_max), "exhaustive");
        if (verify_samples > 0) {
          failures += report_line_law(sample_line_digraph(n_max + 2, 3 * n_max, verify_samples),
                                      "sampled");
        }
        return failures == 0 ? kOk : kMismatch;
      }
      const auto claim = claim_from_name(verify_claim);
      if (!claim) throw UsageError("unknown claim '" + verify_claim + "'");
      if (verify_k_max < 1) throw UsageError("--k-max must be >= 1");
      SweepOptions opts;
      opts.search = verify_search;
      opts.search_options.workers = verify_workers;
      opts.search_options.direct = verify_direct;
      return report_rows(sweep_verify(*claim, verify_k_max, opts), output_format(verify_format));
    };
  });

  // table
  std::string table_family;
  std::int64_t table_k_max = 3;
  bool table_csv = false;
  auto* table = app.add_subcommand("table", "Order -> diameter table of the dense instances");
  table->add_option("family", table_family)->required()->check(CLI::IsMember({"na", "mh"}));
  table->add_option("--k-max", table_k_max)->required();
  table->add_flag("--csv", table_csv);
  table->callback([&] {
    action = [&] {
      if (table_k_max < 1) throw UsageError("--k-max must be >= 1");
      const auto claim =
          table_family == "na" ? Claim::new_amsterdam_dense : Claim::manhattan_dense;
      return report_rows(sweep_verify(claim, table_k_max),
                         table_csv ? OutputFormat::csv : OutputFormat::text);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action();
  } catch (const InvalidParameters& e) {
    std::cerr << "invalid parameters: " << e.report().summary() << '\n';
    return kInvalid;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }
}
