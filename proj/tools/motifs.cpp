// Copyright 2026 The Authors.
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

// motifs: ordinal motif detection, covering and textual explanations for
// formal contexts.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fca/basis.hpp"
#include "fca/context.hpp"
#include "fca/covering.hpp"
#include "fca/enumeration.hpp"
#include "fca/explain.hpp"
#include "fca/io.hpp"
#include "fca/report.hpp"
#include "fca/scaling_dimension.hpp"

namespace {

using namespace fca;

struct InputOptions {
  std::string path;
  std::string format;  // "", "cxt" or "csv"
  bool transpose = false;
  bool clarify = false;

  void add_to(CLI::App* app) {
    app->add_option("file", path, "Context file (.cxt or .csv)")->required();
    app->add_option("--format", format, "Input format, overrides the extension")
        ->check(CLI::IsMember({"cxt", "csv"}));
    app->add_flag("--transpose", transpose, "Swap objects and attributes");
    app->add_flag("--clarify", clarify, "Merge objects with identical rows");
  }
};

struct LoadedContext {
  FormalContext context;
  ClarificationMap clarification;
};

LoadedContext load(const InputOptions& in) {
  auto format = in.format.empty()  ? format_for_path(in.path)
                : in.format == "csv" ? ContextFormat::Csv
                                     : ContextFormat::Burmeister;
  auto k = read_context_file(in.path, format);
  if (in.transpose) k = transpose(k);
  if (in.clarify) {
    auto [clarified, map] = clarify_objects(k);
    return {std::move(clarified), std::move(map)};
  }
  auto map = ClarificationMap::identity(k);
  return {std::move(k), std::move(map)};
}

struct MotifOptions {
  std::vector<std::string> families;
  std::vector<std::string> min_sizes;
  std::vector<std::string> max_sizes;
  std::size_t crown_cap = 8;

  void add_to(CLI::App* app) {
    app->add_option("--families", families,
                    "Families to use (nominal, ordinal, interordinal, "
                    "contranominal, crown); default all")
        ->delimiter(',');
    app->add_option("--min-size", min_sizes,
                    "Per-family minimum domain size, e.g. ordinal=1")
        ->delimiter(',');
    app->add_option("--max-size", max_sizes,
                    "Per-family maximum domain size, e.g. nominal=6")
        ->delimiter(',');
    app->add_option("--crown-cap", crown_cap, "Longest crown searched")
        ->capture_default_str();
  }

  EnumerationConfig config() const {
    EnumerationConfig cfg;
    if (!families.empty()) {
      cfg.families.clear();
      for (const auto& name : families) {
        auto f = parse_family(name);
        if (!f) throw CLI::ValidationError("--families", "unknown family '" + name + "'");
        cfg.families.push_back(*f);
      }
    }
    auto apply = [](const std::vector<std::string>& specs,
                    std::array<std::size_t, 5>& target, const char* flag) {
      for (const auto& spec : specs) {
        auto eq = spec.find('=');
        std::optional<ScaleFamily> f;
        if (eq != std::string::npos) f = parse_family(spec.substr(0, eq));
        if (!f)
          throw CLI::ValidationError(flag, "expected family=size, got '" + spec + "'");
        try {
          target[family_rank(*f)] = std::stoul(spec.substr(eq + 1));
        } catch (const std::exception&) {
          throw CLI::ValidationError(flag, "bad size in '" + spec + "'");
        }
      }
    };
    apply(min_sizes, cfg.min_size, "--min-size");
    apply(max_sizes, cfg.max_size, "--max-size");
    cfg.crown_size_cap = crown_cap;
    return cfg;
  }
};

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string labels_of(const FormalContext& k, const ObjectSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto g : s) {
    out += (first ? "" : ", ") + k.objects()[g];
    first = false;
  }
  return out + "}";
}

std::string labels_of(const FormalContext& k, const std::vector<std::size_t>& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i)
    out += (i ? ", " : "") + k.objects()[d[i]];
  return out;
}

std::vector<CoveringStep> run_cover(const LoadedContext& lc, const MotifOptions& mo,
                                    bool all_motifs, std::size_t k_steps,
                                    HeuristicKind h) {
  auto cfg = mo.config();
  auto inventory = enumerate_motifs(lc.context, cfg);
  return greedy_cover(lc.context, inventory.pool(!all_motifs), k_steps, h);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordinal motifs of standard scale in formal contexts"};
  app.require_subcommand(1);

  // concepts
  InputOptions concepts_in;
  bool concepts_list = false;
  std::string concepts_json;
  auto* concepts = app.add_subcommand("concepts", "Count (and list) the extents");
  concepts_in.add_to(concepts);
  concepts->add_flag("--list", concepts_list, "Print every extent");
  concepts->add_option("--json", concepts_json, "Write JSON to a file ('-' for stdout)");

  // motifs
  InputOptions motifs_in;
  MotifOptions motifs_opts;
  bool motifs_maximal_only = false;
  bool motifs_list = false;
  std::string motifs_json;
  auto* motifs = app.add_subcommand("motifs", "Enumerate local full scale-measures");
  motifs_in.add_to(motifs);
  motifs_opts.add_to(motifs);
  motifs->add_flag("--maximal-only", motifs_maximal_only, "List maximal motifs only");
  motifs->add_flag("--list", motifs_list, "Print every motif");
  motifs->add_option("--json", motifs_json, "Write JSON to a file ('-' for stdout)");

  // cover
  InputOptions cover_in;
  MotifOptions cover_opts;
  std::size_t cover_k = 10;
  std::string cover_heuristic = "standard";
  bool cover_all = false;
  std::string cover_coverage_csv, cover_ratio_csv, cover_json;
  auto* cover = app.add_subcommand("cover", "Greedy ordinal motif covering");
  cover_in.add_to(cover);
  cover_opts.add_to(cover);
  cover->add_option("-k,--k", cover_k, "Number of selections")->capture_default_str();
  cover->add_option("--heuristic", cover_heuristic, "standard or normalized")
      ->check(CLI::IsMember({"standard", "normalized"}))
      ->capture_default_str();
  cover->add_flag("--all-motifs", cover_all, "Use every motif, not only maximal ones");
  cover->add_option("--coverage-csv", cover_coverage_csv, "Write step,new,cumulative CSV");
  cover->add_option("--ratio-csv", cover_ratio_csv, "Write per-family ratio CSV");
  cover->add_option("--json", cover_json, "Write JSON to a file ('-' for stdout)");

  // explain
  InputOptions explain_in;
  MotifOptions explain_opts;
  std::size_t explain_k = 10;
  std::string explain_heuristic = "standard";
  bool explain_all = false;
  std::string explain_json;
  auto* explain = app.add_subcommand("explain", "Textual explanations of a covering");
  explain_in.add_to(explain);
  explain_opts.add_to(explain);
  explain->add_option("-k,--k", explain_k, "Number of selections")->capture_default_str();
  explain->add_option("--heuristic", explain_heuristic, "standard or normalized")
      ->check(CLI::IsMember({"standard", "normalized"}))
      ->capture_default_str();
  explain->add_flag("--all-motifs", explain_all, "Use every motif, not only maximal ones");
  explain->add_option("--json", explain_json, "Write JSON to a file ('-' for stdout)");

  // basis
  InputOptions basis_in;
  MotifOptions basis_opts;
  std::size_t basis_k = std::numeric_limits<std::size_t>::max();
  std::string basis_heuristic = "standard";
  bool basis_all = false;
  std::string basis_out = "-";
  auto* basis = app.add_subcommand("basis", "Ordinal motif basis as a .cxt context");
  basis_in.add_to(basis);
  basis_opts.add_to(basis);
  basis->add_option("-k,--k", basis_k, "Maximum number of selections");
  basis->add_option("--heuristic", basis_heuristic, "standard or normalized")
      ->check(CLI::IsMember({"standard", "normalized"}));
  basis->add_flag("--all-motifs", basis_all, "Use every motif, not only maximal ones");
  basis->add_option("-o,--output", basis_out, "Output file ('-' for stdout)");

  // scaling-dim
  InputOptions sd_in;
  std::vector<std::string> sd_scales;
  std::size_t sd_max_d = 4;
  std::size_t sd_max_objects = kMaxScalingObjects;
  auto* sd = app.add_subcommand("scaling-dim", "Scaling dimension by bounded search");
  sd_in.add_to(sd);
  sd->add_option("--scales", sd_scales, "Scale family, e.g. ordinal:1,ordinal:2")
      ->delimiter(',')
      ->required();
  sd->add_option("--max-d", sd_max_d, "Largest dimension tried")->capture_default_str();
  sd->add_option("--max-objects", sd_max_objects, "Object bound")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*concepts) {
      auto lc = load(concepts_in);
      auto ext = extents(lc.context);
      if (concepts_json != "-") std::cout << "extents: " << ext.size() << "\n";
      if (concepts_list && concepts_json != "-")
        for (const auto& e : ext) std::cout << labels_of(lc.context, e) << "\n";
      if (!concepts_json.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : ext) arr.push_back(e.elements());
        nlohmann::json j = {{"schema_version", kSchemaVersion},
                            {"objects", lc.context.objects()},
                            {"extent_count", ext.size()},
                            {"extents", arr}};
        write_text(concepts_json, j.dump(2) + "\n");
      }
    } else if (*motifs) {
      auto lc = load(motifs_in);
      auto inventory = enumerate_motifs(lc.context, motifs_opts.config());
      if (motifs_json != "-") std::cout << stats_table(motif_stats(inventory));
      if (motifs_list && motifs_json != "-") {
        for (const auto& fi : inventory.families)
          for (const auto& m : motifs_maximal_only ? fi.maximal : fi.motifs)
            std::cout << family_name(m.family) << " " << m.size() << ": "
                      << labels_of(lc.context, m.domain) << "\n";
      }
      if (!motifs_json.empty())
        write_text(motifs_json,
                   inventory_json(lc.context, inventory, true).dump(2) + "\n");
    } else if (*cover) {
      auto lc = load(cover_in);
      auto h = *parse_heuristic(cover_heuristic);
      auto steps = run_cover(lc, cover_opts, cover_all, cover_k, h);
      const auto total = extents(lc.context).size();
      if (cover_json != "-") {
        std::cout << "step,family,size,new,cumulative,tied,elements\n";
        for (std::size_t i = 0; i < steps.size(); ++i) {
          const auto& s = steps[i];
          std::cout << i + 1 << "," << family_name(s.motif.family) << ","
                    << s.motif.size() << "," << s.new_extents << "," << s.cumulative
                    << "," << s.tied << ",\"" << labels_of(lc.context, s.motif.domain)
                    << "\"\n";
        }
        std::cout << "covered " << (steps.empty() ? 0 : steps.back().cumulative)
                  << " of " << total << " extents\n";
      }
      if (!cover_coverage_csv.empty()) write_text(cover_coverage_csv, coverage_csv(steps));
      if (!cover_ratio_csv.empty()) write_text(cover_ratio_csv, ratio_csv(steps));
      if (!cover_json.empty())
        write_text(cover_json, covering_json(lc.context, steps, h, total).dump(2) + "\n");
    } else if (*explain) {
      auto lc = load(explain_in);
      auto h = *parse_heuristic(explain_heuristic);
      auto steps = run_cover(lc, explain_opts, explain_all, explain_k, h);
      auto doc = explain_covering(lc.context, steps,
                                  lc.clarification.is_identity() ? nullptr
                                                                 : &lc.clarification);
      if (explain_json != "-") std::cout << doc.to_text();
      if (!explain_json.empty())
        write_text(explain_json, explanation_json(lc.context, doc).dump(2) + "\n");
    } else if (*basis) {
      auto lc = load(basis_in);
      auto h = basis_heuristic == "normalized" ? HeuristicKind::Normalized
                                               : HeuristicKind::Standard;
      auto steps = run_cover(lc, basis_opts, basis_all, basis_k, h);
      std::vector<Motif> covering;
      for (const auto& s : steps) covering.push_back(s.motif);
      write_text(basis_out, write_burmeister(build_basis(lc.context, covering)));
    } else if (*sd) {
      auto lc = load(sd_in);
      std::vector<FormalContext> family;
      for (const auto& spec : sd_scales) {
        auto parsed = parse_scale_spec(spec);
        family.push_back(build_scale(parsed.family, parsed.size));
      }
      auto w = find_scaling(lc.context, family, sd_max_d, sd_max_objects);
      if (!w) {
        std::cout << "unknown (> " << sd_max_d << ")\n";
      } else {
        std::cout << w->scales.size() << "\n";
        for (std::size_t i = 0; i < w->scales.size(); ++i) {
          std::cout << "  " << sd_scales[w->scales[i]] << ":";
          for (std::size_t g = 0; g < w->maps[i].size(); ++g)
            std::cout << " " << lc.context.objects()[g] << "->"
                      << family[w->scales[i]].objects()[w->maps[i][g]];
          std::cout << "\n";
        }
      }
    }
  } catch (const NotClarifiedError& e) {
    std::cerr << "error: " << e.what() << " (try --clarify)\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: parse failed: " << e.what() << "\n";
    return 1;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
