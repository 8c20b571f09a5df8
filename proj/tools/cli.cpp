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

#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mmc/core.hpp"
#include "mmc/harness.hpp"
#include "mmc/io.hpp"
#include "mmc/market.hpp"
#include "mmc/stability.hpp"

namespace mmc::cli {
namespace {

struct Options {
  std::string instance;
  std::string matching;
  std::string notion = "weak";
  std::size_t count = 500;
  std::uint64_t seed = 1;
  std::size_t max_doctors = 4;
  std::size_t max_hospitals = 3;
  std::size_t max_edges = 9;
  double edge_prob = 0.6;
  double tie_intensity = 0.5;
  std::string matroid = "mixed";
  std::size_t min_capacity = 1;
  bool no_prune = false;
  std::size_t bound = kDefaultEdgeBound;
  std::size_t vertex_bound = kDefaultVertexBound;
  std::size_t attempts = 10000;
  std::string write_instance;
  std::string write_matching;
};

CoreOptions core_options(const Options& o) {
  return {!o.no_prune, o.vertex_bound, o.bound};
}

GenConfig gen_config(const Options& o) {
  GenConfig c;
  c.n_doctors = o.max_doctors;
  c.n_hospitals = o.max_hospitals;
  c.randomize_sizes = true;
  c.max_edges = o.max_edges;
  c.edge_probability = o.edge_prob;
  c.tie_intensity = o.tie_intensity;
  c.matroid_kind = o.matroid == "uniform"   ? MatroidKind::uniform
                   : o.matroid == "laminar" ? MatroidKind::laminar
                                            : MatroidKind::mixed;
  c.min_capacity = o.min_capacity;
  c.seed = o.seed;
  return c;
}

std::string coalition_name(const Instance& inst, const Coalition& c) {
  std::string out = "{";
  bool first = true;
  for (std::size_t d : c.doctors) {
    out += (first ? "" : ", ") + inst.doctor_name(d);
    first = false;
  }
  for (std::size_t h : c.hospitals) {
    out += (first ? "" : ", ") + inst.hospital_name(h);
    first = false;
  }
  return out + "}";
}

std::string edge_label(const Instance& inst, EdgeId e) {
  const Edge& x = inst.edge(e);
  return "(" + inst.doctor_name(x.doctor) + "," +
         inst.hospital_name(x.hospital) + ")";
}

/// Loads --matching against the instance; nullopt after printing when it
/// is not a matching.
std::optional<EdgeSet> load_valid_matching(const Instance& inst,
                                           const Options& o, std::ostream& err) {
  const EdgeSet mu = io::load_matching(inst, o.matching);
  if (auto v = matching_violation(inst, mu)) {
    err << "invalid matching: " << v->message << "\n";
    return std::nullopt;
  }
  return mu;
}

void print_edge_report(const Instance& inst, const EdgeBlockReport& r,
                       std::ostream& out) {
  out << "  " << edge_label(inst, r.edge) << " overall=" << to_string(r.overall)
      << " doctor=" << to_string(r.on_doctor)
      << " hospital=" << to_string(r.on_hospital);
  if (r.witness) out << " witness=" << edge_label(inst, *r.witness);
  else if (r.on_hospital == SideBlock::strong) out << " witness=free-slot";
  out << "\n";
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  const Instance inst = io::load_instance(o.instance);
  const auto mu = load_valid_matching(inst, o, err);
  if (!mu) return kInvalidMatching;

  const StabilityClass sc = stability_class(inst, *mu);
  out << "matching: " << inst.edge_set_name(*mu) << "\n"
      << std::boolalpha << "weakly_stable: " << sc.weakly_stable << "\n"
      << "strongly_stable: " << sc.strongly_stable << "\n"
      << "super_stable: " << sc.super_stable << "\n"
      << "strictest: "
      << (sc.super_stable      ? "super"
          : sc.strongly_stable ? "strong"
          : sc.weakly_stable   ? "weak"
                               : "none")
      << "\n";
  const auto blocking = find_blocking_edges(inst, *mu, Notion::super);
  out << "blocking edges: " << blocking.size() << "\n";
  for (const EdgeBlockReport& r : blocking) print_edge_report(inst, r, out);
  return sc.weakly_stable ? kSuccess : kRefuted;
}

int cmd_core(const Options& o, std::ostream& out, std::ostream& err) {
  const Instance inst = io::load_instance(o.instance);
  const auto mu = load_valid_matching(inst, o, err);
  if (!mu) return kInvalidMatching;

  const CoreMembership cm = core_membership(inst, *mu, core_options(o));
  out << "matching: " << inst.edge_set_name(*mu) << "\n" << std::boolalpha;
  auto line = [&](const char* name, bool member,
                  const std::optional<CoalitionBlockReport>& block) {
    out << name << ": " << member << "\n";
    if (block) {
      out << "  blocked by coalition " << coalition_name(inst, block->coalition)
          << " (" << to_string(block->mode) << ") with sigma "
          << inst.edge_set_name(block->witness) << "\n";
    }
  };
  line("weak_core", cm.in_weak_core, cm.strong_block);
  line("strong_core", cm.in_strong_core, cm.weak_block);
  line("super_core", cm.in_super_core, cm.super_weak_block);
  out << "coalitions scanned: " << cm.coalitions_scanned
      << (o.no_prune ? " (unpruned)" : " (pruned: coalitions without hospitals skipped)")
      << "\n";
  const bool member = o.notion == "weak"     ? cm.in_weak_core
                      : o.notion == "strong" ? cm.in_strong_core
                                             : cm.in_super_core;
  out << "notion " << o.notion << ": " << (member ? "member" : "not a member")
      << "\n";
  return member ? kSuccess : kRefuted;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream&) {
  const Instance inst = io::load_instance(o.instance);
  const StableSets sets = compute_sets(inst, core_options(o));
  std::size_t width = 8;
  for (const MatchingRow& row : sets.rows) {
    width = std::max(width, inst.edge_set_name(row.matching).size());
  }
  out << std::left << std::setw(static_cast<int>(width)) << "matching"
      << "  S  SS  SSS  C  C_S  C_SS\n";
  auto mark = [](bool b) { return b ? "x" : "-"; };
  for (const MatchingRow& row : sets.rows) {
    out << std::left << std::setw(static_cast<int>(width))
        << inst.edge_set_name(row.matching) << "  "
        << mark(row.stability.weakly_stable) << "  "
        << mark(row.stability.strongly_stable) << "   "
        << mark(row.stability.super_stable) << "    "
        << mark(row.core.in_weak_core) << "  "
        << mark(row.core.in_strong_core) << "    "
        << mark(row.core.in_super_core) << "\n";
  }
  out << "matchings: " << sets.rows.size() << "  |S|=" << sets.s.size()
      << " |SS|=" << sets.ss.size() << " |SSS|=" << sets.sss.size()
      << " |C|=" << sets.c.size() << " |C_S|=" << sets.c_s.size()
      << " |C_SS|=" << sets.c_ss.size() << "\n";
  return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
  const GenConfig base = gen_config(o);
  validate(base);
  VerificationSummary summary;
  for (std::size_t i = 0; i < o.count; ++i) {
    GenConfig c = base;
    c.seed = base.seed + i;
    const Instance inst = generate(c);
    VerificationReport r = verify_theorems(inst, core_options(o));
    r.seed = c.seed;
    summary.add(r);
    out << io::to_json(inst, r).dump() << "\n";
  }
  std::ostringstream text;
  summary.write(text);
  std::istringstream lines(text.str());
  for (std::string line; std::getline(lines, line);) out << "# " << line << "\n";
  return summary.failing() == 0 ? kSuccess : kRefuted;
}

int cmd_axioms(const Options& o, std::ostream& out, std::ostream&) {
  std::optional<Instance> loaded;
  try {
    loaded.emplace(io::load_instance(o.instance));
  } catch (const io::InstanceAxiomViolation& e) {
    out << e.hospital() << ": axioms FAIL: "
        << AxiomViolation::describe(e.report()) << "\n";
    return kRefuted;
  }
  const Instance& inst = *loaded;
  bool ok = true;
  for (std::size_t h = 0; h < inst.num_hospitals(); ++h) {
    const AxiomReport ax = check_axioms(inst.matroid(h), o.bound);
    const ResponsivenessReport rr = check_responsive(inst, h, o.bound);
    out << inst.hospital_name(h) << ": axioms "
        << (ax.ok() ? "ok" : "FAIL: " + AxiomViolation::describe(ax))
        << ", responsiveness "
        << (rr.ok() ? "ok" : "FAIL: " + rr.describe()) << "\n";
    ok = ok && ax.ok() && rr.ok();
  }
  if (inst.num_hospitals() == 0) out << "no hospitals\n";
  return ok ? kSuccess : kRefuted;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream&) {
  const auto found =
      find_core_not_stable(gen_config(o), o.attempts, core_options(o));
  if (!found) {
    out << "no matching in C \\ S found within " << o.attempts
        << " attempts (inconclusive)\n";
    return kRefuted;
  }
  const Instance& inst = found->instance;
  out << "seed: " << found->seed << "\n"
      << "matching: " << inst.edge_set_name(found->matching) << "\n"
      << "not weakly stable, strongly blocking edge:\n";
  print_edge_report(inst, found->blocking_edge, out);
  out << "in weak core: no strongly blocking coalition among "
      << found->certificate.coalitions_scanned << " coalitions\n";
  out << "instance:\n" << io::serialize_instance(inst);
  if (!o.write_instance.empty()) {
    std::ofstream(o.write_instance) << io::serialize_instance(inst);
  }
  if (!o.write_matching.empty()) {
    std::ofstream(o.write_matching) << io::serialize_matching(inst, found->matching);
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Matroid-constrained matching markets with ties: stability, "
               "core membership and theorem verification",
               "mmc"};
  app.require_subcommand(1);

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--instance", o.instance, "Instance JSON file")->required();
  };
  auto add_matching = [&](CLI::App* sub) {
    sub->add_option("--matching", o.matching, "Matching JSON file")->required();
  };
  auto add_bounds = [&](CLI::App* sub) {
    sub->add_option("--bound", o.bound,
                    "Enumeration bound on edges and matroid ground sets")
        ->capture_default_str();
    sub->add_option("--vertex-bound", o.vertex_bound,
                    "Bound on vertices for coalition enumeration")
        ->capture_default_str();
    sub->add_flag("--no-prune", o.no_prune,
                  "Also scan coalitions that contain no hospital");
  };
  auto add_generator = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Base seed")->capture_default_str();
    sub->add_option("--max-doctors", o.max_doctors)->capture_default_str()
        ->check(CLI::Range(1, 32));
    sub->add_option("--max-hospitals", o.max_hospitals)->capture_default_str()
        ->check(CLI::Range(1, 32));
    sub->add_option("--max-edges", o.max_edges)->capture_default_str()
        ->check(CLI::Range(0, 64));
    sub->add_option("--edge-prob", o.edge_prob)->capture_default_str();
    sub->add_option("--tie-intensity", o.tie_intensity)->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    sub->add_option("--matroid", o.matroid)->capture_default_str()
        ->check(CLI::IsMember({"uniform", "laminar", "mixed"}));
    sub->add_option("--min-capacity", o.min_capacity)->capture_default_str()
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max(), "POSITIVE"));
  };

  auto* check = app.add_subcommand("check", "Stability class and blocking edges of a matching");
  add_instance(check);
  add_matching(check);

  auto* core = app.add_subcommand("core", "Weak/strong/super core membership of a matching");
  add_instance(core);
  add_matching(core);
  core->add_option("--notion", o.notion, "Core to test membership in")
      ->capture_default_str()
      ->check(CLI::IsMember({"weak", "strong", "super"}));
  add_bounds(core);

  auto* enumerate = app.add_subcommand("enumerate", "Table of all matchings and their classes");
  add_instance(enumerate);
  add_bounds(enumerate);

  auto* verify = app.add_subcommand("verify", "Check the stability/core theorems on random instances");
  verify->add_option("--count", o.count, "Number of instances")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max(), "POSITIVE"));
  add_generator(verify);
  add_bounds(verify);

  auto* axioms = app.add_subcommand("axioms", "Matroid axioms and responsiveness per hospital");
  add_instance(axioms);
  axioms->add_option("--bound", o.bound, "Exhaustive bound on |E(h)|")
      ->capture_default_str();

  auto* search = app.add_subcommand("search", "Search for a weak-core matching that is not weakly stable");
  search->add_option("--attempts", o.attempts)->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max(), "POSITIVE"));
  search->add_option("--write-instance", o.write_instance, "Save the witness instance");
  search->add_option("--write-matching", o.write_matching, "Save the witness matching");
  add_generator(search);
  add_bounds(search);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*check) return cmd_check(o, out, err);
    if (*core) return cmd_core(o, out, err);
    if (*enumerate) return cmd_enumerate(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
    if (*axioms) return cmd_axioms(o, out, err);
    if (*search) return cmd_search(o, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBoundExceeded;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return kRefuted;
  }
  return kUsage;
}

}  // namespace mmc::cli
