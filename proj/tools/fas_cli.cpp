// fas: solvers, reducer, gadget tools and verifier behind one binary.
//
// Exit codes: 0 reachable / pass, 1 unreachable / fail, 2 limit / skipped,
// 3 invalid input.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "fas/errors.hpp"
#include "fas/fs_engine.hpp"
#include "fas/gadgets.hpp"
#include "fas/json_io.hpp"
#include "fas/ncl.hpp"
#include "fas/reducer.hpp"
#include "fas/verifier.hpp"

namespace {

using namespace fas;

enum Exit : int { kPass = 0, kFail = 1, kLimit = 2, kInvalid = 3 };

int exit_for(SearchStatus s) {
  switch (s) {
    case SearchStatus::Reachable:
      return kPass;
    case SearchStatus::Unreachable:
      return kFail;
    case SearchStatus::Limit:
      return kLimit;
  }
  return kFail;
}

struct Common {
  unsigned threads = 1;
  std::uint64_t max_states = kDefaultMaxStates;
  std::optional<std::uint64_t> time_budget_ms;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--threads", c.threads, "upper bound on worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-states", c.max_states, "stored-state cap")
      ->check(CLI::PositiveNumber);
}

struct SolveFasArgs {
  Common common;
  std::string instance;
  std::string mode = "labeled";
  bool bidir = false;
  std::string witness_out;
  std::optional<VertexId> person;
  std::optional<VertexId> location;
};

int run_solve_fas(const SolveFasArgs& a) {
  const io::FasInstanceFile f = io::fas_file_from_json(io::read_json_file(a.instance));
  SearchOptions opts;
  opts.max_states = a.common.max_states;
  opts.bidirectional = a.bidir;
  if (a.common.time_budget_ms) {
    opts.time_budget = std::chrono::milliseconds(*a.common.time_budget_ms);
  }
  if (a.mode == "quotient") {
    if (!f.classing) throw InputError("quotient mode needs a 'colors' field");
    if (!verify_color_classing(f.instance, *f.classing)) {
      throw InputError("colors do not form a sound classing of Y");
    }
    opts.quotient = *f.classing;
  }
  ReachabilityResult r;
  if (a.person || a.location) {
    if (!a.person || !a.location) {
      throw InputError("--person and --location go together");
    }
    r = solve_person_to_location(f.instance, f.sigma, *a.person, *a.location, opts);
  } else {
    r = solve_c2c(f.instance, f.sigma, f.sigma_prime, opts);
  }
  std::cout << "status: " << to_string(r.status) << '\n'
            << "states explored: " << r.states_explored << '\n';
  if (r.witness) {
    replay(f.instance, f.sigma, *r.witness);
    std::cout << "witness length: " << r.witness->size() << '\n';
    if (!a.witness_out.empty()) {
      io::write_json_file(a.witness_out, io::witness_to_json(*r.witness));
    }
  }
  std::cerr << "frontier peak: " << r.frontier_peak << '\n';
  return exit_for(r.status);
}

struct SolveNclArgs {
  Common common;
  std::string instance;
  std::string variant = "c2c";
  std::optional<std::uint32_t> edge;
  std::optional<VertexId> head;
  std::string witness_out;
};

int run_solve_ncl(const SolveNclArgs& a) {
  const io::NclInstanceFile f = io::ncl_from_json(io::read_json_file(a.instance));
  if (!f.from) throw InputError("instance has no 'orientation_from'");
  ncl::NclSearchOptions opts;
  opts.max_states = a.common.max_states;
  ncl::NclResult r;
  if (a.variant == "c2c") {
    if (!f.to) throw InputError("c2c needs 'orientation_to'");
    r = ncl::solve_c2c(f.graph, *f.from, *f.to, opts);
  } else {
    if (!a.edge || !a.head) throw InputError("c2e needs --edge and --head");
    r = ncl::solve_c2e(f.graph, *f.from, *a.edge, *a.head, opts);
  }
  std::cout << "status: " << to_string(r.status) << '\n'
            << "states explored: " << r.states_explored << '\n';
  if (r.witness) {
    ncl::replay(f.graph, *f.from, *r.witness);
    std::cout << "witness length: " << r.witness->size() << '\n';
    if (!a.witness_out.empty()) {
      io::write_json_file(a.witness_out, io::flips_to_json(*r.witness));
    }
  }
  return exit_for(r.status);
}

struct ReduceArgs {
  std::string instance;
  std::string out;
};

int run_reduce(const ReduceArgs& a) {
  const io::NclInstanceFile f = io::ncl_from_json(io::read_json_file(a.instance));
  if (!f.from || !f.to) {
    throw InputError("reduce needs 'orientation_from' and 'orientation_to'");
  }
  const reduction::ReductionArtifact art = reduction::reduce(f.graph, *f.from, *f.to);
  io::write_json_file(a.out, io::bundle_to_json(art));
  const SimpleGraph& x = art.fas.locations();
  std::cout << "locations: " << x.order() << '\n'
            << "location edges: " << x.edge_count() << '\n'
            << "max degree: " << max_degree(x) << '\n';
  try {
    std::cout << "planar: " << (is_planar_small(x) ? "yes" : "no") << '\n';
  } catch (const ResourceLimitError&) {
    std::cout << "planar: unchecked\n";
  }
  return kPass;
}

struct GadgetArgs {
  Common common;
  std::string kind;
  bool dot = false;
  bool suite = false;
  std::string out;
};

int run_gadget(const GadgetArgs& a) {
  const gadgets::GadgetBlueprint& bp =
      gadgets::blueprint(gadgets::gadget_kind_from_string(a.kind));
  std::string text;
  int code = kPass;
  if (a.suite) {
    verify::SuiteOptions so;
    so.max_states = a.common.max_states;
    const verify::GadgetReport r = verify::gadget_suite(bp.kind, so);
    std::cerr << verify::to_text(r);
    text = io::dump(io::report_to_json(r));
    code = r.passed() ? kPass : kFail;
  } else if (a.dot) {
    text = io::blueprint_to_dot(bp);
  } else {
    text = io::dump(io::blueprint_to_json(bp));
  }
  if (a.out.empty()) {
    std::cout << text;
  } else {
    io::write_text_file(a.out, text);
  }
  return code;
}

struct VerifyArgs {
  Common common;
  std::string instance;
  bool exhaustive = false;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> min_pairs;
  std::string config;
  std::string json_out;
};

int run_verify(const VerifyArgs& a, bool max_states_given) {
  const io::NclInstanceFile f = io::ncl_from_json(io::read_json_file(a.instance));
  verify::PairSource source;
  verify::EquivalenceOptions opts;
  if (!a.config.empty()) opts = verify::load_equivalence_options(a.config, &source);
  if (a.samples) source.count = *a.samples;
  if (a.seed) source.seed = *a.seed;
  if (a.min_pairs) opts.min_completed_pairs = *a.min_pairs;
  if (max_states_given) opts.fas_max_states = a.common.max_states;
  source.kind = a.exhaustive ? verify::PairSource::Kind::Exhaustive
                             : verify::PairSource::Kind::Sampled;
  if (!a.exhaustive && source.count == 0) {
    throw InputError("give --exhaustive or a positive --samples count");
  }
  const verify::EquivalenceReport r =
      verify::equivalence_test(f.graph, source, opts, a.instance);
  std::cout << verify::to_text(r);
  if (!a.json_out.empty()) io::write_json_file(a.json_out, io::report_to_json(r));
  if (r.passed()) return kPass;
  const bool clean = r.disagreements.empty() && r.witness_failures.empty() &&
                     r.invalid_settled_states == 0;
  return clean ? kLimit : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"friends-and-strangers reachability toolkit"};
  app.require_subcommand(1);

  SolveFasArgs sf;
  auto* cmd_sf = app.add_subcommand("solve-fas", "FAS configuration reachability");
  cmd_sf->add_option("instance", sf.instance, "instance JSON")->required();
  cmd_sf->add_option("--mode", sf.mode)->check(CLI::IsMember({"labeled", "quotient"}));
  cmd_sf->add_flag("--bidir", sf.bidir, "bidirectional search");
  cmd_sf->add_option("--witness-out", sf.witness_out, "write the swap sequence here");
  cmd_sf->add_option("--person", sf.person, "person-to-location variant: person");
  cmd_sf->add_option("--location", sf.location, "person-to-location variant: target");
  cmd_sf->add_option("--time-budget-ms", sf.common.time_budget_ms);
  add_common(cmd_sf, sf.common);

  SolveNclArgs sn;
  auto* cmd_sn = app.add_subcommand("solve-ncl", "NCL reachability");
  cmd_sn->add_option("instance", sn.instance, "NCL JSON")->required();
  cmd_sn->add_option("--variant", sn.variant)->check(CLI::IsMember({"c2c", "c2e"}));
  cmd_sn->add_option("--edge", sn.edge, "c2e: edge index");
  cmd_sn->add_option("--head", sn.head, "c2e: desired head vertex");
  cmd_sn->add_option("--witness-out", sn.witness_out, "write the flip sequence here");
  add_common(cmd_sn, sn.common);

  ReduceArgs rd;
  auto* cmd_rd = app.add_subcommand("reduce", "compile NCL into FAS");
  cmd_rd->add_option("instance", rd.instance, "NCL JSON")->required();
  cmd_rd->add_option("--out", rd.out, "bundle JSON path")->required();

  GadgetArgs gd;
  auto* cmd_gd = app.add_subcommand("gadget", "blueprint table, DOT or property suite");
  cmd_gd->add_option("kind", gd.kind, "blue-edge | red-edge | or-vertex | and-vertex")
      ->required();
  auto* dot = cmd_gd->add_flag("--emit-dot", gd.dot, "Graphviz output");
  cmd_gd->add_flag("--suite", gd.suite, "run the behavior checks")->excludes(dot);
  cmd_gd->add_option("--out", gd.out, "output path (default stdout)");
  add_common(cmd_gd, gd.common);

  VerifyArgs vf;
  auto* cmd_vf = app.add_subcommand("verify", "NCL vs reduced FAS equivalence");
  cmd_vf->add_option("instance", vf.instance, "NCL JSON")->required();
  auto* exh = cmd_vf->add_flag("--exhaustive", vf.exhaustive, "all ordered pairs");
  cmd_vf->add_option("--samples", vf.samples, "number of sampled pairs")->excludes(exh);
  cmd_vf->add_option("--seed", vf.seed, "sampling seed");
  cmd_vf->add_option("--min-pairs", vf.min_pairs, "completed pairs required");
  cmd_vf->add_option("--config", vf.config, "defaults file")->check(CLI::ExistingFile);
  cmd_vf->add_option("--json-out", vf.json_out, "report JSON path");
  add_common(cmd_vf, vf.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInvalid;
  }

  try {
    if (*cmd_sf) return run_solve_fas(sf);
    if (*cmd_sn) return run_solve_ncl(sn);
    if (*cmd_rd) return run_reduce(rd);
    if (*cmd_gd) return run_gadget(gd);
    if (*cmd_vf) return run_verify(vf, cmd_vf->count("--max-states") > 0);
  } catch (const InputError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const ResourceLimitError& e) {
    std::cerr << "limit: " << e.what() << '\n';
    return kLimit;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kInvalid;
}
