#include "hac/cli_app.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hac/constructions.hpp"
#include "hac/json_io.hpp"
#include "hac/metric.hpp"
#include "hac/sample.hpp"
#include "hac/word_search.hpp"

namespace hac {

namespace {

std::size_t default_iteration_cap() {
  if (const char* env = std::getenv("HAC_ITERATION_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultIterationCap;
}

// input values are either a path or inline JSON (starts with '{')
Json load_json(const std::string& spec) {
  std::string text;
  if (!spec.empty() && spec[0] == '{') {
    text = spec;
  } else {
    std::ifstream in(spec);
    require(in.good(), ErrorKind::ParseError, "cannot open '" + spec + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  require(!j.is_discarded(), ErrorKind::ParseError, "malformed JSON in '" + spec + "'");
  return j;
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  require(out.good(), ErrorKind::ParseError, "cannot write '" + out_path + "'");
  out << text;
}

void emit_json(const std::string& out_path, const Json& j) {
  write_output(out_path, j.dump(2) + "\n");
}

// both renderings of a rational under a common key prefix
void put_rational(Json& j, const std::string& key, const Rational& value) {
  j[key] = to_fraction_string(value);
  j[key + "_decimal"] = to_decimal_string(value);
}

std::string csv_cell(const Rational& value) {
  return to_fraction_string(value) + "," + to_decimal_string(value);
}

Json search_report_to_json(const SearchReport& report) {
  Json j;
  j["best_word"] = report.best_word.to_string();
  put_rational(j, "lower", report.lower);
  put_rational(j, "uniform", report.uniform);
  Json trace = Json::array();
  for (const auto& [len, best] : report.trace) {
    Json row;
    row["length"] = len;
    put_rational(row, "best", best);
    trace.push_back(std::move(row));
  }
  j["trace"] = std::move(trace);
  j["evaluations"] = report.evaluations;
  j["skipped"] = report.skipped;
  return j;
}

std::string push_word_string(const std::vector<PushStep>& steps) {
  // outermost letter first, matching Word::to_string
  std::string s;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    s.push_back(it->generator == 0 ? (it->direction > 0 ? 'F' : 'f')
                                   : (it->direction > 0 ? 'G' : 'g'));
  return s;
}

struct CommonOpts {
  std::string out;
  std::size_t iteration_cap = default_iteration_cap();
  std::uint64_t seed = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_seed = false) {
  cmd->add_option("--out", opts.out, "Output path (default: stdout)");
  cmd->add_option("--iteration-cap", opts.iteration_cap,
                  "Lazy-evaluation iteration cap (env HAC_ITERATION_CAP)");
  if (with_seed) cmd->add_option("--seed", opts.seed, "PRNG seed for generated instances");
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Exact piecewise-linear toolkit for the group of absolutely "
               "continuous interval homeomorphisms"};
  app.require_subcommand(1);

  // ---- rho ----
  auto* rho_cmd = app.add_subcommand("rho", "Distance in the rho metric between two maps");
  struct {
    std::string f, g;
    std::string a, b;
    std::size_t cells = kDefaultPartitionCells;
    CommonOpts common;
  } rho_opts;
  rho_cmd->add_option("--f", rho_opts.f, "First map (PL or lazy JSON)")->required();
  rho_cmd->add_option("--g", rho_opts.g, "Second map (PL or lazy JSON)")->required();
  rho_cmd->add_option("--a", rho_opts.a, "Left endpoint (default: common domain)");
  rho_cmd->add_option("--b", rho_opts.b, "Right endpoint");
  rho_cmd->add_option("--cells", rho_opts.cells, "Partition cells for lazy inputs");
  add_common(rho_cmd, rho_opts.common);
  rho_cmd->callback([&rho_opts] {
    Json jf = load_json(rho_opts.f);
    Json jg = load_json(rho_opts.g);
    bool f_lazy = jf.contains("kind");
    bool g_lazy = jg.contains("kind");
    Json out;
    if (!f_lazy && !g_lazy) {
      PLHomeo f = pl_homeo_from_json(jf);
      PLHomeo g = pl_homeo_from_json(jg);
      Rational a = rho_opts.a.empty() ? f.domain_lo() : parse_rational(rho_opts.a);
      Rational b = rho_opts.b.empty() ? f.domain_hi() : parse_rational(rho_opts.b);
      out["exact"] = true;
      put_rational(out, "rho", rho_exact(f, g, a, b));
      put_rational(out, "upper_bound", rho_upper_bound(f, g, a, b));
      put_rational(out, "uniform", uniform_dist(f, g));
    } else {
      LazyHomeo f = f_lazy ? lazy_from_json(jf) : LazyHomeo::atom(pl_homeo_from_json(jf));
      LazyHomeo g = g_lazy ? lazy_from_json(jg) : LazyHomeo::atom(pl_homeo_from_json(jg));
      require(f.domain() == g.domain(), ErrorKind::DomainMismatch, "domains must match");
      std::size_t cap = rho_opts.common.iteration_cap;
      Partition partition = Partition::uniform(f.domain(), rho_opts.cells);
      Rational lower =
          rho_sampled_lower(lazy_oracle(f, cap), lazy_oracle(g, cap), partition);
      // certified bracket: sampled total variation from below, the sharp
      // f(b)-f(a)+g(b)-g(a) bound from above
      const Interval& dom = f.domain();
      Rational upper = lazy_eval(f, dom.hi, cap) - lazy_eval(f, dom.lo, cap) +
                       lazy_eval(g, dom.hi, cap) - lazy_eval(g, dom.lo, cap);
      out["exact"] = false;
      out["cells"] = rho_opts.cells;
      put_rational(out, "lower", lower);
      put_rational(out, "upper_bound", upper);
    }
    emit_json(rho_opts.common.out, out);
  });

  // ---- fix ----
  auto* fix_cmd = app.add_subcommand("fix", "Exact fixed-point set of a PL map");
  struct {
    std::string f;
    CommonOpts common;
  } fix_opts;
  fix_cmd->add_option("--f", fix_opts.f, "PL map JSON")->required();
  add_common(fix_cmd, fix_opts.common);
  fix_cmd->callback([&fix_opts] {
    PLHomeo f = pl_homeo_from_json(load_json(fix_opts.f));
    emit_json(fix_opts.common.out, fixed_set_to_json(fixed_set(f)));
  });

  // ---- orbitals ----
  auto* orb_cmd = app.add_subcommand("orbitals", "Orbitals of a PL map with parities");
  struct {
    std::string f;
    CommonOpts common;
  } orb_opts;
  orb_cmd->add_option("--f", orb_opts.f, "PL map JSON")->required();
  add_common(orb_cmd, orb_opts.common);
  orb_cmd->callback([&orb_opts] {
    PLHomeo f = pl_homeo_from_json(load_json(orb_opts.f));
    emit_json(orb_opts.common.out, orbitals_to_json(orbitals(f)));
  });

  // ---- generic-check ----
  auto* gen_cmd = app.add_subcommand("generic-check",
                                     "Genericity checkers (i)-(iii) for PL maps");
  struct {
    std::string f;
    std::size_t random_count = 0;
    CommonOpts common;
  } gen_opts;
  gen_cmd->add_option("--f", gen_opts.f, "PL map JSON");
  gen_cmd->add_option("--random", gen_opts.random_count, "Check seeded random maps instead");
  add_common(gen_cmd, gen_opts.common, /*with_seed=*/true);
  gen_cmd->callback([&gen_opts] {
    if (gen_opts.random_count == 0) {
      require(!gen_opts.f.empty(), ErrorKind::ParseError, "need --f or --random");
      PLHomeo f = pl_homeo_from_json(load_json(gen_opts.f));
      emit_json(gen_opts.common.out, genericity_to_json(genericity_report(f)));
      return;
    }
    SplitMix64 rng(gen_opts.common.seed);
    std::string csv = "index,is_cantor,mixing,null_fixed,fixed_measure,fixed_measure_decimal\n";
    for (std::size_t i = 0; i < gen_opts.random_count; ++i) {
      GenericityReport report = genericity_report(random_endpoint_fixing(rng));
      csv += std::to_string(i) + "," + (report.is_cantor ? "1" : "0") + "," +
             (report.mixing ? "1" : "0") + "," + (report.null_fixed ? "1" : "0") + "," +
             csv_cell(report.fixed_measure) + "\n";
    }
    write_output(gen_opts.common.out, csv);
  });

  // ---- sawtooth-sweep ----
  auto* saw_cmd = app.add_subcommand("sawtooth-sweep",
                                     "CSV of rho(sawtooth(n), id) = 2 - 4/n");
  struct {
    long n_max = 64;
    CommonOpts common;
  } saw_opts;
  saw_cmd->add_option("--n-max", saw_opts.n_max, "Largest n (default 64)");
  add_common(saw_cmd, saw_opts.common);
  saw_cmd->callback([&saw_opts] {
    require(saw_opts.n_max >= 2, ErrorKind::BadParameter, "--n-max must be >= 2");
    PLHomeo id = PLHomeo::identity(unit_interval());
    std::string csv = "n,rho,rho_decimal,uniform,uniform_decimal,bound,bound_decimal\n";
    for (long n = 2; n <= saw_opts.n_max; ++n) {
      PLHomeo fn = sawtooth(n);
      csv += std::to_string(n) + "," + csv_cell(rho_exact(fn, id)) + "," +
             csv_cell(uniform_dist(fn, id)) + "," +
             csv_cell(rho_upper_bound(fn, id, Rational(0), Rational(1))) + "\n";
    }
    write_output(saw_opts.common.out, csv);
  });

  // ---- wobble ----
  auto* wob_cmd = app.add_subcommand("wobble", "The 5-point diagonal-crossing perturbation");
  struct {
    std::string a = "0", b = "1";
    CommonOpts common;
  } wob_opts;
  wob_cmd->add_option("--a", wob_opts.a, "Left endpoint");
  wob_cmd->add_option("--b", wob_opts.b, "Right endpoint");
  add_common(wob_cmd, wob_opts.common);
  wob_cmd->callback([&wob_opts] {
    emit_json(wob_opts.common.out,
              pl_to_json(wobble(parse_rational(wob_opts.a), parse_rational(wob_opts.b))));
  });

  // ---- blowup ----
  auto* blow_cmd = app.add_subcommand("blowup",
                                      "Blow fixed points up to fixed intervals, with bound");
  struct {
    std::string phi;
    std::string sites;  // "lo,fp,hi;lo,fp,hi"
    CommonOpts common;
  } blow_opts;
  blow_cmd->add_option("--phi", blow_opts.phi, "PL map JSON")->required();
  blow_cmd->add_option("--sites", blow_opts.sites, "Semicolon-separated lo,fixed,hi triples")
      ->required();
  add_common(blow_cmd, blow_opts.common);
  blow_cmd->callback([&blow_opts] {
    PLHomeo phi = pl_homeo_from_json(load_json(blow_opts.phi));
    BlowUpSpec spec{phi, {}};
    std::stringstream ss(blow_opts.sites);
    std::string item;
    while (std::getline(ss, item, ';')) {
      std::stringstream triple(item);
      std::string lo, fp, hi;
      require(std::getline(triple, lo, ',') && std::getline(triple, fp, ',') &&
                  std::getline(triple, hi, ','),
              ErrorKind::ParseError, "site must be lo,fixed,hi");
      spec.sites.push_back({parse_rational(lo), parse_rational(fp), parse_rational(hi)});
    }
    BlowUpResult result = blow_up(spec);
    Json out;
    out["psi"] = pl_to_json(result.psi);
    put_rational(out, "bound", result.bound);
    put_rational(out, "rho", rho_exact(phi, result.psi));
    emit_json(blow_opts.common.out, out);
  });

  // ---- cantor-sweep ----
  auto* cantor_cmd = app.add_subcommand(
      "cantor-sweep", "CSV of consecutive staircase-mix distances (rho constant 1/3)");
  struct {
    long k_max = 8;
    CommonOpts common;
  } cantor_opts;
  cantor_cmd->add_option("--k-max", cantor_opts.k_max, "Largest k (default 8)");
  add_common(cantor_cmd, cantor_opts.common);
  cantor_cmd->callback([&cantor_opts] {
    require(cantor_opts.k_max >= 0, ErrorKind::BadParameter, "--k-max must be >= 0");
    std::string csv = "k,rho,rho_decimal,uniform,uniform_decimal,bound,bound_decimal\n";
    for (long k = 0; k <= cantor_opts.k_max; ++k) {
      PLHomeo a = mix(k);
      PLHomeo b = mix(k + 1);
      csv += std::to_string(k) + "," + csv_cell(rho_exact(a, b)) + "," +
             csv_cell(uniform_dist(a, b)) + "," +
             csv_cell(rho_upper_bound(a, b, Rational(0), Rational(1))) + "\n";
    }
    write_output(cantor_opts.common.out, csv);
  });

  // ---- conjugate ----
  auto* conj_cmd = app.add_subcommand(
      "conjugate", "Build the pasted conjugator between matched-signature PL maps");
  struct {
    std::string f, g;
    std::size_t check = 0;
    CommonOpts common;
  } conj_opts;
  conj_cmd->add_option("--f", conj_opts.f, "PL map JSON")->required();
  conj_cmd->add_option("--g", conj_opts.g, "PL map JSON")->required();
  conj_cmd->add_option("--check", conj_opts.check,
                       "Verify h(f(x)) = g(h(x)) at this many seeded rationals");
  add_common(conj_cmd, conj_opts.common, /*with_seed=*/true);
  conj_cmd->callback([&conj_opts] {
    PLHomeo f = pl_homeo_from_json(load_json(conj_opts.f));
    PLHomeo g = pl_homeo_from_json(load_json(conj_opts.g));
    LazyHomeo h = global_conjugator(f, g);
    Json out;
    out["signature"] = signature_to_json(orbital_signature(f));
    out["conjugator"] = lazy_to_json(h);
    if (conj_opts.check > 0) {
      SplitMix64 rng(conj_opts.common.seed);
      std::size_t cap = conj_opts.common.iteration_cap;
      bool all_exact = true;
      for (std::size_t i = 0; i < conj_opts.check; ++i) {
        Rational x = random_rational(rng, f.domain());
        if (lazy_eval(h, f.eval(x), cap) != g.eval(lazy_eval(h, x, cap))) all_exact = false;
      }
      Json checks;
      checks["tested"] = conj_opts.check;
      checks["all_exact"] = all_exact;
      out["checks"] = std::move(checks);
    }
    emit_json(conj_opts.common.out, out);
  });

  // ---- generators ----
  auto* gens_cmd = app.add_subcommand(
      "generators", "Perturb (f, g) into the tiled two-generator pair (f~, g~)");
  struct {
    std::string f, g;
    std::string delta = "1/10";
    std::size_t num_phis = 2;
    std::size_t verify_depth = 20;
    CommonOpts common;
  } gens_opts;
  gens_cmd->add_option("--f", gens_opts.f, "PL map JSON")->required();
  gens_cmd->add_option("--g", gens_opts.g, "PL map JSON")->required();
  gens_cmd->add_option("--delta", gens_opts.delta, "Perturbation budget (default 1/10)");
  gens_cmd->add_option("--num-phis", gens_opts.num_phis, "Size of the tile family");
  gens_cmd->add_option("--verify-depth", gens_opts.verify_depth,
                       "Tile depth for the shared-fixed-point check");
  add_common(gens_cmd, gens_opts.common);
  gens_cmd->callback([&gens_opts] {
    PLHomeo f = pl_homeo_from_json(load_json(gens_opts.f));
    PLHomeo g = pl_homeo_from_json(load_json(gens_opts.g));
    GeneratorPairSpec spec =
        make_generator_pair_spec(f, g, parse_rational(gens_opts.delta), gens_opts.num_phis);
    GeneratorPair pair = generator_pair(spec);
    verify_no_shared_fixed_points(pair, gens_opts.verify_depth);
    Json out = generator_pair_to_json(pair);
    put_rational(out, "rho_g_exact", rho_exact(g, pair.g_tilde));
    out["verified_tile_depth"] = gens_opts.verify_depth;
    emit_json(gens_opts.common.out, out);
  });

  // ---- search ----
  auto* search_cmd = app.add_subcommand(
      "search", "Brute-force best word approximation of a target map");
  struct {
    std::string bundle, target;
    std::size_t max_len = 6;
    std::size_t cells = 64;
    std::string trace_csv;
    CommonOpts common;
  } search_opts;
  search_cmd->add_option("--bundle", search_opts.bundle, "generators output JSON")->required();
  search_cmd->add_option("--target", search_opts.target, "PL map JSON")->required();
  search_cmd->add_option("--max-len", search_opts.max_len, "Maximum word length");
  search_cmd->add_option("--cells", search_opts.cells, "Partition cells");
  search_cmd->add_option("--trace-csv", search_opts.trace_csv,
                         "Also write (length, best_distance_decimal) rows here");
  add_common(search_cmd, search_opts.common);
  search_cmd->callback([&search_opts] {
    GeneratorPair pair = generator_pair_from_json(load_json(search_opts.bundle));
    PLHomeo target = pl_homeo_from_json(load_json(search_opts.target));
    Partition partition = Partition::uniform(unit_interval(), search_opts.cells);
    SearchReport report =
        best_approx(pair.f_tilde, LazyHomeo::atom(pair.g_tilde), target, search_opts.max_len,
                    partition, search_opts.common.iteration_cap);
    if (!search_opts.trace_csv.empty()) {
      std::string csv = "length,best_distance_decimal\n";
      for (const auto& [len, best] : report.trace)
        csv += std::to_string(len) + "," + to_decimal_string(best) + "\n";
      write_output(search_opts.trace_csv, csv);
    }
    emit_json(search_opts.common.out, search_report_to_json(report));
  });

  // ---- proof-approx ----
  auto* proof_cmd = app.add_subcommand(
      "proof-approx", "Proof-guided approximation with certified outer budget");
  struct {
    std::string bundle, target;
    std::string epsilon = "1/2";
    ProofGuidedParams params;
    CommonOpts common;
  } proof_opts;
  proof_cmd->add_option("--bundle", proof_opts.bundle, "generators output JSON")->required();
  proof_cmd->add_option("--target", proof_opts.target, "PL map JSON")->required();
  proof_cmd->add_option("--epsilon", proof_opts.epsilon, "Accuracy goal");
  proof_cmd->add_option("--push-budget", proof_opts.params.push_budget, "Greedy ascent budget");
  proof_cmd->add_option("--inner-max-len", proof_opts.params.inner_max_len,
                        "Word length for the middle search");
  proof_cmd->add_option("--inner-cells", proof_opts.params.inner_cells,
                        "Partition cells on [a, b]");
  add_common(proof_cmd, proof_opts.common);
  proof_cmd->callback([&proof_opts] {
    GeneratorPair pair = generator_pair_from_json(load_json(proof_opts.bundle));
    PLHomeo target = pl_homeo_from_json(load_json(proof_opts.target));
    proof_opts.params.iteration_cap = proof_opts.common.iteration_cap;
    ProofGuidedReport report =
        proof_guided_approx(pair, target, parse_rational(proof_opts.epsilon), proof_opts.params);
    Json out;
    out["status"] = proof_guided_status_name(report.status);
    put_rational(out, "epsilon", report.epsilon);
    put_rational(out, "gamma", report.gamma);
    out["h_word"] = push_word_string(report.h_word);
    put_rational(out, "h_y0", report.h_y0);
    out["n"] = report.n;
    out["m"] = report.m;
    put_rational(out, "a", report.a);
    put_rational(out, "b", report.b);
    put_rational(out, "blowup_bound", report.blowup_bound);
    put_rational(out, "outer_budget", report.outer_budget);
    put_rational(out, "middle_estimate", report.middle_estimate);
    out["inner"] = search_report_to_json(report.inner);
    emit_json(proof_opts.common.out, out);
    if (report.status == ProofGuidedStatus::PushFailed)
      throw Error(ErrorKind::PushFailed, "greedy ascent exhausted its budget");
    if (report.status == ProofGuidedStatus::NoEscape)
      throw Error(ErrorKind::NoEscape, "escape iteration exhausted its cap");
  });

  // ---- singular-mass ----
  auto* mass_cmd = app.add_subcommand(
      "singular-mass", "Rise carried by mesh cells steeper than a threshold");
  struct {
    std::string f;
    long cantor_k = -1;
    std::string mesh;
    std::string threshold = "64";
    CommonOpts common;
  } mass_opts;
  mass_cmd->add_option("--f", mass_opts.f, "PL or lazy map JSON");
  mass_cmd->add_option("--cantor", mass_opts.cantor_k, "Use the stage-k staircase instead");
  mass_cmd->add_option("--mesh", mass_opts.mesh, "Cell width (must divide the interval)")
      ->required();
  mass_cmd->add_option("--threshold", mass_opts.threshold, "Slope threshold");
  add_common(mass_cmd, mass_opts.common);
  mass_cmd->callback([&mass_opts] {
    Rational mesh = parse_rational(mass_opts.mesh);
    Rational threshold = parse_rational(mass_opts.threshold);
    Json out;
    Rational mass;
    if (mass_opts.cantor_k >= 0) {
      mass = singular_mass(cantor_stair(mass_opts.cantor_k), mesh, threshold);
    } else {
      require(!mass_opts.f.empty(), ErrorKind::ParseError, "need --f or --cantor");
      Json jf = load_json(mass_opts.f);
      if (jf.contains("kind")) {
        LazyHomeo h = lazy_from_json(jf);
        mass = singular_mass(lazy_oracle(h, mass_opts.common.iteration_cap), h.domain(), mesh,
                             threshold);
      } else {
        mass = singular_mass(pl_map_from_json(jf), mesh, threshold);
      }
    }
    put_rational(out, "mass", mass);
    put_rational(out, "mesh", mesh);
    put_rational(out, "threshold", threshold);
    emit_json(mass_opts.common.out, out);
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return error_kind_exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args;
  args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args);
}

}  // namespace hac
