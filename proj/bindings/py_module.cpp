#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hac/cli_app.hpp"
#include "hac/conjugacy.hpp"
#include "hac/constructions.hpp"
#include "hac/json_io.hpp"
#include "hac/metric.hpp"
#include "hac/sample.hpp"
#include "hac/word_search.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// mpq_class <-> fractions.Fraction (also accepts int and "p/q" strings)
template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("Fraction"));

  bool load(handle src, bool) {
    if (src.is_none()) return false;
    try {
      if (PyLong_Check(src.ptr())) {
        value = hac::parse_rational(py::cast<std::string>(py::str(src)));
        return true;
      }
      if (py::isinstance<py::str>(src)) {
        value = hac::parse_rational(py::cast<std::string>(src));
        return true;
      }
      if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
        std::string num = py::cast<std::string>(py::str(src.attr("numerator")));
        std::string den = py::cast<std::string>(py::str(src.attr("denominator")));
        value = hac::parse_rational(num + "/" + den);
        return true;
      }
    } catch (const std::exception&) {
      return false;
    }
    return false;
  }

  static handle cast(const mpq_class& src, return_value_policy, handle) {
    object fraction = module_::import("fractions").attr("Fraction");
    return fraction(py::str(hac::to_fraction_string(src))).release();
  }
};

}  // namespace pybind11::detail

namespace {

hac::PLHomeo homeo_from_pairs(const std::vector<std::pair<mpq_class, mpq_class>>& pairs) {
  std::vector<hac::Breakpoint> pts;
  pts.reserve(pairs.size());
  for (const auto& [x, y] : pairs) pts.push_back({x, y});
  return hac::PLHomeo::from_points(std::move(pts));
}

std::vector<std::pair<mpq_class, mpq_class>> points_of(const hac::PLMap& m) {
  std::vector<std::pair<mpq_class, mpq_class>> out;
  out.reserve(m.points().size());
  for (const auto& p : m.points()) out.emplace_back(p.x, p.y);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  using namespace hac;

  m.doc() = "Exact piecewise-linear toolkit for the group of absolutely "
            "continuous homeomorphisms of [0,1]";

  static py::exception<Error> exc(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
#if defined(PYBIND11_VERSION_HEX) && PYBIND11_VERSION_HEX >= 0x020C0000
      py::set_error(exc, e.what());
#else
      exc(e.what());
#endif
    }
  });

  py::class_<Interval>(m, "Interval")
      .def(py::init<Rational, Rational>(), py::arg("lo"), py::arg("hi"))
      .def_readonly("lo", &Interval::lo)
      .def_readonly("hi", &Interval::hi)
      .def("length", &Interval::length)
      .def(py::self == py::self)
      .def("__repr__", [](const Interval& iv) {
        return "Interval(" + to_fraction_string(iv.lo) + ", " + to_fraction_string(iv.hi) + ")";
      });

  py::class_<PLMap>(m, "PLMap")
      .def_static("from_points",
                  [](const std::vector<std::pair<mpq_class, mpq_class>>& pairs) {
                    std::vector<Breakpoint> pts;
                    for (const auto& [x, y] : pairs) pts.push_back({x, y});
                    return PLMap::from_points(std::move(pts));
                  })
      .def("eval", &PLMap::eval)
      .def("points", &points_of)
      .def("domain", &PLMap::domain)
      .def("breakpoint_count", &PLMap::breakpoint_count)
      .def(py::self == py::self);

  py::class_<PLHomeo, PLMap>(m, "PLHomeo")
      .def_static("from_points", &homeo_from_pairs)
      .def_static("identity", &PLHomeo::identity)
      .def("codomain", &PLHomeo::codomain)
      .def("inverse", &PLHomeo::inverse)
      .def("eval_inverse", &PLHomeo::eval_inverse)
      .def("restrict", &PLHomeo::restrict)
      .def("is_identity", &PLHomeo::is_identity)
      .def(py::self == py::self)
      .def("__repr__", [](const PLHomeo& f) {
        return "PLHomeo(" + pl_to_json(f).dump() + ")";
      });

  m.def("compose", &compose);
  m.def("power", &power, py::arg("f"), py::arg("n"),
        py::arg("breakpoint_budget") = kDefaultBreakpointBudget);
  m.def("affine_conjugate", &affine_conjugate);
  m.def("affine_map", &affine_map);

  py::class_<Partition>(m, "Partition")
      .def(py::init<std::vector<Rational>>())
      .def_static("uniform", &Partition::uniform)
      .def_static("uniform_with", &Partition::uniform_with)
      .def("refine", &Partition::refine)
      .def("points", &Partition::points);

  m.def("rho_exact",
        py::overload_cast<const PLMap&, const PLMap&, const Rational&, const Rational&>(
            &rho_exact));
  m.def("rho_exact", py::overload_cast<const PLMap&, const PLMap&>(&rho_exact));
  m.def("rho_upper_bound", &rho_upper_bound);
  m.def("uniform_dist", &uniform_dist);
  m.def(
      "rho_sampled_lower",
      [](const LazyHomeo& f, const LazyHomeo& g, const Partition& partition, std::size_t cap) {
        return rho_sampled_lower(lazy_oracle(f, cap), lazy_oracle(g, cap), partition);
      },
      py::arg("f"), py::arg("g"), py::arg("partition"),
      py::arg("iteration_cap") = kDefaultIterationCap);
  m.def("singular_mass",
        py::overload_cast<const PLMap&, const Rational&, const Rational&>(&singular_mass));
  m.def(
      "singular_mass",
      [](const LazyHomeo& h, const Rational& mesh, const Rational& threshold, std::size_t cap) {
        return singular_mass(lazy_oracle(h, cap), h.domain(), mesh, threshold);
      },
      py::arg("h"), py::arg("mesh"), py::arg("threshold"),
      py::arg("iteration_cap") = kDefaultIterationCap);

  py::class_<FixedSet>(m, "FixedSet")
      .def_readonly("points", &FixedSet::points)
      .def_readonly("intervals", &FixedSet::intervals)
      .def("measure", &FixedSet::measure)
      .def("contains", &FixedSet::contains)
      .def(py::self == py::self);

  py::class_<Orbital>(m, "Orbital")
      .def_readonly("span", &Orbital::span)
      .def_readonly("parity", &Orbital::parity);

  py::class_<BetweenReport>(m, "BetweenReport")
      .def_readonly("vacuous", &BetweenReport::vacuous)
      .def_readonly("satisfied", &BetweenReport::satisfied)
      .def_readonly("positive_witness", &BetweenReport::positive_witness)
      .def_readonly("negative_witness", &BetweenReport::negative_witness);

  py::class_<GenericityReport>(m, "GenericityReport")
      .def_readonly("is_cantor", &GenericityReport::is_cantor)
      .def_readonly("mixing", &GenericityReport::mixing)
      .def_readonly("null_fixed", &GenericityReport::null_fixed)
      .def_readonly("fixed_measure", &GenericityReport::fixed_measure)
      .def_readonly("witnesses", &GenericityReport::witnesses);

  py::class_<PushStep>(m, "PushStep")
      .def_readonly("generator", &PushStep::generator)
      .def_readonly("direction", &PushStep::direction);

  py::class_<PushOutcome>(m, "PushOutcome")
      .def_readonly("success", &PushOutcome::success)
      .def_readonly("reached", &PushOutcome::reached)
      .def_readonly("word", &PushOutcome::word)
      .def_readonly("steps", &PushOutcome::steps)
      .def_readonly("barrier", &PushOutcome::barrier)
      .def_readonly("barrier_fixers", &PushOutcome::barrier_fixers);

  m.def("fixed_set", &fixed_set);
  m.def("orbitals", &orbitals);
  m.def("parity_at", &parity_at);
  m.def("check_between", &check_between);
  m.def("genericity_report", &genericity_report);
  m.def("push_sup",
        [](const std::vector<PLHomeo>& generators, const Rational& start,
           const Rational& target, std::size_t budget) {
          return push_sup(generators, start, target, budget);
        });
  m.def("replay_push_word",
        [](const std::vector<PLHomeo>& generators, const std::vector<PushStep>& word,
           const Rational& start) { return replay_push_word(generators, word, start); });

  m.def("sawtooth", &sawtooth);
  m.def("wobble", &wobble);
  m.def("cantor_stair", &cantor_stair);
  m.def("mix", &mix);

  py::class_<BlowUpSite>(m, "BlowUpSite")
      .def(py::init([](const Rational& lo, const Rational& fp, const Rational& hi) {
             return BlowUpSite{lo, fp, hi};
           }),
           py::arg("lo"), py::arg("fixed_point"), py::arg("hi"))
      .def_readonly("lo", &BlowUpSite::lo)
      .def_readonly("fixed_point", &BlowUpSite::fixed_point)
      .def_readonly("hi", &BlowUpSite::hi);

  py::class_<BlowUpResult>(m, "BlowUpResult")
      .def_readonly("psi", &BlowUpResult::psi)
      .def_readonly("bound", &BlowUpResult::bound);

  m.def("blow_up", [](const PLHomeo& map, const std::vector<BlowUpSite>& sites) {
    return blow_up(BlowUpSpec{map, sites});
  });

  py::class_<LazyHomeo>(m, "LazyHomeo")
      .def_static("atom", &LazyHomeo::atom)
      .def_static("identity", &LazyHomeo::identity)
      .def_static("compose", &LazyHomeo::compose)
      .def_static("inverse", &LazyHomeo::inverse)
      .def_static("power", &LazyHomeo::power)
      .def_static("piecewise", &LazyHomeo::piecewise)
      .def_static("tiled", &LazyHomeo::tiled)
      .def_static("orbit_extension", &LazyHomeo::orbit_extension)
      .def("domain", &LazyHomeo::domain)
      .def("codomain", &LazyHomeo::codomain)
      .def(
          "eval",
          [](const LazyHomeo& h, const Rational& x, std::size_t cap) {
            return lazy_eval(h, x, cap);
          },
          py::arg("x"), py::arg("iteration_cap") = kDefaultIterationCap)
      .def(
          "eval_inverse",
          [](const LazyHomeo& h, const Rational& y, std::size_t cap) {
            return lazy_eval_inverse(h, y, cap);
          },
          py::arg("y"), py::arg("iteration_cap") = kDefaultIterationCap)
      .def("to_json", [](const LazyHomeo& h) { return lazy_to_json(h).dump(); })
      .def_static("from_json",
                  [](const std::string& text) { return lazy_from_json(Json::parse(text)); });

  py::enum_<SigToken>(m, "SigToken")
      .value("FixedPoint", SigToken::FixedPoint)
      .value("FixedInterval", SigToken::FixedInterval)
      .value("PosOrbital", SigToken::PosOrbital)
      .value("NegOrbital", SigToken::NegOrbital);

  py::class_<OrbitalSignature>(m, "OrbitalSignature")
      .def_readonly("tokens", &OrbitalSignature::tokens)
      .def("__str__", &OrbitalSignature::to_string)
      .def(py::self == py::self);

  m.def("orbital_signature", &orbital_signature);
  m.def("bump_conjugator",
        py::overload_cast<const PLHomeo&, const PLHomeo&, const Rational&, const Rational&,
                          const PLHomeo&>(&bump_conjugator));
  m.def("bump_conjugator", py::overload_cast<const PLHomeo&, const PLHomeo&>(&bump_conjugator));
  m.def("global_conjugator", &global_conjugator);

  py::class_<GeneratorPairSpec>(m, "GeneratorPairSpec")
      .def_readonly("alpha", &GeneratorPairSpec::alpha)
      .def_readonly("x0", &GeneratorPairSpec::x0)
      .def_readonly("delta", &GeneratorPairSpec::delta)
      .def_readonly("phis", &GeneratorPairSpec::phis);

  py::class_<GeneratorPair>(m, "GeneratorPair")
      .def_readonly("f_tilde", &GeneratorPair::f_tilde)
      .def_readonly("g_tilde", &GeneratorPair::g_tilde)
      .def_readonly("interpolant", &GeneratorPair::interpolant)
      .def_readonly("phis", &GeneratorPair::phis)
      .def_readonly("alpha", &GeneratorPair::alpha)
      .def_readonly("y0", &GeneratorPair::y0)
      .def_readonly("x0", &GeneratorPair::x0)
      .def_readonly("delta", &GeneratorPair::delta)
      .def_readonly("rho_g_bound", &GeneratorPair::rho_g_bound)
      .def_readonly("rho_f_bound", &GeneratorPair::rho_f_bound)
      .def("x", &GeneratorPair::x)
      .def("to_json", [](const GeneratorPair& pair) { return generator_pair_to_json(pair).dump(); })
      .def_static("from_json", [](const std::string& text) {
        return generator_pair_from_json(Json::parse(text));
      });

  m.def("make_generator_pair_spec", &make_generator_pair_spec, py::arg("f"), py::arg("g"),
        py::arg("delta"), py::arg("num_phis") = 2);
  m.def("generator_pair", &generator_pair);
  m.def("verify_no_shared_fixed_points", &verify_no_shared_fixed_points, py::arg("pair"),
        py::arg("depth") = 20);
  m.def("pick_alpha", &pick_alpha);

  py::class_<Word>(m, "Word")
      .def_static("from_string", &Word::from_string)
      .def("__str__", &Word::to_string)
      .def("__len__", &Word::length)
      .def("inverse", &Word::inverse)
      .def(py::self == py::self);

  m.def("enumerate_words", [](std::size_t max_len) {
    std::vector<std::string> out;
    for (const auto& w : enumerate_words(max_len)) out.push_back(w.to_string());
    return out;
  });
  m.def("apply_word", [](const std::string& w, const LazyHomeo& F, const LazyHomeo& G) {
    return apply_word(Word::from_string(w), F, G);
  });
  m.def(
      "eval_word",
      [](const std::string& w, const LazyHomeo& F, const LazyHomeo& G, const Rational& x,
         std::size_t cap) { return eval_word(Word::from_string(w), F, G, x, cap); },
      py::arg("word"), py::arg("F"), py::arg("G"), py::arg("x"),
      py::arg("iteration_cap") = kDefaultIterationCap);

  py::class_<SearchReport>(m, "SearchReport")
      .def_property_readonly("best_word",
                             [](const SearchReport& r) { return r.best_word.to_string(); })
      .def_readonly("lower", &SearchReport::lower)
      .def_readonly("uniform", &SearchReport::uniform)
      .def_readonly("trace", &SearchReport::trace)
      .def_readonly("evaluations", &SearchReport::evaluations)
      .def_readonly("skipped", &SearchReport::skipped);

  m.def("best_approx", &best_approx, py::arg("F"), py::arg("G"), py::arg("target"),
        py::arg("max_len"), py::arg("partition"),
        py::arg("iteration_cap") = kDefaultIterationCap);

  py::enum_<ProofGuidedStatus>(m, "ProofGuidedStatus")
      .value("Ok", ProofGuidedStatus::Ok)
      .value("InnerSearchShortfall", ProofGuidedStatus::InnerSearchShortfall)
      .value("PushFailed", ProofGuidedStatus::PushFailed)
      .value("NoEscape", ProofGuidedStatus::NoEscape);

  py::class_<ProofGuidedParams>(m, "ProofGuidedParams")
      .def(py::init<>())
      .def_readwrite("push_budget", &ProofGuidedParams::push_budget)
      .def_readwrite("escape_cap", &ProofGuidedParams::escape_cap)
      .def_readwrite("n_cap", &ProofGuidedParams::n_cap)
      .def_readwrite("inner_max_len", &ProofGuidedParams::inner_max_len)
      .def_readwrite("inner_cells", &ProofGuidedParams::inner_cells)
      .def_readwrite("iteration_cap", &ProofGuidedParams::iteration_cap);

  py::class_<ProofGuidedReport>(m, "ProofGuidedReport")
      .def_readonly("status", &ProofGuidedReport::status)
      .def_readonly("epsilon", &ProofGuidedReport::epsilon)
      .def_readonly("gamma", &ProofGuidedReport::gamma)
      .def_readonly("h_word", &ProofGuidedReport::h_word)
      .def_readonly("h_y0", &ProofGuidedReport::h_y0)
      .def_readonly("n", &ProofGuidedReport::n)
      .def_readonly("m", &ProofGuidedReport::m)
      .def_readonly("a", &ProofGuidedReport::a)
      .def_readonly("b", &ProofGuidedReport::b)
      .def_readonly("blowup_bound", &ProofGuidedReport::blowup_bound)
      .def_readonly("outer_budget", &ProofGuidedReport::outer_budget)
      .def_readonly("middle_estimate", &ProofGuidedReport::middle_estimate)
      .def_readonly("inner", &ProofGuidedReport::inner);

  m.def("proof_guided_approx", &proof_guided_approx, py::arg("pair"), py::arg("target"),
        py::arg("epsilon"), py::arg("params") = ProofGuidedParams{});

  py::class_<SplitMix64>(m, "SplitMix64").def(py::init<std::uint64_t>());
  m.def("random_endpoint_fixing", &random_endpoint_fixing, py::arg("rng"),
        py::arg("interior") = 4);
  m.def("random_matched_pair", &random_matched_pair);
  m.def("random_disjoint_fix_pair", &random_disjoint_fix_pair, py::arg("rng"),
        py::arg("interior") = 4);

  m.def("pl_to_json", [](const PLMap& f) { return pl_to_json(f).dump(); });
  m.def("pl_from_json", [](const std::string& text) {
    return pl_homeo_from_json(Json::parse(text));
  });
  m.def("to_decimal_string", &to_decimal_string);
  m.def("run_cli", [](const std::vector<std::string>& args) { return run_cli(args); });
}
