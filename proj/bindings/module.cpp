#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "permsimple/classify.hpp"
#include "permsimple/essential.hpp"
#include "permsimple/enumerate.hpp"
#include "permsimple/intervals.hpp"
#include "permsimple/json_io.hpp"
#include "permsimple/plot.hpp"
#include "permsimple/stats.hpp"

namespace py = pybind11;
using namespace permsimple;

namespace {

template <typename T>
std::string dump_json(const T& value) {
  return nlohmann::json(value).dump(2);
}

std::vector<IntervalWindow> windows_from_pairs(
    const Permutation& p, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<IntervalWindow> out;
  out.reserve(pairs.size());
  for (auto [i, j] : pairs) out.push_back(window_of(p, i, j));
  return out;
}

}  // namespace

PYBIND11_MODULE(permsimple, m) {
  m.doc() = "Simple-permutation structure toolkit: intervals, parallel "
            "alternations, inessential entries, extension census, "
            "enumeration and sampling";

  auto err = py::register_exception<Error>(m, "Error");
  py::register_exception<NotAPermutation>(m, "NotAPermutation", err.ptr());
  py::register_exception<NotSimple>(m, "NotSimple", err.ptr());
  py::register_exception<NotAParallelAlternation>(
      m, "NotAParallelAlternation", err.ptr());
  py::register_exception<TooLarge>(m, "TooLarge", err.ptr());
  py::register_exception<TooSmall>(m, "TooSmall", err.ptr());
  py::register_exception<ParseError>(m, "ParseError", err.ptr());

  py::enum_<Symmetry>(m, "Symmetry")
      .value("IDENTITY", Symmetry::Identity)
      .value("REVERSE", Symmetry::Reverse)
      .value("COMPLEMENT", Symmetry::Complement)
      .value("REVERSE_COMPLEMENT", Symmetry::ReverseComplement)
      .value("INVERSE", Symmetry::Inverse)
      .value("INVERSE_REVERSE", Symmetry::InverseReverse)
      .value("INVERSE_COMPLEMENT", Symmetry::InverseComplement)
      .value("INVERSE_REVERSE_COMPLEMENT",
             Symmetry::InverseReverseComplement);
  m.def("compose", &compose, py::arg("a"), py::arg("b"),
        "symmetry equal to applying a, then b");
  m.def("inverse_of", &inverse_of);
  m.def("symmetry_name", &symmetry_name);

  py::class_<EntryRef>(m, "EntryRef")
      .def(py::init<int, int>(), py::arg("position"), py::arg("value"))
      .def_readonly("position", &EntryRef::position)
      .def_readonly("value", &EntryRef::value)
      .def(py::self == py::self)
      .def("__repr__", [](const EntryRef& e) {
        return "EntryRef(position=" + std::to_string(e.position) +
               ", value=" + std::to_string(e.value) + ")";
      });

  py::class_<IntervalWindow>(m, "IntervalWindow")
      .def_readonly("i", &IntervalWindow::i)
      .def_readonly("j", &IntervalWindow::j)
      .def_readonly("vmin", &IntervalWindow::vmin)
      .def_readonly("vmax", &IntervalWindow::vmax)
      .def("length", &IntervalWindow::length)
      .def(py::self == py::self)
      .def("__repr__", [](const IntervalWindow& w) {
        return "IntervalWindow(i=" + std::to_string(w.i) +
               ", j=" + std::to_string(w.j) +
               ", vmin=" + std::to_string(w.vmin) +
               ", vmax=" + std::to_string(w.vmax) + ")";
      });

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const std::vector<int>& seq) {
             return Permutation::from_sequence(seq);
           }),
           py::arg("sequence"))
      .def_static("parse", &Permutation::parse, py::arg("text"))
      .def_static("identity", &Permutation::identity, py::arg("n"))
      .def("__len__", &Permutation::size)
      .def("value_at", &Permutation::value_at, py::arg("position"),
           "value at a 1-based position")
      .def("position_of", &Permutation::position_of, py::arg("value"))
      .def("one_line", &Permutation::one_line)
      .def("__str__", &Permutation::str)
      .def("__repr__",
           [](const Permutation& p) {
             return "Permutation.parse(\"" + p.str() + "\")";
           })
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__",
           [](const Permutation& p) { return PermutationHash{}(p); });

  m.def("remove_entry", &remove_entry, py::arg("perm"), py::arg("position"));
  m.def(
      "insert_entry",
      [](const Permutation& p, int position, int value) {
        return insert_entry(p, Slot{position, value});
      },
      py::arg("perm"), py::arg("position"), py::arg("value"));
  m.def("subpattern", &subpattern, py::arg("perm"), py::arg("positions"));
  m.def("apply_symmetry", &apply_symmetry, py::arg("perm"),
        py::arg("symmetry"));

  py::class_<SimplicityReport>(m, "SimplicityReport")
      .def_readonly("simple", &SimplicityReport::simple)
      .def_readonly("witness", &SimplicityReport::witness)
      .def("as_json", &dump_json<SimplicityReport>);
  m.def("is_simple", &is_simple, py::arg("perm"));
  m.def("simple", &simple, py::arg("perm"),
        "bare boolean form of is_simple");
  m.def("nontrivial_intervals", &nontrivial_intervals, py::arg("perm"));
  m.def("minimal_nontrivial_intervals", &minimal_nontrivial_intervals,
        py::arg("perm"));

  py::enum_<SplitAxis>(m, "SplitAxis")
      .value("VALUE", SplitAxis::Value)
      .value("POSITION", SplitAxis::Position);
  py::enum_<Direction>(m, "Direction")
      .value("INCREASING", Direction::Increasing)
      .value("DECREASING", Direction::Decreasing);
  py::class_<AlternationWitness>(m, "AlternationWitness")
      .def_readonly("axis", &AlternationWitness::axis)
      .def_readonly("direction", &AlternationWitness::direction)
      .def_readonly("halves", &AlternationWitness::halves)
      .def("as_json", &dump_json<AlternationWitness>);
  py::class_<AlternationRepair>(m, "AlternationRepair")
      .def_readonly("removed", &AlternationRepair::removed)
      .def_readonly("result", &AlternationRepair::result)
      .def("as_json", &dump_json<AlternationRepair>);
  m.def("is_parallel_alternation", &is_parallel_alternation, py::arg("perm"));
  m.def("canonical_parallel_alternation", &canonical_parallel_alternation,
        py::arg("half_length"), py::arg("variant") = Symmetry::Identity);
  m.def("simplify_parallel_alternation", &simplify_parallel_alternation,
        py::arg("perm"));
  m.def("separates", &separates, py::arg("perm"), py::arg("x1"),
        py::arg("x2"), py::arg("x3"));
  m.def(
      "separates_set",
      [](const Permutation& p, const EntryRef& x,
         const std::vector<EntryRef>& X) { return separates_set(p, x, X); },
      py::arg("perm"), py::arg("x"), py::arg("X"));

  py::class_<EssentialityReport::Entry>(m, "EssentialityEntry")
      .def_readonly("entry", &EssentialityReport::Entry::entry)
      .def_readonly("inessential", &EssentialityReport::Entry::inessential)
      .def_readonly("pattern", &EssentialityReport::Entry::pattern);
  py::class_<EssentialityReport>(m, "EssentialityReport")
      .def_readonly("perm", &EssentialityReport::perm)
      .def_readonly("entries", &EssentialityReport::entries)
      .def("inessential_count", &EssentialityReport::inessential_count)
      .def("as_json", &dump_json<EssentialityReport>);
  m.def("inessential_entries", &inessential_entries, py::arg("perm"));

  py::class_<TheoremReport>(m, "TheoremReport")
      .def_readonly("n", &TheoremReport::n)
      .def_readonly("simple_count", &TheoremReport::simple_count)
      .def_readonly("parallel_alternation_simple_count",
                    &TheoremReport::parallel_alternation_simple_count)
      .def_readonly("simple_with_inessential_count",
                    &TheoremReport::simple_with_inessential_count)
      .def_readonly("counterexamples", &TheoremReport::counterexamples)
      .def("as_json", &dump_json<TheoremReport>);
  m.def("verify_theorem", &verify_theorem, py::arg("n"),
        py::arg("guard") = kDefaultExhaustiveGuard, py::arg("workers") = 1);

  py::enum_<SlotClass>(m, "SlotClass")
      .value("DOUBLETON", SlotClass::Doubleton)
      .value("CORNER", SlotClass::Corner)
      .value("SIMPLE", SlotClass::Simple)
      .value("OTHER", SlotClass::Other);
  py::class_<ExtensionReport>(m, "ExtensionReport")
      .def_readonly("base", &ExtensionReport::base)
      .def_readonly("n", &ExtensionReport::n)
      .def_readonly("slot_classes", &ExtensionReport::slot_classes)
      .def_readonly("doubleton_slots", &ExtensionReport::doubleton_slots)
      .def_readonly("corner_slots", &ExtensionReport::corner_slots)
      .def_readonly("simple_slots", &ExtensionReport::simple_slots)
      .def_readonly("other_slots", &ExtensionReport::other_slots)
      .def_readonly("distinct_results", &ExtensionReport::distinct_results)
      .def_readonly("distinct_doubleton_results",
                    &ExtensionReport::distinct_doubleton_results)
      .def_readonly("simple_results", &ExtensionReport::simple_results)
      .def_readonly("naive_simple_estimate",
                    &ExtensionReport::naive_simple_estimate)
      .def("as_json", &dump_json<ExtensionReport>);
  m.def("extension_analysis", &extension_analysis, py::arg("base"));

  py::class_<DoubleCountReport>(m, "DoubleCountReport")
      .def_readonly("n", &DoubleCountReport::n)
      .def_readonly("inessential_pairs", &DoubleCountReport::inessential_pairs)
      .def_readonly("simple_extension_slots",
                    &DoubleCountReport::simple_extension_slots)
      .def("equal", &DoubleCountReport::equal)
      .def("as_json", &dump_json<DoubleCountReport>);
  m.def("double_count_check", &double_count_check, py::arg("n"),
        py::arg("guard") = kDefaultExhaustiveGuard, py::arg("workers") = 1);

  py::enum_<Method>(m, "Method")
      .value("BRUTE_FORCE", Method::BruteForce)
      .value("EXTENSION", Method::Extension);
  py::class_<SimpleSet>(m, "SimpleSet")
      .def_readonly("n", &SimpleSet::n)
      .def_readonly("method", &SimpleSet::method)
      .def_readonly("perms", &SimpleSet::perms)
      .def("count", &SimpleSet::count)
      .def("as_json", &dump_json<SimpleSet>);
  m.def("all_simple_bruteforce", &all_simple_bruteforce, py::arg("n"),
        py::arg("guard") = kBruteForceGuard);
  m.def("simple_via_extension", &simple_via_extension, py::arg("n"),
        py::arg("guard") = kExtensionGuard, py::arg("prune") = true);
  m.def("pa_seeds", &pa_seeds, py::arg("n"));

  py::class_<TrendRow>(m, "TrendRow")
      .def_readonly("n", &TrendRow::n)
      .def_readonly("simple_count", &TrendRow::simple_count)
      .def_readonly("total_inessential", &TrendRow::total_inessential)
      .def_readonly("mean_inessential", &TrendRow::mean_inessential)
      .def_readonly("mean_over_n", &TrendRow::mean_over_n)
      .def_readonly("cross_validated", &TrendRow::cross_validated);
  py::class_<InessentialTrend>(m, "InessentialTrend")
      .def_readonly("rows", &InessentialTrend::rows)
      .def("as_json", &dump_json<InessentialTrend>);
  m.def("inessential_trend", &inessential_trend, py::arg("max_n"),
        py::arg("min_n") = 5, py::arg("guard") = kTrendGuard);

  py::class_<StatsReport>(m, "StatsReport")
      .def_readonly("n", &StatsReport::n)
      .def_readonly("samples", &StatsReport::samples)
      .def_readonly("seed", &StatsReport::seed)
      .def_readonly("generator", &StatsReport::generator)
      .def_readonly("histogram", &StatsReport::histogram)
      .def_readonly("poisson_reference", &StatsReport::poisson_reference)
      .def_readonly("tv_distance", &StatsReport::tv_distance)
      .def_readonly("simple_fraction", &StatsReport::simple_fraction)
      .def_readonly("e_minus_2", &StatsReport::e_minus_2)
      .def_readonly("mean_intervals", &StatsReport::mean_intervals)
      .def_readonly("large_interval_fraction",
                    &StatsReport::large_interval_fraction)
      .def_readonly("note", &StatsReport::note)
      .def("as_json", &dump_json<StatsReport>);
  m.def("interval_count_experiment", &interval_count_experiment, py::arg("n"),
        py::arg("samples"), py::arg("seed"), py::arg("workers") = 1);
  m.def("interval_count_exhaustive", &interval_count_exhaustive, py::arg("n"),
        py::arg("guard") = kTrendGuard);
  m.def(
      "sample_permutation",
      [](int n, std::uint64_t seed) {
        SplitMix64 rng(seed);
        return sample_permutation(n, rng);
      },
      py::arg("n"), py::arg("seed"),
      "one uniform draw from a fresh generator state");

  m.def(
      "plot_svg",
      [](const Permutation& p,
         const std::vector<std::pair<int, int>>& highlights, int cell) {
        PlotSpec spec{p, windows_from_pairs(p, highlights),
                      PlotSpec::Format::Svg, cell};
        return emit_plot(spec);
      },
      py::arg("perm"), py::arg("highlights") = std::vector<std::pair<int, int>>{},
      py::arg("cell") = 20);
  m.def(
      "plot_ascii",
      [](const Permutation& p,
         const std::vector<std::pair<int, int>>& highlights) {
        PlotSpec spec{p, windows_from_pairs(p, highlights),
                      PlotSpec::Format::Ascii, 20};
        return emit_plot(spec);
      },
      py::arg("perm"),
      py::arg("highlights") = std::vector<std::pair<int, int>>{});

  m.attr("E_MINUS_2") = kEMinusTwo;
}
