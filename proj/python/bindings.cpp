#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <string>

#include "grover/analytic.hpp"
#include "grover/statevector.hpp"
#include "grover/unknown_m.hpp"

namespace py = pybind11;
using namespace grover;

namespace {

using ComplexArray = py::array_t<Amplitude, py::array::c_style | py::array::forcecast>;

QuantumState to_state(const ComplexArray& array) {
  if (array.ndim() != 1) throw SizeError("state must be a 1-D array");
  const auto size = static_cast<std::size_t>(array.shape(0));
  if (size < 2 || (size & (size - 1)) != 0) throw SizeError("state length must be 2^n, n >= 1");
  int qubits = 0;
  while ((std::size_t{1} << qubits) < size) ++qubits;
  std::vector<Amplitude> amps(array.data(), array.data() + size);
  return QuantumState(qubits, std::move(amps));
}

ComplexArray to_array(const QuantumState& state) {
  ComplexArray array(static_cast<py::ssize_t>(state.dimension()));
  std::copy(state.amplitudes().begin(), state.amplitudes().end(), array.mutable_data());
  return array;
}

py::object to_fraction(const mpq_class& value) {
  return py::module_::import("fractions")
      .attr("Fraction")(value.get_str());
}

Diffusion diffusion_from(const std::string& name) {
  if (name == "mean") return Diffusion::mean_inversion;
  if (name == "conjugated") return Diffusion::hadamard_conjugated;
  throw py::value_error("diffusion must be 'mean' or 'conjugated'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Grover search: state-vector simulation, closed forms and the unknown-M search";

  auto& domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UndefinedAngleError>(m, "UndefinedAngleError", domain_error.ptr());
  py::register_exception<DivergenceError>(m, "DivergenceError", domain_error.ptr());
  py::register_exception<ValidityError>(m, "ValidityError", domain_error.ptr());
  py::register_exception<SizeError>(m, "SizeError", PyExc_ValueError);
  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  // oracles
  py::class_<SearchProblem>(m, "SearchProblem")
      .def(py::init([](int qubits, std::vector<Index> marked) {
             return SearchProblem(explicit_oracle(qubits, std::move(marked)));
           }),
           py::arg("qubits"), py::arg("marked"))
      .def_property_readonly("qubits", &SearchProblem::qubits)
      .def_property_readonly("size", &SearchProblem::size)
      .def_property_readonly("match_count", &SearchProblem::match_count)
      .def_property_readonly("marked",
                             [](const SearchProblem& p) {
                               auto span = p.oracle().marked();
                               return std::vector<Index>(span.begin(), span.end());
                             })
      .def("is_marked", &SearchProblem::is_marked)
      .def("__repr__", [](const SearchProblem& p) {
        return "SearchProblem(qubits=" + std::to_string(p.qubits()) +
               ", match_count=" + std::to_string(p.match_count()) + ")";
      });

  py::class_<CnfFormula>(m, "CnfFormula")
      .def(py::init([](int variable_count, std::vector<std::vector<int>> clauses) {
             CnfFormula f{variable_count, std::move(clauses)};
             f.validate();
             return f;
           }),
           py::arg("variable_count"), py::arg("clauses"))
      .def_readonly("variable_count", &CnfFormula::variable_count)
      .def_readonly("clauses", &CnfFormula::clauses)
      .def("satisfied_by", &CnfFormula::satisfied_by);

  m.def("explicit_oracle", [](int qubits, std::vector<Index> indices) {
    return SearchProblem(explicit_oracle(qubits, std::move(indices)));
  });
  m.def("parse_dimacs", [](const std::string& text) { return parse_dimacs(text); });
  m.def("render_dimacs", &render_dimacs);
  m.def("cnf_oracle", &cnf_oracle);

  // statevector
  m.attr("MAX_QUBITS") = kMaxQubits;
  m.def("uniform_superposition", [](int n) { return to_array(uniform_superposition(n)); });
  m.def("apply_oracle", [](const ComplexArray& a, const SearchProblem& p) {
    auto s = to_state(a);
    apply_oracle(s, p);
    return to_array(s);
  });
  m.def("apply_diffusion_mean", [](const ComplexArray& a) {
    auto s = to_state(a);
    apply_diffusion_mean(s);
    return to_array(s);
  });
  m.def("apply_diffusion_conjugated", [](const ComplexArray& a) {
    auto s = to_state(a);
    apply_diffusion_conjugated(s);
    return to_array(s);
  });
  m.def(
      "grover_run",
      [](const SearchProblem& p, std::uint64_t iterations, const std::string& diffusion) {
        return to_array(grover_run(p, iterations, diffusion_from(diffusion)));
      },
      py::arg("problem"), py::arg("iterations"), py::arg("diffusion") = "mean");
  m.def("grover_run_with_ancilla", [](const SearchProblem& p, std::uint64_t iterations) {
    return to_array(grover_run_with_ancilla(p, iterations));
  });
  m.def("success_probability", [](const ComplexArray& a, const SearchProblem& p) {
    return success_probability(to_state(a), p);
  });
  m.def("sample_measurement",
        [](const ComplexArray& a, std::uint64_t seed) { return sample_measurement(to_state(a), seed); });

  // analytic
  py::class_<IterationPlan>(m, "IterationPlan")
      .def_readonly("theta", &IterationPlan::theta)
      .def_readonly("iterations", &IterationPlan::iterations)
      .def_readonly("predicted_success", &IterationPlan::predicted_success);

  m.def("theta", &theta, py::arg("matches"), py::arg("size"));
  m.def("mean_amplitude", &mean_amplitude);
  m.def("first_iteration_amplitudes", [](Index matches, Index size) {
    const auto s = first_iteration_amplitudes(matches, size);
    return py::make_tuple(s.marked, s.unmarked);
  });
  m.def("closed_form", [](std::uint64_t q, Index matches, Index size) {
    const auto s = closed_form(q, matches, size);
    return py::make_tuple(s.marked, s.unmarked);
  });
  m.def("recurrence", [](std::uint64_t q, Index matches, Index size) {
    auto s = initial_amplitudes(matches, size);
    for (std::uint64_t k = 0; k < q; ++k) s = recurrence_step(s);
    return py::make_tuple(s.marked, s.unmarked);
  });
  m.def("success_prob_one", &success_prob_one);
  m.def("classical_guess_prob", &classical_guess_prob);
  m.def("success_prob", &success_prob, py::arg("iterations"), py::arg("matches"), py::arg("size"));
  m.def("optimal_iterations", &optimal_iterations);
  m.def("plan", &plan);
  m.def("padded_plan", &padded_plan);
  m.def("average_success_one", [](int n) { return to_fraction(average_success_one(n)); });
  m.def("average_classical", [](int n) { return to_fraction(average_classical(n)); });
  m.def("table1_row", [](int n) {
    const auto row = table1_row(n);
    return py::make_tuple(row.max_prob, row.min_prob, to_fraction(row.average));
  });

  // unknown M
  py::class_<SearchOutcome>(m, "SearchOutcome")
      .def_readonly("found", &SearchOutcome::found)
      .def_readonly("oracle_calls", &SearchOutcome::oracle_calls)
      .def_readonly("grover_iterations", &SearchOutcome::grover_iterations)
      .def_readonly("rounds", &SearchOutcome::rounds);

  m.def(
      "bbht_search",
      [](const SearchProblem& p, double lambda, std::uint64_t max_oracle_calls,
         std::uint64_t seed, const std::string& backend) {
        BbhtConfig config{lambda, max_oracle_calls, seed, BbhtBackend::two_amplitude};
        if (backend == "statevector") {
          config.backend = BbhtBackend::statevector;
        } else if (backend != "two_amplitude") {
          throw py::value_error("backend must be 'two_amplitude' or 'statevector'");
        }
        return bbht_search(p, config);
      },
      py::arg("problem"), py::arg("lambda_") = 8.0 / 7.0, py::arg("max_oracle_calls") = 1'000'000,
      py::arg("seed") = 0, py::arg("backend") = "two_amplitude");
  m.def("classical_sampling_search", &classical_sampling_search, py::arg("problem"),
        py::arg("seed"), py::arg("max_calls"));
  m.def("m_lower_bound", &m_lower_bound);
  m.def("expected_calls_estimate", &expected_calls_estimate);
  m.def("figure5_curves", [](Index size, std::size_t grid) {
    std::vector<py::tuple> rows;
    for (const auto& p : figure5_curves(size, grid)) {
      rows.push_back(py::make_tuple(p.ratio, p.q_real, p.m_real, p.m_capped));
    }
    return rows;
  });
}
