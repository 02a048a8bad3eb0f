// Python bindings. Words cross the boundary as digit strings (or
// dot-separated integers for alphabets above 10).
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>

#include "autocomplexity/automata.hpp"
#include "autocomplexity/cache.hpp"
#include "autocomplexity/complexity.hpp"
#include "autocomplexity/errors.hpp"
#include "autocomplexity/metrics.hpp"
#include "autocomplexity/studies.hpp"
#include "autocomplexity/words.hpp"

namespace py = pybind11;
namespace ac = autocomplexity;

namespace {

std::unique_ptr<ac::Solver> make_solver(const std::string& cache_dir, std::uint64_t max_nodes) {
  std::shared_ptr<ac::ComplexityCache> cache;
  if (auto dir = ac::ComplexityCache::resolve_directory(cache_dir)) {
    cache = std::make_shared<ac::ComplexityCache>(*dir);
  } else {
    cache = std::make_shared<ac::ComplexityCache>();
  }
  ac::Budget budget;
  budget.max_nodes = max_nodes;
  return std::make_unique<ac::Solver>(std::move(cache), budget);
}

ac::Word word(const std::string& s, std::size_t alphabet = 0) {
  return ac::parse_word_token(s, alphabet);
}

py::dict result_dict(const ac::ComplexityResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["witness_sequence"] = r.witness_sequence;
  d["certificate"] = ac::to_json(r.certificate);
  d["edges"] = r.certificate.nfa.edge_count();
  return d;
}

py::dict row_dict(const ac::DistributionRow& row) {
  py::dict counts;
  for (std::size_t q = 1; q < row.counts.size(); ++q) {
    if (row.counts[q] != 0) counts[py::int_(q)] = row.counts[q];
  }
  py::dict d;
  d["n"] = row.n;
  d["counts"] = counts;
  d["total"] = row.total;
  d["mode"] = row.mode();
  return d;
}

py::list pair_list(const std::vector<std::pair<ac::Word, ac::Word>>& pairs) {
  py::list out;
  for (const auto& [x, y] : pairs) out.append(py::make_tuple(x.to_string(), y.to_string()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_autocomplexity, m) {
  m.doc() = "Automatic complexity of words and automatic metrics";

  auto base_error = py::register_exception<ac::Error>(m, "Error");
  py::register_exception<ac::ParseError>(m, "ParseError", base_error.ptr());
  py::register_exception<ac::BudgetExceeded>(m, "BudgetExceeded", base_error.ptr());
  py::register_exception<ac::CapacityError>(m, "CapacityError", base_error.ptr());

  py::class_<ac::Solver>(m, "Solver")
      .def(py::init(&make_solver), py::arg("cache_dir") = "",
           py::arg("max_nodes") = ac::Budget{}.max_nodes,
           "Memoizing solver. cache_dir falls back to $AUTOCOMPLEXITY_CACHE_DIR.")
      .def(
          "complexity",
          [](ac::Solver& s, const std::string& w, const std::string& kind, std::size_t alphabet,
             std::optional<std::string> given) {
            ac::ComplexityQuery q;
            q.kind = ac::complexity_kind_from_string(kind);
            q.target = word(w, alphabet);
            if (given) q.condition = word(*given);
            py::gil_scoped_release release;
            auto r = s.solve(q);
            py::gil_scoped_acquire acquire;
            return result_dict(r);
          },
          py::arg("word"), py::arg("kind") = "anu", py::arg("alphabet") = 0,
          py::arg("given") = py::none())
      .def(
          "conditional",
          [](ac::Solver& s, const std::string& x, const std::string& y, const std::string& kind) {
            ac::ComplexityQuery q;
            q.kind = ac::complexity_kind_from_string(kind + "-cond");
            q.target = word(x);
            q.condition = word(y);
            py::gil_scoped_release release;
            auto r = s.solve(q);
            py::gil_scoped_acquire acquire;
            return result_dict(r);
          },
          py::arg("x"), py::arg("y"), py::arg("kind") = "anu")
      .def(
          "metric",
          [](ac::Solver& s, const std::string& kind, const std::string& x, const std::string& y,
             bool deterministic) {
            const auto base =
                deterministic ? ac::ComplexityBase::deterministic : ac::ComplexityBase::unique;
            py::gil_scoped_release release;
            return ac::metric_value(ac::metric_kind_from_string(kind), word(x), word(y), s, base);
          },
          py::arg("kind"), py::arg("x"), py::arg("y"), py::arg("deterministic") = false)
      .def(
          "verify_metric",
          [](ac::Solver& s, std::size_t n, const std::string& kind, std::size_t alphabet,
             std::size_t jobs) {
            ac::MetricReport r;
            {
              py::gil_scoped_release release;
              r = ac::verify_metric(n, ac::metric_kind_from_string(kind), s, jobs, alphabet);
            }
            py::dict d;
            d["ground_set"] = r.ground_set_size;
            d["triangle_checks"] = r.triangle_checks;
            d["identity_violations"] = r.identity_violations.size();
            d["symmetry_violations"] = r.symmetry_violations.size();
            d["triangle_violations"] = r.triangle_violations.size();
            d["is_metric"] = r.is_metric();
            return d;
          },
          py::arg("n"), py::arg("kind"), py::arg("alphabet") = 2, py::arg("jobs") = 1)
      .def(
          "distribution_row",
          [](ac::Solver& s, std::size_t n, std::size_t jobs) {
            ac::DistributionRow row;
            {
              py::gil_scoped_release release;
              row = ac::distribution_row(n, s, jobs);
            }
            return row_dict(row);
          },
          py::arg("n"), py::arg("jobs") = 1)
      .def(
          "sample_distribution",
          [](ac::Solver& s, std::size_t n, std::size_t samples, std::uint64_t seed,
             std::size_t jobs) {
            ac::DistributionRow row;
            {
              py::gil_scoped_release release;
              row = ac::sample_distribution(n, samples, seed, s, jobs);
            }
            return row_dict(row);
          },
          py::arg("n"), py::arg("samples"), py::arg("seed"), py::arg("jobs") = 1)
      .def(
          "classify_unit_distance",
          [](ac::Solver& s, std::size_t n, bool exhaustive, std::size_t alphabet) {
            std::vector<std::pair<ac::Word, ac::Word>> pairs;
            {
              py::gil_scoped_release release;
              pairs = ac::classify_unit_distance(n, s, !exhaustive, alphabet);
            }
            return pair_list(pairs);
          },
          py::arg("n"), py::arg("exhaustive") = false, py::arg("alphabet") = 2)
      .def(
          "search_emergent",
          [](ac::Solver& s, std::size_t max_len, std::size_t alphabet) {
            std::vector<std::string> out;
            for (const auto& w : ac::search_emergent(max_len, alphabet, s)) {
              out.push_back(w.to_string());
            }
            return out;
          },
          py::arg("max_len"), py::arg("alphabet") = 2);

  m.def(
      "expected_unit_distance_pairs",
      [](std::size_t n) { return pair_list(ac::expected_unit_distance_pairs(n)); }, py::arg("n"));
  m.def(
      "slow_normalize", [](const std::string& w) { return ac::slow_normalize(word(w)).to_string(); },
      py::arg("word"));
  m.def(
      "verify_certificate",
      [](const std::string& json) {
        const auto v = ac::verify_certificate(ac::from_json(json));
        return py::make_tuple(v.ok, v.diagnostic);
      },
      py::arg("certificate_json"), "Returns (ok, diagnostic).");
  m.def(
      "certificate_dot",
      [](const std::string& json) {
        const auto c = ac::from_json(json);
        return ac::to_dot(c.nfa, ac::is_conditional(c.kind) ? c.target.alphabet_size() : 0);
      },
      py::arg("certificate_json"));
}
