#include "gimlab/runner.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gimlab;

namespace {

// Matrices cross the boundary as grids of "p/q" strings; the Python side
// turns them into Fractions.
using Grid = std::vector<std::vector<std::string>>;

std::vector<RatMatrix> to_matrices(const std::vector<Grid>& grids) {
  std::vector<RatMatrix> out;
  out.reserve(grids.size());
  for (const auto& g : grids) out.push_back(matrix_from_json(json(g)));
  return out;
}

Grid to_grid(const RatMatrix& m) { return to_json(m).get<Grid>(); }

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact GIM image computations";
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

  m.def(
      "run_job",
      [](const std::string& spec, const std::string& cache_dir) {
        const json j = json::parse(spec);
        py::gil_scoped_release unlocked;
        auto cache = ClosureCache::from_environment(cache_dir);
        const auto r = run_job(job_from_json(j), cache ? &*cache : nullptr);
        return std::make_pair(r.exit_code, r.report.dump());
      },
      py::arg("spec"), py::arg("cache_dir") = "");

  m.def(
      "lie_closure",
      [](const std::vector<Grid>& generators) {
        const auto gens = to_matrices(generators);
        std::vector<RatMatrix> basis;
        {
          py::gil_scoped_release unlocked;
          basis = lie_closure(gens).elements();
        }
        std::vector<Grid> out;
        for (const auto& b : basis) out.push_back(to_grid(b));
        return out;
      },
      py::arg("generators"));

  m.def(
      "classify_block",
      [](const std::vector<Grid>& generators, int n) {
        const auto gens = to_matrices(generators);
        py::gil_scoped_release unlocked;
        return to_json(classify_block(lie_closure(gens), n)).dump();
      },
      py::arg("generators"), py::arg("n"));

  m.def(
      "reproduce",
      [](const std::vector<int>& n_values, const std::string& out_dir, const std::string& cache_dir) {
        py::gil_scoped_release unlocked;
        auto cache = ClosureCache::from_environment(cache_dir);
        const auto r = reproduce_all(n_values, out_dir, cache ? &*cache : nullptr);
        return std::make_pair(r.exit_code, r.markdown);
      },
      py::arg("n_values"), py::arg("out_dir"), py::arg("cache_dir") = "");
}
