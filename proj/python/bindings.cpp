#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <vector>

#include "ebband/band.hpp"
#include "ebband/ebayes.hpp"
#include "ebband/harness.hpp"
#include "ebband/metrics.hpp"
#include "ebband/testfns.hpp"
#include "ebband/transform.hpp"

namespace py = pybind11;
using namespace ebband;

namespace {

using Vector = std::vector<double>;

py::array_t<double> to_array(const Vector& v) {
    return py::array_t<double>(static_cast<py::ssize_t>(v.size()), v.data());
}

py::array_t<double> to_matrix(const DrawSet& draws) {
    const std::size_t rows = draws.size();
    const std::size_t cols = rows == 0 ? 0 : draws.front().size();
    py::array_t<double> out({rows, cols});
    auto view = out.mutable_unchecked<2>();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            view(r, c) = draws[r][c];
        }
    }
    return out;
}

DrawSet from_matrix(const py::array_t<double, py::array::c_style | py::array::forcecast>& m) {
    if (m.ndim() != 2) {
        throw py::value_error("draws must be a 2-d array (draws x coefficients)");
    }
    auto view = m.unchecked<2>();
    DrawSet draws(static_cast<std::size_t>(view.shape(0)),
                  Vector(static_cast<std::size_t>(view.shape(1))));
    for (py::ssize_t r = 0; r < view.shape(0); ++r) {
        for (py::ssize_t c = 0; c < view.shape(1); ++c) {
            draws[r][c] = view(r, c);
        }
    }
    return draws;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Empirical Bayes credible bands for equispaced nonparametric regression";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const std::domain_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    // testfns
    m.def("beta_density", &beta_density, py::arg("a"), py::arg("b"), py::arg("t"));
    m.def("normalization_constant", &normalization_constant, py::arg("case_id"));
    m.def("eval_test_function", &eval_test_function, py::arg("case_id"), py::arg("t"));
    m.def(
        "sample_test_function",
        [](int case_id, std::size_t n) { return to_array(TestFunction(case_id).sample(n)); },
        py::arg("case_id"), py::arg("n"), "f(i/n) for i = 1..n");

    // transform
    m.def(
        "generate_data",
        [](int case_id, std::size_t n, double sigma, std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            return to_array(generate_data(TestFunction(case_id), n, sigma, rng).y);
        },
        py::arg("case_id"), py::arg("n"), py::arg("sigma") = 1.0, py::arg("seed") = 1);
    m.def(
        "analyze", [](const Vector& y) { return to_array(analyze(y)); }, py::arg("y"));
    m.def(
        "synthesize", [](const Vector& theta) { return to_array(synthesize(theta, theta.size())); },
        py::arg("theta"));

    // ebayes
    py::class_<AlphaBracket>(m, "AlphaBracket")
        .def(py::init<>())
        .def(py::init([](double lo, double hi) { return AlphaBracket{lo, hi}; }), py::arg("lower"),
             py::arg("upper"))
        .def_readwrite("lower", &AlphaBracket::lower)
        .def_readwrite("upper", &AlphaBracket::upper)
        .def("__repr__", [](const AlphaBracket& b) {
            return "AlphaBracket(" + std::to_string(b.lower) + ", " + std::to_string(b.upper) + ")";
        });
    m.def("default_bracket", &default_bracket, py::arg("n"));

    py::class_<PosteriorParams>(m, "PosteriorParams")
        .def_readonly("alpha_hat", &PosteriorParams::alpha_hat)
        .def_readonly("n_eff", &PosteriorParams::n_eff)
        .def_readonly("bracket", &PosteriorParams::bracket)
        .def_property_readonly("post_mean",
                               [](const PosteriorParams& p) { return to_array(p.post_mean); })
        .def_property_readonly("post_var",
                               [](const PosteriorParams& p) { return to_array(p.post_var); })
        .def_property_readonly("n", &PosteriorParams::n);

    m.def(
        "log_marginal_likelihood",
        [](const Vector& s, double n_eff, double alpha) {
            return log_marginal_likelihood(s, n_eff, alpha);
        },
        py::arg("coeffs"), py::arg("n_eff"), py::arg("alpha"));
    m.def(
        "estimate_alpha",
        [](const Vector& s, double n_eff, std::optional<AlphaBracket> bracket) {
            return estimate_alpha(s, n_eff, bracket.value_or(default_bracket(s.size())));
        },
        py::arg("coeffs"), py::arg("n_eff"), py::arg("bracket") = py::none());
    m.def(
        "posterior_params",
        [](const Vector& s, double n_eff, double alpha) { return posterior_params(s, n_eff, alpha); },
        py::arg("coeffs"), py::arg("n_eff"), py::arg("alpha"));
    m.def(
        "fit_posterior",
        [](const Vector& s, double n_eff, std::optional<AlphaBracket> bracket) {
            return fit_posterior(s, n_eff, bracket.value_or(default_bracket(s.size())));
        },
        py::arg("coeffs"), py::arg("n_eff"), py::arg("bracket") = py::none());
    m.def(
        "sample_posterior",
        [](const PosteriorParams& p, std::size_t num_draws, std::uint64_t seed) {
            return to_matrix(sample_posterior(p, num_draws, seed));
        },
        py::arg("params"), py::arg("num_draws"), py::arg("seed"));
    m.def(
        "credible_radius",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& draws,
           const Vector& center, double level) {
            return credible_radius(from_matrix(draws), center, level);
        },
        py::arg("draws"), py::arg("center"), py::arg("level") = 0.95);

    // band
    py::class_<Band>(m, "Band")
        .def_property_readonly("lower", [](const Band& b) { return to_array(b.lower); })
        .def_property_readonly("upper", [](const Band& b) { return to_array(b.upper); })
        .def_property_readonly("center", [](const Band& b) { return to_array(b.center); })
        .def_readonly("kept", &Band::kept)
        .def_readonly("radius", &Band::radius)
        .def_property_readonly("n", &Band::n);
    m.def(
        "build_band",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& draws,
           const PosteriorParams& p, double level) { return build_band(from_matrix(draws), p, level); },
        py::arg("draws"), py::arg("params"), py::arg("level") = 0.95);

    // metrics
    m.def(
        "noncoverage_fraction",
        [](const Vector& truth, const Band& b) { return noncoverage_fraction(truth, b); },
        py::arg("truth"), py::arg("band"));
    m.def(
        "excess_mass",
        [](const Vector& truth, const Band& b) {
            const ExcessMass e = excess_mass(truth, b);
            return py::make_tuple(e.absolute, e.relative);
        },
        py::arg("truth"), py::arg("band"), "(absolute, relative) excess mass");
    m.def(
        "sup_coverage", [](const Vector& truth, const Band& b) { return sup_coverage(truth, b); },
        py::arg("truth"), py::arg("band"));
    m.def(
        "ball_coverage",
        [](const Vector& theta, const Vector& mean, double radius) {
            return ball_coverage(theta, mean, radius);
        },
        py::arg("theta_true"), py::arg("post_mean"), py::arg("radius"));
    m.def(
        "band_widths",
        [](const Band& b) {
            const BandWidths w = band_widths(b);
            return py::make_tuple(w.max_width, w.ave_width);
        },
        py::arg("band"), "(max_width, ave_width)");

    // harness
    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("case_id", &SimConfig::case_id)
        .def_readwrite("n", &SimConfig::n)
        .def_readwrite("sigma", &SimConfig::sigma)
        .def_readwrite("reps", &SimConfig::reps)
        .def_readwrite("draws", &SimConfig::draws)
        .def_readwrite("level", &SimConfig::level)
        .def_readwrite("base_seed", &SimConfig::base_seed)
        .def_readwrite("bracket", &SimConfig::bracket);

    py::class_<ReplicationMetrics>(m, "ReplicationMetrics")
        .def_readonly("rep", &ReplicationMetrics::rep)
        .def_readonly("alpha_hat", &ReplicationMetrics::alpha_hat)
        .def_readonly("max_width", &ReplicationMetrics::max_width)
        .def_readonly("ave_width", &ReplicationMetrics::ave_width)
        .def_readonly("nc", &ReplicationMetrics::nc)
        .def_readonly("re", &ReplicationMetrics::re)
        .def_readonly("sup_covered", &ReplicationMetrics::sup_covered)
        .def_readonly("ball_covered", &ReplicationMetrics::ball_covered)
        .def_readonly("radius", &ReplicationMetrics::radius);

    py::class_<SummaryRow>(m, "SummaryRow")
        .def_readonly("case_id", &SummaryRow::case_id)
        .def_readonly("n", &SummaryRow::n)
        .def_readonly("mean_max_width", &SummaryRow::mean_max_width)
        .def_readonly("mean_ave_width", &SummaryRow::mean_ave_width)
        .def_readonly("nc_p95", &SummaryRow::nc_p95)
        .def_readonly("re_p95", &SummaryRow::re_p95)
        .def_readonly("sup_cover_rate", &SummaryRow::sup_cover_rate)
        .def_readonly("ball_cover_rate", &SummaryRow::ball_cover_rate)
        .def_readonly("mean_alpha_hat", &SummaryRow::mean_alpha_hat);

    py::class_<SimulationResult>(m, "SimulationResult")
        .def_readonly("replications", &SimulationResult::replications)
        .def_readonly("summary", &SimulationResult::summary);

    m.def("run_replication", &run_replication, py::arg("config"), py::arg("rep_index"),
          py::call_guard<py::gil_scoped_release>());
    m.def("run_simulation", &run_simulation, py::arg("config"), py::arg("workers") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def(
        "percentile", [](const Vector& v, double p) { return percentile(v, p); }, py::arg("values"),
        py::arg("p"));
}
