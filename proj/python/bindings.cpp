// Python bindings for the main operations. Exact rationals cross the
// boundary as "p/q" strings so no precision is lost.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subspacekit/automata.hpp"
#include "subspacekit/filtration.hpp"
#include "subspacekit/heights.hpp"
#include "subspacekit/powersum.hpp"
#include "subspacekit/surface.hpp"
#include "subspacekit/transcendence.hpp"
#include "subspacekit/words.hpp"

namespace py = pybind11;
namespace sk = subspacekit;

namespace {

sk::Rat rat(const std::string& text) { return sk::parse_rational(text); }

std::string str(const sk::Rat& x) { return sk::to_string(x); }

sk::PlaceSet place_set(const std::vector<std::string>& places) {
    std::vector<sk::Place> ps;
    for (const auto& p : places) ps.push_back(sk::Place::parse(p));
    return sk::PlaceSet(std::move(ps));
}

sk::IntersectionMatrix matrix_from_json(const std::string& text) {
    return sk::IntersectionMatrix::from_json_text(text).first;
}

std::vector<sk::Int> weights_from(const std::vector<long long>& a) {
    return {a.begin(), a.end()};
}

py::object optional_repetition(const std::optional<sk::Repetition>& r) {
    if (!r) return py::none();
    return py::make_tuple(r->k, r->n, r->length);
}

} // namespace

PYBIND11_MODULE(_subspacekit, m) {
    m.doc() = "exact-arithmetic toolkit: heights, words, automata, power sums, surface criteria";

    // heights and places
    m.def("valuation", [](const std::string& a, long long p) {
        return sk::to_string(sk::valuation(rat(a), sk::Int(p)));
    });
    m.def("norm_at", [](const std::string& a, const std::string& place) {
        return str(sk::norm_at(rat(a), sk::Place::parse(place)));
    });
    m.def("height_rational",
          [](const std::string& a) { return sk::to_string(sk::height_rational(rat(a))); });
    m.def("height_vector", [](const std::vector<std::string>& coords) {
        sk::RationalVector x;
        for (const auto& c : coords) x.push_back(rat(c));
        return str(sk::height_vector(x));
    });
    m.def("is_s_integer", [](const std::string& a, const std::vector<std::string>& places) {
        return sk::is_s_integer(rat(a), place_set(places));
    });
    m.def("is_s_unit", [](const std::string& a, const std::vector<std::string>& places) {
        return sk::is_s_unit(rat(a), place_set(places));
    });
    m.def("product_formula_check",
          [](const std::string& a) { return str(sk::product_formula_check(rat(a))); });

    // words
    m.def("complexity", [](const std::string& word, std::size_t n) {
        return sk::complexity(sk::Word::from_string(word), n);
    });
    m.def("find_disjoint_repetition", [](const std::string& word, std::size_t lmin) {
        return optional_repetition(sk::find_disjoint_repetition(sk::Word::from_string(word), lmin));
    });
    m.def("brute_force_repetition_oracle", [](const std::string& word, std::size_t lmin) {
        return optional_repetition(
            sk::brute_force_repetition_oracle(sk::Word::from_string(word), lmin));
    });
    m.def("repetition_from_low_complexity",
          [](const std::string& word, std::size_t n, const std::string& kappa) {
              sk::Repetition r =
                  sk::repetition_from_low_complexity(sk::Word::from_string(word), n, rat(kappa));
              return py::make_tuple(r.k, r.n, r.length);
          });

    // automata
    m.def("figure_one_machine_json", [] { return sk::figure_one_machine().to_json_text(); });
    m.def("thue_morse_machine_json", [] { return sk::thue_morse_machine().to_json_text(); });
    m.def("automaton_run", [](const std::string& machine_json, const std::string& word) {
        return sk::run(sk::FiniteAutomaton::from_json_text(machine_json), word);
    });
    m.def("automatic_term", [](const std::string& machine_json, long long n) {
        return sk::automatic_term(sk::FiniteAutomaton::from_json_text(machine_json), sk::Int(n));
    });
    m.def("automatic_prefix", [](const std::string& machine_json, std::size_t count) {
        return sk::automatic_prefix(sk::FiniteAutomaton::from_json_text(machine_json), count).str();
    });
    m.def("thue_morse", [](std::size_t count) { return sk::thue_morse_direct(count).str(); });
    m.def("measured_complexity_slope",
          [](const std::string& machine_json, std::size_t n, std::size_t nmax) {
              return str(sk::measured_complexity_slope(
                  sk::FiniteAutomaton::from_json_text(machine_json), n, nmax));
          });

    // periodic-approximant pipeline
    m.def("rational_digits", [](const std::string& alpha, int base, std::size_t count) {
        return sk::digits_of_rational(rat(alpha), base, count).str();
    });
    m.def("abl_pipeline", [](const std::string& alpha, int base, std::size_t points) {
        sk::PipelineResult r = sk::run_periodic_pipeline(rat(alpha), base, points);
        py::list rows;
        for (const auto& row : r.rows) {
            py::dict d;
            d["N"] = row.prefix_length;
            d["r"] = row.pattern.r();
            d["s"] = row.pattern.period();
            d["blockB"] = row.pattern.block();
            d["xi"] = str(row.xi);
            d["gap"] = str(row.gap.gap);
            d["bound"] = str(row.gap.bound);
            d["productValue"] = str(row.datum.product_value);
            d["heightBound"] = sk::to_string(row.datum.height_bound);
            rows.append(d);
        }
        py::dict out;
        out["rows"] = rows;
        if (r.plane) {
            py::dict plane;
            plane["lambda"] = str(r.plane->lambda);
            plane["mu"] = str(r.plane->mu);
            plane["nu"] = str(r.plane->nu);
            if (r.plane->alpha_hat) plane["alpha_hat"] = str(*r.plane->alpha_hat);
            out["plane"] = plane;
        } else {
            out["plane"] = py::none();
        }
        return out;
    });

    // power sums
    m.def("power_sum_eval", [](const std::string& ps_json, long long n) {
        return str(sk::PowerSum::from_json_text(ps_json).eval(sk::Int(n)));
    });
    m.def("power_sum_str",
          [](const std::string& ps_json) { return sk::PowerSum::from_json_text(ps_json).str(); });
    m.def("power_sum_pow", [](const std::string& ps_json, unsigned q) {
        return sk::PowerSum::from_json_text(ps_json).pow(q).to_json_text();
    });
    m.def("power_sum_progression", [](const std::string& ps_json, long long q, long long r) {
        return sk::PowerSum::from_json_text(ps_json).progression(q, r).to_json_text();
    });
    m.def("power_sum_qth_root", [](const std::string& ps_json, unsigned q) -> py::object {
        auto v = sk::qth_root(sk::PowerSum::from_json_text(ps_json), q);
        if (!v) return py::none();
        return py::str(v->to_json_text());
    });
    m.def("pisot_decompose", [](const std::string& ps_json, unsigned q) -> py::object {
        auto d = sk::pisot_decompose(sk::PowerSum::from_json_text(ps_json), q);
        if (!d) return py::none();
        py::dict out;
        out["Q"] = sk::to_string(d->progression_modulus);
        out["R"] = sk::to_string(d->progression_residue);
        out["w"] = d->witness.to_json_text();
        return out;
    });
    m.def("is_universal_hilbert_candidate", [](const std::string& ps_json) {
        sk::UhsVerdict v = sk::is_universal_hilbert_candidate(sk::PowerSum::from_json_text(ps_json));
        return py::make_tuple(v.ok, v.reason);
    });
    m.def("has_dominant_root",
          [](const std::vector<std::string>& roots, const std::string& direction) {
              std::vector<sk::GaussianRational> rs;
              for (const auto& r : roots) rs.push_back(sk::GaussianRational::parse(r));
              sk::Dominance dir =
                  direction == "upper" ? sk::Dominance::upper : sk::Dominance::lower;
              sk::DominanceVerdict v = sk::has_dominant_root(rs, dir);
              return py::make_tuple(v.dominant, v.witness ? py::object(py::str(v.witness->str()))
                                                          : py::object(py::none()));
          });

    // surface criteria
    m.def("cz_check", [](const std::string& matrix_json, const std::vector<long long>& weights) {
        return sk::cz_check(matrix_from_json(matrix_json), weights_from(weights));
    });
    m.def("autissier_check",
          [](const std::string& matrix_json, const std::vector<long long>& weights) {
              return sk::autissier_check(matrix_from_json(matrix_json), weights_from(weights));
          });
    m.def("gamma_small",
          [](const std::string& matrix_json, const std::vector<long long>& weights, std::size_t i) {
              return sk::gamma_small(matrix_from_json(matrix_json), weights_from(weights), i).str();
          });
    m.def("fixed_point_weights", [](const std::string& matrix_json, const std::string& eps) {
        sk::WeightVector a = sk::fixed_point_weights(matrix_from_json(matrix_json), rat(eps));
        std::vector<std::string> out;
        for (const sk::Int& w : a) out.push_back(sk::to_string(w));
        return out;
    });
    m.def("levin_check", [](const std::string& matrix_json, bool ample) -> py::object {
        try {
            sk::WeightVector a = sk::levin_check(matrix_from_json(matrix_json), ample);
            std::vector<std::string> out;
            for (const sk::Int& w : a) out.push_back(sk::to_string(w));
            return py::cast(out);
        } catch (const sk::Error& e) {
            if (e.code() == sk::Errc::screen_failed) return py::none();
            throw;
        }
    });
    m.def("curve_budget", [](long long r, long long g, long long n) {
        sk::CurveBudget b = sk::curve_budget(r, g, n);
        py::dict out;
        out["ell"] = sk::to_string(b.ell);
        out["A"] = str(b.order_sum_bound);
        out["minimal_positive_n"] =
            b.minimal_positive_n ? py::object(py::int_(*b.minimal_positive_n))
                                 : py::object(py::none());
        return out;
    });
    m.def("common_filtration_basis", [](const std::string& pair_json) {
        auto [f1, f2] = sk::Filtration::pair_from_json_text(pair_json);
        auto basis = sk::common_filtration_basis(f1, f2);
        if (!sk::common_basis_certificate(f1, f2, basis))
            throw std::runtime_error("internal: certificate failed");
        std::vector<std::vector<std::string>> out;
        for (const auto& v : basis) {
            std::vector<std::string> row;
            for (const auto& e : v) row.push_back(str(e));
            out.push_back(std::move(row));
        }
        return out;
    });

    py::register_exception<sk::Error>(m, "ToolkitError");
}
