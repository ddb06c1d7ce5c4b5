// subspacekit: exact-arithmetic toolkit for heights and places, word
// complexity, automatic sequences, periodic-approximant data, power sums and
// divisor criteria on surfaces. One subcommand per capability; all numeric
// output is exact ("p/q", or "p + q*sqrt(d)" with a decimal marked approximate).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "subspacekit/automata.hpp"
#include "subspacekit/filtration.hpp"
#include "subspacekit/heights.hpp"
#include "subspacekit/powersum.hpp"
#include "subspacekit/surface.hpp"
#include "subspacekit/transcendence.hpp"
#include "subspacekit/words.hpp"

namespace sk = subspacekit;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_criterion_false = 2;

// One verdict per module operation invoked; order is the emission order.
struct RunReport {
    std::string subcommand;
    std::string digest_input;
    std::vector<std::pair<std::string, std::string>> verdicts;
    std::vector<std::string> notes;

    void add(const std::string& name, const std::string& value) {
        verdicts.emplace_back(name, value);
    }
    void add(const std::string& name, bool value) { add(name, value ? "true" : "false"); }
    void add(const std::string& name, const sk::Rat& value) { add(name, sk::to_string(value)); }
    void add(const std::string& name, const sk::Int& value) { add(name, sk::to_string(value)); }
    void add(const std::string& name, std::size_t value) { add(name, std::to_string(value)); }
    void note(const std::string& text) { notes.push_back(text); }
};

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void emit(const RunReport& report, const std::string& format) {
    if (format == "json") {
        json verdicts = json::array();
        for (const auto& [name, value] : report.verdicts)
            verdicts.push_back({{"name", name}, {"value", value}});
        json j;
        j["subcommand"] = report.subcommand;
        j["inputsDigest"] = fnv1a_hex(report.digest_input);
        j["verdicts"] = verdicts;
        j["notes"] = report.notes;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "subcommand\t" << report.subcommand << "\n";
        std::cout << "inputsDigest\t" << fnv1a_hex(report.digest_input) << "\n";
        for (const auto& [name, value] : report.verdicts)
            std::cout << name << "\t" << value << "\n";
        for (const auto& note : report.notes) std::cout << "note\t" << note << "\n";
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) sk::fail(sk::Errc::usage_error, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// file path, or inline JSON when the argument starts with '{'
std::string json_argument(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return arg;
    return slurp(arg);
}

std::vector<sk::Int> parse_int_list(const std::string& csv) {
    std::vector<sk::Int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(sk::parse_integer(item));
    return out;
}

std::vector<std::size_t> parse_size_list(const std::string& csv) {
    std::vector<std::size_t> out;
    for (const sk::Int& v : parse_int_list(csv)) out.push_back(v.convert_to<std::size_t>());
    return out;
}

std::string quad_str(const sk::QuadExt& q) {
    if (q.is_rational()) return q.str();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", q.approx());
    return q.str() + " (~" + buf + ")";
}

sk::FiniteAutomaton load_machine(const std::string& spec) {
    if (spec == "figure1") return sk::figure_one_machine();
    if (spec == "thue-morse" || spec == "tm") return sk::thue_morse_machine();
    return sk::FiniteAutomaton::from_json_text(json_argument(spec));
}

// ---------------------------------------------------------------- verify-paper

struct CheckSheet {
    RunReport* report;
    bool all_ok = true;

    void check(const std::string& name, bool ok) {
        report->add(name, ok ? "pass" : "FAIL");
        all_ok &= ok;
    }
};

int run_verify_paper(RunReport& report) {
    CheckSheet sheet{&report};

    // finite automaton anchors
    sk::FiniteAutomaton fig = sk::figure_one_machine();
    sheet.check("automaton.word-00100", sk::run(fig, "00100") == "b");
    sheet.check("automaton.first-terms", sk::automatic_prefix(fig, 5).str() == "babaa");

    // thue-morse by both routes
    sheet.check("thue-morse.direct", sk::thue_morse_direct(8).str() == "01101001");
    bool agree = true;
    sk::FiniteAutomaton tm = sk::thue_morse_machine();
    for (long n = 0; n < 4096 && agree; ++n)
        agree = sk::automatic_term(tm, n) == std::to_string(sk::thue_morse_term(n));
    sheet.check("thue-morse.machine-agrees", agree);

    // heights and the product formula
    sheet.check("norm.3-at-3", sk::norm_at(sk::Rat(3), sk::Place::finite(3)) == sk::Rat(1, 3));
    sheet.check("norm.2006-at-inf",
                sk::norm_at(sk::Rat(2006), sk::Place::infinite()) == sk::Rat(2006));
    sheet.check("height.3/2", sk::height_rational(sk::Rat(3, 2)) == 3);
    sheet.check("height.one-dim-vector", sk::height_vector({sk::Rat(7)}) == 1);
    sheet.check("height.pair-vector",
                sk::height_vector({sk::Rat(1), sk::Rat(61, 495)}) ==
                    sk::Rat(sk::height_rational(sk::Rat(61, 495))));
    sheet.check("product-formula.12", sk::product_formula_check(sk::Rat(12)) == 1);
    sheet.check("product-formula.-61/495", sk::product_formula_check(sk::Rat(-61, 495)) == 1);

    // repetition lemma constants on a periodic word
    std::string periodic;
    for (int i = 0; i < 20; ++i) periodic += "01";
    sk::Word w = sk::Word::from_string(periodic);
    sk::Repetition rep = sk::repetition_from_low_complexity(w, 4, sk::Rat(2));
    sheet.check("repetition.lemma-length", 3 * rep.length >= 4);
    sheet.check("repetition.lemma-window",
                rep.n + rep.length - 1 <= sk::low_complexity_prefix_length(4, sk::Rat(2)));

    // periodic-approximant pipeline at 61/495
    sk::Rat alpha(61, 495);
    sk::PipelineResult pipe = sk::run_pipeline_at(alpha, 10, {7, 9, 11}, sk::Rat(1, 4));
    bool pipeline_ok = pipe.rows.size() == 3 && pipe.plane.has_value();
    if (pipeline_ok) {
        const auto& first = pipe.rows.front();
        pipeline_ok = first.pattern.r() == 1 && first.pattern.period() == 2 &&
                      first.xi == alpha && first.m == 122 &&
                      first.datum.product_value == 0 &&
                      pipe.plane->mu + pipe.plane->nu * alpha == 0;
    }
    sheet.check("abl.61/495-pipeline", pipeline_ok);

    // power sums
    sk::PowerSum square = sk::PowerSum::canonicalized(
        {{sk::Rat(1), sk::Rat(4)}, {sk::Rat(2), sk::Rat(2)}, {sk::Rat(1), sk::Rat(1)}});
    auto root = sk::qth_root(square, 2);
    sheet.check("powersum.sqrt",
                root.has_value() &&
                    *root == sk::PowerSum::canonicalized({{sk::Rat(1), sk::Rat(2)},
                                                          {sk::Rat(1), sk::Rat(1)}}));
    auto pisot = sk::pisot_decompose(sk::PowerSum::single(sk::Rat(1), sk::Rat(2)), 2);
    sheet.check("powersum.pisot-2^n",
                pisot.has_value() && pisot->progression_modulus == 2 &&
                    pisot->progression_residue == 0 &&
                    pisot->witness == sk::PowerSum::single(sk::Rat(1), sk::Rat(2)));
    sheet.check("powersum.uhs-2^n+3^n",
                sk::is_universal_hilbert_candidate(
                    sk::PowerSum::canonicalized({{sk::Rat(1), sk::Rat(2)}, {sk::Rat(1), sk::Rat(3)}}))
                    .ok);
    sheet.check("powersum.uhs-2^n+4^n",
                !sk::is_universal_hilbert_candidate(
                     sk::PowerSum::canonicalized({{sk::Rat(1), sk::Rat(2)}, {sk::Rat(1), sk::Rat(4)}}))
                     .ok);
    std::vector<sk::GaussianRational> mahler{{sk::Rat(8), sk::Rat(1)},
                                             {sk::Rat(8), sk::Rat(-1)},
                                             {sk::Rat(2), sk::Rat(1)},
                                             {sk::Rat(2), sk::Rat(-1)}};
    sheet.check("powersum.gaussian-no-upper-dominant",
                !sk::has_dominant_root(mahler, sk::Dominance::upper).dominant);

    // surface criteria
    sk::IntersectionMatrix ones4(std::vector<std::vector<sk::Rat>>(4, std::vector<sk::Rat>(4, sk::Rat(1))));
    sk::IntersectionMatrix ones3(std::vector<std::vector<sk::Rat>>(3, std::vector<sk::Rat>(3, sk::Rat(1))));
    sk::WeightVector w4{1, 1, 1, 1}, w3{1, 1, 1};
    sk::Rat lhs4 = sk::d_squared(ones4, w4) / sk::d_dot(ones4, w4, 0) *
                   (1 + sk::d_squared(ones4, w4) * ones4.at(0, 0) /
                            (6 * sk::d_dot(ones4, w4, 0) * sk::d_dot(ones4, w4, 0)));
    sheet.check("surface.autissier-lhs-14/3", lhs4 == sk::Rat(14, 3));
    auto aut4 = sk::autissier_check(ones4, w4);
    sheet.check("surface.autissier-r4",
                std::all_of(aut4.begin(), aut4.end(), [](bool b) { return b; }));
    sk::Rat lhs3 = sk::d_squared(ones3, w3) / sk::d_dot(ones3, w3, 0) *
                   (1 + sk::d_squared(ones3, w3) * ones3.at(0, 0) /
                            (6 * sk::d_dot(ones3, w3, 0) * sk::d_dot(ones3, w3, 0)));
    sheet.check("surface.autissier-lhs-7/2", lhs3 == sk::Rat(7, 2));
    auto aut3 = sk::autissier_check(ones3, w3);
    sheet.check("surface.autissier-r3-fails",
                std::none_of(aut3.begin(), aut3.end(), [](bool b) { return b; }));
    sheet.check("surface.f-gamma-4/9",
                sk::f_theta_raw(sk::Rat(3), sk::Rat(2), sk::Rat(1), sk::QuadExt(sk::Rat(1))) ==
                    sk::QuadExt(sk::Rat(4, 9)));
    bool screen_rejects = false;
    try {
        sk::IntersectionMatrix torus(std::vector<std::vector<sk::Rat>>{
            {sk::Rat(0), sk::Rat(1), sk::Rat(0), sk::Rat(1)},
            {sk::Rat(1), sk::Rat(0), sk::Rat(1), sk::Rat(0)},
            {sk::Rat(0), sk::Rat(1), sk::Rat(0), sk::Rat(1)},
            {sk::Rat(1), sk::Rat(0), sk::Rat(1), sk::Rat(0)}});
        sk::levin_check(torus, true);
    } catch (const sk::Error& e) {
        screen_rejects = e.code() == sk::Errc::screen_failed;
    }
    sheet.check("surface.levin-screen-rejects-torus-boundary", screen_rejects);

    // curve budgets
    sk::CurveBudget cb = sk::curve_budget(3, 0, 1);
    sheet.check("curve.r3-budget", cb.ell == 4 && cb.order_sum_bound == 2);
    bool r2_flat = true;
    for (long long n = 1; n <= 20; ++n)
        r2_flat = r2_flat && sk::curve_budget(2, 0, n).order_sum_bound == 0;
    sheet.check("curve.r2-never-positive", r2_flat);

    report.add("all-checks", sheet.all_ok ? "pass" : "FAIL");
    return sheet.all_ok ? exit_ok : exit_criterion_false;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "subspacekit: exact computations for Diophantine approximation data, "
        "combinatorics on words, power sums and divisor criteria"};
    app.require_subcommand(1);

    std::string format = "tsv";
    app.add_option("--format", format, "output format: tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}));
    long long seed = 0;
    app.add_option("--seed", seed, "seed for randomized property runs");
    long long max_iter = 20000;
    app.add_option("--max-iter", max_iter, "iteration budget for the weight solver");
    std::string factor_bound_text = std::to_string(sk::default_factor_bound);
    app.add_option("--factor-bound", factor_bound_text, "trial-division bound");

    // ---- complexity
    auto* c_complexity = app.add_subcommand("complexity", "subword complexity of a finite word");
    std::string cx_word;
    std::size_t cx_n = 1, cx_upto = 0;
    c_complexity->add_option("--word", cx_word, "the word, one character per letter")->required();
    c_complexity->add_option("--n", cx_n, "factor length");
    c_complexity->add_option("--upto", cx_upto, "also report every length up to this");

    // ---- repetition
    auto* c_rep = app.add_subcommand("repetition", "disjoint equal subwords of a finite word");
    std::string rp_word;
    std::size_t rp_lmin = 1;
    bool rp_oracle = false;
    std::size_t rp_lemma_n = 0;
    std::string rp_kappa;
    c_rep->add_option("--word", rp_word)->required();
    c_rep->add_option("--lmin", rp_lmin, "minimal repetition length");
    c_rep->add_flag("--oracle", rp_oracle, "use the exhaustive reference search");
    c_rep->add_option("--lemma-n", rp_lemma_n, "run the low-complexity construction for this n");
    c_rep->add_option("--kappa", rp_kappa, "complexity threshold kappa (rational)");

    // ---- automaton
    auto* c_auto = app.add_subcommand("automaton", "finite automata with output");
    std::string au_machine = "figure1", au_word;
    long long au_term = -1;
    std::size_t au_prefix = 0, au_direct = 0;
    std::string au_slope;
    c_auto->add_option("--machine", au_machine, "machine JSON (file or inline), or figure1 / tm");
    c_auto->add_option("--word", au_word, "feed this digit word");
    c_auto->add_option("--term", au_term, "automatic-sequence term at this index");
    c_auto->add_option("--prefix", au_prefix, "first N terms of the automatic sequence");
    c_auto->add_option("--slope", au_slope, "N,nmax: measured complexity slope of the prefix");
    c_auto->add_option("--thue-morse-direct", au_direct, "first N terms by digit-sum parity");

    // ---- abl
    auto* c_abl = app.add_subcommand(
        "abl", "periodic-approximant pipeline: patterns, products and the common plane");
    std::string abl_alpha, abl_lengths, abl_eps = "1/8", abl_word;
    int abl_base = 10;
    std::size_t abl_points = 3, abl_digits = 0;
    c_abl->add_option("--alpha", abl_alpha, "rational in (0,1)");
    c_abl->add_option("--base", abl_base, "digit base");
    c_abl->add_option("--points", abl_points, "data points to collect");
    c_abl->add_option("--lengths", abl_lengths, "explicit prefix lengths, comma separated");
    c_abl->add_option("--epsilon", abl_eps, "minimal block fraction for the pattern");
    c_abl->add_option("--digits", abl_digits, "just print this many digits of alpha");
    c_abl->add_option("--word", abl_word, "extract a pattern from this digit word instead");

    // ---- heights
    auto* c_heights = app.add_subcommand("heights", "heights, norms and S-integrality");
    std::string h_rational, h_vector, h_norm, h_scheck;
    std::string h_valuation;
    bool h_product = false;
    c_heights->add_option("--rational", h_rational, "rational input p/q");
    c_heights->add_option("--vector", h_vector, "vector input a,b,c");
    c_heights->add_option("--valuation", h_valuation, "valuation at this prime");
    c_heights->add_option("--norm", h_norm, "norm at this place (prime or inf)");
    c_heights->add_flag("--product-check", h_product, "evaluate the product over all places");
    c_heights->add_option("--s-check", h_scheck, "S-integer/S-unit test against these places");

    // ---- power sums
    std::string ps_input, ps_progression;
    long long ps_n = 0;
    unsigned ps_pow = 0;
    bool ps_canonical = false;
    auto* c_pseval = app.add_subcommand("ps-eval", "evaluate or transform a power sum");
    c_pseval->add_option("--power-sum", ps_input, "JSON file or inline JSON")->required();
    c_pseval->add_option("--n", ps_n, "evaluation point");
    c_pseval->add_flag("--canonical", ps_canonical, "print the canonical form");
    c_pseval->add_option("--pow", ps_pow, "raise to this power first");
    c_pseval->add_option("--progression", ps_progression, "Q,R: restrict to n -> Qn+R first");

    std::string psr_input;
    unsigned psr_q = 2;
    auto* c_psroot = app.add_subcommand("ps-root", "exact q-th root of a power sum");
    c_psroot->add_option("--power-sum", psr_input)->required();
    c_psroot->add_option("--q", psr_q, "root exponent");

    std::string psp_input, psp_widen;
    unsigned psp_q = 2;
    auto* c_pspisot = app.add_subcommand("ps-pisot", "q-th power along an arithmetic progression");
    c_pspisot->add_option("--power-sum", psp_input)->required();
    c_pspisot->add_option("--q", psp_q);
    c_pspisot->add_option("--widen", psp_widen, "extra progression multipliers, comma separated");

    std::string psu_input;
    auto* c_psuhs = app.add_subcommand("ps-uhs", "universal Hilbert set candidacy");
    c_psuhs->add_option("--power-sum", psu_input)->required();

    std::string psd_roots, psd_direction = "upper";
    auto* c_psdom = app.add_subcommand("ps-dominant", "dominant-root diagnosis over Q(i)");
    c_psdom->add_option("--roots", psd_roots, "comma-separated Gaussian rationals")->required();
    c_psdom->add_option("--direction", psd_direction)->check(CLI::IsMember({"upper", "lower"}));

    // ---- surface
    std::string scz_matrix, scz_weights, scz_etheta;
    auto* c_scz = app.add_subcommand("surf-cz", "per-divisor criterion F(gamma_i) > a_i");
    c_scz->add_option("--matrix", scz_matrix, "intersection-matrix JSON (file or inline)")
        ->required();
    c_scz->add_option("--weights", scz_weights, "positive integer weights, comma separated")
        ->required();
    c_scz->add_option("--etheta", scz_etheta, "theta,n: also report the cubic lower-bound term");

    std::string sau_matrix, sau_weights;
    auto* c_sau = app.add_subcommand("surf-aut", "per-divisor criterion D^2/(D.C_i)(1+...) > 4a_i");
    c_sau->add_option("--matrix", sau_matrix)->required();
    c_sau->add_option("--weights", sau_weights)->required();

    std::string slv_matrix;
    bool slv_assert_ample = false;
    auto* c_slv = app.add_subcommand("surf-levin", "certified weights for r >= 4 ample divisors");
    c_slv->add_option("--matrix", slv_matrix)->required();
    c_slv->add_flag("--assert-ample", slv_assert_ample,
                    "assert ampleness regardless of the file's flag");

    std::string swt_matrix, swt_eps = "1/10";
    auto* c_swt = app.add_subcommand("surf-weights", "balanced weights from the simplex iteration");
    c_swt->add_option("--matrix", swt_matrix)->required();
    c_swt->add_option("--epsilon", swt_eps, "balance tolerance (rational in (0,1))");

    std::string sfl_input;
    auto* c_sfl = app.add_subcommand("surf-filtration", "common basis of two filtrations");
    c_sfl->add_option("--input", sfl_input, "filtration-pair JSON (file or inline)")->required();

    long long cb_r = 0, cb_g = 0, cb_n = 0;
    auto* c_cb = app.add_subcommand("curve-budget", "Riemann-Roch budget for curves");
    c_cb->add_option("--r", cb_r, "points at infinity")->required();
    c_cb->add_option("--g", cb_g, "genus")->required();
    c_cb->add_option("--n", cb_n, "multiplier")->required();

    auto* c_verify = app.add_subcommand("verify-paper", "run every bundled desk-scale reproduction");

    CLI11_PARSE(app, argc, argv);

    sk::Int factor_bound = sk::parse_integer(factor_bound_text);
    (void)seed;

    RunReport report;
    int code = exit_ok;
    try {
        if (*c_complexity) {
            report.subcommand = "complexity";
            report.digest_input = cx_word + ";" + std::to_string(cx_n) + ";" + std::to_string(cx_upto);
            sk::Word w = sk::Word::from_string(cx_word);
            if (cx_upto > 0) {
                for (std::size_t n = 1; n <= cx_upto; ++n)
                    report.add("rho(" + std::to_string(n) + ")", sk::complexity(w, n));
            } else {
                report.add("rho(" + std::to_string(cx_n) + ")", sk::complexity(w, cx_n));
            }
        } else if (*c_rep) {
            report.subcommand = "repetition";
            report.digest_input = rp_word + ";" + std::to_string(rp_lmin) + ";" +
                                  std::to_string(rp_lemma_n) + ";" + rp_kappa;
            sk::Word w = sk::Word::from_string(rp_word);
            std::optional<sk::Repetition> rep;
            if (rp_lemma_n > 0) {
                if (rp_kappa.empty())
                    sk::fail(sk::Errc::usage_error, "--lemma-n needs --kappa");
                rep = sk::repetition_from_low_complexity(w, rp_lemma_n, sk::parse_rational(rp_kappa));
                report.add("prefix-length",
                           sk::low_complexity_prefix_length(rp_lemma_n, sk::parse_rational(rp_kappa)));
            } else if (rp_oracle) {
                rep = sk::brute_force_repetition_oracle(w, rp_lmin);
            } else {
                rep = sk::find_disjoint_repetition(w, rp_lmin);
            }
            report.add("found", rep.has_value());
            if (rep) {
                report.add("k", rep->k);
                report.add("n", rep->n);
                report.add("length", rep->length);
                report.add("indexBase", std::string("1"));
            } else {
                code = exit_criterion_false;
            }
        } else if (*c_auto) {
            report.subcommand = "automaton";
            report.digest_input = au_machine + ";" + au_word + ";" + std::to_string(au_term) + ";" +
                                  std::to_string(au_prefix) + ";" + au_slope + ";" +
                                  std::to_string(au_direct);
            if (au_direct > 0) {
                report.add("thue-morse", sk::thue_morse_direct(au_direct).str());
            } else {
                sk::FiniteAutomaton m = load_machine(au_machine);
                if (!au_word.empty()) report.add("output", sk::run(m, au_word));
                if (au_term >= 0) report.add("term", sk::automatic_term(m, au_term));
                if (au_prefix > 0) report.add("prefix", sk::automatic_prefix(m, au_prefix).str());
                if (!au_slope.empty()) {
                    auto nm = parse_size_list(au_slope);
                    if (nm.size() != 2) sk::fail(sk::Errc::usage_error, "--slope needs N,nmax");
                    report.add("slope", sk::measured_complexity_slope(m, nm[0], nm[1]));
                }
            }
        } else if (*c_abl) {
            report.subcommand = "abl";
            report.digest_input = abl_alpha + ";" + std::to_string(abl_base) + ";" + abl_lengths +
                                  ";" + abl_eps + ";" + abl_word + ";" + std::to_string(abl_digits);
            sk::Rat eps = sk::parse_rational(abl_eps);
            if (!abl_word.empty()) {
                sk::Word w = sk::Word::from_string(abl_word, sk::Alphabet::digits(abl_base));
                auto p = sk::extract_abcb(w, eps);
                report.add("pattern-found", p.has_value());
                if (p) {
                    report.add("r", p->r());
                    report.add("s", p->period());
                    report.add("blockB", p->block());
                    auto pv = sk::periodic_value(*p);
                    report.add("xi", pv.xi);
                    report.add("M", pv.m);
                } else {
                    code = exit_criterion_false;
                }
            } else {
                if (abl_alpha.empty()) sk::fail(sk::Errc::usage_error, "need --alpha or --word");
                sk::Rat alpha = sk::parse_rational(abl_alpha);
                if (abl_digits > 0) {
                    report.add("digits", sk::digits_of_rational(alpha, abl_base, abl_digits).str());
                } else {
                    sk::PipelineResult r =
                        abl_lengths.empty()
                            ? sk::run_periodic_pipeline(alpha, abl_base, abl_points)
                            : sk::run_pipeline_at(alpha, abl_base, parse_size_list(abl_lengths), eps);
                    for (std::size_t i = 0; i < r.rows.size(); ++i) {
                        const auto& row = r.rows[i];
                        std::string p = "row" + std::to_string(i) + ".";
                        report.add(p + "N", row.prefix_length);
                        report.add(p + "r", row.pattern.r());
                        report.add(p + "s", row.pattern.period());
                        report.add(p + "blockB", row.pattern.block());
                        report.add(p + "xi", row.xi);
                        report.add(p + "gap", row.gap.gap);
                        report.add(p + "bound", row.gap.bound);
                        report.add(p + "gap-holds", row.gap.holds);
                        report.add(p + "productValue", row.datum.product_value);
                        report.add(p + "heightBound", row.datum.height_bound);
                        if (row.datum.m_zero_convention) report.note("row" + std::to_string(i) + ": M=0 convention");
                    }
                    report.add("plane-found", r.plane.has_value());
                    if (r.plane) {
                        report.add("lambda", r.plane->lambda);
                        report.add("mu", r.plane->mu);
                        report.add("nu", r.plane->nu);
                        if (r.plane->alpha_hat) report.add("alpha-hat", *r.plane->alpha_hat);
                    } else {
                        code = exit_criterion_false;
                    }
                }
            }
        } else if (*c_heights) {
            report.subcommand = "heights";
            report.digest_input = h_rational + ";" + h_vector + ";" + h_valuation + ";" + h_norm +
                                  ";" + h_scheck + ";" + (h_product ? "1" : "0");
            if (!h_vector.empty()) {
                sk::RationalVector x;
                std::stringstream ss(h_vector);
                std::string item;
                while (std::getline(ss, item, ',')) x.push_back(sk::parse_rational(item));
                report.add("height", sk::height_vector(x, factor_bound));
            }
            if (!h_rational.empty()) {
                sk::Rat a = sk::parse_rational(h_rational);
                report.add("height", sk::height_rational(a));
                if (!h_valuation.empty())
                    report.add("valuation", sk::valuation(a, sk::parse_integer(h_valuation)));
                if (!h_norm.empty())
                    report.add("norm", sk::norm_at(a, sk::Place::parse(h_norm, factor_bound)));
                if (h_product)
                    report.add("product", sk::product_formula_check(a, factor_bound));
                if (!h_scheck.empty()) {
                    sk::PlaceSet s = sk::PlaceSet::parse(h_scheck, factor_bound);
                    report.add("s-integer", sk::is_s_integer(a, s, factor_bound));
                    report.add("s-unit", sk::is_s_unit(a, s, factor_bound));
                }
            }
        } else if (*c_pseval) {
            report.subcommand = "ps-eval";
            report.digest_input = json_argument(ps_input) + ";" + std::to_string(ps_n) + ";" +
                                  std::to_string(ps_pow) + ";" + ps_progression;
            sk::PowerSum u = sk::PowerSum::from_json_text(json_argument(ps_input));
            if (!ps_progression.empty()) {
                auto qr = parse_int_list(ps_progression);
                if (qr.size() != 2) sk::fail(sk::Errc::usage_error, "--progression needs Q,R");
                u = u.progression(qr[0], qr[1]);
                report.add("progression", u.str());
            }
            if (ps_pow > 0) {
                u = u.pow(ps_pow);
                report.add("power", u.str());
            }
            if (ps_canonical) {
                report.add("canonical", u.str());
                report.add("canonical-json", u.to_json_text());
            }
            report.add("value(" + std::to_string(ps_n) + ")", u.eval(ps_n));
        } else if (*c_psroot) {
            report.subcommand = "ps-root";
            report.digest_input = json_argument(psr_input) + ";" + std::to_string(psr_q);
            sk::PowerSum u = sk::PowerSum::from_json_text(json_argument(psr_input));
            std::optional<sk::PowerSum> v;
            try {
                v = sk::qth_root(u, psr_q);
            } catch (const sk::Error& e) {
                if (e.code() != sk::Errc::irrational_obstruction) throw;
                report.add("root-found", false);
                report.note(e.what());
                code = exit_criterion_false;
            }
            if (v) {
                report.add("root-found", true);
                report.add("root", v->str());
                report.add("root-json", v->to_json_text());
            } else if (code == exit_ok) {
                report.add("root-found", false);
                code = exit_criterion_false;
            }
        } else if (*c_pspisot) {
            report.subcommand = "ps-pisot";
            report.digest_input = json_argument(psp_input) + ";" + std::to_string(psp_q) + ";" + psp_widen;
            sk::PowerSum u = sk::PowerSum::from_json_text(json_argument(psp_input));
            sk::PisotOptions opts;
            if (!psp_widen.empty())
                for (const sk::Int& m : parse_int_list(psp_widen))
                    opts.multipliers.push_back(m.convert_to<unsigned>());
            auto d = sk::pisot_decompose(u, psp_q, opts);
            report.add("decomposition-found", d.has_value());
            if (d) {
                report.add("Q", d->progression_modulus);
                report.add("R", d->progression_residue);
                report.add("w", d->witness.str());
                report.add("w-json", d->witness.to_json_text());
            } else {
                code = exit_criterion_false;
            }
        } else if (*c_psuhs) {
            report.subcommand = "ps-uhs";
            report.digest_input = json_argument(psu_input);
            sk::PowerSum u = sk::PowerSum::from_json_text(json_argument(psu_input));
            sk::UhsVerdict v = sk::is_universal_hilbert_candidate(u, factor_bound);
            report.add("universal-hilbert-candidate", v.ok);
            report.add("reason", v.reason);
            if (!v.ok) code = exit_criterion_false;
        } else if (*c_psdom) {
            report.subcommand = "ps-dominant";
            report.digest_input = psd_roots + ";" + psd_direction;
            std::vector<sk::GaussianRational> roots;
            std::stringstream ss(psd_roots);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) roots.push_back(sk::GaussianRational::parse(item));
            sk::Dominance dir =
                psd_direction == "upper" ? sk::Dominance::upper : sk::Dominance::lower;
            sk::DominanceVerdict v = sk::has_dominant_root(roots, dir);
            report.add("dominant", v.dominant);
            if (v.witness) {
                report.add("witness", v.witness->str());
                report.add("witness-norm2", v.witness->norm2());
            }
            if (!v.dominant) code = exit_criterion_false;
        } else if (*c_scz || *c_sau) {
            const bool cz = static_cast<bool>(*c_scz);
            report.subcommand = cz ? "surf-cz" : "surf-aut";
            const std::string& mtext = cz ? scz_matrix : sau_matrix;
            const std::string& wtext = cz ? scz_weights : sau_weights;
            report.digest_input = json_argument(mtext) + ";" + wtext + ";" + scz_etheta;
            auto [m, ample] = sk::IntersectionMatrix::from_json_text(json_argument(mtext));
            sk::WeightVector a = parse_int_list(wtext);
            sk::check_weights(m, a);
            report.add("D^2", sk::d_squared(m, a));
            std::vector<bool> verdicts = cz ? sk::cz_check(m, a) : sk::autissier_check(m, a);
            bool all = true;
            for (std::size_t i = 0; i < m.size(); ++i) {
                std::string p = "i" + std::to_string(i + 1) + ".";
                report.add(p + "D.C", sk::d_dot(m, a, i));
                if (cz) {
                    sk::QuadExt g = sk::gamma_small(m, a, i);
                    report.add(p + "gamma", quad_str(g));
                    report.add(p + "F(gamma)", quad_str(sk::f_theta(m, a, i, g)));
                    if (!scz_etheta.empty()) {
                        auto parts = parse_size_list(scz_etheta);
                        if (parts.size() != 2)
                            sk::fail(sk::Errc::usage_error, "--etheta needs theta,n");
                        auto tb = sk::etheta_lower_bound(sk::d_squared(m, a), sk::d_dot(m, a, i),
                                                         m.at(i, i), sk::Int(parts[1]),
                                                         sk::QuadExt(sk::Rat(parts[0])));
                        report.add(p + "cubic-term", quad_str(tb.cubic_term));
                        report.note(p + "cubic-term is " + tb.note);
                    }
                } else {
                    sk::Rat dc = sk::d_dot(m, a, i);
                    sk::Rat d2 = sk::d_squared(m, a);
                    report.add(p + "lhs", sk::Rat(d2 / dc * (1 + d2 * m.at(i, i) / (6 * dc * dc))));
                    report.add(p + "rhs", sk::Rat(4 * sk::Rat(a[i])));
                }
                report.add(p + "holds", static_cast<bool>(verdicts[i]));
                all = all && verdicts[i];
            }
            report.add("criterion", all);
            if (!all) code = exit_criterion_false;
        } else if (*c_slv) {
            report.subcommand = "surf-levin";
            report.digest_input = json_argument(slv_matrix) + ";" + (slv_assert_ample ? "1" : "0");
            auto [m, ample] = sk::IntersectionMatrix::from_json_text(json_argument(slv_matrix));
            sk::LevinOptions opts;
            opts.fixed_point.max_iterations = static_cast<int>(max_iter);
            try {
                sk::WeightVector a = sk::levin_check(m, ample || slv_assert_ample, opts);
                std::string ws;
                for (const sk::Int& w : a) ws += (ws.empty() ? "" : ",") + sk::to_string(w);
                report.add("criterion", true);
                report.add("weights", ws);
            } catch (const sk::Error& e) {
                if (e.code() != sk::Errc::screen_failed) throw;
                report.add("criterion", false);
                report.note(e.what());
                code = exit_criterion_false;
            }
        } else if (*c_swt) {
            report.subcommand = "surf-weights";
            report.digest_input = json_argument(swt_matrix) + ";" + swt_eps;
            auto [m, ample] = sk::IntersectionMatrix::from_json_text(json_argument(swt_matrix));
            sk::FixedPointOptions opts;
            opts.max_iterations = static_cast<int>(max_iter);
            sk::Rat eps = sk::parse_rational(swt_eps);
            sk::WeightVector a = sk::fixed_point_weights(m, eps, opts);
            std::string ws;
            for (const sk::Int& w : a) ws += (ws.empty() ? "" : ",") + sk::to_string(w);
            report.add("weights", ws);
            report.add("certificate", sk::weight_certificate(m, a, eps));
        } else if (*c_sfl) {
            report.subcommand = "surf-filtration";
            report.digest_input = json_argument(sfl_input);
            auto [f1, f2] = sk::Filtration::pair_from_json_text(json_argument(sfl_input));
            auto basis = sk::common_filtration_basis(f1, f2);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                std::string vs;
                for (const sk::Rat& e : basis[i]) vs += (vs.empty() ? "" : ",") + sk::to_string(e);
                report.add("basis" + std::to_string(i), vs);
            }
            report.add("certificate", sk::common_basis_certificate(f1, f2, basis));
        } else if (*c_cb) {
            report.subcommand = "curve-budget";
            report.digest_input = std::to_string(cb_r) + ";" + std::to_string(cb_g) + ";" +
                                  std::to_string(cb_n);
            sk::CurveBudget b = sk::curve_budget(cb_r, cb_g, cb_n);
            report.add("ell", b.ell);
            report.add("A", b.order_sum_bound);
            report.add("has-positive-n", b.minimal_positive_n.has_value());
            if (b.minimal_positive_n)
                report.add("minimal-n", std::to_string(*b.minimal_positive_n));
            else
                code = exit_criterion_false;
        } else if (*c_verify) {
            report.subcommand = "verify-paper";
            report.digest_input = "verify-paper";
            code = run_verify_paper(report);
        }
    } catch (const sk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }

    emit(report, format);
    return code;
}
