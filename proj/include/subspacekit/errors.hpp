#ifndef SUBSPACEKIT_ERRORS_HPP
#define SUBSPACEKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace subspacekit {

// Failure categories surfaced by the toolkit. Every thrown Error carries one
// of these so callers (CLI, tests, bindings) can branch without string
// matching.
enum class Errc {
    zero_input,
    zero_vector,
    precondition_failed,
    input_too_large,
    invalid_digit,
    out_of_range,
    pattern_mismatch,
    degenerate_pattern,
    bad_place_set,
    nonpositive_root,
    irrational_obstruction,
    factorization_bound,
    step_limit,
    dimension_mismatch,
    index_out_of_range,
    hodge_violation,
    degenerate_self_intersection,
    division_by_zero,
    nonpositive_pairing,
    no_convergence,
    positivity_violation,
    screen_failed,
    not_nested,
    out_of_riemann_roch_range,
    theta_out_of_range,
    usage_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace subspacekit

#endif
