#ifndef KRQ_ERRORS_HPP
#define KRQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace krq {

// Every library failure carries one of these codes so callers (and the CLI
// exit-code mapping) can dispatch without string matching.
enum class ErrorCode {
    invalid_type,          // unsupported (series, rank)
    index_out_of_range,    // node index outside 1..n
    negative_length,       // k < 0 where a string/KR length is required
    bad_range,             // malformed k-range or degree bound
    non_positive_multiplicity,
    identity_monomial,     // operation undefined on the monomial 1
    not_i_dominant,
    negative_residual,     // i-decomposition produced lambda < 0
    non_zero_remainder,    // i-decomposition left unaccounted monomials
    not_special,           // a second dominant monomial is forced
    inconsistent,          // directional demands disagree
    depth_cap_exceeded,
    monomial_cap_exceeded,
    arithmetic_overflow,
    negative_b,            // generalized binomial with b < 0
    non_integral_p,        // vacancy number failed integrality
    not_in_root_lattice,
    io_error,
};

class KrqError : public std::runtime_error {
public:
    KrqError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw KrqError(code, what);
}

} // namespace krq

#endif
