#pragma once

#include <stdexcept>
#include <string>

namespace owj {

/// Error codes raised across the library; every owj exception carries one.
enum class Errc {
    // core
    syntax_error,
    duplicate_state,
    duplicate_symbol,
    out_of_range_reference,
    duplicate_transition,
    missing_start,
    alphabet_mismatch,
    // engines
    already_halted,
    search_budget_exceeded,
    unsupported_engine,
    // analysis
    insufficient_data,
    bound_violation,
    // langtools
    cap_exceeded,
    bounds_exceed_sample,
    state_cap_exceeded,
    not_complete,
    unknown_family,
    bad_parameter,
};

const char* errc_name(Errc c);

/// Name of the module an error code originates from ("core", "engines", ...).
const char* errc_module(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace owj
