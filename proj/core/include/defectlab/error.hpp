#pragma once

#include <stdexcept>
#include <string>

namespace defectlab {

enum class errc {
    domain_mismatch,
    invalid_argument,
    out_of_range,
    budget_exceeded,
    not_a_factor,
    insufficient_window,
    invalid_spec,
    parse_error,
    io_error,
    internal,
};

/// Single exception type for the whole library; `code()` tells callers
/// (in particular the CLI) which class of failure they are looking at.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::domain_mismatch: return "domain_mismatch";
        case errc::invalid_argument: return "invalid_argument";
        case errc::out_of_range: return "out_of_range";
        case errc::budget_exceeded: return "budget_exceeded";
        case errc::not_a_factor: return "not_a_factor";
        case errc::insufficient_window: return "insufficient_window";
        case errc::invalid_spec: return "invalid_spec";
        case errc::parse_error: return "parse_error";
        case errc::io_error: return "io_error";
        case errc::internal: return "internal";
    }
    return "unknown";
}

}  // namespace defectlab
