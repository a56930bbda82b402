#pragma once

#include <stdexcept>
#include <string>

namespace wgon {

/// Machine-readable failure categories, mirrored 1:1 by the C API status codes.
enum class Errc {
    invalid_argument,
    parse,
    degenerate_input,
    exhausted,
    limit_exceeded,
    io,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace wgon
