#pragma once

#include <stdexcept>
#include <string>

namespace reva {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid arguments, rejected specs, out-of-range labels, schema violations.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// A file that is not what it claims to be (bad magic, wrong version, bad layout).
struct FormatError : Error {
    explicit FormatError(const std::string& msg) : Error(msg) {}
};

// A file that is structurally right but damaged (truncation, checksum mismatch).
struct CorruptError : Error {
    explicit CorruptError(const std::string& msg) : Error(msg) {}
};

// Failures at run time: diverging loss, non-finite gradients, unreachable state.
struct RuntimeError : Error {
    explicit RuntimeError(const std::string& msg) : Error(msg) {}
};

} // namespace reva
