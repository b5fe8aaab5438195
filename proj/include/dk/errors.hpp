#ifndef DK_ERRORS_HPP
#define DK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dk {

/// Bad user-supplied configuration (unknown key, invalid value, bad flag).
/// CLI exit code 2.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure (factorization breakdown, NaN loss, singular system).
/// CLI exit code 3.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem / parsing failure. CLI exit code 4.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dk

#endif
