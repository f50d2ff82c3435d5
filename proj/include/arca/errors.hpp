#pragma once

#include <stdexcept>
#include <string>

namespace arca {

// Error categories map onto the tool's exit codes:
//   ConfigError -> 2, DataError -> 3, NumericError -> 4.

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Out-of-vocabulary token; callers may want to catch this one specifically.
class OovError : public DataError {
public:
    explicit OovError(const std::string& token)
        : DataError("out-of-vocabulary token: " + token), token_(token) {}
    const std::string& token() const { return token_; }

private:
    std::string token_;
};

} // namespace arca
