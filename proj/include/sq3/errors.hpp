#pragma once

#include <stdexcept>
#include <string>

namespace sq3 {

struct UnsupportedExact : std::runtime_error {
    explicit UnsupportedExact(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParameters : std::runtime_error {
    explicit InvalidParameters(const std::string& what) : std::runtime_error(what) {}
};

struct NotASubgroup : std::runtime_error {
    explicit NotASubgroup(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sq3
