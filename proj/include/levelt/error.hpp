#pragma once

#include <stdexcept>
#include <string>

namespace levelt {

// Error categories; the CLI maps these onto stable exit codes.
enum class errc {
    parse,          // malformed input (bad JSON, bad rational string, bad shape)
    precondition,   // mathematical precondition violated
    singular,       // a matrix required to be invertible is singular
    arithmetic,     // division by zero, conductor overflow
    unrepresentable,// result exists but is not expressible in a cyclotomic field
    internal,       // broken invariant; a bug if ever thrown
};

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    errc kind() const { return kind_; }

private:
    errc kind_;
};

} // namespace levelt
