#ifndef STANLEY_ERRORS_HPP
#define STANLEY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stanley {

class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Checked 64-bit arithmetic left the representable range.
class Overflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// A pure complex (or pure ideal) was required.
class NotPure : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidCertificate : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A search or enumeration exceeded its configured budget.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input; the message names the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace stanley

#endif
