#ifndef SFANO_ERRORS_HPP
#define SFANO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sfano {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input or a violated precondition (wrong degree, plane not
// contained in the variety, unknown variable, ...).
class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& msg, std::size_t position)
        : InputError(msg + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// An exact identity that was supposed to hold did not. `residue` carries
// the printed nonzero difference when there is one.
class VerificationError : public Error {
public:
    VerificationError(const std::string& msg, std::string residue = {})
        : Error(residue.empty() ? msg : msg + ": " + residue), residue_(std::move(residue)) {}
    const std::string& residue() const { return residue_; }

private:
    std::string residue_;
};

// A construction hit a degenerate locus (rank drop, identically vanishing
// residual) and cannot produce a verified result.
class DegenerateError : public VerificationError {
public:
    using VerificationError::VerificationError;
};

}  // namespace sfano

#endif
