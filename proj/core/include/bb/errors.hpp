#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bb {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (polynomials, files, JSON). Carries a byte offset
// into the offending text when one is known.
class parse_error : public error {
public:
    explicit parse_error(const std::string& message, std::size_t position = npos)
        : error(position == npos ? message
                                 : message + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// An operation was called outside its contract (bad dimensions, unsorted
// input, unmet structural requirements, ...).
class precondition_error : public error {
public:
    using error::error;
};

// The degree bound was hit before the computation could finish; the input
// ideal is likely not zero-dimensional.
class degree_cap_error : public precondition_error {
public:
    using precondition_error::precondition_error;
};

// A requested order ideal cannot support a border basis of the given ideal.
class inadmissible_error : public error {
public:
    using error::error;
};

} // namespace bb
