// Error hierarchy shared by all twocat modules.
#pragma once

#include <stdexcept>
#include <string>

namespace twocat {

// Base class for every error thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A diagram, path, or level violates the typing discipline.
struct type_error : error {
    using error::error;
};

// Two paths that were required to coincide do not.
struct boundary_mismatch : error {
    using error::error;
};

// A rule application was requested at a position that does not match.
struct no_match : error {
    using error::error;
};

// A step omitted its position but more than one match exists.
struct ambiguous_match : error {
    using error::error;
};

// Textual input could not be parsed; carries a 1-based source location.
struct parse_error : error {
    int line;
    int col;
    parse_error(const std::string& msg, int line_, int col_ = 0)
        : error(msg + " (line " + std::to_string(line_) +
                (col_ > 0 ? ", col " + std::to_string(col_) : std::string()) + ")"),
          line(line_), col(col_) {}
};

} // namespace twocat
