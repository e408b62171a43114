#pragma once

#include <stdexcept>
#include <string>

namespace sptough {

// Base class for everything this library throws on purpose.
struct sp_error : std::runtime_error {
    explicit sp_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed tree: bad root, undersized internal node, shared/cyclic children.
struct structural_error : sp_error {
    explicit structural_error(const std::string& msg) : sp_error(msg) {}
};

// Input exceeds a hard limit (vertex cap of the exact solver, leaf cap of the
// enumerator). Distinct from domain_error so callers can suggest smaller input.
struct capacity_error : sp_error {
    explicit capacity_error(const std::string& msg) : sp_error(msg) {}
};

// Operation applied outside its domain (toughness witness of a complete
// graph, reduction of a multigraph, classify on a non-series-parallel graph).
struct domain_error : sp_error {
    explicit domain_error(const std::string& msg) : sp_error(msg) {}
};

// Recognition requires a connected input; kept separate from the plain
// "not series-parallel" outcome, which is reported as a missing value.
struct disconnected_error : domain_error {
    explicit disconnected_error(const std::string& msg) : domain_error(msg) {}
};

// Expression or edge-list syntax error with a 1-based source position.
struct parse_error : sp_error {
    int line;
    int column;
    parse_error(const std::string& msg, int line_, int column_)
        : sp_error(msg + " at line " + std::to_string(line_) + ", column " +
                   std::to_string(column_)),
          line(line_),
          column(column_) {}
};

}  // namespace sptough
