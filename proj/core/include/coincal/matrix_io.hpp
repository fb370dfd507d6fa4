#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "coincal/int_matrix.hpp"

namespace coincal {

/// Matrix text syntax error; row and entry are 1-based positions
/// (entry 0 marks a whole-row problem such as a ragged or empty row).
class parse_error : public std::runtime_error {
public:
    parse_error(std::string message, std::size_t row, std::size_t entry)
        : std::runtime_error(std::move(message)), row_(row), entry_(entry) {}

    std::size_t row() const { return row_; }
    std::size_t entry() const { return entry_; }

private:
    std::size_t row_;
    std::size_t entry_;
};

/// Parse the row text format: rows separated by ';', entries by whitespace,
/// entries are decimal integers with an optional leading '-'.
/// "1 2; 3 4" is [[1, 2], [3, 4]]. Throws parse_error on empty input,
/// ragged rows, or non-integer tokens.
IntMatrix parse_matrix(std::string_view text);

/// Inverse of parse_matrix: "1 2; 3 4".
std::string serialize_matrix(const IntMatrix& a);

}  // namespace coincal
