#include "coincal/matrix_io.hpp"

#include <cctype>
#include <vector>

namespace coincal {

namespace {

bool integer_token(std::string_view tok) {
    if (!tok.empty() && tok.front() == '-') tok.remove_prefix(1);
    if (tok.empty()) return false;
    for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::vector<std::string_view> split_tokens(std::string_view row) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < row.size()) {
        while (i < row.size() && std::isspace(static_cast<unsigned char>(row[i]))) ++i;
        std::size_t start = i;
        while (i < row.size() && !std::isspace(static_cast<unsigned char>(row[i]))) ++i;
        if (i > start) toks.push_back(row.substr(start, i - start));
    }
    return toks;
}

}  // namespace

IntMatrix parse_matrix(std::string_view text) {
    std::vector<std::vector<std::string_view>> rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t semi = text.find(';', pos);
        const std::string_view segment =
            text.substr(pos, semi == std::string_view::npos ? std::string_view::npos
                                                            : semi - pos);
        rows.push_back(split_tokens(segment));
        if (semi == std::string_view::npos) break;
        pos = semi + 1;
    }

    if (rows.size() == 1 && rows[0].empty())
        throw parse_error("matrix parse error: empty input", 0, 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].empty())
            throw parse_error("matrix parse error at row " + std::to_string(i + 1) +
                                  ": empty row",
                              i + 1, 0);

    const std::size_t cols = rows[0].size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw parse_error("matrix parse error at row " + std::to_string(i + 1) +
                                  ": expected " + std::to_string(cols) +
                                  " entries, found " + std::to_string(rows[i].size()),
                              i + 1, 0);
        for (std::size_t j = 0; j < cols; ++j) {
            const std::string_view tok = rows[i][j];
            if (!integer_token(tok))
                throw parse_error("matrix parse error at row " + std::to_string(i + 1) +
                                      ", entry " + std::to_string(j + 1) +
                                      ": non-integer token '" + std::string(tok) + "'",
                                  i + 1, j + 1);
            m(i, j) = mpz_class(std::string(tok), 10);
        }
    }
    return m;
}

std::string serialize_matrix(const IntMatrix& a) {
    std::string out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i > 0) out += "; ";
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j > 0) out += ' ';
            out += a(i, j).get_str();
        }
    }
    return out;
}

}  // namespace coincal
