#pragma once

#include "lmis/geometry.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace lmis {

class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

namespace detail {

inline bool comment_or_blank(const std::string& line) {
    const auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

}  // namespace detail

/// Instance format: one shape per line as whitespace-separated decimals
/// `corner_x corner_y htip_x vtip_y`; `#` lines are comments, blank lines
/// are skipped. Shapes are indexed 0-based in file order. Zero-length
/// arms are rejected here, with the offending line number.
inline std::vector<LShape> parse_instance(std::istream& in) {
    std::vector<LShape> shapes;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::comment_or_blank(line)) {
            continue;
        }
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (fields >> tok) {
            tokens.push_back(tok);
        }
        if (tokens.size() != 4) {
            throw ParseError(lineno, "expected 4 coordinates, got " + std::to_string(tokens.size()));
        }
        LShape l;
        try {
            l.corner_x = parse_decimal(tokens[0]);
            l.corner_y = parse_decimal(tokens[1]);
            l.htip_x = parse_decimal(tokens[2]);
            l.vtip_y = parse_decimal(tokens[3]);
        } catch (const Error& e) {
            throw ParseError(lineno, e.what());
        }
        if (l.htip_x == l.corner_x || l.vtip_y == l.corner_y) {
            throw ParseError(lineno, "zero-length arm");
        }
        shapes.push_back(std::move(l));
    }
    return shapes;
}

inline std::vector<LShape> load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open instance file: " + path);
    }
    return parse_instance(in);
}

inline void write_instance(std::ostream& out, const std::vector<LShape>& shapes) {
    for (const LShape& l : shapes) {
        out << format_decimal(l.corner_x) << ' ' << format_decimal(l.corner_y) << ' '
            << format_decimal(l.htip_x) << ' ' << format_decimal(l.vtip_y) << '\n';
    }
}

inline void save_instance(const std::string& path, const std::vector<LShape>& shapes,
                          const std::string& header_comment = "") {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write instance file: " + path);
    }
    if (!header_comment.empty()) {
        out << "# " << header_comment << '\n';
    }
    write_instance(out, shapes);
}

/// Solution format: sorted 0-based shape indices, one per line; the same
/// comment and blank-line rules as instances. Repeated indices collapse.
inline std::vector<std::size_t> parse_solution(std::istream& in) {
    std::vector<std::size_t> indices;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::comment_or_blank(line)) {
            continue;
        }
        std::istringstream fields(line);
        std::string tok;
        fields >> tok;
        std::string rest;
        if (fields >> rest) {
            throw ParseError(lineno, "expected a single index");
        }
        std::size_t parsed = 0;
        try {
            std::size_t used = 0;
            parsed = std::stoull(tok, &used);
            if (used != tok.size()) {
                throw std::invalid_argument(tok);
            }
        } catch (const std::exception&) {
            throw ParseError(lineno, "not an index: '" + tok + "'");
        }
        indices.push_back(parsed);
    }
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    return indices;
}

inline std::vector<std::size_t> load_solution(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open solution file: " + path);
    }
    return parse_solution(in);
}

inline void write_solution(std::ostream& out, const std::vector<std::size_t>& indices) {
    std::vector<std::size_t> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i : sorted) {
        out << i << '\n';
    }
}

inline void save_solution(const std::string& path, const std::vector<std::size_t>& indices) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write solution file: " + path);
    }
    write_solution(out, indices);
}

}  // namespace lmis
