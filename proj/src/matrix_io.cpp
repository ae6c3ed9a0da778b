#include "dodgson/matrix_io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace dodgson {

namespace {

struct Token {
    std::string text;
    std::size_t line;
};

using Line = std::vector<Token>;

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::istringstream words(raw);
        Line line;
        std::string word;
        while (words >> word) {
            if (line.empty() && word.front() == '#') break;
            line.push_back({word, number});
        }
        if (!line.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

std::optional<std::size_t> positive_count(const std::string& s) {
    if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return std::nullopt;
    const std::size_t v = std::stoul(s);
    if (v == 0) return std::nullopt;
    return v;
}

bool uniform(const std::vector<Line>& lines, std::size_t first, std::size_t width) {
    for (std::size_t i = first; i < lines.size(); ++i)
        if (lines[i].size() != width) return false;
    return true;
}

enum class TokenRing { Integer, Rational, Real };

TokenRing classify(const std::string& s) {
    if (s.find('/') != std::string::npos) return TokenRing::Rational;
    if (s.find_first_of(".eE") != std::string::npos) return TokenRing::Real;
    return TokenRing::Integer;
}

Scalar promote(const Scalar& s, TokenRing target, double tolerance) {
    if (s.kind() != RingKind::Integer) return s;
    switch (target) {
        case TokenRing::Rational: return Scalar::rational(mpq_class(s.as_integer()));
        case TokenRing::Real: return Scalar::real(s.as_integer().get_d(), tolerance);
        case TokenRing::Integer: break;
    }
    return s;
}

Matrix build_matrix(const std::vector<Line>& lines, std::size_t first_data, double tolerance) {
    const std::size_t width = lines[first_data].size();
    for (std::size_t i = first_data; i < lines.size(); ++i) {
        if (lines[i].size() != width) {
            throw ParseError("expected " + std::to_string(width) + " entries, found " +
                                 std::to_string(lines[i].size()),
                             lines[i].front().line, lines[i].front().text);
        }
    }

    // Ring inference over all entry tokens.
    std::optional<Token> first_rational, first_real;
    for (std::size_t i = first_data; i < lines.size(); ++i) {
        for (const auto& tok : lines[i]) {
            switch (classify(tok.text)) {
                case TokenRing::Rational:
                    if (!first_rational) first_rational = tok;
                    break;
                case TokenRing::Real:
                    if (!first_real) first_real = tok;
                    break;
                case TokenRing::Integer: break;
            }
        }
    }
    if (first_rational && first_real) {
        const Token& late = first_rational->line >= first_real->line ? *first_rational : *first_real;
        throw ParseError("cannot mix rational and real entries", late.line, late.text);
    }
    const TokenRing target = first_rational ? TokenRing::Rational
                             : first_real   ? TokenRing::Real
                                            : TokenRing::Integer;

    std::vector<Scalar> entries;
    entries.reserve((lines.size() - first_data) * width);
    for (std::size_t i = first_data; i < lines.size(); ++i) {
        for (const auto& tok : lines[i]) {
            try {
                entries.push_back(promote(parse_scalar(tok.text, tolerance), target, tolerance));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), tok.line, tok.text);
            }
        }
    }
    return Matrix(lines.size() - first_data, width, std::move(entries));
}

}  // namespace

Matrix parse_matrix(std::string_view text, double tolerance) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("no matrix rows found");

    // Header detection.
    std::size_t first_data = 0;
    const auto& head = lines.front();
    if (head.size() == 2) {
        auto n = positive_count(head[0].text);
        auto m = positive_count(head[1].text);
        const bool header_ok = n && m && lines.size() - 1 == *n && uniform(lines, 1, *m);
        const bool plain_ok = uniform(lines, 0, head.size());
        if (header_ok && plain_ok) {
            const bool plain_square = lines.size() == head.size();
            first_data = plain_square ? 0 : 1;
        } else if (header_ok) {
            first_data = 1;
        } else if (n && m && !plain_ok) {
            // Looks like a header but the body disagrees: report against it.
            if (lines.size() - 1 != *n) {
                throw ParseError("header declares " + std::to_string(*n) + " rows but " +
                                     std::to_string(lines.size() - 1) + " follow",
                                 head[0].line, head[0].text);
            }
            for (std::size_t i = 1; i < lines.size(); ++i) {
                if (lines[i].size() != *m) {
                    throw ParseError("expected " + std::to_string(*m) + " entries, found " +
                                         std::to_string(lines[i].size()),
                                     lines[i].front().line, lines[i].front().text);
                }
            }
        }
    }

    return build_matrix(lines, first_data, tolerance);
}

Matrix matrix_from_tokens(const std::vector<std::vector<std::string>>& rows, double tolerance) {
    std::vector<Line> lines;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Line line;
        for (const auto& tok : rows[i]) line.push_back({tok, i + 1});
        if (line.empty()) throw ParseError("empty row", i + 1);
        lines.push_back(std::move(line));
    }
    if (lines.empty()) throw ParseError("no matrix rows found");
    return build_matrix(lines, 0, tolerance);
}

Matrix read_matrix_file(const std::filesystem::path& path, double tolerance) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str(), tolerance);
}

std::string format_matrix(const Matrix& a, bool header) {
    std::ostringstream out;
    if (header && a.rows() > 1) out << a.rows() << ' ' << a.cols() << '\n';
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) out << ' ';
            std::string cell = to_string(a(i, j));
            // Polynomial entries are display-only; keep each one a single token.
            if (a(i, j).kind() == RingKind::Polynomial) std::erase(cell, ' ');
            out << cell;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace dodgson
