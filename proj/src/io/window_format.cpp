#include "aperimet/io/window_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "aperimet/errors.hpp"

namespace aperimet::io {

namespace {

std::int64_t parse_int_token(const std::string& tok, const std::string& path, int line,
                             const char* what) {
    std::int64_t v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw ParseError(path, line, std::string("expected an integer ") + what + ", got '" +
                                         tok + "'");
    return v;
}

Rational parse_rational_token(const std::string& tok, const std::string& path, int line) {
    if (tok.find('.') != std::string::npos)
        throw ParseError(path, line,
                         "anchor coordinates must be exact rationals (p/q), got '" + tok + "'");
    const auto slash = tok.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_int_token(tok, path, line, "anchor numerator"), 1);
    }
    const std::int64_t p =
        parse_int_token(tok.substr(0, slash), path, line, "anchor numerator");
    const std::int64_t q =
        parse_int_token(tok.substr(slash + 1), path, line, "anchor denominator");
    if (q <= 0) throw ParseError(path, line, "anchor denominator must be positive");
    return Rational(p, q);
}

} // namespace

Polyomino parse_window_text(std::istream& in, const std::string& path) {
    std::vector<Cell> cells;
    Rational ax(-1, 2), ay(-1, 2);
    bool saw_anchor = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue; // blank or comment-only line
        if (tok == "anchor") {
            if (saw_anchor) throw ParseError(path, line_no, "second anchor line");
            if (!cells.empty())
                throw ParseError(path, line_no, "anchor line must precede cell lines");
            std::string tx, ty;
            if (!(ls >> tx >> ty))
                throw ParseError(path, line_no, "anchor needs two coordinates");
            ax = parse_rational_token(tx, path, line_no);
            ay = parse_rational_token(ty, path, line_no);
            saw_anchor = true;
        } else if (tok == "cell") {
            std::string tx, ty;
            if (!(ls >> tx >> ty))
                throw ParseError(path, line_no, "cell needs two coordinates");
            const Cell c{parse_int_token(tx, path, line_no, "cell x"),
                         parse_int_token(ty, path, line_no, "cell y")};
            for (const Cell& prev : cells)
                if (prev == c) throw DuplicateCell(path, line_no);
            cells.push_back(c);
        } else {
            throw ParseError(path, line_no, "unknown directive '" + tok + "'");
        }
        if (ls >> tok) throw ParseError(path, line_no, "trailing tokens after '" + tok + "'");
    }
    if (cells.empty()) throw EmptyWindow(path);
    try {
        return Polyomino(std::move(cells), ax, ay, true);
    } catch (const Error& e) {
        throw ParseError(path, line_no, e.what());
    }
}

Polyomino parse_window(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse_window_text(in, path);
}

std::string window_text(const Polyomino& w) {
    std::ostringstream out;
    out << "anchor " << w.anchor_x().num() << '/' << w.anchor_x().den() << ' '
        << w.anchor_y().num() << '/' << w.anchor_y().den() << '\n';
    for (const Cell& c : w.cells()) out << "cell " << c.x << ' ' << c.y << '\n';
    return out.str();
}

void write_window(const Polyomino& w, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << window_text(w);
}

} // namespace aperimet::io
