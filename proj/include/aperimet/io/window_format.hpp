// Window text format: an optional "anchor <px>/<qx> <py>/<qy>" header line
// followed by one "cell <x> <y>" line per cell. '#' starts a comment,
// whitespace separates tokens, and anchors default to (-1/2, -1/2). Anchor
// literals are exact rationals ("p/q" or a bare integer); floats are
// rejected so genericity checks stay exact.
#ifndef APERIMET_IO_WINDOW_FORMAT_HPP
#define APERIMET_IO_WINDOW_FORMAT_HPP

#include <iosfwd>
#include <string>

#include "aperimet/polyomino.hpp"

namespace aperimet::io {

// Parses a window file. Throws ParseError (with line number), DuplicateCell,
// or EmptyWindow; the path parameter is used in messages only for the
// stream overload.
Polyomino parse_window(const std::string& path);
Polyomino parse_window_text(std::istream& in, const std::string& path);

// Serialization that parse_window reads back to an equal window.
std::string window_text(const Polyomino& w);
void write_window(const Polyomino& w, const std::string& path);

} // namespace aperimet::io

#endif
