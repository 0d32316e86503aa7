// Error types raised by library operations.
#ifndef APERIMET_ERRORS_HPP
#define APERIMET_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aperimet {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A candidate's internal image lies exactly on the window boundary.
// Genericity is violated; the caller must see this, never a silent drop.
class BoundaryHit : public Error {
public:
    BoundaryHit(std::int64_t n1, std::int64_t n2, std::int64_t n3, std::int64_t n4)
        : Error("lattice point (" + std::to_string(n1) + "," + std::to_string(n2) + ","
                + std::to_string(n3) + "," + std::to_string(n4)
                + ") has internal image on the window boundary"),
          n{n1, n2, n3, n4} {}
    std::int64_t n[4];
};

// A Minkowski sum produced the same cell twice; the pair construction needs
// a direct sum.
class OverlappingSum : public Error {
public:
    OverlappingSum(int x, int y)
        : Error("Minkowski sum is not direct: cell (" + std::to_string(x) + ","
                + std::to_string(y) + ") produced twice"),
          cell_x(x), cell_y(y) {}
    int cell_x, cell_y;
};

class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

// No anchor/reflection placement reproduces the closed-form intensity.
class NoPlacementMatches : public Error {
public:
    explicit NoPlacementMatches(double best)
        : Error("no candidate placement matches the closed-form intensity (best max "
                "relative error " + std::to_string(best) + ")"),
          best_error(best) {}
    double best_error;
};

class ReconstructionFailed : public Error {
public:
    explicit ReconstructionFailed(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& path, int line, const std::string& msg)
        : Error(path + ":" + std::to_string(line) + ": " + msg), line_number(line) {}
    int line_number;
};

class DuplicateCell : public ParseError {
public:
    DuplicateCell(const std::string& path, int line)
        : ParseError(path, line, "duplicate cell") {}
};

class EmptyWindow : public Error {
public:
    explicit EmptyWindow(const std::string& path) : Error(path + ": window has no cells") {}
};

} // namespace aperimet

#endif
