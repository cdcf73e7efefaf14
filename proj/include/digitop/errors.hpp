#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace digitop {

/// Raised for malformed arguments: index out of range, dimension mismatch,
/// mismatched images, bad builder parameters, unparsable files.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A candidate assignment sends some domain edge to two codomain points
/// that are neither equal nor adjacent.
class ContinuityError : public InvalidInput {
public:
    ContinuityError(std::uint32_t u, std::uint32_t v, std::uint32_t fu, std::uint32_t fv,
                    const std::string& context = {})
        : InvalidInput(context + "assignment is not continuous: edge (" + std::to_string(u) + "," +
                       std::to_string(v) + ") maps to non-adjacent points (" +
                       std::to_string(fu) + "," + std::to_string(fv) + ")"),
          edge_u(u), edge_v(v), image_u(fu), image_v(fv)
    {
    }

    std::uint32_t edge_u, edge_v;
    std::uint32_t image_u, image_v;
};

/// Malformed input file. line is 0 when the problem is not tied to a line.
class ParseError : public InvalidInput {
public:
    ParseError(std::string source, std::size_t line, const std::string& what)
        : InvalidInput(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
          source(std::move(source)), line(line)
    {
    }

    std::string source;
    std::size_t line;
};

} // namespace digitop
