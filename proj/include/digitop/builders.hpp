#pragma once

#include "digitop/image.hpp"

#include <cstdint>
#include <string_view>

/// Named images used throughout the test suites and addressable from the CLI
/// as `builtin:<name>`.
namespace digitop::builders {

/// [a, b]_Z under 2-adjacency (c_1 in Z^1). Requires a < b.
ImageRef interval(std::int64_t a, std::int64_t b);

/// n-point cycle: x_i adjacent to x_{i-1} and x_{i+1} (mod n). cycle(1) is a
/// single point, cycle(2) a single edge.
ImageRef cycle(std::size_t n);

/// ([0,6] x {0,2}) ∪ {(0,1),(2,1),(4,1),(6,1)} under 4-adjacency; rigid.
ImageRef figure1();

/// {0,1}^3 under 6-adjacency.
ImageRef cube();

/// cube() without the vertex (0,0,0).
ImageRef cube_minus_vertex();

/// The 4-cycle x0=(0,0), x1=(0,1), x2=(1,1), x3=(1,0), labelled "x0".."x3".
ImageRef square4();

/// The tree y0=(0,0), y1=(1,0), y2=(2,0), y3=(1,1), labelled "y0".."y3".
ImageRef tee4();

/// m pairwise non-adjacent points.
ImageRef discrete(std::size_t m);

ImageRef singleton();

/// Parses "figure1", "cube", "cube_minus_vertex", "square4", "tee4",
/// "singleton", "cycle:<n>", "interval:<a>:<b>", "discrete:<m>". An optional
/// "builtin:" prefix is accepted. Throws InvalidInput on anything else.
ImageRef from_name(std::string_view name);

} // namespace digitop::builders
