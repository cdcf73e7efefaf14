#pragma once

#include "digitop/point_set.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace digitop {

/// A lattice point of Z^n.
struct Point {
    std::vector<std::int64_t> coords;

    std::size_t dimension() const { return coords.size(); }
    friend auto operator<=>(const Point&, const Point&) = default;
    friend bool operator==(const Point&, const Point&) = default;
};

std::string to_string(const Point& p);

/// c_t rule: at most t coordinates differ by exactly one, the rest agree.
struct CtAdjacency {
    int t = 1;
    friend bool operator==(const CtAdjacency&, const CtAdjacency&) = default;
};

/// Edge list over point indices, stored as unordered pairs (i < j).
struct ExplicitAdjacency {
    std::vector<std::pair<PointIndex, PointIndex>> edges;
    friend bool operator==(const ExplicitAdjacency&, const ExplicitAdjacency&) = default;
};

using AdjacencySpec = std::variant<CtAdjacency, ExplicitAdjacency>;

/// c_t adjacency of two lattice points. Throws InvalidInput on dimension
/// mismatch or when t is outside [1, dimension].
bool ct_adjacent(const Point& p, const Point& q, int t);

/// Input to DigitalImage::make. Explicit edge indices refer to `points` in
/// the order given here, not the canonical order.
struct ImageSpec {
    std::size_t dimension = 0;
    std::vector<Point> points;
    AdjacencySpec adjacency = CtAdjacency{1};
    std::string name;
    std::vector<std::string> labels; ///< optional, one per point
};

class DigitalImage;
using ImageRef = std::shared_ptr<const DigitalImage>;

struct CanonicalImage {
    ImageRef image;
    /// permutation[input index] = canonical index
    std::vector<PointIndex> permutation;
};

/// A finite digital image: distinct points of Z^n plus a symmetric,
/// antireflexive adjacency. Points are kept in lexicographic order and every
/// other type refers to them by index into that order. Immutable.
class DigitalImage {
public:
    static CanonicalImage make(ImageSpec spec);
    static ImageRef build(ImageSpec spec) { return make(std::move(spec)).image; }

    std::size_t dimension() const { return dimension_; }
    std::size_t size() const { return points_.size(); }
    const std::string& name() const { return name_; }
    const AdjacencySpec& adjacency() const { return adjacency_; }

    const Point& point(PointIndex i) const { return points_[i]; }
    std::span<const Point> points() const { return points_; }
    /// Empty string when the image carries no labels.
    const std::string& label(PointIndex i) const;
    bool has_labels() const { return !labels_.empty(); }
    std::span<const std::string> labels() const { return labels_; }

    std::optional<PointIndex> index_of(const Point& p) const;
    std::optional<PointIndex> index_of_label(std::string_view label) const;

    bool adjacent(PointIndex a, PointIndex b) const;
    /// Equal or adjacent.
    bool weakly_adjacent(PointIndex a, PointIndex b) const { return a == b || adjacent(a, b); }

    std::span<const PointIndex> neighbors(PointIndex i) const;
    /// Closed neighborhood, ascending, including i itself.
    std::span<const PointIndex> closed_neighbors(PointIndex i) const;
    std::size_t degree(PointIndex i) const { return neighbors(i).size(); }

    /// Unordered edges (i < j), sorted.
    const std::vector<std::pair<PointIndex, PointIndex>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Same dimension, points and edge set; names and labels are ignored.
    friend bool operator==(const DigitalImage& a, const DigitalImage& b);

private:
    DigitalImage() = default;
    void index_edges();

    std::size_t dimension_ = 0;
    std::vector<Point> points_;
    AdjacencySpec adjacency_;
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<std::pair<PointIndex, PointIndex>> edges_;
    std::vector<std::uint32_t> offsets_;       // CSR into neighbors_
    std::vector<PointIndex> neighbors_;
    std::vector<std::uint32_t> closed_offsets_;
    std::vector<PointIndex> closed_neighbors_;
    std::size_t row_words_ = 0;
    std::vector<std::uint64_t> matrix_;        // empty above kMatrixLimit points
};

/// Same image object, or structurally equal images.
bool same_image(const ImageRef& a, const ImageRef& b);

/// N(x) when closed is false, N*(x) = N(x) ∪ {x} otherwise. Ascending.
std::vector<PointIndex> neighbors(const DigitalImage& image, PointIndex x, bool closed);

/// Connected components, each block ascending, blocks ordered by their
/// smallest member.
std::vector<std::vector<PointIndex>> components(const DigitalImage& image);
bool is_connected(const DigitalImage& image);
bool is_totally_disconnected(const DigitalImage& image);

/// Sorted (ascending) degree sequence.
std::vector<std::size_t> degree_sequence(const DigitalImage& image);

/// Domain points in per-component breadth-first order starting from the
/// lowest index of each component. parent[k] is the position (in the order)
/// of the BFS parent of order[k], or npos for component roots.
struct TraversalOrder {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<PointIndex> order;
    std::vector<std::size_t> parent;
    /// [begin, end) ranges of `order` per component.
    std::vector<std::pair<std::size_t, std::size_t>> component_ranges;
};
TraversalOrder bfs_order(const DigitalImage& image);

} // namespace digitop
