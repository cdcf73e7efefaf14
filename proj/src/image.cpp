#include "digitop/image.hpp"
#include "digitop/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace digitop {

namespace {

constexpr std::size_t kMatrixLimit = 8192;

bool ct_rule(const Point& p, const Point& q, int t)
{
    int differing = 0;
    for (std::size_t k = 0; k < p.coords.size(); ++k) {
        auto d = p.coords[k] - q.coords[k];
        if (d == 0)
            continue;
        if (d != 1 && d != -1)
            return false;
        if (++differing > t)
            return false;
    }
    return differing >= 1;
}

} // namespace

std::string to_string(const Point& p)
{
    std::string s = "(";
    for (std::size_t k = 0; k < p.coords.size(); ++k) {
        if (k)
            s += ",";
        s += std::to_string(p.coords[k]);
    }
    return s + ")";
}

bool ct_adjacent(const Point& p, const Point& q, int t)
{
    if (p.dimension() != q.dimension())
        throw InvalidInput("ct_adjacent: dimension mismatch (" + std::to_string(p.dimension()) + " vs " +
                           std::to_string(q.dimension()) + ")");
    if (t < 1 || static_cast<std::size_t>(t) > p.dimension())
        throw InvalidInput("ct_adjacent: t=" + std::to_string(t) + " outside [1, " +
                           std::to_string(p.dimension()) + "]");
    return ct_rule(p, q, t);
}

CanonicalImage DigitalImage::make(ImageSpec spec)
{
    if (spec.points.empty())
        throw InvalidInput("digital image must have at least one point");
    if (spec.dimension == 0)
        throw InvalidInput("digital image dimension must be positive");
    for (std::size_t i = 0; i < spec.points.size(); ++i)
        if (spec.points[i].dimension() != spec.dimension)
            throw InvalidInput("point " + std::to_string(i) + " " + to_string(spec.points[i]) +
                               " does not have dimension " + std::to_string(spec.dimension));
    if (!spec.labels.empty() && spec.labels.size() != spec.points.size())
        throw InvalidInput("labels must be given for every point or for none");
    if (spec.points.size() > 0xFFFFFFF0u)
        throw InvalidInput("too many points");

    const auto n = spec.points.size();
    std::vector<PointIndex> by_coords(n);
    std::iota(by_coords.begin(), by_coords.end(), PointIndex{0});
    std::sort(by_coords.begin(), by_coords.end(),
              [&](PointIndex a, PointIndex b) { return spec.points[a] < spec.points[b]; });
    for (std::size_t k = 1; k < n; ++k)
        if (spec.points[by_coords[k - 1]] == spec.points[by_coords[k]])
            throw InvalidInput("duplicate point " + to_string(spec.points[by_coords[k]]));

    std::vector<PointIndex> permutation(n);
    for (std::size_t k = 0; k < n; ++k)
        permutation[by_coords[k]] = static_cast<PointIndex>(k);

    std::shared_ptr<DigitalImage> image(new DigitalImage());
    image->dimension_ = spec.dimension;
    image->name_ = std::move(spec.name);
    image->points_.reserve(n);
    for (auto i : by_coords)
        image->points_.push_back(std::move(spec.points[i]));
    if (!spec.labels.empty()) {
        image->labels_.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            image->labels_[permutation[i]] = std::move(spec.labels[i]);
    }

    if (auto* ct = std::get_if<CtAdjacency>(&spec.adjacency)) {
        if (ct->t < 1 || static_cast<std::size_t>(ct->t) > spec.dimension)
            throw InvalidInput("c_t adjacency requires 1 <= t <= dimension, got t=" + std::to_string(ct->t));
        image->adjacency_ = *ct;
        const auto& pts = image->points_;
        double offsets = 1;
        for (std::size_t k = 0; k < spec.dimension && offsets <= static_cast<double>(n); ++k)
            offsets *= 3;
        if (offsets > static_cast<double>(n)) {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b)
                    if (ct_rule(pts[a], pts[b], ct->t))
                        image->edges_.emplace_back(static_cast<PointIndex>(a), static_cast<PointIndex>(b));
        }
        else {
            // Probe every lattice offset in {-1,0,1}^n with at most t non-zero entries.
            std::vector<int> offset(spec.dimension, -1);
            for (;;) {
                int nonzero = 0;
                for (auto o : offset)
                    nonzero += o != 0;
                bool forward = false;
                for (auto o : offset)
                    if (o != 0) {
                        forward = o > 0;
                        break;
                    }
                if (nonzero >= 1 && nonzero <= ct->t && forward) {
                    Point probe;
                    for (std::size_t a = 0; a < n; ++a) {
                        probe.coords = pts[a].coords;
                        for (std::size_t k = 0; k < spec.dimension; ++k)
                            probe.coords[k] += offset[k];
                        auto it = std::lower_bound(pts.begin(), pts.end(), probe);
                        if (it != pts.end() && *it == probe) {
                            auto b = static_cast<PointIndex>(it - pts.begin());
                            image->edges_.emplace_back(std::min<PointIndex>(a, b), std::max<PointIndex>(a, b));
                        }
                    }
                }
                std::size_t k = 0;
                while (k < offset.size() && offset[k] == 1)
                    offset[k++] = -1;
                if (k == offset.size())
                    break;
                ++offset[k];
            }
        }
    }
    else {
        const auto& ex = std::get<ExplicitAdjacency>(spec.adjacency);
        for (auto [a, b] : ex.edges) {
            if (a >= n || b >= n)
                throw InvalidInput("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                   ") refers to a point index out of range");
            if (a == b)
                throw InvalidInput("edge (" + std::to_string(a) + "," + std::to_string(a) +
                                   ") is reflexive; adjacency must be antireflexive");
            auto ca = permutation[a], cb = permutation[b];
            image->edges_.emplace_back(std::min(ca, cb), std::max(ca, cb));
        }
    }

    std::sort(image->edges_.begin(), image->edges_.end());
    image->edges_.erase(std::unique(image->edges_.begin(), image->edges_.end()), image->edges_.end());
    if (std::holds_alternative<ExplicitAdjacency>(spec.adjacency))
        image->adjacency_ = ExplicitAdjacency{image->edges_};
    image->index_edges();
    return {std::move(image), std::move(permutation)};
}

void DigitalImage::index_edges()
{
    const auto n = points_.size();
    std::vector<std::uint32_t> degree(n, 0);
    for (auto [a, b] : edges_) {
        ++degree[a];
        ++degree[b];
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        offsets_[i + 1] = offsets_[i] + degree[i];
    neighbors_.assign(offsets_[n], 0);
    std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto [a, b] : edges_) {
        neighbors_[fill[a]++] = b;
        neighbors_[fill[b]++] = a;
    }
    closed_offsets_.assign(n + 1, 0);
    closed_neighbors_.clear();
    closed_neighbors_.reserve(neighbors_.size() + n);
    for (std::size_t i = 0; i < n; ++i) {
        auto first = neighbors_.begin() + offsets_[i];
        auto last = neighbors_.begin() + offsets_[i + 1];
        std::sort(first, last);
        auto mid = std::lower_bound(first, last, static_cast<PointIndex>(i));
        closed_neighbors_.insert(closed_neighbors_.end(), first, mid);
        closed_neighbors_.push_back(static_cast<PointIndex>(i));
        closed_neighbors_.insert(closed_neighbors_.end(), mid, last);
        closed_offsets_[i + 1] = static_cast<std::uint32_t>(closed_neighbors_.size());
    }
    if (n <= kMatrixLimit) {
        row_words_ = word_count(n);
        matrix_.assign(n * row_words_, 0);
        for (auto [a, b] : edges_) {
            matrix_[a * row_words_ + b / 64] |= std::uint64_t{1} << (b % 64);
            matrix_[b * row_words_ + a / 64] |= std::uint64_t{1} << (a % 64);
        }
    }
}

const std::string& DigitalImage::label(PointIndex i) const
{
    static const std::string none;
    return labels_.empty() ? none : labels_[i];
}

std::optional<PointIndex> DigitalImage::index_of(const Point& p) const
{
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p)
        return std::nullopt;
    return static_cast<PointIndex>(it - points_.begin());
}

std::optional<PointIndex> DigitalImage::index_of_label(std::string_view label) const
{
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label)
            return static_cast<PointIndex>(i);
    return std::nullopt;
}

bool DigitalImage::adjacent(PointIndex a, PointIndex b) const
{
    if (!matrix_.empty())
        return (matrix_[a * row_words_ + b / 64] >> (b % 64)) & 1U;
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::span<const PointIndex> DigitalImage::neighbors(PointIndex i) const
{
    return std::span<const PointIndex>(neighbors_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
}

std::span<const PointIndex> DigitalImage::closed_neighbors(PointIndex i) const
{
    return std::span<const PointIndex>(closed_neighbors_)
        .subspan(closed_offsets_[i], closed_offsets_[i + 1] - closed_offsets_[i]);
}

bool operator==(const DigitalImage& a, const DigitalImage& b)
{
    return a.dimension_ == b.dimension_ && a.points_ == b.points_ && a.edges_ == b.edges_;
}

bool same_image(const ImageRef& a, const ImageRef& b)
{
    return a == b || (a && b && *a == *b);
}

std::vector<PointIndex> neighbors(const DigitalImage& image, PointIndex x, bool closed)
{
    if (x >= image.size())
        throw InvalidInput("point index " + std::to_string(x) + " out of range (image has " +
                           std::to_string(image.size()) + " points)");
    auto nb = closed ? image.closed_neighbors(x) : image.neighbors(x);
    return {nb.begin(), nb.end()};
}

TraversalOrder bfs_order(const DigitalImage& image)
{
    const auto n = image.size();
    TraversalOrder t;
    t.order.reserve(n);
    t.parent.reserve(n);
    std::vector<std::size_t> position(n, TraversalOrder::npos);
    for (PointIndex root = 0; root < n; ++root) {
        if (position[root] != TraversalOrder::npos)
            continue;
        auto begin = t.order.size();
        position[root] = begin;
        t.order.push_back(root);
        t.parent.push_back(TraversalOrder::npos);
        for (auto head = begin; head < t.order.size(); ++head) {
            auto x = t.order[head];
            for (auto y : image.neighbors(x))
                if (position[y] == TraversalOrder::npos) {
                    position[y] = t.order.size();
                    t.order.push_back(y);
                    t.parent.push_back(head);
                }
        }
        t.component_ranges.emplace_back(begin, t.order.size());
    }
    return t;
}

std::vector<std::vector<PointIndex>> components(const DigitalImage& image)
{
    if (image.size() == 0)
        throw InvalidInput("components: empty image");
    auto t = bfs_order(image);
    std::vector<std::vector<PointIndex>> blocks;
    for (auto [b, e] : t.component_ranges) {
        std::vector<PointIndex> block(t.order.begin() + static_cast<std::ptrdiff_t>(b),
                                      t.order.begin() + static_cast<std::ptrdiff_t>(e));
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return blocks;
}

bool is_connected(const DigitalImage& image)
{
    return components(image).size() == 1;
}

bool is_totally_disconnected(const DigitalImage& image)
{
    return image.size() > 0 && image.edge_count() == 0;
}

std::vector<std::size_t> degree_sequence(const DigitalImage& image)
{
    std::vector<std::size_t> d(image.size());
    for (PointIndex i = 0; i < image.size(); ++i)
        d[i] = image.degree(i);
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace digitop
