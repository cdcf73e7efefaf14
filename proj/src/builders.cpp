#include "digitop/builders.hpp"
#include "digitop/errors.hpp"

#include <charconv>
#include <string>
#include <vector>

namespace digitop::builders {

namespace {

Point pt(std::initializer_list<std::int64_t> c) { return Point{std::vector<std::int64_t>(c)}; }

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos)
            return parts;
        start = pos + 1;
    }
}

std::int64_t parse_int(std::string_view s, std::string_view whole)
{
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw InvalidInput("bad integer '" + std::string(s) + "' in builtin image '" + std::string(whole) + "'");
    return v;
}

std::size_t parse_count(std::string_view s, std::string_view whole)
{
    auto v = parse_int(s, whole);
    if (v < 1)
        throw InvalidInput("builtin image '" + std::string(whole) + "' needs a positive count");
    return static_cast<std::size_t>(v);
}

} // namespace

ImageRef interval(std::int64_t a, std::int64_t b)
{
    if (a >= b)
        throw InvalidInput("interval requires a < b, got [" + std::to_string(a) + "," + std::to_string(b) + "]");
    ImageSpec spec{1, {}, CtAdjacency{1}, "interval:" + std::to_string(a) + ":" + std::to_string(b), {}};
    for (auto v = a; v <= b; ++v)
        spec.points.push_back(pt({v}));
    return DigitalImage::build(std::move(spec));
}

ImageRef cycle(std::size_t n)
{
    if (n < 1)
        throw InvalidInput("cycle requires n >= 1");
    ExplicitAdjacency adj;
    for (std::size_t i = 0; i < n; ++i) {
        auto j = (i + 1) % n;
        if (i != j)
            adj.edges.emplace_back(static_cast<PointIndex>(i), static_cast<PointIndex>(j));
    }
    ImageSpec spec{1, {}, std::move(adj), "cycle:" + std::to_string(n), {}};
    for (std::size_t i = 0; i < n; ++i) {
        spec.points.push_back(pt({static_cast<std::int64_t>(i)}));
        spec.labels.push_back("x" + std::to_string(i));
    }
    return DigitalImage::build(std::move(spec));
}

ImageRef figure1()
{
    ImageSpec spec{2, {}, CtAdjacency{1}, "figure1", {}};
    for (std::int64_t x = 0; x <= 6; ++x) {
        spec.points.push_back(pt({x, 0}));
        spec.points.push_back(pt({x, 2}));
    }
    for (std::int64_t x : {0, 2, 4, 6})
        spec.points.push_back(pt({x, 1}));
    return DigitalImage::build(std::move(spec));
}

ImageRef cube()
{
    ImageSpec spec{3, {}, CtAdjacency{1}, "cube", {}};
    for (std::int64_t a = 0; a <= 1; ++a)
        for (std::int64_t b = 0; b <= 1; ++b)
            for (std::int64_t c = 0; c <= 1; ++c)
                spec.points.push_back(pt({a, b, c}));
    return DigitalImage::build(std::move(spec));
}

ImageRef cube_minus_vertex()
{
    ImageSpec spec{3, {}, CtAdjacency{1}, "cube_minus_vertex", {}};
    for (std::int64_t a = 0; a <= 1; ++a)
        for (std::int64_t b = 0; b <= 1; ++b)
            for (std::int64_t c = 0; c <= 1; ++c)
                if (a + b + c > 0)
                    spec.points.push_back(pt({a, b, c}));
    return DigitalImage::build(std::move(spec));
}

ImageRef square4()
{
    return DigitalImage::build(ImageSpec{2,
                                         {pt({0, 0}), pt({0, 1}), pt({1, 1}), pt({1, 0})},
                                         CtAdjacency{1},
                                         "square4",
                                         {"x0", "x1", "x2", "x3"}});
}

ImageRef tee4()
{
    return DigitalImage::build(ImageSpec{2,
                                         {pt({0, 0}), pt({1, 0}), pt({2, 0}), pt({1, 1})},
                                         CtAdjacency{1},
                                         "tee4",
                                         {"y0", "y1", "y2", "y3"}});
}

ImageRef discrete(std::size_t m)
{
    if (m < 1)
        throw InvalidInput("discrete requires m >= 1");
    ImageSpec spec{1, {}, CtAdjacency{1}, "discrete:" + std::to_string(m), {}};
    for (std::size_t i = 0; i < m; ++i)
        spec.points.push_back(pt({static_cast<std::int64_t>(2 * i)}));
    return DigitalImage::build(std::move(spec));
}

ImageRef singleton()
{
    return DigitalImage::build(ImageSpec{1, {pt({0})}, CtAdjacency{1}, "singleton", {}});
}

ImageRef from_name(std::string_view name)
{
    const auto whole = name;
    if (name.starts_with("builtin:"))
        name.remove_prefix(8);
    auto parts = split(name, ':');
    const auto kind = parts[0];
    auto expect = [&](std::size_t count) {
        if (parts.size() != count)
            throw InvalidInput("builtin image '" + std::string(whole) + "' takes " + std::to_string(count - 1) +
                               " parameter(s)");
    };
    if (kind == "figure1") {
        expect(1);
        return figure1();
    }
    if (kind == "cube") {
        expect(1);
        return cube();
    }
    if (kind == "cube_minus_vertex") {
        expect(1);
        return cube_minus_vertex();
    }
    if (kind == "square4") {
        expect(1);
        return square4();
    }
    if (kind == "tee4") {
        expect(1);
        return tee4();
    }
    if (kind == "singleton") {
        expect(1);
        return singleton();
    }
    if (kind == "cycle") {
        expect(2);
        return cycle(parse_count(parts[1], whole));
    }
    if (kind == "discrete") {
        expect(2);
        return discrete(parse_count(parts[1], whole));
    }
    if (kind == "interval") {
        expect(3);
        return interval(parse_int(parts[1], whole), parse_int(parts[2], whole));
    }
    throw InvalidInput("unknown builtin image '" + std::string(whole) + "'");
}

} // namespace digitop::builders
