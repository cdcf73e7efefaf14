#include "digitop/io.hpp"
#include "digitop/builders.hpp"
#include "digitop/errors.hpp"

#include <fstream>
#include <sstream>

namespace digitop::io {

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& what) { throw ParseError(source, 0, what); }

const Json& field(const Json& doc, const char* key, const std::string& source, const char* where)
{
    if (!doc.is_object())
        fail(source, std::string(where) + " must be a JSON object");
    auto it = doc.find(key);
    if (it == doc.end())
        fail(source, std::string(where) + " is missing \"" + key + "\"");
    return *it;
}

std::int64_t integer(const Json& v, const std::string& source, const std::string& what)
{
    if (!v.is_number_integer())
        fail(source, what + " must be an integer");
    return v.get<std::int64_t>();
}

std::size_t index_in(const Json& v, std::size_t bound, const std::string& source, const std::string& what)
{
    auto i = integer(v, source, what);
    if (i < 0 || static_cast<std::size_t>(i) >= bound)
        fail(source, what + " = " + std::to_string(i) + " is out of range [0, " + std::to_string(bound) + ")");
    return static_cast<std::size_t>(i);
}

std::vector<PointIndex> inverse(const std::vector<PointIndex>& perm)
{
    std::vector<PointIndex> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        inv[perm[i]] = static_cast<PointIndex>(i);
    return inv;
}

} // namespace

Json parse_json(const std::string& text, const std::string& source)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1;
        auto end = std::min<std::size_t>(e.byte, text.size());
        for (std::size_t k = 0; k + 1 < end; ++k)
            line += text[k] == '\n';
        std::string what = e.what();
        auto colon = what.rfind(": ");
        throw ParseError(source, line, "invalid JSON: " + (colon == std::string::npos ? what : what.substr(colon + 2)));
    }
}

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path.string(), 0, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), path.string());
}

LoadedImage image_from_json(const Json& doc, const std::string& source)
{
    ImageSpec spec;
    auto dim = integer(field(doc, "dimension", source, "image"), source, "dimension");
    if (dim < 1)
        fail(source, "dimension must be positive");
    spec.dimension = static_cast<std::size_t>(dim);
    if (auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string())
            fail(source, "name must be a string");
        spec.name = it->get<std::string>();
    }
    const auto& points = field(doc, "points", source, "image");
    if (!points.is_array())
        fail(source, "points must be an array");
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        auto where = "points[" + std::to_string(i) + "]";
        if (!p.is_array())
            fail(source, where + " must be an array of integers");
        Point pt;
        for (std::size_t k = 0; k < p.size(); ++k)
            pt.coords.push_back(integer(p[k], source, where + "[" + std::to_string(k) + "]"));
        spec.points.push_back(std::move(pt));
    }
    const auto& adj = field(doc, "adjacency", source, "image");
    auto type = field(adj, "type", source, "adjacency");
    if (type == "ct") {
        auto t = integer(field(adj, "t", source, "adjacency"), source, "adjacency.t");
        spec.adjacency = CtAdjacency{static_cast<int>(std::clamp<std::int64_t>(t, -1, 1 << 20))};
    } else if (type == "explicit") {
        const auto& edges = field(adj, "edges", source, "adjacency");
        if (!edges.is_array())
            fail(source, "adjacency.edges must be an array");
        ExplicitAdjacency e;
        for (std::size_t k = 0; k < edges.size(); ++k) {
            auto where = "adjacency.edges[" + std::to_string(k) + "]";
            if (!edges[k].is_array() || edges[k].size() != 2)
                fail(source, where + " must be a pair of point indices");
            e.edges.emplace_back(static_cast<PointIndex>(index_in(edges[k][0], points.size(), source, where + "[0]")),
                                 static_cast<PointIndex>(index_in(edges[k][1], points.size(), source, where + "[1]")));
        }
        spec.adjacency = std::move(e);
    } else {
        fail(source, "adjacency.type must be \"ct\" or \"explicit\"");
    }
    if (auto it = doc.find("labels"); it != doc.end()) {
        if (!it->is_array())
            fail(source, "labels must be an array of strings");
        for (const auto& l : *it) {
            if (!l.is_string())
                fail(source, "labels must be an array of strings");
            spec.labels.push_back(l.get<std::string>());
        }
    }
    try {
        auto c = DigitalImage::make(std::move(spec));
        return {std::move(c.image), std::move(c.permutation), source};
    } catch (const ParseError&) {
        throw;
    } catch (const InvalidInput& e) {
        fail(source, e.what());
    }
}

Json image_to_json(const DigitalImage& image)
{
    Json doc;
    if (!image.name().empty())
        doc["name"] = image.name();
    doc["dimension"] = image.dimension();
    Json points = Json::array();
    for (const auto& p : image.points())
        points.push_back(p.coords);
    doc["points"] = std::move(points);
    if (auto ct = std::get_if<CtAdjacency>(&image.adjacency())) {
        doc["adjacency"] = {{"type", "ct"}, {"t", ct->t}};
    } else {
        Json edges = Json::array();
        for (auto [a, b] : image.edges())
            edges.push_back({a, b});
        doc["adjacency"] = {{"type", "explicit"}, {"edges", std::move(edges)}};
    }
    if (image.has_labels())
        doc["labels"] = std::vector<std::string>(image.labels().begin(), image.labels().end());
    return doc;
}

LoadedImage resolve_image(const std::string& ref, const std::filesystem::path& base)
{
    auto identity = [](const ImageRef& img) {
        std::vector<PointIndex> p(img->size());
        for (std::size_t i = 0; i < p.size(); ++i)
            p[i] = static_cast<PointIndex>(i);
        return p;
    };
    if (ref.rfind("builtin:", 0) == 0) {
        auto img = builders::from_name(ref);
        return {img, identity(img), ref};
    }
    auto path = std::filesystem::path(ref);
    if (path.is_relative() && !base.empty())
        path = base / path;
    if (std::filesystem::is_regular_file(path))
        return image_from_json(read_json_file(path), path.string());
    try {
        auto img = builders::from_name(ref);
        return {img, identity(img), ref};
    } catch (const InvalidInput&) {
        throw InvalidInput("'" + ref + "' is neither a builtin image nor a readable file");
    }
}

LoadedImage image_from_ref(const Json& ref, const std::string& source, const std::filesystem::path& base)
{
    if (ref.is_string())
        return resolve_image(ref.get<std::string>(), base);
    if (ref.is_object())
        return image_from_json(ref, source);
    fail(source, "image reference must be a string or an inline image object");
}

DigitalMap map_from_document_assignment(const LoadedImage& domain, const LoadedImage& codomain,
                                        const std::vector<std::int64_t>& assignment, const std::string& source)
{
    const auto n = domain.image->size();
    if (assignment.size() != n)
        fail(source, "assignment has " + std::to_string(assignment.size()) + " entries, domain has " +
                         std::to_string(n) + " points");
    std::vector<PointIndex> canon(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto v = assignment[i];
        if (v < 0 || static_cast<std::size_t>(v) >= codomain.image->size())
            fail(source, "assignment[" + std::to_string(i) + "] = " + std::to_string(v) +
                             " is not a codomain point");
        canon[domain.permutation[i]] = codomain.permutation[static_cast<std::size_t>(v)];
    }
    if (auto bad = first_discontinuity(*domain.image, *codomain.image, canon)) {
        auto din = inverse(domain.permutation);
        auto cin = inverse(codomain.permutation);
        auto [u, v] = *bad;
        auto du = din[u], dv = din[v];
        if (du > dv)
            std::swap(du, dv);
        throw ContinuityError(du, dv, static_cast<std::uint32_t>(assignment[du]),
                              static_cast<std::uint32_t>(assignment[dv]), source + ": ");
    }
    return DigitalMap::trusted(domain.image, codomain.image, std::move(canon));
}

LoadedMap map_from_json(const Json& doc, const std::string& source, const std::filesystem::path& base)
{
    auto domain = image_from_ref(field(doc, "domain", source, "map"), source, base);
    auto codomain = image_from_ref(field(doc, "codomain", source, "map"), source, base);
    if (*domain.image == *codomain.image)
        codomain.image = domain.image;
    const auto& a = field(doc, "assignment", source, "map");
    if (!a.is_array())
        fail(source, "assignment must be an array of point indices");
    std::vector<std::int64_t> values;
    for (std::size_t k = 0; k < a.size(); ++k)
        values.push_back(integer(a[k], source, "assignment[" + std::to_string(k) + "]"));
    auto f = map_from_document_assignment(domain, codomain, values, source);
    return {std::move(f), std::move(domain), std::move(codomain)};
}

LoadedMap load_map_file(const std::filesystem::path& path)
{
    return map_from_json(read_json_file(path), path.string(), path.parent_path());
}

Json map_to_json(const DigitalMap& f)
{
    Json doc;
    doc["domain"] = image_to_json(*f.domain());
    doc["codomain"] = image_to_json(*f.codomain());
    doc["assignment"] = std::vector<PointIndex>(f.assignment().begin(), f.assignment().end());
    return doc;
}

void write_text_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InvalidInput("cannot write " + path.string());
    out << text;
    if (!text.empty() && text.back() != '\n')
        out << '\n';
}

} // namespace digitop::io
