#pragma once

// JSON documents for images and maps.
//
// Image: {"name": str?, "dimension": n, "points": [[ints]...],
//         "adjacency": {"type": "ct", "t": k} | {"type": "explicit", "edges": [[i, j]...]},
//         "labels": [str...]?}
// Map:   {"domain": ref | image, "codomain": ref | image, "assignment": [indices]}
//
// Indices in a document refer to the order written there. Loading
// re-canonicalizes and reports the permutation; saving writes canonical order,
// so a saved document loads with the identity permutation.

#include "digitop/image.hpp"
#include "digitop/map.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace digitop::io {

using Json = nlohmann::json;

struct LoadedImage {
    ImageRef image;
    /// permutation[document index] = canonical index
    std::vector<PointIndex> permutation;
    std::string source;
};

struct LoadedMap {
    DigitalMap map;
    LoadedImage domain, codomain;
};

/// Parses text, reporting syntax errors with line numbers.
Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::filesystem::path& path);

LoadedImage image_from_json(const Json& doc, const std::string& source);
Json image_to_json(const DigitalImage& image);

/// "builtin:<name>", a path to an image document, or a bare builtin name.
LoadedImage resolve_image(const std::string& ref, const std::filesystem::path& base = {});

/// Image reference inside a map document: a string ref or an inline image.
LoadedImage image_from_ref(const Json& ref, const std::string& source, const std::filesystem::path& base);

/// Throws ContinuityError naming the first bad edge in document indices.
LoadedMap map_from_json(const Json& doc, const std::string& source, const std::filesystem::path& base = {});
LoadedMap load_map_file(const std::filesystem::path& path);
Json map_to_json(const DigitalMap& f);

/// Assignment given in document order for a loaded domain and codomain.
DigitalMap map_from_document_assignment(const LoadedImage& domain, const LoadedImage& codomain,
                                        const std::vector<std::int64_t>& assignment, const std::string& source);

void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace digitop::io
