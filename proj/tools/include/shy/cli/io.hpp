#pragma once

#include "shy/error.hpp"
#include "shy/image.hpp"
#include "shy/maps.hpp"
#include "shy/verification.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace shy::cli {

using json = nlohmann::json;

/// A document that does not follow the image or map schema. The message
/// names the offending field, or the line/column for JSON syntax errors.
class SchemaError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

json point_to_json(const Point& p);
json adjacency_to_json(const Adjacency& a);
json image_to_json(const DigitalImage& img);
json map_to_json(const DigitalFunction& f);
json report_to_json(const VerificationReport& r);
json classification_to_json(const MapClassification& c);

/// {"dimension": n, "adjacency": {...}, "points": [[...], ...]}
DigitalImage parse_image(std::string_view text);
DigitalImage image_from_json(const json& doc);

/// {"pairs": [[x, f(x)], ...]} over the given images.
DigitalFunction parse_map(std::string_view text, ImagePtr domain, ImagePtr codomain);
DigitalFunction map_from_json(const json& doc, ImagePtr domain, ImagePtr codomain);

Point point_from_json(const json& j, std::size_t dimension, const std::string& where);

std::string read_file(const std::filesystem::path& path);

} // namespace shy::cli
