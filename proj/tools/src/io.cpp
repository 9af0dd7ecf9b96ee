#include "shy/cli/io.hpp"

#include <fstream>
#include <sstream>

namespace shy::cli {

namespace {

json parse_document(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
}

const json& field(const json& obj, const char* name, const std::string& where)
{
    if (!obj.is_object())
        throw SchemaError(where + ": expected an object");
    auto it = obj.find(name);
    if (it == obj.end())
        throw SchemaError(where + ": missing field \"" + name + "\"");
    return *it;
}

std::size_t positive_size(const json& j, const std::string& where)
{
    if (!j.is_number_integer() || j.get<long long>() < 1)
        throw SchemaError(where + ": expected a positive integer");
    return static_cast<std::size_t>(j.get<long long>());
}

Adjacency adjacency_from_json(const json& j, std::size_t dimension, const std::string& where)
{
    const auto& kind = field(j, "kind", where);
    if (!kind.is_string())
        throw SchemaError(where + ".kind: expected a string");
    const auto k = kind.get<std::string>();
    try {
        if (k == "cu") {
            const auto& u = field(j, "u", where);
            if (!u.is_number_integer())
                throw SchemaError(where + ".u: expected an integer");
            auto adj = Adjacency::cu(u.get<int>());
            adj.validate_for_dimension(dimension);
            return adj;
        }
        if (k == "explicit") {
            const auto& edges = field(j, "edges", where);
            if (!edges.is_array())
                throw SchemaError(where + ".edges: expected an array");
            std::vector<std::pair<Point, Point>> out;
            for (std::size_t i = 0; i < edges.size(); ++i) {
                const auto at = where + ".edges[" + std::to_string(i) + "]";
                if (!edges[i].is_array() || edges[i].size() != 2)
                    throw SchemaError(at + ": expected a pair of points");
                out.emplace_back(point_from_json(edges[i][0], dimension, at + "[0]"),
                                 point_from_json(edges[i][1], dimension, at + "[1]"));
            }
            return Adjacency::explicit_edges(out);
        }
        if (k == "normal_product") {
            const auto ld = positive_size(field(j, "left_dim", where), where + ".left_dim");
            const auto rd = positive_size(field(j, "right_dim", where), where + ".right_dim");
            if (ld + rd != dimension)
                throw SchemaError(where + ": left_dim + right_dim = " + std::to_string(ld + rd) +
                                  " but the ambient dimension is " + std::to_string(dimension));
            return Adjacency::normal_product(
                adjacency_from_json(field(j, "left", where), ld, where + ".left"), ld,
                adjacency_from_json(field(j, "right", where), rd, where + ".right"), rd);
        }
    } catch (const SchemaError&) {
        throw;
    } catch (const InvalidInput& e) {
        throw SchemaError(where + ": " + e.what());
    }
    throw SchemaError(where + ".kind: unknown adjacency kind \"" + k + "\"");
}

} // namespace

json point_to_json(const Point& p)
{
    return json(p.coords());
}

Point point_from_json(const json& j, std::size_t dimension, const std::string& where)
{
    if (!j.is_array())
        throw SchemaError(where + ": expected an array of integers");
    std::vector<int> coords;
    for (const auto& c : j) {
        if (!c.is_number_integer())
            throw SchemaError(where + ": coordinates must be integers");
        coords.push_back(c.get<int>());
    }
    if (coords.size() != dimension)
        throw SchemaError(where + ": expected " + std::to_string(dimension) +
                          " coordinates, got " + std::to_string(coords.size()));
    return Point(std::move(coords));
}

json adjacency_to_json(const Adjacency& a)
{
    switch (a.kind()) {
    case Adjacency::Kind::cu:
        return {{"kind", "cu"}, {"u", a.as_cu().u}};
    case Adjacency::Kind::explicit_edges: {
        json edges = json::array();
        for (const auto& [x, y] : a.as_explicit().edges)
            edges.push_back(json::array({point_to_json(x), point_to_json(y)}));
        return {{"kind", "explicit"}, {"edges", edges}};
    }
    case Adjacency::Kind::normal_product: {
        const auto& p = a.as_product();
        return {{"kind", "normal_product"},
                {"left", adjacency_to_json(*p.left)},
                {"left_dim", p.left_dim},
                {"right", adjacency_to_json(*p.right)},
                {"right_dim", p.right_dim}};
    }
    }
    return {};
}

json image_to_json(const DigitalImage& img)
{
    json pts = json::array();
    for (const auto& p : img.points())
        pts.push_back(point_to_json(p));
    return {{"dimension", img.dimension()},
            {"adjacency", adjacency_to_json(img.adjacency())},
            {"points", pts}};
}

DigitalImage image_from_json(const json& doc)
{
    const auto dimension = positive_size(field(doc, "dimension", "image"), "image.dimension");
    auto adjacency = adjacency_from_json(field(doc, "adjacency", "image"), dimension,
                                         "image.adjacency");
    const auto& pts = field(doc, "points", "image");
    if (!pts.is_array())
        throw SchemaError("image.points: expected an array");
    std::vector<Point> points;
    for (std::size_t i = 0; i < pts.size(); ++i)
        points.push_back(point_from_json(pts[i], dimension, "image.points[" + std::to_string(i) + "]"));
    try {
        return DigitalImage(dimension, std::move(points), std::move(adjacency));
    } catch (const InvalidInput& e) {
        throw SchemaError(std::string("image: ") + e.what());
    }
}

DigitalImage parse_image(std::string_view text)
{
    return image_from_json(parse_document(text));
}

json map_to_json(const DigitalFunction& f)
{
    json pairs = json::array();
    for (const auto& [x, y] : f.pairs())
        pairs.push_back(json::array({point_to_json(x), point_to_json(y)}));
    return {{"pairs", pairs}};
}

DigitalFunction map_from_json(const json& doc, ImagePtr domain, ImagePtr codomain)
{
    const auto& pairs = field(doc, "pairs", "map");
    if (!pairs.is_array())
        throw SchemaError("map.pairs: expected an array");
    std::vector<std::pair<Point, Point>> out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto at = "map.pairs[" + std::to_string(i) + "]";
        if (!pairs[i].is_array() || pairs[i].size() != 2)
            throw SchemaError(at + ": expected [point, point]");
        out.emplace_back(point_from_json(pairs[i][0], domain->dimension(), at + "[0]"),
                         point_from_json(pairs[i][1], codomain->dimension(), at + "[1]"));
    }
    try {
        return DigitalFunction::from_pairs(std::move(domain), std::move(codomain), out);
    } catch (const InvalidInput& e) {
        throw SchemaError(std::string("map: ") + e.what());
    }
}

DigitalFunction parse_map(std::string_view text, ImagePtr domain, ImagePtr codomain)
{
    return map_from_json(parse_document(text), std::move(domain), std::move(codomain));
}

json classification_to_json(const MapClassification& c)
{
    return {{"continuous", c.continuous},
            {"surjective", c.surjective},
            {"injective", c.injective},
            {"shy", c.shy},
            {"isomorphism", c.isomorphism}};
}

json report_to_json(const VerificationReport& r)
{
    json ces = json::array();
    for (const auto& c : r.counterexamples) {
        json maps = json::array();
        for (const auto& m : c.maps) {
            json pairs = json::array();
            for (const auto& [x, y] : m)
                pairs.push_back(json::array({point_to_json(x), point_to_json(y)}));
            maps.push_back(pairs);
        }
        json witness = json::array();
        for (const auto& p : c.witness)
            witness.push_back(point_to_json(p));
        ces.push_back({{"description", c.description}, {"maps", maps}, {"witness", witness}});
    }
    return {{"theorem_id", r.theorem_id},
            {"instances_checked", r.instances_checked},
            {"passed", r.passed},
            {"counterexamples", ces},
            {"wall_time", std::chrono::duration<double>(r.wall_time).count()}};
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvalidInput("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace shy::cli
