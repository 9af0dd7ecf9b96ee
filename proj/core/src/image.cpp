#include "shy/image.hpp"

#include "shy/error.hpp"

#include <algorithm>
#include <string>

namespace shy {

namespace {

std::size_t infer_dimension(const std::vector<Point>& points)
{
    if (points.empty())
        throw InvalidInput("cannot infer the dimension of an empty image");
    return points.front().dimension();
}

} // namespace

DigitalImage::DigitalImage(std::vector<Point> points, Adjacency adjacency)
    : dimension_(infer_dimension(points)), points_(std::move(points)),
      adjacency_(std::move(adjacency))
{
    init();
}

DigitalImage::DigitalImage(std::size_t dimension, std::vector<Point> points, Adjacency adjacency)
    : dimension_(dimension), points_(std::move(points)), adjacency_(std::move(adjacency))
{
    init();
}

void DigitalImage::init()
{
    if (dimension_ == 0)
        throw InvalidInput("image dimension must be at least 1");
    for (const auto& p : points_)
        if (p.dimension() != dimension_)
            throw InvalidInput("point " + p.to_string() + " is not in Z^" +
                               std::to_string(dimension_));
    std::sort(points_.begin(), points_.end());
    if (auto dup = std::adjacent_find(points_.begin(), points_.end()); dup != points_.end())
        throw InvalidInput("duplicate point " + dup->to_string());

    adjacency_.validate_for_dimension(dimension_);

    for (std::size_t i = 0; i < points_.size(); ++i)
        index_.emplace(points_[i], i);

    if (adjacency_.kind() == Adjacency::Kind::explicit_edges)
        for (const auto& [a, b] : adjacency_.as_explicit().edges)
            if (!contains(a) || !contains(b))
                throw InvalidInput("edge " + a.to_string() + "-" + b.to_string() +
                                   " has an endpoint outside the image");

    build_neighbors();
}

void DigitalImage::build_neighbors()
{
    const std::size_t n = points_.size();
    neighbors_.assign(n, {});

    switch (adjacency_.kind()) {
    case Adjacency::Kind::explicit_edges:
        for (const auto& [a, b] : adjacency_.as_explicit().edges) {
            const auto i = index_.at(a);
            const auto j = index_.at(b);
            neighbors_[i].push_back(j);
            neighbors_[j].push_back(i);
        }
        break;
    case Adjacency::Kind::cu: {
        // Probe the 3^n - 1 unit offsets when that is cheaper than all pairs.
        std::size_t offsets = 1;
        for (std::size_t d = 0; d < dimension_ && offsets <= n; ++d)
            offsets *= 3;
        if (offsets <= n) {
            const int u = adjacency_.as_cu().u;
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<int> delta(dimension_, -1);
                while (true) {
                    int changed = 0;
                    for (int d : delta)
                        changed += d != 0;
                    if (changed >= 1 && changed <= u) {
                        std::vector<int> c = points_[i].coords();
                        for (std::size_t d = 0; d < dimension_; ++d)
                            c[d] += delta[d];
                        if (auto it = index_.find(Point(std::move(c))); it != index_.end())
                            neighbors_[i].push_back(it->second);
                    }
                    std::size_t d = 0;
                    while (d < dimension_ && delta[d] == 1)
                        delta[d++] = -1;
                    if (d == dimension_)
                        break;
                    ++delta[d];
                }
            }
            break;
        }
        [[fallthrough]];
    }
    case Adjacency::Kind::normal_product:
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (adjacency_.adjacent(points_[i], points_[j])) {
                    neighbors_[i].push_back(j);
                    neighbors_[j].push_back(i);
                }
        break;
    }

    edge_count_ = 0;
    for (auto& nb : neighbors_) {
        std::sort(nb.begin(), nb.end());
        edge_count_ += nb.size();
    }
    edge_count_ /= 2;
}

std::optional<std::size_t> DigitalImage::index_of(const Point& p) const
{
    if (auto it = index_.find(p); it != index_.end())
        return it->second;
    return std::nullopt;
}

std::size_t DigitalImage::require_index(const Point& p) const
{
    if (auto it = index_.find(p); it != index_.end())
        return it->second;
    throw InvalidInput("point " + p.to_string() + " is not in the image");
}

bool DigitalImage::adjacent_at(std::size_t i, std::size_t j) const
{
    const auto& nb = neighbors_[i];
    return std::binary_search(nb.begin(), nb.end(), j);
}

DigitalImage DigitalImage::subimage(const PointSet& subset) const
{
    for (const auto& p : subset)
        if (!contains(p))
            throw InvalidInput("subimage point " + p.to_string() + " is not in the image");
    std::vector<Point> pts(subset.begin(), subset.end());
    if (adjacency_.kind() != Adjacency::Kind::explicit_edges)
        return DigitalImage(dimension_, std::move(pts), adjacency_);
    std::vector<std::pair<Point, Point>> kept;
    for (const auto& e : adjacency_.as_explicit().edges)
        if (subset.contains(e.first) && subset.contains(e.second))
            kept.push_back(e);
    return DigitalImage(dimension_, std::move(pts), Adjacency::explicit_edges(kept));
}

bool operator==(const DigitalImage& a, const DigitalImage& b)
{
    return a.dimension_ == b.dimension_ && a.points_ == b.points_ && a.adjacency_ == b.adjacency_;
}

} // namespace shy
