#pragma once

#include "shy/adjacency.hpp"
#include "shy/point.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace shy {

/// A finite point set in Z^n together with an adjacency relation.
///
/// Points are kept in lexicographic order; that order is the canonical point
/// order used by every enumeration and report in the library, and the index of
/// a point in it is how the graph-level algorithms refer to it. The
/// neighbor structure is computed once on construction and the object is
/// immutable afterwards.
class DigitalImage {
public:
    /// Dimension inferred from the points; throws InvalidInput if empty.
    DigitalImage(std::vector<Point> points, Adjacency adjacency);
    DigitalImage(std::size_t dimension, std::vector<Point> points, Adjacency adjacency);

    [[nodiscard]] std::size_t dimension() const { return dimension_; }
    [[nodiscard]] std::size_t size() const { return points_.size(); }
    [[nodiscard]] bool empty() const { return points_.empty(); }
    [[nodiscard]] const std::vector<Point>& points() const { return points_; }
    [[nodiscard]] const Point& point(std::size_t i) const { return points_[i]; }
    [[nodiscard]] const Adjacency& adjacency() const { return adjacency_; }

    [[nodiscard]] bool contains(const Point& p) const { return index_.contains(p); }
    [[nodiscard]] std::optional<std::size_t> index_of(const Point& p) const;
    /// Throws InvalidInput if p is not a member.
    [[nodiscard]] std::size_t require_index(const Point& p) const;

    /// Sorted indices of the points adjacent to point i.
    [[nodiscard]] std::span<const std::size_t> neighbor_indices(std::size_t i) const
    {
        return neighbors_[i];
    }
    [[nodiscard]] bool adjacent_at(std::size_t i, std::size_t j) const;
    [[nodiscard]] std::size_t edge_count() const { return edge_count_; }

    /// The image restricted to `subset` (which must lie in this image).
    [[nodiscard]] DigitalImage subimage(const PointSet& subset) const;

    /// Same points and structurally equal adjacency.
    friend bool operator==(const DigitalImage& a, const DigitalImage& b);

private:
    void init();
    void build_neighbors();

    std::size_t dimension_;
    std::vector<Point> points_;
    Adjacency adjacency_;
    std::map<Point, std::size_t> index_;
    std::vector<std::vector<std::size_t>> neighbors_;
    std::size_t edge_count_ = 0;
};

using ImagePtr = std::shared_ptr<const DigitalImage>;

inline ImagePtr share(DigitalImage img)
{
    return std::make_shared<const DigitalImage>(std::move(img));
}

} // namespace shy
