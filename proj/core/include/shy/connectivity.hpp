#pragma once

#include "shy/image.hpp"
#include "shy/point.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace shy {

/// Index-level subset of an image: sorted, duplicate-free point indices.
using IndexSet = std::vector<std::size_t>;

/// All points of `img` adjacent to x. Throws InvalidInput if x is not in img.
PointSet neighbors(const DigitalImage& img, const Point& x);

/// Maximal connected subsets, each sorted, ordered by smallest point.
std::vector<IndexSet> component_indices(const DigitalImage& img);
std::vector<PointSet> connected_components(const DigitalImage& img);

/// The empty image and single points are connected.
bool is_connected(const DigitalImage& img);

/// Connectivity of the subset given by `members` (indices, any order).
bool is_connected_subset(const DigitalImage& img, std::span<const std::size_t> members);
bool is_connected_subset(const DigitalImage& img, const PointSet& subset);

/// True iff some a in A and b in B are equal or adjacent. A and B must lie in img.
bool sets_adjacent(const DigitalImage& img, const PointSet& a, const PointSet& b);
bool sets_adjacent_indices(const DigitalImage& img, std::span<const std::size_t> a,
                           std::span<const std::size_t> b);

/// Visits every nonempty connected subset with at most `max_size` points
/// exactly once. Subsets are grown from their smallest point, so the order is
/// deterministic. The span passed to the visitor is in insertion order, not
/// sorted. Returning false from the visitor stops the walk.
void for_each_connected_subset(const DigitalImage& img, std::size_t max_size,
                               const std::function<bool(std::span<const std::size_t>)>& visit);

std::vector<PointSet> connected_subsets(const DigitalImage& img, std::size_t max_size);

IndexSet to_indices(const DigitalImage& img, const PointSet& s);
PointSet to_points(const DigitalImage& img, std::span<const std::size_t> indices);

} // namespace shy
