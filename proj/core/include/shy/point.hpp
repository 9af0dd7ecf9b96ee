#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace shy {

/// A lattice point in Z^n. Abstract graph vertices are 1-D points.
class Point {
public:
    Point() = default;
    Point(std::initializer_list<int> coords) : coords_(coords) {}
    explicit Point(std::vector<int> coords) : coords_(std::move(coords)) {}

    [[nodiscard]] std::size_t dimension() const { return coords_.size(); }
    [[nodiscard]] int operator[](std::size_t i) const { return coords_[i]; }
    [[nodiscard]] const std::vector<int>& coords() const { return coords_; }

    /// Coordinates of *this followed by those of `right`.
    [[nodiscard]] Point concat(const Point& right) const;
    /// The `count` coordinates starting at `first`.
    [[nodiscard]] Point slice(std::size_t first, std::size_t count) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;

private:
    std::vector<int> coords_;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

using PointSet = std::set<Point>;

std::string to_string(const PointSet& s);

} // namespace shy
