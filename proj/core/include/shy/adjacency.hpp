#pragma once

#include "shy/point.hpp"

#include <memory>
#include <set>
#include <utility>
#include <variant>
#include <vector>

namespace shy {

/// True iff x != y, every coordinate differs by at most 1, and at most u
/// coordinates differ. Throws InvalidInput on dimension mismatch or when u is
/// outside [1, n].
bool cu_adjacent(const Point& x, const Point& y, int u);

/// A symmetric irreflexive relation on lattice points.
///
/// Three kinds are supported: the c_u adjacencies, an explicit edge set (used
/// for abstract graphs such as trees and cycles), and the normal (strong)
/// product of two adjacencies acting on split coordinates.
class Adjacency {
public:
    struct Cu {
        int u = 1;
        friend bool operator==(const Cu&, const Cu&) = default;
    };

    struct Explicit {
        // Normalized so that first < second.
        std::set<std::pair<Point, Point>> edges;
        std::size_t dimension = 0; // 0 when there are no edges
        friend bool operator==(const Explicit&, const Explicit&) = default;
    };

    struct NormalProduct {
        std::shared_ptr<const Adjacency> left;
        std::size_t left_dim = 0;
        std::shared_ptr<const Adjacency> right;
        std::size_t right_dim = 0;
    };

    enum class Kind { cu, explicit_edges, normal_product };

    static Adjacency cu(int u);
    static Adjacency explicit_edges(const std::vector<std::pair<Point, Point>>& edges);
    static Adjacency normal_product(Adjacency left, std::size_t left_dim,
                                    Adjacency right, std::size_t right_dim);

    [[nodiscard]] Kind kind() const { return static_cast<Kind>(rep_.index()); }
    [[nodiscard]] const Cu& as_cu() const { return std::get<Cu>(rep_); }
    [[nodiscard]] const Explicit& as_explicit() const { return std::get<Explicit>(rep_); }
    [[nodiscard]] const NormalProduct& as_product() const { return std::get<NormalProduct>(rep_); }

    [[nodiscard]] bool adjacent(const Point& x, const Point& y) const;

    /// Throws InvalidInput unless this adjacency is well formed on Z^n.
    void validate_for_dimension(std::size_t n) const;

    friend bool operator==(const Adjacency& a, const Adjacency& b);

private:
    using Rep = std::variant<Cu, Explicit, NormalProduct>;
    explicit Adjacency(Rep rep) : rep_(std::move(rep)) {}

    Rep rep_;
};

/// Free-function spelling of Adjacency::adjacent.
inline bool adjacent(const Adjacency& a, const Point& x, const Point& y)
{
    return a.adjacent(x, y);
}

} // namespace shy
