#include "shy/adjacency.hpp"

#include "shy/error.hpp"

#include <cstdlib>
#include <string>

namespace shy {

namespace {

void require_same_dimension(const Point& x, const Point& y)
{
    if (x.dimension() != y.dimension())
        throw InvalidInput("dimension mismatch: " + x.to_string() + " vs " + y.to_string());
}

} // namespace

bool cu_adjacent(const Point& x, const Point& y, int u)
{
    require_same_dimension(x, y);
    const auto n = x.dimension();
    if (u < 1 || static_cast<std::size_t>(u) > n)
        throw InvalidInput("c_u adjacency requires 1 <= u <= " + std::to_string(n) +
                           ", got u=" + std::to_string(u));
    int differing = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const int d = std::abs(x[i] - y[i]);
        if (d > 1)
            return false;
        differing += d;
    }
    return differing >= 1 && differing <= u;
}

Adjacency Adjacency::cu(int u)
{
    if (u < 1)
        throw InvalidInput("c_u adjacency requires u >= 1, got " + std::to_string(u));
    return Adjacency(Cu{u});
}

Adjacency Adjacency::explicit_edges(const std::vector<std::pair<Point, Point>>& edges)
{
    Explicit e;
    for (const auto& [a, b] : edges) {
        require_same_dimension(a, b);
        if (a == b)
            throw InvalidInput("explicit adjacency edge joins " + a.to_string() + " to itself");
        if (e.dimension == 0)
            e.dimension = a.dimension();
        else if (e.dimension != a.dimension())
            throw InvalidInput("explicit adjacency mixes dimensions at edge " + a.to_string() +
                               "-" + b.to_string());
        if (a < b)
            e.edges.emplace(a, b);
        else
            e.edges.emplace(b, a);
    }
    return Adjacency(std::move(e));
}

Adjacency Adjacency::normal_product(Adjacency left, std::size_t left_dim,
                                    Adjacency right, std::size_t right_dim)
{
    if (left_dim == 0 || right_dim == 0)
        throw InvalidInput("normal product factors need positive dimension");
    left.validate_for_dimension(left_dim);
    right.validate_for_dimension(right_dim);
    return Adjacency(NormalProduct{std::make_shared<const Adjacency>(std::move(left)), left_dim,
                                   std::make_shared<const Adjacency>(std::move(right)), right_dim});
}

bool Adjacency::adjacent(const Point& x, const Point& y) const
{
    require_same_dimension(x, y);
    switch (kind()) {
    case Kind::cu:
        return cu_adjacent(x, y, as_cu().u);
    case Kind::explicit_edges: {
        const auto& e = as_explicit();
        if (e.dimension != 0 && e.dimension != x.dimension())
            throw InvalidInput("point " + x.to_string() + " does not match edge dimension " +
                               std::to_string(e.dimension));
        if (x == y)
            return false;
        return x < y ? e.edges.contains({x, y}) : e.edges.contains({y, x});
    }
    case Kind::normal_product: {
        const auto& p = as_product();
        if (x.dimension() != p.left_dim + p.right_dim)
            throw InvalidInput("point " + x.to_string() + " does not match product dimension " +
                               std::to_string(p.left_dim + p.right_dim));
        const Point xl = x.slice(0, p.left_dim);
        const Point yl = y.slice(0, p.left_dim);
        const Point xr = x.slice(p.left_dim, p.right_dim);
        const Point yr = y.slice(p.left_dim, p.right_dim);
        const bool left_eq = xl == yl;
        const bool right_eq = xr == yr;
        if (left_eq && right_eq)
            return false;
        return (left_eq || p.left->adjacent(xl, yl)) && (right_eq || p.right->adjacent(xr, yr));
    }
    }
    return false;
}

void Adjacency::validate_for_dimension(std::size_t n) const
{
    switch (kind()) {
    case Kind::cu:
        if (static_cast<std::size_t>(as_cu().u) > n)
            throw InvalidInput("c_" + std::to_string(as_cu().u) + " adjacency is undefined on Z^" +
                               std::to_string(n));
        return;
    case Kind::explicit_edges:
        if (as_explicit().dimension != 0 && as_explicit().dimension != n)
            throw InvalidInput("explicit edges have dimension " +
                               std::to_string(as_explicit().dimension) + ", expected " +
                               std::to_string(n));
        return;
    case Kind::normal_product: {
        const auto& p = as_product();
        if (p.left_dim + p.right_dim != n)
            throw InvalidInput("normal product dimensions " + std::to_string(p.left_dim) + "+" +
                               std::to_string(p.right_dim) + " do not sum to " + std::to_string(n));
        return; // factors were validated on construction
    }
    }
}

bool operator==(const Adjacency& a, const Adjacency& b)
{
    if (a.kind() != b.kind())
        return false;
    switch (a.kind()) {
    case Adjacency::Kind::cu:
        return a.as_cu() == b.as_cu();
    case Adjacency::Kind::explicit_edges:
        return a.as_explicit() == b.as_explicit();
    case Adjacency::Kind::normal_product: {
        const auto& p = a.as_product();
        const auto& q = b.as_product();
        return p.left_dim == q.left_dim && p.right_dim == q.right_dim && *p.left == *q.left &&
               *p.right == *q.right;
    }
    }
    return false;
}

} // namespace shy
