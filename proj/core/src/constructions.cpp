#include "shy/constructions.hpp"

#include "shy/connectivity.hpp"
#include "shy/error.hpp"

#include <string>

namespace shy {

DigitalImage interval(int u, int v)
{
    if (u > v)
        throw InvalidInput("interval [" + std::to_string(u) + ", " + std::to_string(v) +
                           "] is empty");
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(v - u) + 1);
    for (int z = u; z <= v; ++z)
        pts.push_back(Point{z});
    return DigitalImage(1, std::move(pts), Adjacency::cu(1));
}

DigitalImage simple_closed_curve(int m)
{
    if (m < 4)
        throw InvalidInput("a simple closed curve needs at least 4 points, got " +
                           std::to_string(m));
    std::vector<Point> pts;
    std::vector<std::pair<Point, Point>> edges;
    for (int i = 0; i < m; ++i) {
        pts.push_back(Point{i});
        edges.emplace_back(Point{i}, Point{(i + 1) % m});
    }
    return DigitalImage(1, std::move(pts), Adjacency::explicit_edges(edges));
}

RootedTree rooted_tree(const std::vector<std::pair<Point, Point>>& edges, const Point& root)
{
    PointSet vertices{root};
    for (const auto& [a, b] : edges) {
        vertices.insert(a);
        vertices.insert(b);
    }
    auto adjacency = Adjacency::explicit_edges(edges);
    const auto edge_count = adjacency.as_explicit().edges.size();
    DigitalImage image(root.dimension(), {vertices.begin(), vertices.end()}, std::move(adjacency));

    if (!edges.empty() && !vertices.empty()) {
        bool root_used = false;
        for (const auto& [a, b] : edges)
            root_used = root_used || a == root || b == root;
        if (!root_used)
            throw InvalidInput("root " + root.to_string() + " does not appear in the tree");
    }
    if (!is_connected(image))
        throw InvalidInput("tree edges do not form a connected graph");
    if (edge_count != image.size() - 1)
        throw InvalidInput("tree edges contain a cycle (" + std::to_string(edge_count) +
                           " edges on " + std::to_string(image.size()) + " vertices)");

    const auto r = image.require_index(root);
    std::vector<PointSet> branches;
    for (auto v : image.neighbor_indices(r)) {
        PointSet branch{root};
        std::vector<std::size_t> stack{v};
        std::vector<bool> seen(image.size(), false);
        seen[r] = seen[v] = true;
        while (!stack.empty()) {
            const auto w = stack.back();
            stack.pop_back();
            branch.insert(image.point(w));
            for (auto z : image.neighbor_indices(w))
                if (!seen[z]) {
                    seen[z] = true;
                    stack.push_back(z);
                }
        }
        branches.push_back(std::move(branch));
    }
    return RootedTree{std::move(image), root, std::move(branches)};
}

DigitalImage product_image(const DigitalImage& x, const DigitalImage& y)
{
    std::vector<Point> pts;
    pts.reserve(x.size() * y.size());
    for (const auto& a : x.points())
        for (const auto& b : y.points())
            pts.push_back(a.concat(b));
    return DigitalImage(x.dimension() + y.dimension(), std::move(pts),
                        Adjacency::normal_product(x.adjacency(), x.dimension(), y.adjacency(),
                                                  y.dimension()));
}

DigitalFunction product_map(const DigitalFunction& f, const DigitalFunction& g)
{
    return product_map(f, g, share(product_image(f.domain(), g.domain())),
                       share(product_image(f.codomain(), g.codomain())));
}

DigitalFunction product_map(const DigitalFunction& f, const DigitalFunction& g,
                            ImagePtr domain_product, ImagePtr codomain_product)
{
    const auto nb = g.domain().size();
    const auto nd = g.codomain().size();
    if (domain_product->size() != f.domain().size() * nb ||
        codomain_product->size() != f.codomain().size() * nd)
        throw InvalidInput("product images do not match the factor maps");
    // Concatenation preserves lexicographic order, so the product point (a, b)
    // sits at index a * |B| + b.
    std::vector<std::size_t> values(domain_product->size());
    for (std::size_t a = 0; a < f.domain().size(); ++a)
        for (std::size_t b = 0; b < nb; ++b)
            values[a * nb + b] = f.value_index(a) * nd + g.value_index(b);
    return DigitalFunction(std::move(domain_product), std::move(codomain_product),
                           std::move(values));
}

std::pair<DigitalFunction, DigitalFunction> projections(const ImagePtr& product)
{
    if (product->adjacency().kind() != Adjacency::Kind::normal_product)
        throw InvalidInput("projections need an image with normal product adjacency");
    const auto& np = product->adjacency().as_product();
    PointSet left, right;
    for (const auto& p : product->points()) {
        left.insert(p.slice(0, np.left_dim));
        right.insert(p.slice(np.left_dim, np.right_dim));
    }
    if (left.size() * right.size() != product->size())
        throw InvalidInput("image is not a full Cartesian product of its coordinate halves");

    auto left_img = share(DigitalImage(np.left_dim, {left.begin(), left.end()}, *np.left));
    auto right_img = share(DigitalImage(np.right_dim, {right.begin(), right.end()}, *np.right));
    std::vector<std::size_t> lv, rv;
    for (const auto& p : product->points()) {
        lv.push_back(left_img->require_index(p.slice(0, np.left_dim)));
        rv.push_back(right_img->require_index(p.slice(np.left_dim, np.right_dim)));
    }
    return {DigitalFunction(product, std::move(left_img), std::move(lv)),
            DigitalFunction(product, std::move(right_img), std::move(rv))};
}

namespace {

Adjacency union_adjacency(const DigitalImage& left, const DigitalImage& right)
{
    if (left.adjacency() == right.adjacency())
        return left.adjacency();
    if (left.adjacency().kind() == Adjacency::Kind::explicit_edges &&
        right.adjacency().kind() == Adjacency::Kind::explicit_edges) {
        std::vector<std::pair<Point, Point>> edges(left.adjacency().as_explicit().edges.begin(),
                                                   left.adjacency().as_explicit().edges.end());
        edges.insert(edges.end(), right.adjacency().as_explicit().edges.begin(),
                     right.adjacency().as_explicit().edges.end());
        return Adjacency::explicit_edges(edges);
    }
    throw InvalidInput("wedge sides carry incompatible adjacencies");
}

} // namespace

WedgeDecomposition wedge_image(const DigitalImage& left, const DigitalImage& right,
                               const Point& junction)
{
    if (left.dimension() != right.dimension())
        throw InvalidInput("wedge sides have different dimensions");
    PointSet lset(left.points().begin(), left.points().end());
    PointSet rset(right.points().begin(), right.points().end());
    if (!lset.contains(junction) || !rset.contains(junction))
        throw InvalidInput("junction " + junction.to_string() + " is not shared by both sides");
    PointSet shared;
    for (const auto& p : lset)
        if (rset.contains(p))
            shared.insert(p);
    if (shared.size() != 1)
        throw InvalidInput("wedge sides overlap beyond the junction: " + to_string(shared));

    PointSet all = lset;
    all.insert(rset.begin(), rset.end());
    auto whole = share(DigitalImage(left.dimension(), {all.begin(), all.end()},
                                    union_adjacency(left, right)));

    const auto j = whole->require_index(junction);
    for (const auto& x : lset) {
        if (x == junction)
            continue;
        const auto i = whole->require_index(x);
        for (auto k : whole->neighbor_indices(i))
            if (k != j && rset.contains(whole->point(k)))
                throw InvalidInput("wedge sides are adjacent away from the junction: " +
                                   x.to_string() + " ~ " + whole->point(k).to_string());
    }
    return WedgeDecomposition{std::move(whole), std::move(lset), std::move(rset), junction};
}

DigitalFunction wedge_map(const DigitalFunction& f, const DigitalFunction& g,
                          const WedgeDecomposition& dom, const WedgeDecomposition& cod)
{
    auto same_points = [](const DigitalImage& img, const PointSet& s) {
        return img.size() == s.size() && PointSet(img.points().begin(), img.points().end()) == s;
    };
    if (!same_points(f.domain(), dom.left) || !same_points(g.domain(), dom.right))
        throw InvalidInput("wedge map halves are not defined on the wedge sides");
    if (!same_points(f.codomain(), cod.left) || !same_points(g.codomain(), cod.right))
        throw InvalidInput("wedge map halves do not land in the codomain sides");
    if (f(dom.junction) != cod.junction || g(dom.junction) != cod.junction)
        throw InvalidInput("wedge map halves disagree at the junction: f" +
                           dom.junction.to_string() + "=" + f(dom.junction).to_string() +
                           ", g" + dom.junction.to_string() + "=" +
                           g(dom.junction).to_string() + ", expected " +
                           cod.junction.to_string());

    std::vector<std::size_t> values(dom.whole->size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto& x = dom.whole->point(i);
        const Point& y = dom.left.contains(x) ? f(x) : g(x);
        values[i] = cod.whole->require_index(y);
    }
    return DigitalFunction(dom.whole, cod.whole, std::move(values));
}

} // namespace shy
