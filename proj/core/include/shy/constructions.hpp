#pragma once

#include "shy/image.hpp"
#include "shy/maps.hpp"
#include "shy/point.hpp"

#include <utility>
#include <vector>

namespace shy {

/// [u, v]_Z under c_1. Throws InvalidInput if u > v.
DigitalImage interval(int u, int v);

/// An abstract cycle on the labels 0..m-1 (explicit edges i ~ i+1 mod m).
/// Throws InvalidInput if m < 4.
DigitalImage simple_closed_curve(int m);

struct RootedTree {
    DigitalImage image;
    Point root;
    /// One branch per neighbor v of the root, in canonical order of v: the
    /// root, v, and every vertex reached from v without passing the root.
    std::vector<PointSet> branches;
};

/// Throws InvalidInput if the edges do not form a tree containing `root`.
/// An empty edge list yields the one-point tree.
RootedTree rooted_tree(const std::vector<std::pair<Point, Point>>& edges, const Point& root);

/// X x Y with coordinates concatenated left-then-right, under the normal
/// product adjacency of the two factors.
DigitalImage product_image(const DigitalImage& x, const DigitalImage& y);

/// (f x g)(a, b) = (f(a), g(b)) between freshly built product images.
DigitalFunction product_map(const DigitalFunction& f, const DigitalFunction& g);
/// As above, reusing product images already built with product_image.
DigitalFunction product_map(const DigitalFunction& f, const DigitalFunction& g,
                            ImagePtr domain_product, ImagePtr codomain_product);

/// The two coordinate projections of an image built by product_image.
/// Throws InvalidInput if `product` is not a full normal-product image.
std::pair<DigitalFunction, DigitalFunction> projections(const ImagePtr& product);

struct WedgeDecomposition {
    ImagePtr whole;
    PointSet left;
    PointSet right;
    Point junction;

    [[nodiscard]] DigitalImage left_image() const { return whole->subimage(left); }
    [[nodiscard]] DigitalImage right_image() const { return whole->subimage(right); }
};

/// Validates and builds left ∧ right. The inputs must already meet in exactly
/// `junction`; every adjacency between the two sides must pass through it.
WedgeDecomposition wedge_image(const DigitalImage& left, const DigitalImage& right,
                               const Point& junction);

/// The pasted map f ∧ g. f must be defined on dom.left with values in
/// cod.left, g on dom.right with values in cod.right, and both must send
/// dom.junction to cod.junction.
DigitalFunction wedge_map(const DigitalFunction& f, const DigitalFunction& g,
                          const WedgeDecomposition& dom, const WedgeDecomposition& cod);

} // namespace shy
