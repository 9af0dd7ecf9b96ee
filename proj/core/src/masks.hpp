#pragma once

#include "shy/error.hpp"
#include "shy/image.hpp"
#include "shy/point.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace shy::masks {

using Mask = std::uint64_t;

inline void require_mask_width(const DigitalImage& img, const char* what)
{
    if (img.size() > 64)
        throw BoundExceeded(std::string(what) + " has " + std::to_string(img.size()) +
                            " points; subset masks support at most 64");
}

inline void require_guard(const DigitalImage& img, std::size_t guard, const char* what)
{
    if (img.size() > guard)
        throw BoundExceeded(std::string(what) + " has " + std::to_string(img.size()) +
                            " points, above the oracle guard of " + std::to_string(guard));
}

inline std::vector<Mask> neighbor_masks(const DigitalImage& img)
{
    std::vector<Mask> out(img.size(), 0);
    for (std::size_t i = 0; i < img.size(); ++i)
        for (auto j : img.neighbor_indices(i))
            out[i] |= Mask{1} << j;
    return out;
}

inline bool connected(Mask subset, const std::vector<Mask>& nbrs)
{
    if ((subset & (subset - 1)) == 0)
        return true;
    Mask reached = subset & (~subset + 1);
    Mask frontier = reached;
    while (frontier) {
        Mask grow = 0;
        for (Mask f = frontier; f; f &= f - 1)
            grow |= nbrs[static_cast<std::size_t>(std::countr_zero(f))];
        grow &= subset & ~reached;
        reached |= grow;
        frontier = grow;
    }
    return reached == subset;
}

/// Every nonempty connected subset, in increasing mask order.
inline std::vector<Mask> all_connected(const DigitalImage& img)
{
    const auto nbrs = neighbor_masks(img);
    std::vector<Mask> out;
    const Mask end = Mask{1} << img.size();
    for (Mask s = 1; s < end; ++s)
        if (connected(s, nbrs))
            out.push_back(s);
    return out;
}

inline std::vector<Point> points_of(const DigitalImage& img, Mask subset)
{
    std::vector<Point> out;
    for (Mask s = subset; s; s &= s - 1)
        out.push_back(img.point(static_cast<std::size_t>(std::countr_zero(s))));
    return out;
}

} // namespace shy::masks
