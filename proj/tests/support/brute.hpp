#pragma once

// Test-only brute-force oracles. They talk to Adjacency::adjacent directly
// and never touch the neighbor lists, subset growth, or pruned enumeration
// they are used to check.

#include "shy/image.hpp"
#include "shy/maps.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace brute {

inline bool adjacent(const shy::DigitalImage& img, std::size_t i, std::size_t j)
{
    return img.adjacency().adjacent(img.point(i), img.point(j));
}

inline bool connected(const shy::DigitalImage& img, const std::vector<bool>& member)
{
    std::vector<std::size_t> todo;
    std::vector<bool> reached(img.size(), false);
    std::size_t total = 0;
    for (std::size_t i = 0; i < img.size(); ++i)
        if (member[i]) {
            ++total;
            if (todo.empty()) {
                todo.push_back(i);
                reached[i] = true;
            }
        }
    std::size_t seen = todo.size();
    while (!todo.empty()) {
        const auto v = todo.back();
        todo.pop_back();
        for (std::size_t w = 0; w < img.size(); ++w)
            if (member[w] && !reached[w] && adjacent(img, v, w)) {
                reached[w] = true;
                ++seen;
                todo.push_back(w);
            }
    }
    return seen == total;
}

inline std::vector<bool> bits(std::size_t n, unsigned long long mask)
{
    std::vector<bool> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = (mask >> i) & 1U;
    return out;
}

/// Number of nonempty connected subsets of at most max_size points.
inline std::size_t count_connected_subsets(const shy::DigitalImage& img, std::size_t max_size)
{
    std::size_t count = 0;
    for (unsigned long long m = 1; m < (1ULL << img.size()); ++m)
        if (static_cast<std::size_t>(__builtin_popcountll(m)) <= max_size &&
            connected(img, bits(img.size(), m)))
            ++count;
    return count;
}

/// Calls fn on every value vector in {0..k-1}^n, lexicographically.
inline void for_each_vector(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& fn)
{
    if (k == 0) {
        if (n == 0)
            fn({});
        return;
    }
    std::vector<std::size_t> v(n, 0);
    while (true) {
        fn(v);
        std::size_t i = n;
        while (i > 0 && v[i - 1] == k - 1)
            v[--i] = 0;
        if (i == 0)
            return;
        ++v[i - 1];
    }
}

inline bool continuous(const shy::DigitalImage& x, const shy::DigitalImage& y,
                       const std::vector<std::size_t>& v)
{
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (adjacent(x, i, j) && v[i] != v[j] && !adjacent(y, v[i], v[j]))
                return false;
    return true;
}

inline bool surjective(const shy::DigitalImage& y, const std::vector<std::size_t>& v)
{
    std::vector<bool> hit(y.size(), false);
    for (auto z : v)
        hit[z] = true;
    for (bool h : hit)
        if (!h)
            return false;
    return true;
}

/// Shyness straight from "every connected Y' has connected preimage".
inline bool shy(const shy::DigitalImage& x, const shy::DigitalImage& y,
                const std::vector<std::size_t>& v)
{
    if (!continuous(x, y, v) || !surjective(y, v))
        return false;
    for (unsigned long long m = 1; m < (1ULL << y.size()); ++m) {
        const auto target = bits(y.size(), m);
        if (!connected(y, target))
            continue;
        std::vector<bool> pre(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            pre[i] = target[v[i]];
        if (!connected(x, pre))
            return false;
    }
    return true;
}

} // namespace brute
