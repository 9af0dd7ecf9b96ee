#include "shy/connectivity.hpp"

#include "shy/error.hpp"

#include <algorithm>
#include <deque>

namespace shy {

PointSet neighbors(const DigitalImage& img, const Point& x)
{
    PointSet out;
    for (auto j : img.neighbor_indices(img.require_index(x)))
        out.insert(img.point(j));
    return out;
}

std::vector<IndexSet> component_indices(const DigitalImage& img)
{
    const auto n = img.size();
    std::vector<bool> seen(n, false);
    std::vector<IndexSet> components;
    std::deque<std::size_t> queue;
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        auto& comp = components.emplace_back();
        seen[root] = true;
        queue.push_back(root);
        while (!queue.empty()) {
            const auto v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (auto w : img.neighbor_indices(v))
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
    }
    return components;
}

std::vector<PointSet> connected_components(const DigitalImage& img)
{
    std::vector<PointSet> out;
    for (const auto& comp : component_indices(img))
        out.push_back(to_points(img, comp));
    return out;
}

bool is_connected(const DigitalImage& img)
{
    if (img.size() <= 1)
        return true;
    std::vector<std::size_t> all(img.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    return is_connected_subset(img, all);
}

bool is_connected_subset(const DigitalImage& img, std::span<const std::size_t> members)
{
    if (members.size() <= 1)
        return true;
    // 0 = outside, 1 = member not yet reached, 2 = reached
    std::vector<unsigned char> state(img.size(), 0);
    std::size_t distinct = 0;
    for (auto m : members)
        if (state[m] == 0) {
            state[m] = 1;
            ++distinct;
        }
    std::vector<std::size_t> stack{members.front()};
    state[members.front()] = 2;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto w : img.neighbor_indices(v))
            if (state[w] == 1) {
                state[w] = 2;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == distinct;
}

bool is_connected_subset(const DigitalImage& img, const PointSet& subset)
{
    const auto idx = to_indices(img, subset);
    return is_connected_subset(img, idx);
}

bool sets_adjacent_indices(const DigitalImage& img, std::span<const std::size_t> a,
                           std::span<const std::size_t> b)
{
    for (auto x : a)
        for (auto y : b)
            if (x == y || img.adjacent_at(x, y))
                return true;
    return false;
}

bool sets_adjacent(const DigitalImage& img, const PointSet& a, const PointSet& b)
{
    const auto ia = to_indices(img, a);
    const auto ib = to_indices(img, b);
    return sets_adjacent_indices(img, ia, ib);
}

namespace {

// Reverse-search growth: every connected set whose smallest index is `root`
// is produced once, by repeatedly adding a candidate from the current
// extension list and forbidding it for later siblings.
class SubsetGrower {
public:
    SubsetGrower(const DigitalImage& img, std::size_t max_size,
                 const std::function<bool(std::span<const std::size_t>)>& visit)
        : img_(img), max_size_(max_size), visit_(visit), in_set_(img.size(), 0),
          candidate_(img.size(), 0), forbidden_(img.size(), 0)
    {
    }

    bool run()
    {
        for (std::size_t r = 0; r < img_.size(); ++r) {
            root_ = r;
            set_.assign(1, r);
            in_set_[r] = 1;
            std::vector<std::size_t> ext;
            for (auto w : img_.neighbor_indices(r))
                if (w > r) {
                    ext.push_back(w);
                    candidate_[w] = 1;
                }
            const bool go_on = grow(ext);
            for (auto w : ext)
                candidate_[w] = 0;
            in_set_[r] = 0;
            if (!go_on)
                return false;
        }
        return true;
    }

private:
    bool grow(const std::vector<std::size_t>& ext)
    {
        if (!visit_(set_))
            return false;
        if (set_.size() >= max_size_)
            return true;
        bool go_on = true;
        std::size_t k = 0;
        for (; k < ext.size() && go_on; ++k) {
            const auto v = ext[k];
            std::vector<std::size_t> next(ext.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                                          ext.end());
            const auto inherited = next.size();
            for (auto w : img_.neighbor_indices(v))
                if (w > root_ && !in_set_[w] && !candidate_[w] && !forbidden_[w]) {
                    candidate_[w] = 1;
                    next.push_back(w);
                }
            set_.push_back(v);
            in_set_[v] = 1;
            go_on = grow(next);
            in_set_[v] = 0;
            set_.pop_back();
            for (std::size_t i = inherited; i < next.size(); ++i)
                candidate_[next[i]] = 0;
            forbidden_[v] = 1;
        }
        for (std::size_t i = 0; i < k; ++i)
            forbidden_[ext[i]] = 0;
        return go_on;
    }

    const DigitalImage& img_;
    std::size_t max_size_;
    const std::function<bool(std::span<const std::size_t>)>& visit_;
    std::size_t root_ = 0;
    std::vector<std::size_t> set_;
    std::vector<unsigned char> in_set_, candidate_, forbidden_;
};

} // namespace

void for_each_connected_subset(const DigitalImage& img, std::size_t max_size,
                               const std::function<bool(std::span<const std::size_t>)>& visit)
{
    if (max_size < 1)
        throw InvalidInput("connected subset enumeration needs max_size >= 1");
    SubsetGrower(img, max_size, visit).run();
}

std::vector<PointSet> connected_subsets(const DigitalImage& img, std::size_t max_size)
{
    std::vector<PointSet> out;
    for_each_connected_subset(img, max_size, [&](std::span<const std::size_t> s) {
        out.push_back(to_points(img, s));
        return true;
    });
    return out;
}

IndexSet to_indices(const DigitalImage& img, const PointSet& s)
{
    IndexSet out;
    out.reserve(s.size());
    for (const auto& p : s)
        out.push_back(img.require_index(p));
    return out; // PointSet order matches index order
}

PointSet to_points(const DigitalImage& img, std::span<const std::size_t> indices)
{
    PointSet out;
    for (auto i : indices)
        out.insert(img.point(i));
    return out;
}

} // namespace shy
