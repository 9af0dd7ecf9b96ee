#include "shy/maps.hpp"

#include "shy/error.hpp"
#include "shy/oracles.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace shy {

DigitalFunction::DigitalFunction(ImagePtr domain, ImagePtr codomain,
                                 std::vector<std::size_t> values)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values))
{
    if (!domain_ || !codomain_)
        throw InvalidInput("digital function needs both a domain and a codomain");
    if (values_.size() != domain_->size())
        throw InvalidInput("digital function assigns " + std::to_string(values_.size()) +
                           " values to a domain of " + std::to_string(domain_->size()) +
                           " points");
    for (auto v : values_)
        if (v >= codomain_->size())
            throw InvalidInput("digital function value index " + std::to_string(v) +
                               " is outside the codomain");
}

DigitalFunction DigitalFunction::from_pairs(ImagePtr domain, ImagePtr codomain,
                                            const std::vector<std::pair<Point, Point>>& pairs)
{
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> values(domain->size(), unset);
    for (const auto& [x, y] : pairs) {
        const auto i = domain->index_of(x);
        if (!i)
            throw InvalidInput("map assigns a value to " + x.to_string() +
                               ", which is not in the domain");
        if (values[*i] != unset)
            throw InvalidInput("map assigns " + x.to_string() + " more than once");
        const auto j = codomain->index_of(y);
        if (!j)
            throw InvalidInput("map sends " + x.to_string() + " to " + y.to_string() +
                               ", which is not in the codomain");
        values[*i] = *j;
    }
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] == unset)
            throw InvalidInput("map has no assignment for " + domain->point(i).to_string());
    return DigitalFunction(std::move(domain), std::move(codomain), std::move(values));
}

DigitalFunction DigitalFunction::from_values(ImagePtr domain, ImagePtr codomain,
                                             const std::vector<Point>& values)
{
    if (values.size() != domain->size())
        throw InvalidInput("expected " + std::to_string(domain->size()) + " values, got " +
                           std::to_string(values.size()));
    std::vector<std::size_t> idx;
    idx.reserve(values.size());
    for (const auto& v : values)
        idx.push_back(codomain->require_index(v));
    return DigitalFunction(std::move(domain), std::move(codomain), std::move(idx));
}

DigitalFunction DigitalFunction::identity(ImagePtr image)
{
    std::vector<std::size_t> values(image->size());
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] = i;
    auto copy = image;
    return DigitalFunction(std::move(image), std::move(copy), std::move(values));
}

DigitalFunction DigitalFunction::constant(ImagePtr domain, ImagePtr codomain, const Point& value)
{
    const auto j = codomain->require_index(value);
    std::vector<std::size_t> values(domain->size(), j);
    return DigitalFunction(std::move(domain), std::move(codomain), std::move(values));
}

const Point& DigitalFunction::operator()(const Point& x) const
{
    return codomain_->point(values_[domain_->require_index(x)]);
}

std::vector<std::pair<Point, Point>> DigitalFunction::pairs() const
{
    std::vector<std::pair<Point, Point>> out;
    out.reserve(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
        out.emplace_back(domain_->point(i), codomain_->point(values_[i]));
    return out;
}

bool operator==(const DigitalFunction& a, const DigitalFunction& b)
{
    return a.values_ == b.values_ && *a.domain_ == *b.domain_ && *a.codomain_ == *b.codomain_;
}

MultiFunction::MultiFunction(ImagePtr source, ImagePtr target, std::vector<IndexSet> values)
    : source_(std::move(source)), target_(std::move(target)), values_(std::move(values))
{
    if (values_.size() != source_->size())
        throw InvalidInput("multivalued function must be defined on every source point");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        auto& v = values_[i];
        if (v.empty())
            throw InvalidInput("multivalued function has an empty value at " +
                               source_->point(i).to_string());
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        if (v.back() >= target_->size())
            throw InvalidInput("multivalued function value lies outside the target");
    }
}

PointSet MultiFunction::operator()(const Point& x) const
{
    return to_points(*target_, values_[source_->require_index(x)]);
}

std::string_view to_string(Reason r)
{
    switch (r) {
    case Reason::none: return "none";
    case Reason::not_continuous: return "not_continuous";
    case Reason::not_surjective: return "not_surjective";
    case Reason::not_injective: return "not_injective";
    case Reason::inverse_not_continuous: return "inverse_not_continuous";
    case Reason::disconnected_point_preimage: return "disconnected_point_preimage";
    case Reason::disconnected_pair_preimage: return "disconnected_pair_preimage";
    case Reason::disconnected_subset_preimage: return "disconnected_subset_preimage";
    case Reason::disconnected_subset_image: return "disconnected_subset_image";
    case Reason::weak_continuity_violated: return "weak_continuity_violated";
    case Reason::disconnected_value_set: return "disconnected_value_set";
    }
    return "unknown";
}

Verdict check_continuous(const DigitalFunction& f)
{
    const auto& dom = f.domain();
    const auto& cod = f.codomain();
    for (std::size_t i = 0; i < dom.size(); ++i)
        for (auto j : dom.neighbor_indices(i)) {
            if (j < i)
                continue;
            const auto a = f.value_index(i);
            const auto b = f.value_index(j);
            if (a != b && !cod.adjacent_at(a, b))
                return Verdict::fail(Reason::not_continuous, {dom.point(i), dom.point(j)});
        }
    return Verdict::pass();
}

Verdict check_surjective(const DigitalFunction& f)
{
    std::vector<bool> hit(f.codomain().size(), false);
    for (auto v : f.values())
        hit[v] = true;
    for (std::size_t j = 0; j < hit.size(); ++j)
        if (!hit[j])
            return Verdict::fail(Reason::not_surjective, {f.codomain().point(j)});
    return Verdict::pass();
}

Verdict check_injective(const DigitalFunction& f)
{
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> first(f.codomain().size(), unset);
    for (std::size_t i = 0; i < f.domain().size(); ++i) {
        auto& slot = first[f.value_index(i)];
        if (slot != unset)
            return Verdict::fail(Reason::not_injective,
                                 {f.domain().point(slot), f.domain().point(i)});
        slot = i;
    }
    return Verdict::pass();
}

Verdict check_isomorphism(const DigitalFunction& f)
{
    if (auto v = check_injective(f); !v)
        return v;
    if (auto v = check_surjective(f); !v)
        return v;
    if (auto v = check_continuous(f); !v)
        return v;
    const auto& dom = f.domain();
    const auto& cod = f.codomain();
    std::vector<std::size_t> inverse(cod.size());
    for (std::size_t i = 0; i < dom.size(); ++i)
        inverse[f.value_index(i)] = i;
    for (std::size_t y = 0; y < cod.size(); ++y)
        for (auto z : cod.neighbor_indices(y)) {
            if (z < y)
                continue;
            if (!dom.adjacent_at(inverse[y], inverse[z]))
                return Verdict::fail(Reason::inverse_not_continuous, {cod.point(y), cod.point(z)});
        }
    return Verdict::pass();
}

IndexSet preimage_indices(const DigitalFunction& f, std::span<const std::size_t> codomain_subset)
{
    std::vector<bool> wanted(f.codomain().size(), false);
    for (auto y : codomain_subset)
        wanted[y] = true;
    IndexSet out;
    for (std::size_t i = 0; i < f.domain().size(); ++i)
        if (wanted[f.value_index(i)])
            out.push_back(i);
    return out;
}

PointSet preimage(const DigitalFunction& f, const PointSet& codomain_subset)
{
    const auto idx = to_indices(f.codomain(), codomain_subset);
    return to_points(f.domain(), preimage_indices(f, idx));
}

Verdict check_shy(const DigitalFunction& f)
{
    if (auto v = check_continuous(f); !v)
        return v;
    if (auto v = check_surjective(f); !v)
        return v;

    const auto& dom = f.domain();
    const auto& cod = f.codomain();
    std::vector<IndexSet> fibers(cod.size());
    for (std::size_t i = 0; i < dom.size(); ++i)
        fibers[f.value_index(i)].push_back(i);

    for (std::size_t y = 0; y < cod.size(); ++y)
        if (!is_connected_subset(dom, fibers[y]))
            return Verdict::fail(Reason::disconnected_point_preimage, {cod.point(y)});

    IndexSet both;
    for (std::size_t y = 0; y < cod.size(); ++y)
        for (auto z : cod.neighbor_indices(y)) {
            if (z < y)
                continue;
            both.assign(fibers[y].begin(), fibers[y].end());
            both.insert(both.end(), fibers[z].begin(), fibers[z].end());
            if (!is_connected_subset(dom, both))
                return Verdict::fail(Reason::disconnected_pair_preimage,
                                     {cod.point(y), cod.point(z)});
        }
    return Verdict::pass();
}

DigitalFunction compose(const DigitalFunction& g, const DigitalFunction& f)
{
    if (f.codomain_ptr() != g.domain_ptr() && !(f.codomain() == g.domain()))
        throw InvalidInput("cannot compose: the codomain of the inner map is not the domain "
                           "of the outer map");
    std::vector<std::size_t> values(f.domain().size());
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] = g.value_index(f.value_index(i));
    return DigitalFunction(f.domain_ptr(), g.codomain_ptr(), std::move(values));
}

MultiFunction inverse_multifunction(const DigitalFunction& f)
{
    if (auto v = check_surjective(f); !v)
        throw PreconditionViolation("inverse of a non-surjective map: nothing maps to " +
                                    v.witness.front().to_string());
    std::vector<IndexSet> values(f.codomain().size());
    for (std::size_t i = 0; i < f.domain().size(); ++i)
        values[f.value_index(i)].push_back(i);
    return MultiFunction(f.codomain_ptr(), f.domain_ptr(), std::move(values));
}

Verdict check_weak_continuity(const MultiFunction& m)
{
    const auto& src = m.source();
    for (std::size_t x = 0; x < src.size(); ++x)
        for (auto y : src.neighbor_indices(x)) {
            if (y < x)
                continue;
            if (!sets_adjacent_indices(m.target(), m.value_indices(x), m.value_indices(y)))
                return Verdict::fail(Reason::weak_continuity_violated,
                                     {src.point(x), src.point(y)});
        }
    return Verdict::pass();
}

Verdict check_connectivity_preserving(const MultiFunction& m, PreservationMode mode)
{
    if (mode == PreservationMode::oracle)
        return connectivity_preserving_oracle(m);
    if (auto v = check_weak_continuity(m); !v)
        return v;
    for (std::size_t x = 0; x < m.source().size(); ++x)
        if (!is_connected_subset(m.target(), m.value_indices(x)))
            return Verdict::fail(Reason::disconnected_value_set, {m.source().point(x)});
    return Verdict::pass();
}

MapClassification classify(const DigitalFunction& f)
{
    MapClassification c;
    c.continuous = is_continuous(f);
    c.surjective = is_surjective(f);
    c.injective = is_injective(f);
    c.shy = c.continuous && c.surjective && is_shy(f);
    c.isomorphism = c.continuous && c.surjective && c.injective && is_isomorphism(f);
    return c;
}

} // namespace shy
