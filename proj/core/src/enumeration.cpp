#include "shy/enumeration.hpp"

#include "shy/error.hpp"

#include <limits>
#include <string>

namespace shy {

std::string_view to_string(MapFilter f)
{
    switch (f) {
    case MapFilter::all: return "all";
    case MapFilter::continuous: return "continuous";
    case MapFilter::continuous_surjections: return "continuous_surjections";
    case MapFilter::shy: return "shy";
    }
    return "all";
}

std::optional<MapFilter> parse_map_filter(std::string_view name)
{
    for (auto f : {MapFilter::all, MapFilter::continuous, MapFilter::continuous_surjections,
                   MapFilter::shy})
        if (to_string(f) == name)
            return f;
    return std::nullopt;
}

std::uint64_t candidate_count(std::size_t domain_size, std::size_t codomain_size)
{
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < domain_size; ++i) {
        if (codomain_size == 0)
            return 0;
        if (total > cap / codomain_size)
            return cap;
        total *= codomain_size;
    }
    return total;
}

namespace {

class MapWalker {
public:
    MapWalker(const EnumerationSpec& spec, const std::function<bool(const DigitalFunction&)>& visit)
        : spec_(spec), dom_(*spec.domain), cod_(*spec.codomain), visit_(visit),
          values_(dom_.size(), 0), cover_(cod_.size(), 0)
    {
        continuous_ = spec.filter != MapFilter::all;
        surjective_ = spec.filter == MapFilter::continuous_surjections ||
                      spec.filter == MapFilter::shy;
    }

    std::uint64_t run()
    {
        if (surjective_ && cod_.size() > dom_.size())
            return 0;
        place(0);
        return yielded_;
    }

private:
    // Returns false to stop the whole walk.
    bool place(std::size_t i)
    {
        if (i == dom_.size())
            return emit();
        for (std::size_t v = 0; v < cod_.size(); ++v) {
            if (continuous_ && !compatible(i, v))
                continue;
            values_[i] = v;
            if (cover_[v]++ == 0)
                ++covered_;
            bool go_on = true;
            if (!surjective_ || cod_.size() - covered_ <= dom_.size() - i - 1)
                go_on = place(i + 1);
            if (--cover_[v] == 0)
                --covered_;
            if (!go_on)
                return false;
        }
        return true;
    }

    bool compatible(std::size_t i, std::size_t v) const
    {
        for (auto j : dom_.neighbor_indices(i)) {
            if (j >= i)
                break;
            const auto w = values_[j];
            if (w != v && !cod_.adjacent_at(w, v))
                return false;
        }
        return true;
    }

    bool emit()
    {
        DigitalFunction f(spec_.domain, spec_.codomain, values_);
        if (spec_.filter == MapFilter::shy && !is_shy(f))
            return true;
        ++yielded_;
        if (!visit_(f))
            return false;
        return !(spec_.limit && yielded_ >= *spec_.limit);
    }

    const EnumerationSpec& spec_;
    const DigitalImage& dom_;
    const DigitalImage& cod_;
    const std::function<bool(const DigitalFunction&)>& visit_;
    std::vector<std::size_t> values_;
    std::vector<std::size_t> cover_;
    std::size_t covered_ = 0;
    bool continuous_ = false;
    bool surjective_ = false;
    std::uint64_t yielded_ = 0;
};

} // namespace

std::uint64_t enumerate_maps(const EnumerationSpec& spec,
                             const std::function<bool(const DigitalFunction&)>& visit)
{
    if (!spec.domain || !spec.codomain)
        throw InvalidInput("enumeration needs a domain and a codomain");
    if (spec.limit && *spec.limit == 0)
        return 0;
    const auto candidates = candidate_count(spec.domain->size(), spec.codomain->size());
    if (!spec.limit && candidates > spec.bound)
        throw BoundExceeded("enumerating " + std::to_string(spec.codomain->size()) + "^" +
                            std::to_string(spec.domain->size()) +
                            " candidate maps exceeds the bound of " + std::to_string(spec.bound));
    return MapWalker(spec, visit).run();
}

std::vector<DigitalFunction> collect_maps(const EnumerationSpec& spec)
{
    std::vector<DigitalFunction> out;
    enumerate_maps(spec, [&](const DigitalFunction& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

std::uint64_t count_maps(const EnumerationSpec& spec)
{
    return enumerate_maps(spec, [](const DigitalFunction&) { return true; });
}

} // namespace shy
