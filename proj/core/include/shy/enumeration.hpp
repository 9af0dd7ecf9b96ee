#pragma once

#include "shy/image.hpp"
#include "shy/maps.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace shy {

enum class MapFilter { all, continuous, continuous_surjections, shy };

std::string_view to_string(MapFilter f);
std::optional<MapFilter> parse_map_filter(std::string_view name);

/// Largest |codomain|^|domain| an unlimited enumeration may face.
inline constexpr std::uint64_t default_enumeration_bound = 10'000'000;

struct EnumerationSpec {
    ImagePtr domain;
    ImagePtr codomain;
    MapFilter filter = MapFilter::all;
    std::optional<std::uint64_t> limit;
    std::uint64_t bound = default_enumeration_bound;
};

/// |codomain|^|domain|, saturating at UINT64_MAX.
std::uint64_t candidate_count(std::size_t domain_size, std::size_t codomain_size);

/// Visits every function passing the filter exactly once, in lexicographic
/// order of value vectors (domain points in canonical order). Continuity
/// filters prune partial assignments that already break an edge; surjective
/// filters prune when too few points remain to cover the codomain.
///
/// Throws BoundExceeded if the candidate count exceeds spec.bound and no
/// limit is set. Returns the number of functions visited; stops early when
/// the limit is reached or the visitor returns false.
std::uint64_t enumerate_maps(const EnumerationSpec& spec,
                             const std::function<bool(const DigitalFunction&)>& visit);

std::vector<DigitalFunction> collect_maps(const EnumerationSpec& spec);
std::uint64_t count_maps(const EnumerationSpec& spec);

} // namespace shy
