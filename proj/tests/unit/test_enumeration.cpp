#include "brute.hpp"

#include "shy/constructions.hpp"
#include "shy/enumeration.hpp"
#include "shy/error.hpp"
#include "shy/verification.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <limits>

using namespace shy;

namespace {

std::vector<std::size_t> values_of(const DigitalFunction& f)
{
    return {f.values().begin(), f.values().end()};
}

bool passes(MapFilter filter, const DigitalImage& x, const DigitalImage& y,
            const std::vector<std::size_t>& v)
{
    switch (filter) {
    case MapFilter::all:
        return true;
    case MapFilter::continuous:
        return brute::continuous(x, y, v);
    case MapFilter::continuous_surjections:
        return brute::continuous(x, y, v) && brute::surjective(y, v);
    case MapFilter::shy:
        return brute::shy(x, y, v);
    }
    return false;
}

} // namespace

TEST_CASE("filter names")
{
    for (auto f : {MapFilter::all, MapFilter::continuous, MapFilter::continuous_surjections,
                   MapFilter::shy})
        CHECK(parse_map_filter(to_string(f)) == f);
    CHECK_FALSE(parse_map_filter("bogus").has_value());
}

TEST_CASE("candidate count saturates")
{
    CHECK(candidate_count(3, 2) == 8);
    CHECK(candidate_count(0, 5) == 1);
    CHECK(candidate_count(4, 0) == 0);
    CHECK(candidate_count(200, 3) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("enumeration matches brute-force filtering in lexicographic order")
{
    const auto corpus = corpus_up_to(5);
    for (const auto& x : corpus)
        for (const auto& y : corpus) {
            if (candidate_count(x->size(), y->size()) > 4000)
                continue;
            for (auto filter : {MapFilter::all, MapFilter::continuous,
                                MapFilter::continuous_surjections, MapFilter::shy}) {
                std::vector<std::vector<std::size_t>> expected;
                brute::for_each_vector(x->size(), y->size(),
                                       [&](const std::vector<std::size_t>& v) {
                                           if (passes(filter, *x, *y, v))
                                               expected.push_back(v);
                                       });
                std::vector<std::vector<std::size_t>> got;
                enumerate_maps({x, y, filter}, [&](const DigitalFunction& f) {
                    got.push_back(values_of(f));
                    return true;
                });
                REQUIRE(got == expected);
                REQUIRE(count_maps({x, y, filter}) == expected.size());
            }
        }
}

TEST_CASE("shy maps are continuous surjections")
{
    const auto x = share(interval(0, 4));
    const auto y = share(interval(0, 2));
    const auto shy_maps = collect_maps({x, y, MapFilter::shy});
    const auto cs = collect_maps({x, y, MapFilter::continuous_surjections});
    CHECK(shy_maps.size() == 12);
    for (const auto& f : shy_maps)
        CHECK(std::find(cs.begin(), cs.end(), f) != cs.end());
}

TEST_CASE("limits, early stops and bounds")
{
    const auto x = share(interval(0, 3));
    const auto y = share(interval(0, 3));
    EnumerationSpec spec{x, y, MapFilter::all};
    spec.limit = 5;
    const auto first = collect_maps(spec);
    REQUIRE(first.size() == 5);
    CHECK(values_of(first[0]) == std::vector<std::size_t>{0, 0, 0, 0});
    CHECK(values_of(first[4]) == std::vector<std::size_t>{0, 0, 1, 0});

    std::size_t seen = 0;
    const auto visited = enumerate_maps({x, y, MapFilter::all}, [&](const DigitalFunction&) {
        return ++seen < 3;
    });
    CHECK(visited == 3);

    EnumerationSpec tight{x, y, MapFilter::all};
    tight.bound = 255;
    CHECK_THROWS_AS((void)count_maps(tight), BoundExceeded);
    tight.bound = 256;
    CHECK(count_maps(tight) == 256);
    tight.bound = 10;
    tight.limit = 7;
    CHECK(count_maps(tight) == 7);

    const auto big = share(interval(0, 20));
    CHECK_THROWS_AS((void)count_maps({big, big, MapFilter::shy}), BoundExceeded);
}

TEST_CASE("degenerate sizes")
{
    const auto one = share(interval(0, 0));
    const auto two = share(interval(0, 1));
    CHECK(count_maps({one, two, MapFilter::all}) == 2);
    CHECK(count_maps({one, two, MapFilter::continuous_surjections}) == 0);
    CHECK(count_maps({two, one, MapFilter::shy}) == 1);
}
