#include "brute.hpp"

#include "shy/connectivity.hpp"
#include "shy/constructions.hpp"
#include "shy/error.hpp"
#include "shy/verification.hpp"

#include <doctest.h>

#include <algorithm>

using namespace shy;

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// Continuous surjections [0,n] -> [0,k], counted by walking value vectors.
std::uint64_t brute_continuous_surjections(int n, int k)
{
    const auto x = interval(0, n);
    const auto y = interval(0, k);
    std::uint64_t count = 0;
    brute::for_each_vector(x.size(), y.size(), [&](const std::vector<std::size_t>& v) {
        count += brute::continuous(x, y, v) && brute::surjective(y, v);
    });
    return count;
}

PointSet brute_cut_points(const DigitalImage& img)
{
    PointSet out;
    for (std::size_t r = 0; r < img.size(); ++r) {
        std::vector<bool> keep(img.size(), true);
        keep[r] = false;
        if (!brute::connected(img, keep))
            out.insert(img.point(r));
    }
    return out;
}

} // namespace

TEST_CASE("monotone characterization")
{
    const auto small = verify_monotone_characterization(2, 1);
    CHECK(small.passed);
    CHECK(small.theorem_id == "monotone");
    CHECK(small.instances_checked == brute_continuous_surjections(2, 1));

    const auto flat = verify_monotone_characterization(3, 0);
    CHECK(flat.passed);
    CHECK(flat.instances_checked == 1);

    for (auto [n, k] : {std::pair{4, 2}, std::pair{5, 3}}) {
        const auto r = verify_monotone_characterization(n, k);
        CHECK(r.passed);
        CHECK(r.counterexamples.empty());
        CHECK(r.instances_checked == brute_continuous_surjections(n, k));
        // Monotone surjections: choose the k steps, then the direction.
        const auto shy_count = count_maps(
            {share(interval(0, n)), share(interval(0, k)), MapFilter::shy});
        CHECK(shy_count == 2 * binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)));
    }
    CHECK_THROWS_AS((void)verify_monotone_characterization(-1, 0), InvalidInput);
}

TEST_CASE("simple closed curves onto intervals")
{
    const auto cyc = share(simple_closed_curve(4));
    const auto f = DigitalFunction::from_values(cyc, share(interval(0, 1)),
                                                {Point{0}, Point{0}, Point{1}, Point{1}});
    CHECK(is_shy(f));
    for (int m : {4, 6, 8}) {
        CHECK(count_maps({share(simple_closed_curve(m)), share(interval(0, 1)), MapFilter::shy}) > 0);
        CHECK(count_maps({share(simple_closed_curve(m)), share(interval(0, 2)), MapFilter::shy}) == 0);
        CHECK(count_maps({share(simple_closed_curve(m)), share(interval(0, 3)), MapFilter::shy}) == 0);
        const auto r = verify_scc_image_bound(m, 3);
        CHECK(r.passed);
        CHECK(r.instances_checked > 0);
    }
    CHECK_THROWS_AS((void)verify_scc_image_bound(3, 2), InvalidInput);
}

TEST_CASE("articulation points")
{
    CHECK(find_articulation_points(interval(0, 4)) ==
          PointSet{Point{1}, Point{2}, Point{3}});
    CHECK(find_articulation_points(interval(0, 0)).empty());
    CHECK(find_articulation_points(figure_tree().image) == brute_cut_points(figure_tree().image));
    for (const auto& img : standard_corpus())
        if (is_connected(*img))
            CHECK(find_articulation_points(*img) == brute_cut_points(*img));
    for (const auto& t : generated_trees(20, 9))
        CHECK(find_articulation_points(t.image) == brute_cut_points(t.image));
    CHECK_THROWS_AS((void)find_articulation_points(
                        DigitalImage({Point{0}, Point{2}}, Adjacency::cu(1))),
                    InvalidInput);
}

TEST_CASE("cut-vertex bound")
{
    const auto star = rooted_tree({{Point{0}, Point{1}}, {Point{0}, Point{2}}, {Point{0}, Point{3}}},
                                  Point{0});
    const auto r = verify_cut_vertex_bound(star, 1);
    CHECK(r.passed);
    CHECK(r.instances_checked > 0);

    // Every shy map from the star onto [0,1] moves at most two leaves off f(r).
    const auto star_img = share(star.image);
    for (const auto& f : collect_maps({star_img, share(interval(0, 1)), MapFilter::shy})) {
        int off = 0;
        for (int leaf = 1; leaf <= 3; ++leaf)
            off += f(Point{leaf}) != f(Point{0});
        CHECK(off <= 2);
    }

    CHECK(verify_cut_vertex_bound(figure_tree(), 3).passed);
    CHECK(verify_cut_vertex_bound(share(interval(0, 5)), 2).passed);
}

TEST_CASE("product theorem")
{
    const auto line = share(interval(0, 1));
    const auto pt = share(interval(0, 0));
    const auto r = verify_product_theorem(line, line, line, line);
    CHECK(r.passed);
    // Continuous surjections [0,1] -> [0,1] are the two bijections.
    CHECK(r.instances_checked == 4);
    const auto r2 = verify_product_theorem(share(interval(0, 2)), line, line, pt);
    CHECK(r2.passed);
    CHECK(r2.instances_checked == brute_continuous_surjections(2, 1));
}

TEST_CASE("wedge theorem")
{
    const auto ws = interval_wedges(2);
    CHECK(ws.size() == 18);
    const auto dom = wedge_image(interval(-2, 0), interval(0, 2), Point{0});
    const auto cod = wedge_image(interval(-1, 0), interval(0, 1), Point{0});
    const auto r = verify_wedge_theorem(dom, cod);
    CHECK(r.passed);
    CHECK(r.instances_checked > 0);
}

TEST_CASE("equivalences and oracles over pairs")
{
    const auto corpus = corpus_up_to(4);
    for (const auto& x : corpus)
        for (const auto& y : corpus) {
            CHECK(verify_equivalences(x, y).passed);
            CHECK(verify_shyness_oracle(x, y).passed);
            const auto c = verify_continuity_oracle(x, y);
            CHECK(c.passed);
            CHECK(c.instances_checked == candidate_count(x->size(), y->size()));
        }
}

TEST_CASE("c_u product identity")
{
    const auto plane = verify_cu_product_identity(1, 1, 1);
    CHECK(plane.passed);
    CHECK(plane.instances_checked == 81);
    const auto space = verify_cu_product_identity(1, 2, 1);
    CHECK(space.passed);
    CHECK(space.instances_checked == 729);
    VerifyOptions tight;
    tight.bound = 100;
    CHECK_THROWS_AS((void)verify_cu_product_identity(1, 2, 1, tight), BoundExceeded);
    CHECK_THROWS_AS((void)verify_cu_product_identity(0, 1, 1), InvalidInput);
}

TEST_CASE("closure and isomorphism laws")
{
    const auto corpus = corpus_up_to(3);
    CHECK(verify_composition_closure(corpus).passed);
    CHECK(verify_isomorphism_laws(corpus).passed);
}

TEST_CASE("corpora")
{
    CHECK(standard_corpus().size() == 13);
    for (const auto& img : corpus_up_to(4))
        CHECK(img->size() <= 4);
    for (const auto& img : factor_corpus())
        CHECK(img->size() <= 3);
    const auto a = generated_trees(20, 9);
    const auto b = generated_trees(20, 9);
    REQUIRE(a.size() == 20);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].image == b[i].image);
        CHECK(a[i].image.size() >= 4);
        CHECK(a[i].image.size() <= 9);
    }
}

TEST_CASE("merge reports")
{
    VerificationReport ok{"a", 3, true, {}, {}};
    VerificationReport bad{"b", 2, false, {Counterexample{"x", {}, {}}}, {}};
    const auto m = merge_reports("m", {ok, bad});
    CHECK(m.theorem_id == "m");
    CHECK(m.instances_checked == 5);
    CHECK_FALSE(m.passed);
    CHECK(m.counterexamples.size() == 1);
    CHECK(merge_reports("n", {ok, ok}).passed);

    VerifyOptions capped;
    capped.max_counterexamples = 1;
    CHECK(merge_reports("c", {bad, bad}, capped).counterexamples.size() == 1);
}

TEST_CASE("suites")
{
    const auto names = suite_names();
    CHECK(names.size() == 11);
    CHECK_THROWS_AS((void)run_suite("nope"), InvalidInput);
    const auto first = run_all_suites();
    const auto second = run_all_suites();
    REQUIRE(first.size() == names.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].theorem_id == names[i]);
        CHECK(first[i].passed);
        CHECK(first[i].instances_checked == second[i].instances_checked);
    }
}
