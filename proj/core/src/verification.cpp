#include "shy/verification.hpp"

#include "shy/connectivity.hpp"
#include "shy/error.hpp"
#include "shy/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace shy {

namespace {

using Clock = std::chrono::steady_clock;

class Audit {
public:
    Audit(std::string id, const VerifyOptions& opts) : opts_(opts), start_(Clock::now())
    {
        report_.theorem_id = std::move(id);
    }

    void count(std::uint64_t n = 1) { report_.instances_checked += n; }

    void fail(std::string description, std::initializer_list<const DigitalFunction*> maps,
              std::vector<Point> witness = {})
    {
        report_.passed = false;
        if (report_.counterexamples.size() >= opts_.max_counterexamples)
            return;
        Counterexample c;
        c.description = std::move(description);
        for (const auto* f : maps)
            c.maps.push_back(f->pairs());
        c.witness = std::move(witness);
        report_.counterexamples.push_back(std::move(c));
    }

    VerificationReport finish()
    {
        report_.wall_time =
            std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start_);
        return std::move(report_);
    }

private:
    const VerifyOptions& opts_;
    Clock::time_point start_;
    VerificationReport report_;
};

EnumerationSpec spec_for(const ImagePtr& x, const ImagePtr& y, MapFilter filter,
                         const VerifyOptions& opts)
{
    EnumerationSpec s;
    s.domain = x;
    s.codomain = y;
    s.filter = filter;
    s.bound = opts.bound;
    return s;
}

void for_each_map(const ImagePtr& x, const ImagePtr& y, MapFilter filter,
                  const VerifyOptions& opts, const std::function<void(const DigitalFunction&)>& fn)
{
    enumerate_maps(spec_for(x, y, filter, opts), [&](const DigitalFunction& f) {
        fn(f);
        return true;
    });
}

std::string flag(bool b)
{
    return b ? "true" : "false";
}

bool monotone(const DigitalFunction& f)
{
    bool up = true, down = true;
    for (std::size_t i = 1; i < f.domain().size(); ++i) {
        const auto& prev = f.codomain().point(f.value_index(i - 1));
        const auto& cur = f.codomain().point(f.value_index(i));
        up = up && prev <= cur;
        down = down && cur <= prev;
    }
    return up || down;
}

void check_nonnegative(int v, const char* what)
{
    if (v < 0)
        throw InvalidInput(std::string(what) + " must be non-negative, got " + std::to_string(v));
}

} // namespace

VerificationReport merge_reports(std::string theorem_id,
                                 const std::vector<VerificationReport>& parts,
                                 const VerifyOptions& opts)
{
    VerificationReport out;
    out.theorem_id = std::move(theorem_id);
    for (const auto& p : parts) {
        out.instances_checked += p.instances_checked;
        out.passed = out.passed && p.passed;
        out.wall_time += p.wall_time;
        for (const auto& c : p.counterexamples)
            if (out.counterexamples.size() < opts.max_counterexamples)
                out.counterexamples.push_back(c);
    }
    return out;
}

PointSet find_articulation_points(const DigitalImage& img)
{
    if (!is_connected(img))
        throw InvalidInput("articulation points are only defined here for connected images");
    const auto n = img.size();
    PointSet out;
    if (n < 3)
        return out;

    constexpr auto unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> disc(n, unvisited), low(n, 0), parent(n, unvisited);
    std::vector<bool> is_cut(n, false);
    struct Frame {
        std::size_t v;
        std::size_t next;
    };
    std::vector<Frame> stack{{0, 0}};
    std::size_t timer = 0;
    std::size_t root_children = 0;
    disc[0] = low[0] = timer++;

    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        const auto nb = img.neighbor_indices(v);
        if (next < nb.size()) {
            const auto w = nb[next++];
            if (disc[w] == unvisited) {
                parent[w] = v;
                disc[w] = low[w] = timer++;
                if (v == 0)
                    ++root_children;
                stack.push_back({w, 0});
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], disc[w]);
            }
            continue;
        }
        const auto done = v;
        stack.pop_back();
        if (!stack.empty()) {
            const auto p = stack.back().v;
            low[p] = std::min(low[p], low[done]);
            if (p != 0 && low[done] >= disc[p])
                is_cut[p] = true;
        }
    }
    is_cut[0] = root_children > 1;
    for (std::size_t i = 0; i < n; ++i)
        if (is_cut[i])
            out.insert(img.point(i));
    return out;
}

VerificationReport verify_monotone_characterization(int x_len, int y_len,
                                                    const VerifyOptions& opts)
{
    check_nonnegative(x_len, "x_len");
    check_nonnegative(y_len, "y_len");
    Audit audit("monotone", opts);
    const auto x = share(interval(0, x_len));
    const auto y = share(interval(0, y_len));
    for_each_map(x, y, MapFilter::continuous_surjections, opts, [&](const DigitalFunction& f) {
        audit.count();
        const auto verdict = check_shy(f);
        const bool mono = monotone(f);
        if (verdict.holds != mono)
            audit.fail("shy=" + flag(verdict.holds) + " but monotone=" + flag(mono), {&f},
                       verdict.witness);
    });
    return audit.finish();
}

VerificationReport verify_scc_image_bound(int m, int k_max, const VerifyOptions& opts)
{
    check_nonnegative(k_max, "k_max");
    Audit audit("scc-bound", opts);
    const auto curve = share(simple_closed_curve(m));
    for (int k = 0; k <= k_max; ++k) {
        const auto target = share(interval(0, k));
        for_each_map(curve, target, MapFilter::continuous_surjections, opts,
                     [&](const DigitalFunction& f) {
                         audit.count();
                         if (k >= 2 && is_shy(f))
                             audit.fail("shy map from the " + std::to_string(m) +
                                            "-cycle onto [0," + std::to_string(k) + "]",
                                        {&f});
                     });
    }
    return audit.finish();
}

namespace {

struct CutStructure {
    std::size_t cut;
    std::vector<IndexSet> pieces;
};

VerificationReport cut_vertex_audit(const ImagePtr& img, int k, const RootedTree* tree,
                                    const VerifyOptions& opts)
{
    check_nonnegative(k, "k");
    Audit audit("cut-vertex", opts);
    const auto& X = *img;

    std::vector<CutStructure> cuts;
    for (const auto& r : find_articulation_points(X)) {
        CutStructure cs{X.require_index(r), {}};
        std::vector<bool> seen(X.size(), false);
        seen[cs.cut] = true;
        for (std::size_t s = 0; s < X.size(); ++s) {
            if (seen[s])
                continue;
            auto& piece = cs.pieces.emplace_back();
            std::vector<std::size_t> stack{s};
            seen[s] = true;
            while (!stack.empty()) {
                const auto v = stack.back();
                stack.pop_back();
                piece.push_back(v);
                for (auto w : X.neighbor_indices(v))
                    if (!seen[w]) {
                        seen[w] = true;
                        stack.push_back(w);
                    }
            }
        }
        cuts.push_back(std::move(cs));
    }
    if (tree) {
        CutStructure cs{X.require_index(tree->root), {}};
        for (const auto& branch : tree->branches) {
            auto idx = to_indices(X, branch);
            std::erase(idx, cs.cut);
            cs.pieces.push_back(std::move(idx));
        }
        cuts.push_back(std::move(cs));
    }

    for (int a = 0; a <= k; ++a)
        for (int b = a; b <= k; ++b) {
            const auto target = share(interval(a, b));
            for_each_map(img, target, MapFilter::shy, opts, [&](const DigitalFunction& f) {
                audit.count();
                for (const auto& cs : cuts) {
                    const auto at_cut = f.value_index(cs.cut);
                    std::size_t varying = 0;
                    for (const auto& piece : cs.pieces)
                        varying += std::any_of(piece.begin(), piece.end(), [&](std::size_t i) {
                            return f.value_index(i) != at_cut;
                        });
                    if (varying > 2)
                        audit.fail("shy map differs from f(r) on " + std::to_string(varying) +
                                       " components around r",
                                   {&f}, {X.point(cs.cut)});
                }
            });
        }
    return audit.finish();
}

} // namespace

VerificationReport verify_cut_vertex_bound(const ImagePtr& img, int k, const VerifyOptions& opts)
{
    return cut_vertex_audit(img, k, nullptr, opts);
}

VerificationReport verify_cut_vertex_bound(const RootedTree& tree, int k,
                                           const VerifyOptions& opts)
{
    return cut_vertex_audit(share(tree.image), k, &tree, opts);
}

VerificationReport verify_product_theorem(const ImagePtr& a, const ImagePtr& b,
                                          const ImagePtr& c, const ImagePtr& d,
                                          const VerifyOptions& opts)
{
    Audit audit("products", opts);
    const auto fs = collect_maps(spec_for(a, c, MapFilter::continuous_surjections, opts));
    const auto gs = collect_maps(spec_for(b, d, MapFilter::continuous_surjections, opts));
    if (fs.empty() || gs.empty())
        return audit.finish();
    const auto ab = share(product_image(*a, *b));
    const auto cd = share(product_image(*c, *d));
    std::vector<bool> f_shy, g_shy;
    for (const auto& f : fs)
        f_shy.push_back(is_shy(f));
    for (const auto& g : gs)
        g_shy.push_back(is_shy(g));
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = 0; j < gs.size(); ++j) {
            audit.count();
            const auto fg = product_map(fs[i], gs[j], ab, cd);
            const auto verdict = check_shy(fg);
            const bool factors = f_shy[i] && g_shy[j];
            if (verdict.holds != factors)
                audit.fail("shy(f)=" + flag(f_shy[i]) + ", shy(g)=" + flag(g_shy[j]) +
                               ", shy(f x g)=" + flag(verdict.holds),
                           {&fs[i], &gs[j]}, verdict.witness);
        }
    return audit.finish();
}

VerificationReport verify_wedge_theorem(const WedgeDecomposition& dom,
                                        const WedgeDecomposition& cod, const VerifyOptions& opts)
{
    Audit audit("wedge", opts);
    const auto a = share(dom.left_image());
    const auto b = share(dom.right_image());
    const auto c = share(cod.left_image());
    const auto d = share(cod.right_image());

    auto pinned = [&](const ImagePtr& from, const ImagePtr& to) {
        std::vector<DigitalFunction> out;
        for (auto& f : collect_maps(spec_for(from, to, MapFilter::all, opts)))
            if (f(dom.junction) == cod.junction)
                out.push_back(std::move(f));
        return out;
    };
    const auto fs = pinned(a, c);
    const auto gs = pinned(b, d);
    std::vector<bool> f_shy, g_shy;
    for (const auto& f : fs)
        f_shy.push_back(is_shy(f));
    for (const auto& g : gs)
        g_shy.push_back(is_shy(g));

    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = 0; j < gs.size(); ++j) {
            audit.count();
            const auto fg = wedge_map(fs[i], gs[j], dom, cod);
            const auto verdict = check_shy(fg);
            const bool halves = f_shy[i] && g_shy[j];
            if (verdict.holds != halves)
                audit.fail("shy(f)=" + flag(f_shy[i]) + ", shy(g)=" + flag(g_shy[j]) +
                               ", shy(f wedge g)=" + flag(verdict.holds),
                           {&fs[i], &gs[j]}, verdict.witness);
        }
    return audit.finish();
}

VerificationReport verify_equivalences(const ImagePtr& x, const ImagePtr& y,
                                       const VerifyOptions& opts)
{
    Audit audit("equivalences", opts);
    const ShynessOracle oracle(*x, *y);
    for_each_map(x, y, MapFilter::continuous_surjections, opts, [&](const DigitalFunction& f) {
        audit.count();
        const bool by_definition = is_shy(f);
        const bool by_preimages = oracle(f).holds;
        const auto inverse = inverse_multifunction(f);
        const bool by_preservation =
            check_connectivity_preserving(inverse, PreservationMode::oracle).holds;
        bool by_weak = has_weak_continuity(inverse);
        for (std::size_t v = 0; by_weak && v < y->size(); ++v)
            by_weak = is_connected_subset(*x, inverse.value_indices(v));
        if (by_definition != by_preimages || by_definition != by_preservation ||
            by_definition != by_weak)
            audit.fail("definition=" + flag(by_definition) + ", preimages=" +
                           flag(by_preimages) + ", preserving=" + flag(by_preservation) +
                           ", weak+fibers=" + flag(by_weak),
                       {&f});
    });
    return audit.finish();
}

VerificationReport verify_cu_product_identity(int m, int n, int radius, const VerifyOptions& opts)
{
    if (m < 1 || n < 1)
        throw InvalidInput("c_u product identity needs m, n >= 1");
    check_nonnegative(radius, "radius");
    const auto dim = static_cast<std::size_t>(m + n);
    const auto side = static_cast<std::size_t>(2 * radius + 1);
    const auto box = candidate_count(dim, side);
    if (candidate_count(2, box) > opts.bound)
        throw BoundExceeded("c_u product identity on " + std::to_string(box) +
                            " points exceeds the pair bound of " + std::to_string(opts.bound));

    Audit audit("cu-product", opts);
    std::vector<Point> points;
    std::vector<int> c(dim, -radius);
    while (true) {
        points.emplace_back(c);
        std::size_t i = 0;
        while (i < dim && c[i] == radius)
            c[i++] = -radius;
        if (i == dim)
            break;
        ++c[i];
    }
    std::sort(points.begin(), points.end());

    const auto product = Adjacency::normal_product(Adjacency::cu(m), static_cast<std::size_t>(m),
                                                   Adjacency::cu(n), static_cast<std::size_t>(n));
    for (const auto& p : points)
        for (const auto& q : points) {
            audit.count();
            const bool lhs = product.adjacent(p, q);
            const bool rhs = cu_adjacent(p, q, m + n);
            if (lhs != rhs)
                audit.fail("normal product says " + flag(lhs) + ", c_" +
                               std::to_string(m + n) + " says " + flag(rhs),
                           {}, {p, q});
        }
    return audit.finish();
}

VerificationReport verify_continuity_oracle(const ImagePtr& x, const ImagePtr& y,
                                            const VerifyOptions& opts)
{
    Audit audit("continuity-oracle", opts);
    const ContinuityOracle oracle(*x, *y);
    for_each_map(x, y, MapFilter::all, opts, [&](const DigitalFunction& f) {
        audit.count();
        const auto edges = check_continuous(f);
        const auto subsets = oracle(f);
        if (edges.holds != subsets.holds)
            audit.fail("edge test=" + flag(edges.holds) + ", subset oracle=" + flag(subsets.holds),
                       {&f}, subsets.holds ? edges.witness : subsets.witness);
    });
    return audit.finish();
}

VerificationReport verify_shyness_oracle(const ImagePtr& x, const ImagePtr& y,
                                         const VerifyOptions& opts)
{
    Audit audit("shyness-oracle", opts);
    const ShynessOracle oracle(*x, *y);
    for_each_map(x, y, MapFilter::continuous_surjections, opts, [&](const DigitalFunction& f) {
        audit.count();
        const auto definition = check_shy(f);
        const auto subsets = oracle(f);
        if (definition.holds != subsets.holds)
            audit.fail("preimage test=" + flag(definition.holds) +
                           ", subset oracle=" + flag(subsets.holds),
                       {&f}, subsets.holds ? definition.witness : subsets.witness);
    });
    return audit.finish();
}

VerificationReport verify_composition_closure(const std::vector<ImagePtr>& images,
                                              const VerifyOptions& opts)
{
    Audit audit("composition", opts);
    const auto n = images.size();
    std::vector<std::vector<DigitalFunction>> shy_maps(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            shy_maps[i * n + j] = collect_maps(spec_for(images[i], images[j], MapFilter::shy, opts));

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (const auto& f : shy_maps[a * n + b])
                    for (const auto& g : shy_maps[b * n + c]) {
                        audit.count();
                        const auto gf = compose(g, f);
                        if (auto v = check_shy(gf); !v)
                            audit.fail("composition of shy maps is not shy (" +
                                           std::string(to_string(v.reason)) + ")",
                                       {&f, &g}, v.witness);
                    }
    return audit.finish();
}

VerificationReport verify_isomorphism_laws(const std::vector<ImagePtr>& images,
                                           const VerifyOptions& opts)
{
    Audit audit("isomorphism", opts);
    for (const auto& x : images)
        for (const auto& y : images)
            for_each_map(x, y, MapFilter::continuous_surjections, opts,
                         [&](const DigitalFunction& f) {
                             audit.count();
                             const bool iso = is_isomorphism(f);
                             const bool shy = is_shy(f);
                             const bool inj = is_injective(f);
                             if (iso && !shy)
                                 audit.fail("isomorphism that is not shy", {&f});
                             if (shy && inj && !iso)
                                 audit.fail("injective shy map that is not an isomorphism", {&f});
                         });
    return audit.finish();
}

std::vector<ImagePtr> standard_corpus()
{
    auto lattice = [](std::vector<Point> pts, int u) {
        return share(DigitalImage(std::move(pts), Adjacency::cu(u)));
    };
    return {
        share(interval(0, 0)),
        share(interval(0, 1)),
        lattice({Point{0}, Point{2}}, 1),
        share(interval(0, 2)),
        lattice({Point{0, 0}, Point{0, 1}, Point{1, 0}}, 2),
        lattice({Point{0}, Point{1}, Point{3}}, 1),
        share(interval(0, 3)),
        lattice({Point{0, 0}, Point{0, 1}, Point{1, 0}, Point{1, 1}}, 1),
        lattice({Point{0, 0}, Point{0, 1}, Point{1, 0}, Point{1, 1}}, 2),
        share(interval(0, 4)),
        lattice({Point{0, 0}, Point{-1, 0}, Point{1, 0}, Point{0, -1}, Point{0, 1}}, 1),
        share(interval(0, 5)),
        share(simple_closed_curve(6)),
    };
}

std::vector<ImagePtr> corpus_up_to(std::size_t max_points)
{
    std::vector<ImagePtr> out;
    for (auto& img : standard_corpus())
        if (img->size() <= max_points)
            out.push_back(std::move(img));
    return out;
}

std::vector<ImagePtr> factor_corpus()
{
    auto lattice = [](std::vector<Point> pts, int u) {
        return share(DigitalImage(std::move(pts), Adjacency::cu(u)));
    };
    return {
        share(interval(0, 0)),
        share(interval(0, 1)),
        lattice({Point{0}, Point{2}}, 1),
        lattice({Point{0}, Point{2}, Point{4}}, 1),
        lattice({Point{0}, Point{1}, Point{3}}, 1),
        share(interval(0, 2)),
        lattice({Point{0, 0}, Point{0, 1}, Point{1, 0}}, 2),
    };
}

RootedTree figure_tree()
{
    // Labels: r=0, v0=1, v1=2, v2=3, p0..p6 = 4..10.
    const int r = 0, v0 = 1, v1 = 2, v2 = 3;
    auto p = [](int i) { return 4 + i; };
    const std::vector<std::pair<int, int>> edges{
        {r, v0}, {r, v1}, {r, v2},
        {v1, p(0)}, {p(0), p(2)}, {p(0), p(3)},
        {v2, p(1)}, {p(1), p(4)}, {p(1), p(5)}, {p(5), p(6)},
    };
    std::vector<std::pair<Point, Point>> pts;
    for (auto [a, b] : edges)
        pts.emplace_back(Point{a}, Point{b});
    return rooted_tree(pts, Point{r});
}

std::vector<RootedTree> generated_trees(std::size_t count, std::size_t max_vertices)
{
    if (max_vertices < 4)
        throw InvalidInput("generated trees need max_vertices >= 4");
    std::vector<RootedTree> out;
    for (std::size_t t = 0; t < count; ++t) {
        const std::size_t n = 4 + t % (max_vertices - 3);
        std::vector<std::size_t> code(n - 2);
        for (std::size_t i = 0; i < code.size(); ++i)
            code[i] = (7 * t + i * (2 * t + 3) + 5 * i * i) % n;

        // Prüfer decoding.
        std::vector<std::size_t> degree(n, 1);
        for (auto c : code)
            ++degree[c];
        std::vector<std::pair<Point, Point>> edges;
        for (auto c : code) {
            std::size_t leaf = 0;
            while (degree[leaf] != 1)
                ++leaf;
            edges.emplace_back(Point{static_cast<int>(leaf)}, Point{static_cast<int>(c)});
            --degree[leaf];
            --degree[c];
        }
        std::vector<int> last;
        for (std::size_t v = 0; v < n; ++v)
            if (degree[v] == 1)
                last.push_back(static_cast<int>(v));
        edges.emplace_back(Point{last.at(0)}, Point{last.at(1)});
        out.push_back(rooted_tree(edges, Point{0}));
    }
    return out;
}

std::vector<WedgeDecomposition> interval_wedges(int max_len)
{
    check_nonnegative(max_len, "max_len");
    std::vector<WedgeDecomposition> out;
    for (int a = 0; a <= max_len; ++a)
        for (int b = 0; b <= max_len; ++b)
            out.push_back(wedge_image(interval(-a, 0), interval(0, b), Point{0}));
    for (int a = 0; a <= max_len; ++a)
        for (int b = 0; b <= max_len; ++b) {
            std::vector<Point> horizontal, vertical;
            for (int i = 0; i <= a; ++i)
                horizontal.push_back(Point{-i, 0});
            for (int j = 0; j <= b; ++j)
                vertical.push_back(Point{0, j});
            out.push_back(wedge_image(DigitalImage(std::move(horizontal), Adjacency::cu(1)),
                                      DigitalImage(std::move(vertical), Adjacency::cu(1)),
                                      Point{0, 0}));
        }
    return out;
}

namespace {

using PairAudit = VerificationReport (*)(const ImagePtr&, const ImagePtr&, const VerifyOptions&);

VerificationReport over_pairs(const std::string& id, const std::vector<ImagePtr>& images,
                              PairAudit audit, const VerifyOptions& opts)
{
    std::vector<VerificationReport> parts;
    for (const auto& x : images)
        for (const auto& y : images)
            parts.push_back(audit(x, y, opts));
    return merge_reports(id, parts, opts);
}

const std::vector<std::pair<std::string, std::function<VerificationReport(const VerifyOptions&)>>>&
suites()
{
    static const std::vector<
        std::pair<std::string, std::function<VerificationReport(const VerifyOptions&)>>>
        table{
            {"continuity-oracle",
             [](const VerifyOptions& o) {
                 return over_pairs("continuity-oracle", standard_corpus(),
                                   &verify_continuity_oracle, o);
             }},
            {"shyness-oracle",
             [](const VerifyOptions& o) {
                 return over_pairs("shyness-oracle", standard_corpus(), &verify_shyness_oracle,
                                   o);
             }},
            {"equivalences",
             [](const VerifyOptions& o) {
                 return over_pairs("equivalences", standard_corpus(), &verify_equivalences, o);
             }},
            {"monotone",
             [](const VerifyOptions& o) {
                 return merge_reports("monotone", {verify_monotone_characterization(4, 2, o),
                                                   verify_monotone_characterization(5, 3, o)},
                                      o);
             }},
            {"scc-bound",
             [](const VerifyOptions& o) {
                 return merge_reports("scc-bound", {verify_scc_image_bound(4, 3, o),
                                                    verify_scc_image_bound(6, 3, o),
                                                    verify_scc_image_bound(8, 3, o)},
                                      o);
             }},
            {"products",
             [](const VerifyOptions& o) {
                 const auto images = factor_corpus();
                 std::vector<VerificationReport> parts;
                 for (const auto& a : images)
                     for (const auto& b : images)
                         for (const auto& c : images)
                             for (const auto& d : images)
                                 parts.push_back(verify_product_theorem(a, b, c, d, o));
                 return merge_reports("products", parts, o);
             }},
            {"cu-product",
             [](const VerifyOptions& o) {
                 return merge_reports("cu-product", {verify_cu_product_identity(1, 1, 1, o),
                                                     verify_cu_product_identity(1, 2, 1, o)},
                                      o);
             }},
            {"wedge",
             [](const VerifyOptions& o) {
                 const auto wedges = interval_wedges(2);
                 std::vector<VerificationReport> parts;
                 for (const auto& dom : wedges)
                     for (const auto& cod : wedges)
                         parts.push_back(verify_wedge_theorem(dom, cod, o));
                 return merge_reports("wedge", parts, o);
             }},
            {"composition",
             [](const VerifyOptions& o) { return verify_composition_closure(corpus_up_to(4), o); }},
            {"isomorphism",
             [](const VerifyOptions& o) { return verify_isomorphism_laws(standard_corpus(), o); }},
            {"cut-vertex",
             [](const VerifyOptions& o) {
                 std::vector<VerificationReport> parts{verify_cut_vertex_bound(figure_tree(), 3, o)};
                 for (const auto& t : generated_trees(20, 9))
                     parts.push_back(verify_cut_vertex_bound(t, 3, o));
                 return merge_reports("cut-vertex", parts, o);
             }},
        };
    return table;
}

} // namespace

std::vector<std::string> suite_names()
{
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites())
        out.push_back(name);
    return out;
}

VerificationReport run_suite(const std::string& name, const VerifyOptions& opts)
{
    for (const auto& [n, fn] : suites())
        if (n == name)
            return fn(opts);
    throw InvalidInput("unknown verification suite '" + name + "'");
}

std::vector<VerificationReport> run_all_suites(const VerifyOptions& opts)
{
    std::vector<VerificationReport> out;
    for (const auto& [name, fn] : suites())
        out.push_back(fn(opts));
    return out;
}

} // namespace shy
