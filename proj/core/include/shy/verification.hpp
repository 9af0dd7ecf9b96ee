#pragma once

#include "shy/constructions.hpp"
#include "shy/enumeration.hpp"
#include "shy/image.hpp"
#include "shy/maps.hpp"

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace shy {

struct Counterexample {
    std::string description;
    /// The offending map(s) as (x, f(x)) pairs in canonical domain order.
    std::vector<std::vector<std::pair<Point, Point>>> maps;
    std::vector<Point> witness;
};

/// Outcome of one theorem audit. passed holds exactly when counterexamples is
/// empty; only the first VerifyOptions::max_counterexamples are kept.
struct VerificationReport {
    std::string theorem_id;
    std::uint64_t instances_checked = 0;
    bool passed = true;
    std::vector<Counterexample> counterexamples;
    std::chrono::nanoseconds wall_time{0};
};

struct VerifyOptions {
    std::uint64_t bound = default_enumeration_bound;
    std::size_t max_counterexamples = 32;
};

/// Concatenates reports in the order given under a new id.
VerificationReport merge_reports(std::string theorem_id,
                                 const std::vector<VerificationReport>& parts,
                                 const VerifyOptions& opts = {});

/// Points whose removal disconnects img. Throws InvalidInput if img is not
/// connected.
PointSet find_articulation_points(const DigitalImage& img);

/// Continuous surjections [0,x_len] -> [0,y_len]: shy iff monotone.
VerificationReport verify_monotone_characterization(int x_len, int y_len,
                                                    const VerifyOptions& opts = {});

/// On the m-cycle, shy maps onto [0,k] exist only for k <= 1. Every shy map
/// found for 2 <= k <= k_max is a counterexample.
VerificationReport verify_scc_image_bound(int m, int k_max, const VerifyOptions& opts = {});

/// Every shy map from `img` onto a subinterval of [0,k] is constant (equal to
/// f(r)) on all but at most 2 components of img minus r, for every
/// articulation point r.
VerificationReport verify_cut_vertex_bound(const ImagePtr& img, int k,
                                           const VerifyOptions& opts = {});
/// As above for the tree image, plus the same bound over the root's branches.
VerificationReport verify_cut_vertex_bound(const RootedTree& tree, int k,
                                           const VerifyOptions& opts = {});

/// For continuous surjections f: A -> C and g: B -> D,
/// shy(f) and shy(g) iff shy(f x g).
VerificationReport verify_product_theorem(const ImagePtr& a, const ImagePtr& b,
                                          const ImagePtr& c, const ImagePtr& d,
                                          const VerifyOptions& opts = {});

/// For all maps of the sides agreeing at the junctions,
/// shy(f) and shy(g) iff shy(f ∧ g).
VerificationReport verify_wedge_theorem(const WedgeDecomposition& dom,
                                        const WedgeDecomposition& cod,
                                        const VerifyOptions& opts = {});

/// For continuous surjections X -> Y the four shyness characterizations agree:
/// the point/pair preimage test, connected preimages of connected sets, the
/// inverse as a connectivity-preserving multifunction (checked over subsets),
/// and weak continuity of the inverse with connected fibers.
VerificationReport verify_equivalences(const ImagePtr& x, const ImagePtr& y,
                                       const VerifyOptions& opts = {});

/// Over all ordered pairs in [-radius, radius]^(m+n), the normal product of
/// c_m and c_n agrees with c_(m+n).
VerificationReport verify_cu_product_identity(int m, int n, int radius,
                                              const VerifyOptions& opts = {});

/// All functions X -> Y: the edge test agrees with the connected-subset oracle.
VerificationReport verify_continuity_oracle(const ImagePtr& x, const ImagePtr& y,
                                            const VerifyOptions& opts = {});
/// Continuous surjections X -> Y: the preimage test agrees with the oracle.
VerificationReport verify_shyness_oracle(const ImagePtr& x, const ImagePtr& y,
                                         const VerifyOptions& opts = {});

/// Shy f: A -> B and shy g: B -> C give shy g∘f, over all triples of images.
VerificationReport verify_composition_closure(const std::vector<ImagePtr>& images,
                                              const VerifyOptions& opts = {});

/// Over continuous surjections between all pairs: isomorphism implies shy,
/// and shy plus injective implies isomorphism.
VerificationReport verify_isomorphism_laws(const std::vector<ImagePtr>& images,
                                           const VerifyOptions& opts = {});

// Fixed audit corpora. Everything here is deterministic.

/// Thirteen images of at most 6 points: intervals, lattice shapes under c_1 and
/// c_2, disconnected sets, a cycle, a star.
std::vector<ImagePtr> standard_corpus();
/// Members of standard_corpus() with at most max_points points.
std::vector<ImagePtr> corpus_up_to(std::size_t max_points);
/// Every graph on at most 3 vertices up to isomorphism, embedded in Z or Z^2.
std::vector<ImagePtr> factor_corpus();
/// The 11-vertex tree whose root has three branches with vertex sets
/// {r,v0}, {r,v1,p0,p2,p3}, {r,v2,p1,p4,p5,p6}.
RootedTree figure_tree();
/// `count` trees on 4..max_vertices vertices decoded from fixed Prüfer
/// sequences, rooted at vertex 0.
std::vector<RootedTree> generated_trees(std::size_t count, std::size_t max_vertices);
/// Wedges [-a,0] ∧ [0,b] in Z and L-shaped wedges in Z^2 under c_1, with
/// side lengths up to max_len.
std::vector<WedgeDecomposition> interval_wedges(int max_len);

/// Named audit suites at their default settings, as run by `verify all`.
std::vector<std::string> suite_names();
/// Throws InvalidInput for an unknown name.
VerificationReport run_suite(const std::string& name, const VerifyOptions& opts = {});
std::vector<VerificationReport> run_all_suites(const VerifyOptions& opts = {});

} // namespace shy
