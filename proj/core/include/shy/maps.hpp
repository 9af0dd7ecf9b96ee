#pragma once

#include "shy/connectivity.hpp"
#include "shy/image.hpp"
#include "shy/point.hpp"

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace shy {

/// A total function between the point sets of two digital images.
///
/// Values are stored as codomain indices in the domain's canonical point
/// order, so two functions with the same images compare equal exactly when
/// they agree pointwise.
class DigitalFunction {
public:
    /// values[i] is the codomain index of f(domain.point(i)).
    DigitalFunction(ImagePtr domain, ImagePtr codomain, std::vector<std::size_t> values);

    /// Each domain point must be assigned exactly once, to a codomain point.
    static DigitalFunction from_pairs(ImagePtr domain, ImagePtr codomain,
                                      const std::vector<std::pair<Point, Point>>& pairs);
    /// values[i] is f(domain.point(i)).
    static DigitalFunction from_values(ImagePtr domain, ImagePtr codomain,
                                       const std::vector<Point>& values);
    static DigitalFunction identity(ImagePtr image);
    static DigitalFunction constant(ImagePtr domain, ImagePtr codomain, const Point& value);

    [[nodiscard]] const DigitalImage& domain() const { return *domain_; }
    [[nodiscard]] const DigitalImage& codomain() const { return *codomain_; }
    [[nodiscard]] const ImagePtr& domain_ptr() const { return domain_; }
    [[nodiscard]] const ImagePtr& codomain_ptr() const { return codomain_; }

    [[nodiscard]] const Point& operator()(const Point& x) const;
    [[nodiscard]] std::size_t value_index(std::size_t i) const { return values_[i]; }
    [[nodiscard]] std::span<const std::size_t> values() const { return values_; }
    [[nodiscard]] std::vector<std::pair<Point, Point>> pairs() const;

    friend bool operator==(const DigitalFunction& a, const DigitalFunction& b);

private:
    ImagePtr domain_;
    ImagePtr codomain_;
    std::vector<std::size_t> values_;
};

/// A total set-valued map; every value set is nonempty.
class MultiFunction {
public:
    /// values[i] holds the target indices of m(source.point(i)).
    MultiFunction(ImagePtr source, ImagePtr target, std::vector<IndexSet> values);

    [[nodiscard]] const DigitalImage& source() const { return *source_; }
    [[nodiscard]] const DigitalImage& target() const { return *target_; }
    [[nodiscard]] const IndexSet& value_indices(std::size_t i) const { return values_[i]; }
    [[nodiscard]] PointSet operator()(const Point& x) const;

private:
    ImagePtr source_;
    ImagePtr target_;
    std::vector<IndexSet> values_;
};

enum class Reason {
    none,
    not_continuous,
    not_surjective,
    not_injective,
    inverse_not_continuous,
    disconnected_point_preimage,
    disconnected_pair_preimage,
    disconnected_subset_preimage,
    disconnected_subset_image,
    weak_continuity_violated,
    disconnected_value_set,
};

std::string_view to_string(Reason r);

/// Outcome of a decision procedure. When `holds` is false, `reason` says which
/// condition failed and `witness` holds the first offending points (a pair, a
/// codomain set, or a subset) in canonical order.
struct Verdict {
    bool holds = true;
    Reason reason = Reason::none;
    std::vector<Point> witness;

    explicit operator bool() const { return holds; }

    static Verdict pass() { return {}; }
    static Verdict fail(Reason r, std::vector<Point> w) { return {false, r, std::move(w)}; }
};

Verdict check_continuous(const DigitalFunction& f);
Verdict check_surjective(const DigitalFunction& f);
Verdict check_injective(const DigitalFunction& f);
Verdict check_isomorphism(const DigitalFunction& f);
/// Preimages of single points and of adjacent pairs must be connected.
/// Maps that are not continuous surjections fail with the matching reason.
Verdict check_shy(const DigitalFunction& f);

inline bool is_continuous(const DigitalFunction& f) { return check_continuous(f).holds; }
inline bool is_surjective(const DigitalFunction& f) { return check_surjective(f).holds; }
inline bool is_injective(const DigitalFunction& f) { return check_injective(f).holds; }
inline bool is_isomorphism(const DigitalFunction& f) { return check_isomorphism(f).holds; }
inline bool is_shy(const DigitalFunction& f) { return check_shy(f).holds; }

/// f^{-1}(subset), as domain indices in canonical order.
IndexSet preimage_indices(const DigitalFunction& f, std::span<const std::size_t> codomain_subset);
PointSet preimage(const DigitalFunction& f, const PointSet& codomain_subset);

/// g after f. Throws InvalidInput unless f.codomain() == g.domain().
DigitalFunction compose(const DigitalFunction& g, const DigitalFunction& f);

/// y -> f^{-1}(y). Throws PreconditionViolation if f is not surjective.
MultiFunction inverse_multifunction(const DigitalFunction& f);

Verdict check_weak_continuity(const MultiFunction& m);
inline bool has_weak_continuity(const MultiFunction& m) { return check_weak_continuity(m).holds; }

enum class PreservationMode {
    characterization, // weak continuity plus connected value sets
    oracle,           // every connected subset of the source, guarded by size
};

Verdict check_connectivity_preserving(const MultiFunction& m,
                                      PreservationMode mode = PreservationMode::characterization);
inline bool is_connectivity_preserving(const MultiFunction& m,
                                       PreservationMode mode = PreservationMode::characterization)
{
    return check_connectivity_preserving(m, mode).holds;
}

struct MapClassification {
    bool continuous = false;
    bool surjective = false;
    bool injective = false;
    bool shy = false;
    bool isomorphism = false;

    friend bool operator==(const MapClassification&, const MapClassification&) = default;
};

MapClassification classify(const DigitalFunction& f);

} // namespace shy
