#include "shy/oracles.hpp"

#include "masks.hpp"

#include <bit>

namespace shy {

using masks::Mask;

ContinuityOracle::ContinuityOracle(const DigitalImage& domain, const DigitalImage& codomain,
                                   std::size_t guard)
{
    masks::require_guard(domain, guard, "continuity oracle domain");
    masks::require_mask_width(codomain, "continuity oracle codomain");
    domain_size_ = domain.size();
    domain_connected_ = masks::all_connected(domain);
    codomain_neighbors_ = masks::neighbor_masks(codomain);
}

Verdict ContinuityOracle::operator()(const DigitalFunction& f) const
{
    if (domain_size_ != f.domain().size() || codomain_neighbors_.size() != f.codomain().size())
        throw InvalidInput("continuity oracle was built for different images");
    for (const Mask a : domain_connected_) {
        Mask image = 0;
        for (Mask s = a; s; s &= s - 1)
            image |= Mask{1} << f.value_index(static_cast<std::size_t>(std::countr_zero(s)));
        if (!masks::connected(image, codomain_neighbors_))
            return Verdict::fail(Reason::disconnected_subset_image,
                                 masks::points_of(f.domain(), a));
    }
    return Verdict::pass();
}

ShynessOracle::ShynessOracle(const DigitalImage& domain, const DigitalImage& codomain,
                             std::size_t guard)
{
    masks::require_guard(codomain, guard, "shyness oracle codomain");
    masks::require_mask_width(domain, "shyness oracle domain");
    codomain_connected_ = masks::all_connected(codomain);
    domain_neighbors_ = masks::neighbor_masks(domain);
}

Verdict ShynessOracle::operator()(const DigitalFunction& f) const
{
    if (domain_neighbors_.size() != f.domain().size())
        throw InvalidInput("shyness oracle was built for different images");
    if (!is_continuous(f) || !is_surjective(f))
        throw PreconditionViolation("shyness oracle requires a continuous surjection");

    std::vector<Mask> fiber(f.codomain().size(), 0);
    for (std::size_t i = 0; i < f.domain().size(); ++i)
        fiber[f.value_index(i)] |= Mask{1} << i;

    for (const Mask target : codomain_connected_) {
        Mask pre = 0;
        for (Mask s = target; s; s &= s - 1)
            pre |= fiber[static_cast<std::size_t>(std::countr_zero(s))];
        if (!masks::connected(pre, domain_neighbors_))
            return Verdict::fail(Reason::disconnected_subset_preimage,
                                 masks::points_of(f.codomain(), target));
    }
    return Verdict::pass();
}

bool continuity_oracle(const DigitalFunction& f, std::size_t guard)
{
    return ContinuityOracle(f.domain(), f.codomain(), guard)(f).holds;
}

bool shyness_oracle(const DigitalFunction& f, std::size_t guard)
{
    return ShynessOracle(f.domain(), f.codomain(), guard)(f).holds;
}

Verdict connectivity_preserving_oracle(const MultiFunction& m, std::size_t guard)
{
    masks::require_guard(m.source(), guard, "connectivity-preservation oracle source");
    masks::require_mask_width(m.target(), "connectivity-preservation oracle target");
    const auto target_nbrs = masks::neighbor_masks(m.target());

    std::vector<Mask> value(m.source().size(), 0);
    for (std::size_t x = 0; x < m.source().size(); ++x)
        for (auto t : m.value_indices(x))
            value[x] |= Mask{1} << t;

    for (const Mask a : masks::all_connected(m.source())) {
        Mask image = 0;
        for (Mask s = a; s; s &= s - 1)
            image |= value[static_cast<std::size_t>(std::countr_zero(s))];
        if (!masks::connected(image, target_nbrs))
            return Verdict::fail(Reason::disconnected_subset_image,
                                 masks::points_of(m.source(), a));
    }
    return Verdict::pass();
}

} // namespace shy
