#include "evlogic/mass.hpp"

#include "evlogic/errors.hpp"

namespace evlogic {

Rat MassFunction::mass_of(const SubsetMask& set) const {
    if (set.frame() != frame_)
        throw FrameMismatchError("mass_of: subset from a different frame");
    return mass_of(set.bits());
}

Rat MassFunction::mass_of(std::uint64_t bits) const {
    auto it = focal_.find(bits);
    return it == focal_.end() ? Rat(0) : it->second;
}

MassFunction make_mass(const Frame& frame, const std::vector<std::pair<SubsetMask, Rat>>& assignments,
                       bool renormalize) {
    if (assignments.empty())
        throw ValidationError("mass function needs at least one focal set");
    std::map<std::uint64_t, Rat> focal;
    Rat sum = 0;
    for (const auto& [set, mass] : assignments) {
        if (set.frame() != frame)
            throw FrameMismatchError("focal set from a different frame");
        if (set.is_empty())
            throw ValidationError("the empty set cannot carry mass");
        if (mass <= 0)
            throw ValidationError("masses must be positive, got " + to_fraction_string(mass));
        focal[set.bits()] += mass;
        sum += mass;
    }
    if (sum != 1) {
        if (!renormalize)
            throw ValidationError("masses sum to " + to_fraction_string(sum) + ", expected exactly 1");
        Rat err = rat_abs(sum - 1);
        // tolerance 1e-9, compared exactly
        if (err * 1000000000 > 1)
            throw ValidationError("masses sum to " + to_fraction_string(sum) + ", off by more than 1e-9");
        for (auto& [bits, mass] : focal)
            mass /= sum;
    }
    return MassFunction(frame, std::move(focal));
}

MassFunction vacuous(const Frame& frame) {
    return make_mass(frame, {{SubsetMask::full(frame), Rat(1)}});
}

CombinationResult combine(const MassFunction& m1, const MassFunction& m2) {
    if (m1.frame() != m2.frame())
        throw FrameMismatchError("combine: mass functions over different frames");
    const Frame& frame = m1.frame();

    std::map<std::uint64_t, Rat> pooled;
    Rat conflict = 0;
    for (const auto& [a, ma] : m1.focal()) {
        for (const auto& [b, mb] : m2.focal()) {
            std::uint64_t inter = a & b;
            Rat prod = ma * mb;
            if (inter == 0)
                conflict += prod;
            else
                pooled[inter] += prod;
        }
    }
    if (conflict == 1)
        throw TotalConflictError("total conflict (K = 1): the orthogonal sum is undefined");

    Rat norm = Rat(1) - conflict;
    std::vector<std::pair<SubsetMask, Rat>> assignments;
    assignments.reserve(pooled.size());
    for (const auto& [bits, mass] : pooled)
        assignments.emplace_back(SubsetMask(frame, bits), mass / norm);
    return CombinationResult{make_mass(frame, assignments), conflict};
}

Rat belief(const MassFunction& m, const SubsetMask& a) {
    if (a.frame() != m.frame())
        throw FrameMismatchError("belief: subset from a different frame");
    Rat total = 0;
    for (const auto& [bits, mass] : m.focal())
        if ((bits & ~a.bits()) == 0)
            total += mass;
    return total;
}

Rat plausibility(const MassFunction& m, const SubsetMask& a) {
    if (a.frame() != m.frame())
        throw FrameMismatchError("plausibility: subset from a different frame");
    return Rat(1) - belief(m, a.complement());
}

} // namespace evlogic
