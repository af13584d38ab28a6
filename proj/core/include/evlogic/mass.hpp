#pragma once

#include "evlogic/frame.hpp"
#include "evlogic/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace evlogic {

/// A mass function: strictly positive masses on non-empty focal subsets,
/// summing to exactly 1. Immutable after construction.
class MassFunction {
public:
    const Frame& frame() const { return frame_; }

    /// Focal masses keyed by subset bit pattern, in ascending mask order.
    const std::map<std::uint64_t, Rat>& focal() const { return focal_; }

    /// Mass of a subset; zero when it is not focal.
    Rat mass_of(const SubsetMask& set) const;
    Rat mass_of(std::uint64_t bits) const;

    friend bool operator==(const MassFunction& a, const MassFunction& b) {
        return a.frame_ == b.frame_ && a.focal_ == b.focal_;
    }

private:
    Frame frame_;
    std::map<std::uint64_t, Rat> focal_;

    MassFunction(Frame frame, std::map<std::uint64_t, Rat> focal)
        : frame_(std::move(frame)), focal_(std::move(focal)) {}

    friend MassFunction make_mass(const Frame&, const std::vector<std::pair<SubsetMask, Rat>>&, bool);
    friend class MassBuilder;
};

/// Builds a validated mass function. Duplicate focal sets merge by
/// addition. With `renormalize` false the masses must sum to exactly 1;
/// with it true a sum within 1e-9 of 1 is accepted and divided out so the
/// stored masses again sum to exactly 1 (for decimal input).
/// Throws ValidationError (empty-set mass, non-positive mass, bad sum).
MassFunction make_mass(const Frame& frame, const std::vector<std::pair<SubsetMask, Rat>>& assignments,
                       bool renormalize = false);

/// The vacuous mass function: all mass on the full frame.
MassFunction vacuous(const Frame& frame);

/// Result of Dempster's rule: the orthogonal sum and the conflict mass K
/// that was discarded and renormalized away.
struct CombinationResult {
    MassFunction combined;
    Rat conflict;
};

/// Dempster's rule of combination. Enumerates all focal pairs, pools the
/// products by intersection, drops the empty intersections (conflict K)
/// and renormalizes by 1-K. Exact on rational inputs.
/// Throws TotalConflictError when K = 1 and FrameMismatchError on mixed
/// frames.
CombinationResult combine(const MassFunction& m1, const MassFunction& m2);

/// Bel(A): total mass on subsets of A.
Rat belief(const MassFunction& m, const SubsetMask& a);

/// Pls(A) = 1 - Bel(complement of A): total mass on sets meeting A.
Rat plausibility(const MassFunction& m, const SubsetMask& a);

} // namespace evlogic
