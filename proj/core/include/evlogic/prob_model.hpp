#pragma once

#include "evlogic/frame.hpp"
#include "evlogic/mass.hpp"
#include "evlogic/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace evlogic {

// The evidence algebra over two evidence propositions E1, E2 has four
// joint truth-value cells. They are indexed in this fixed order.
inline constexpr int num_cells = 4;
enum class EvidenceCell : int {
    e1_and_e2 = 0,   // E1 and E2
    e1_not_e2 = 1,   // E1 and not E2
    not_e1_e2 = 2,   // not E1 and E2
    neither = 3,     // not E1 and not E2
};

const char* cell_name(EvidenceCell cell);

/// Cell subsets as 4-bit masks, bit i == cell i.
using CellSet = unsigned;
inline constexpr CellSet cells_all = 0xF;
inline constexpr CellSet cells_e1 = 0x3;       // {e1_and_e2, e1_not_e2}
inline constexpr CellSet cells_e2 = 0x5;       // {e1_and_e2, not_e1_e2}
inline constexpr CellSet cells_both = 0x1;     // {e1_and_e2}
inline constexpr CellSet cells_none = 0x0;

/// A product event A x C over the atom space Theta x E: the hypotheses in
/// `theta` crossed with the evidence cells in `cells`. All events this
/// library conditions on have this rectangular shape.
struct Event {
    SubsetMask theta;
    CellSet cells = cells_all;
};

inline Event intersect(const Event& a, const Event& b) {
    return Event{a.theta & b.theta, a.cells & b.cells};
}

/// A full joint probability assignment over Theta x E: 4 cells per frame
/// element, entries non-negative, total exactly 1.
class ProbAssignment {
public:
    const Frame& frame() const { return frame_; }

    const Rat& at(int element, int cell) const { return p_[static_cast<std::size_t>(element * num_cells + cell)]; }
    const Rat& at(int element, EvidenceCell cell) const { return at(element, static_cast<int>(cell)); }

    /// Flat view, element-major: p[element*4 + cell].
    const std::vector<Rat>& atoms() const { return p_; }

private:
    Frame frame_;
    std::vector<Rat> p_;

    ProbAssignment(Frame frame, std::vector<Rat> p) : frame_(std::move(frame)), p_(std::move(p)) {}
    friend ProbAssignment make_assignment(const Frame&, std::vector<Rat>);
};

/// Validates entries (non-negative, sum exactly 1, size = 4 * frame size).
ProbAssignment make_assignment(const Frame& frame, std::vector<Rat> p);

/// P(A x cells): sum of atoms in the rectangle.
Rat marginal(const ProbAssignment& p, const SubsetMask& a, CellSet cells = cells_all);
Rat marginal(const ProbAssignment& p, const Event& e);

/// P(A | B) = P(A and B) / P(B). Throws UndefinedConditionalError when
/// P(B) = 0.
Rat cond_prob(const ProbAssignment& p, const Event& a, const Event& b);

/// The hypotheses of the agreement theorem: shared focal blocks S_1..S_k
/// and two mass functions whose focal families are exactly those blocks.
class AgreementSpec {
public:
    /// Strict factory: blocks must partition the frame.
    static AgreementSpec make(const Partition& partition, MassFunction m1, MassFunction m2);

    /// Relaxed factory for non-partition block families (overlapping
    /// focal sets). Blocks must be non-empty and the focal families must
    /// still match; disjointness and coverage are not enforced.
    static AgreementSpec make_with_blocks(const Frame& frame, std::vector<SubsetMask> blocks, MassFunction m1,
                                         MassFunction m2);

    const Frame& frame() const { return frame_; }
    const std::vector<SubsetMask>& blocks() const { return blocks_; }
    int k() const { return static_cast<int>(blocks_.size()); }
    const MassFunction& m1() const { return m1_; }
    const MassFunction& m2() const { return m2_; }

private:
    Frame frame_;
    std::vector<SubsetMask> blocks_;
    MassFunction m1_, m2_;

    AgreementSpec(Frame frame, std::vector<SubsetMask> blocks, MassFunction m1, MassFunction m2)
        : frame_(std::move(frame)), blocks_(std::move(blocks)), m1_(std::move(m1)), m2_(std::move(m2)) {}
};

struct ConditionViolation {
    int block;      // block index, or -1 for frame-level facts
    Rat lhs, rhs;
    std::string note;
};

/// Outcome of checking the four agreement conditions against a joint
/// assignment. Violations are data, not errors.
struct ConditionReport {
    bool cond_i = true;    // P(S_i) = 1/k
    bool cond_ii = true;   // P(E1 and E2 | S_i) = P(E1|S_i) P(E2|S_i)
    bool cond_iii = true;  // P(S_i|E1) = m1(S_i), P(S_i|E2) = m2(S_i)
    bool cond_iv = true;   // P(E1 and E2) > 0
    std::vector<ConditionViolation> violations_i, violations_ii, violations_iii, violations_iv;

    bool all_pass() const { return cond_i && cond_ii && cond_iii && cond_iv; }
};

ConditionReport check_agreement_conditions(const ProbAssignment& p, const AgreementSpec& spec);

/// Per-block evidence likelihoods a_i = P(E1|S_i), b_i = P(E2|S_i).
struct EvidenceParams {
    std::vector<Rat> p_e1_given_block;
    std::vector<Rat> p_e2_given_block;
};

/// Per-block conditional distributions over the block's own elements, in
/// frame index order within each block. Each inner vector sums to 1.
using WithinBlockDists = std::vector<std::vector<Rat>>;

/// Builds a member of the constraint set: p(theta, cell) =
/// (1/k) * q_i(theta) * f_i(cell), with the cell factor from per-block
/// independence of E1 and E2. Without explicit evidence params the
/// feasible choice a_i = m1(S_i), b_i = m2(S_i) is used ("solve" mode);
/// explicit params are validated against condition (iii) and rejected
/// with InfeasibleError when no member can have those likelihoods.
/// The result always passes check_agreement_conditions.
ProbAssignment construct_member(const AgreementSpec& spec, const WithinBlockDists& within_block,
                                const std::optional<EvidenceParams>& evidence = std::nullopt);

/// Uniform within-block distributions for `spec` (convenience input to
/// construct_member and the sampler).
WithinBlockDists uniform_within_blocks(const AgreementSpec& spec);

/// The minimizing member from the agreement theorem's constructive proof:
/// blocks inside A are copied from `reference`; every other block has its
/// block-and-cell mass concentrated on the lowest-index element of
/// S_i - A. The result still satisfies all four conditions and attains
/// P(A | E1 and E2) = Bel(A) under m1 (+) m2.
/// Throws ValidationError when `reference` fails the conditions.
ProbAssignment extremal_member(const AgreementSpec& spec, const SubsetMask& a, const ProbAssignment& reference);

/// Deterministic sampler over the constraint set: varies the within-block
/// distributions and the feasible evidence likelihood scalings. Every
/// returned assignment passes check_agreement_conditions. Exact duplicates
/// are dropped, so fewer than `count` members may come back.
std::vector<ProbAssignment> sample_gamma(const AgreementSpec& spec, int count, std::uint64_t seed);

} // namespace evlogic
