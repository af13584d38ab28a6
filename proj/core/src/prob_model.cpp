#include "evlogic/prob_model.hpp"

#include "evlogic/errors.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

namespace evlogic {

const char* cell_name(EvidenceCell cell) {
    switch (cell) {
    case EvidenceCell::e1_and_e2: return "E1&E2";
    case EvidenceCell::e1_not_e2: return "E1&!E2";
    case EvidenceCell::not_e1_e2: return "!E1&E2";
    case EvidenceCell::neither: return "!E1&!E2";
    }
    return "?";
}

ProbAssignment make_assignment(const Frame& frame, std::vector<Rat> p) {
    if (p.size() != static_cast<std::size_t>(frame.size()) * num_cells)
        throw ValidationError("assignment needs exactly 4 entries per element");
    Rat sum = 0;
    for (const Rat& x : p) {
        if (x < 0)
            throw ValidationError("negative probability entry " + to_fraction_string(x));
        sum += x;
    }
    if (sum != 1)
        throw ValidationError("assignment sums to " + to_fraction_string(sum) + ", expected exactly 1");
    return ProbAssignment(frame, std::move(p));
}

Rat marginal(const ProbAssignment& p, const SubsetMask& a, CellSet cells) {
    if (a.frame() != p.frame())
        throw FrameMismatchError("marginal: subset from a different frame");
    Rat total = 0;
    for (int i = 0; i < p.frame().size(); ++i) {
        if (!a.contains(i))
            continue;
        for (int c = 0; c < num_cells; ++c)
            if (cells & (1u << c))
                total += p.at(i, c);
    }
    return total;
}

Rat marginal(const ProbAssignment& p, const Event& e) {
    return marginal(p, e.theta, e.cells);
}

Rat cond_prob(const ProbAssignment& p, const Event& a, const Event& b) {
    Rat pb = marginal(p, b);
    if (pb == 0)
        throw UndefinedConditionalError("conditioning on an event of probability zero");
    return marginal(p, intersect(a, b)) / pb;
}

namespace {

void require_focal_family(const MassFunction& m, const std::vector<SubsetMask>& blocks, const char* which) {
    if (m.focal().size() != blocks.size())
        throw ValidationError(std::string(which) + ": focal family does not match the block set");
    for (const auto& block : blocks)
        if (m.focal().find(block.bits()) == m.focal().end())
            throw ValidationError(std::string(which) + ": focal family does not match the block set");
}

} // namespace

AgreementSpec AgreementSpec::make(const Partition& partition, MassFunction m1, MassFunction m2) {
    return make_with_blocks(partition.frame, partition.blocks, std::move(m1), std::move(m2));
}

AgreementSpec AgreementSpec::make_with_blocks(const Frame& frame, std::vector<SubsetMask> blocks, MassFunction m1,
                                            MassFunction m2) {
    if (blocks.empty())
        throw ValidationError("need at least one block");
    for (const auto& block : blocks) {
        if (block.frame() != frame)
            throw FrameMismatchError("block from a different frame");
        if (block.is_empty())
            throw ValidationError("blocks must be non-empty");
    }
    if (m1.frame() != frame || m2.frame() != frame)
        throw FrameMismatchError("mass function over a different frame");
    require_focal_family(m1, blocks, "m1");
    require_focal_family(m2, blocks, "m2");
    return AgreementSpec(frame, std::move(blocks), std::move(m1), std::move(m2));
}

ConditionReport check_agreement_conditions(const ProbAssignment& p, const AgreementSpec& spec) {
    if (p.frame() != spec.frame())
        throw FrameMismatchError("check_agreement_conditions: assignment over a different frame");
    ConditionReport report;
    const int k = spec.k();
    Rat p_e1 = marginal(p, SubsetMask::full(p.frame()), cells_e1);
    Rat p_e2 = marginal(p, SubsetMask::full(p.frame()), cells_e2);
    Rat p_both = marginal(p, SubsetMask::full(p.frame()), cells_both);

    for (int i = 0; i < k; ++i) {
        const SubsetMask& block = spec.blocks()[i];
        Rat p_block = marginal(p, block);

        // (i) P(S_i) = 1/k
        Rat want = Rat(1, k);
        if (p_block != want) {
            report.cond_i = false;
            report.violations_i.push_back({i, p_block, want, "P(S_i) != 1/k"});
        }

        // (ii) P(E1&E2 | S_i) = P(E1|S_i) P(E2|S_i)
        if (p_block == 0) {
            report.cond_ii = false;
            report.violations_ii.push_back({i, Rat(0), Rat(0), "P(S_i) = 0: conditional undefined"});
        } else {
            Rat lhs = marginal(p, block, cells_both) / p_block;
            Rat rhs = (marginal(p, block, cells_e1) / p_block) * (marginal(p, block, cells_e2) / p_block);
            if (lhs != rhs) {
                report.cond_ii = false;
                report.violations_ii.push_back({i, lhs, rhs, "independence fails on S_i"});
            }
        }

        // (iii) P(S_i|E1) = m1(S_i) and P(S_i|E2) = m2(S_i)
        Rat want1 = spec.m1().mass_of(block.bits());
        Rat want2 = spec.m2().mass_of(block.bits());
        if (p_e1 == 0) {
            report.cond_iii = false;
            if (i == 0)
                report.violations_iii.push_back({-1, Rat(0), want1, "P(E1) = 0: conditional undefined"});
        } else {
            Rat got = marginal(p, block, cells_e1) / p_e1;
            if (got != want1) {
                report.cond_iii = false;
                report.violations_iii.push_back({i, got, want1, "P(S_i|E1) != m1(S_i)"});
            }
        }
        if (p_e2 == 0) {
            report.cond_iii = false;
            if (i == 0)
                report.violations_iii.push_back({-1, Rat(0), want2, "P(E2) = 0: conditional undefined"});
        } else {
            Rat got = marginal(p, block, cells_e2) / p_e2;
            if (got != want2) {
                report.cond_iii = false;
                report.violations_iii.push_back({i, got, want2, "P(S_i|E2) != m2(S_i)"});
            }
        }
    }

    // (iv) P(E1&E2) > 0
    if (!(p_both > 0)) {
        report.cond_iv = false;
        report.violations_iv.push_back({-1, p_both, Rat(0), "P(E1&E2) must be positive"});
    }
    return report;
}

namespace {

// Cell factor for a block with P(E1|S_i) = a and P(E2|S_i) = b, cells
// independent within the block.
std::array<Rat, num_cells> cell_factor(const Rat& a, const Rat& b) {
    return {a * b, a * (Rat(1) - b), (Rat(1) - a) * b, (Rat(1) - a) * (Rat(1) - b)};
}

std::vector<int> block_elements(const SubsetMask& block) {
    std::vector<int> out;
    for (int i = 0; i < block.frame().size(); ++i)
        if (block.contains(i))
            out.push_back(i);
    return out;
}

} // namespace

ProbAssignment construct_member(const AgreementSpec& spec, const WithinBlockDists& within_block,
                                const std::optional<EvidenceParams>& evidence) {
    const int k = spec.k();
    if (within_block.size() != static_cast<std::size_t>(k))
        throw ValidationError("need one within-block distribution per block");

    // Evidence likelihoods: either validated as given, or the canonical
    // feasible choice a_i = m1(S_i), b_i = m2(S_i).
    std::vector<Rat> a(k), b(k);
    if (evidence) {
        if (evidence->p_e1_given_block.size() != static_cast<std::size_t>(k) ||
            evidence->p_e2_given_block.size() != static_cast<std::size_t>(k))
            throw ValidationError("evidence params need one entry per block");
        Rat sum_a = 0, sum_b = 0;
        for (int i = 0; i < k; ++i) {
            a[i] = evidence->p_e1_given_block[i];
            b[i] = evidence->p_e2_given_block[i];
            if (a[i] < 0 || a[i] > 1 || b[i] < 0 || b[i] > 1)
                throw ValidationError("evidence likelihoods must lie in [0,1]");
            sum_a += a[i];
            sum_b += b[i];
        }
        if (sum_a == 0 || sum_b == 0)
            throw InfeasibleError("evidence likelihoods all zero: P(E) = 0 leaves condition (iii) unsatisfiable");
        // Condition (iii) forces P(S_i|E1) = a_i / sum(a) = m1(S_i).
        for (int i = 0; i < k; ++i) {
            if (a[i] != spec.m1().mass_of(spec.blocks()[i].bits()) * sum_a)
                throw InfeasibleError("no member has P(E1|S_" + std::to_string(i + 1) + ") = " +
                                      to_fraction_string(a[i]) + " under condition (iii)");
            if (b[i] != spec.m2().mass_of(spec.blocks()[i].bits()) * sum_b)
                throw InfeasibleError("no member has P(E2|S_" + std::to_string(i + 1) + ") = " +
                                      to_fraction_string(b[i]) + " under condition (iii)");
        }
    } else {
        for (int i = 0; i < k; ++i) {
            a[i] = spec.m1().mass_of(spec.blocks()[i].bits());
            b[i] = spec.m2().mass_of(spec.blocks()[i].bits());
        }
    }

    std::vector<Rat> p(static_cast<std::size_t>(spec.frame().size()) * num_cells, Rat(0));
    for (int i = 0; i < k; ++i) {
        auto elems = block_elements(spec.blocks()[i]);
        const auto& dist = within_block[static_cast<std::size_t>(i)];
        if (dist.size() != elems.size())
            throw ValidationError("within-block distribution size does not match block size");
        Rat dist_sum = 0;
        for (const Rat& q : dist) {
            if (q < 0)
                throw ValidationError("within-block distribution has a negative entry");
            dist_sum += q;
        }
        if (dist_sum != 1)
            throw ValidationError("within-block distribution must sum to exactly 1");

        auto cells = cell_factor(a[i], b[i]);
        for (std::size_t e = 0; e < elems.size(); ++e)
            for (int c = 0; c < num_cells; ++c)
                p[static_cast<std::size_t>(elems[e] * num_cells + c)] += Rat(1, k) * dist[e] * cells[c];
    }
    return make_assignment(spec.frame(), std::move(p));
}

WithinBlockDists uniform_within_blocks(const AgreementSpec& spec) {
    WithinBlockDists dists;
    for (const auto& block : spec.blocks()) {
        int n = block.count();
        dists.emplace_back(static_cast<std::size_t>(n), Rat(1, n));
    }
    return dists;
}

ProbAssignment extremal_member(const AgreementSpec& spec, const SubsetMask& a, const ProbAssignment& reference) {
    if (a.frame() != spec.frame())
        throw FrameMismatchError("extremal_member: query subset over a different frame");
    if (!check_agreement_conditions(reference, spec).all_pass())
        throw ValidationError("extremal_member: reference assignment fails conditions (i)-(iv)");

    std::vector<Rat> p(static_cast<std::size_t>(spec.frame().size()) * num_cells, Rat(0));
    for (const auto& block : spec.blocks()) {
        auto elems = block_elements(block);
        if (block.is_subset_of(a)) {
            for (int e : elems)
                for (int c = 0; c < num_cells; ++c)
                    p[static_cast<std::size_t>(e * num_cells + c)] = reference.at(e, c);
        } else {
            int theta0 = block.minus(a).lowest_member();
            for (int c = 0; c < num_cells; ++c) {
                Rat block_cell = 0;
                for (int e : elems)
                    block_cell += reference.at(e, c);
                p[static_cast<std::size_t>(theta0 * num_cells + c)] += block_cell;
            }
        }
    }
    return make_assignment(spec.frame(), std::move(p));
}

namespace {

// Deterministic bounded draw; std::uniform_int_distribution is not
// portable across standard libraries, the raw mt19937_64 stream is.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

// Random lattice point on the simplex over `n` coordinates: n-1 sorted
// cuts in [0, grain], coordinate j = (cut_{j+1} - cut_j) / grain.
std::vector<Rat> random_simplex_point(std::mt19937_64& rng, int n, std::uint64_t grain) {
    if (n == 1)
        return {Rat(1)};
    std::vector<std::uint64_t> cuts(static_cast<std::size_t>(n - 1));
    for (auto& c : cuts)
        c = draw_below(rng, grain + 1);
    std::sort(cuts.begin(), cuts.end());
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(n));
    std::uint64_t prev = 0;
    for (std::uint64_t c : cuts) {
        out.emplace_back(Rat(c - prev, grain));
        prev = c;
    }
    out.emplace_back(Rat(grain - prev, grain));
    return out;
}

} // namespace

std::vector<ProbAssignment> sample_gamma(const AgreementSpec& spec, int count, std::uint64_t seed) {
    if (count < 0)
        throw ValidationError("sample count must be non-negative");
    constexpr std::uint64_t grain = 1000;
    std::mt19937_64 rng(seed);

    const int k = spec.k();
    Rat max_m1 = 0, max_m2 = 0;
    for (const auto& block : spec.blocks()) {
        max_m1 = std::max(max_m1, spec.m1().mass_of(block.bits()));
        max_m2 = std::max(max_m2, spec.m2().mass_of(block.bits()));
    }

    std::vector<ProbAssignment> out;
    std::set<std::vector<Rat>> seen;
    for (int s = 0; s < count; ++s) {
        WithinBlockDists dists;
        dists.reserve(static_cast<std::size_t>(k));
        for (const auto& block : spec.blocks())
            dists.push_back(random_simplex_point(rng, block.count(), grain));

        // Evidence likelihoods a_i = m1(S_i) * T with T in (0, 1/max m1]:
        // the whole feasible family under condition (iii).
        Rat t = Rat(draw_below(rng, grain) + 1, grain) / max_m1;
        Rat u = Rat(draw_below(rng, grain) + 1, grain) / max_m2;
        EvidenceParams params;
        for (const auto& block : spec.blocks()) {
            params.p_e1_given_block.push_back(spec.m1().mass_of(block.bits()) * t);
            params.p_e2_given_block.push_back(spec.m2().mass_of(block.bits()) * u);
        }

        ProbAssignment p = construct_member(spec, dists, params);
        if (seen.insert(p.atoms()).second)
            out.push_back(std::move(p));
    }
    return out;
}

} // namespace evlogic
