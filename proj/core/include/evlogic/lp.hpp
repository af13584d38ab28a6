#pragma once

#include "evlogic/rational.hpp"

#include <map>
#include <vector>

namespace evlogic {

enum class Relation { eq, le, ge };

/// One linear probability constraint over joint atoms: sum of
/// coeff[atom] * x[atom]  (=|<=|>=)  rhs. At least one coefficient must
/// be nonzero.
struct LinearConstraint {
    std::map<int, Rat> coeffs;
    Relation rel = Relation::eq;
    Rat rhs;
};

/// A set of linear constraints over `atom_count` probability atoms. The
/// simplex constraints (every atom >= 0, atoms sum to 1) are implicit and
/// always present.
class ConstraintSystem {
public:
    explicit ConstraintSystem(int atom_count);

    int atom_count() const { return atom_count_; }
    const std::vector<LinearConstraint>& constraints() const { return constraints_; }

    /// Validates atom indices and the nonzero-coefficient invariant.
    void add(LinearConstraint constraint);

private:
    int atom_count_;
    std::vector<LinearConstraint> constraints_;
};

/// A closed interval of probabilities.
struct Interval {
    Rat lo, hi;
};

/// Encodes P(A|B) = value as the linear constraint
///   sum_{A and B} x - value * sum_{B} x = 0.
/// Throws ValidationError when B is empty or the constraint degenerates
/// to 0 = 0 (value 0 with A,B disjoint; value 1 with B inside A).
LinearConstraint linearize_conditional(const std::vector<int>& a_atoms, const std::vector<int>& b_atoms,
                                       const Rat& value);

enum class LpSense { minimize, maximize };

struct LpSolution {
    Rat value;
    std::vector<Rat> x; // one entry per atom, satisfies every constraint exactly
};

/// Exact optimum of objective . x over the constraint polytope, by
/// rational simplex with Bland's rule. Throws InfeasibleError. The
/// polytope lives inside the probability simplex, so no objective is
/// unbounded.
LpSolution solve_lp(const ConstraintSystem& system, const std::vector<Rat>& objective, LpSense sense);

/// [min, max] of P(query) over the polytope. Attained: the polytope is
/// compact, so these are closed bounds with witnesses.
Interval prob_bounds(const ConstraintSystem& system, const std::vector<int>& query_atoms);

struct ConditionalBounds {
    Interval interval;
    /// Whether each endpoint is attained by a member with P(B) > 0, i.e.
    /// not only as a limit towards P(B) = 0.
    bool lo_attained = false;
    bool hi_attained = false;
    /// Witness assignments (normalized back to the atom space) when the
    /// endpoint is attained; empty otherwise.
    std::vector<Rat> lo_witness, hi_witness;
};

/// Bounds of P(A|B) over members with P(B) > 0, computed exactly via the
/// scale-normalization transform (y = x / P(B), so sum_B y = 1, one LP
/// per endpoint). Reports closure bounds. Throws UndefinedConditionalError
/// when P(B) = 0 across the whole polytope, InfeasibleError when the
/// system itself is empty.
ConditionalBounds cond_prob_bounds(const ConstraintSystem& system, const std::vector<int>& a_atoms,
                                   const std::vector<int>& b_atoms);

} // namespace evlogic
