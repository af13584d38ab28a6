#include "evlogic/lp.hpp"

#include "evlogic/errors.hpp"

#include <algorithm>
#include <cassert>

namespace evlogic {

ConstraintSystem::ConstraintSystem(int atom_count) : atom_count_(atom_count) {
    if (atom_count < 1)
        throw ValidationError("constraint system needs at least one atom");
}

void ConstraintSystem::add(LinearConstraint constraint) {
    bool any_nonzero = false;
    for (const auto& [atom, coeff] : constraint.coeffs) {
        if (atom < 0 || atom >= atom_count_)
            throw ValidationError("constraint references atom " + std::to_string(atom) + " outside the system");
        if (coeff != 0)
            any_nonzero = true;
    }
    if (!any_nonzero)
        throw ValidationError("constraint has no nonzero coefficient");
    constraints_.push_back(std::move(constraint));
}

LinearConstraint linearize_conditional(const std::vector<int>& a_atoms, const std::vector<int>& b_atoms,
                                       const Rat& value) {
    if (value < 0 || value > 1)
        throw ValidationError("conditional probability value must lie in [0,1]");
    if (b_atoms.empty())
        throw ValidationError("cannot condition on the empty event");
    LinearConstraint c;
    c.rel = Relation::eq;
    c.rhs = 0;
    std::vector<int> a_sorted(a_atoms);
    std::sort(a_sorted.begin(), a_sorted.end());
    for (int atom : b_atoms) {
        bool in_a = std::binary_search(a_sorted.begin(), a_sorted.end(), atom);
        Rat coeff = in_a ? Rat(1) - value : -value;
        if (coeff != 0)
            c.coeffs[atom] = coeff;
    }
    if (c.coeffs.empty())
        throw ValidationError("conditional constraint is vacuous (holds for every assignment)");
    return c;
}

namespace {

// ---------------------------------------------------------------------
// Two-phase dense tableau simplex over exact rationals.
//
// Minimizes c.x subject to rows (a.x rel b) and x >= 0. Bland's rule
// (lowest eligible index for both the entering and the leaving variable)
// guarantees termination without cycling; with exact arithmetic there is
// no tolerance tuning anywhere.
// ---------------------------------------------------------------------
class RationalSimplex {
public:
    explicit RationalSimplex(int nvars) : nvars_(nvars) {}

    void add_row(std::vector<Rat> coeffs, Relation rel, Rat rhs) {
        assert(coeffs.size() == static_cast<std::size_t>(nvars_));
        rows_.push_back({std::move(coeffs), rel, std::move(rhs)});
    }

    enum class Status { optimal, infeasible };

    Status minimize(const std::vector<Rat>& objective) {
        assert(objective.size() == static_cast<std::size_t>(nvars_));
        build_tableau();
        phase1();
        if (obj_ > 0)
            return Status::infeasible;
        purge_artificials();
        set_objective(objective);
        pivot_to_optimum(art_start_); // artificials stay out in phase 2
        value_ = obj_;
        return Status::optimal;
    }

    const Rat& objective_value() const { return value_; }

    std::vector<Rat> solution() const {
        std::vector<Rat> x(static_cast<std::size_t>(nvars_), Rat(0));
        for (std::size_t r = 0; r < basis_.size(); ++r)
            if (basis_[r] < nvars_)
                x[static_cast<std::size_t>(basis_[r])] = tab_[r][rhs_col()];
        return x;
    }

private:
    struct Row {
        std::vector<Rat> coeffs;
        Relation rel;
        Rat rhs;
    };

    int nvars_;
    std::vector<Row> rows_;

    int ncols_ = 0;     // structural + slack/surplus + artificial
    int art_start_ = 0; // first artificial column
    std::vector<std::vector<Rat>> tab_;
    std::vector<int> basis_;
    std::vector<Rat> red_; // reduced costs
    Rat obj_;              // objective value of the current basis
    Rat value_;

    std::size_t rhs_col() const { return static_cast<std::size_t>(ncols_); }

    void build_tableau() {
        // Normalize all right-hand sides to be non-negative.
        for (auto& row : rows_) {
            if (row.rhs < 0) {
                for (auto& a : row.coeffs)
                    a = -a;
                row.rhs = -row.rhs;
                if (row.rel == Relation::le)
                    row.rel = Relation::ge;
                else if (row.rel == Relation::ge)
                    row.rel = Relation::le;
            }
        }
        int nslack = 0, nart = 0;
        for (const auto& row : rows_) {
            if (row.rel != Relation::eq)
                ++nslack;
            if (row.rel != Relation::le)
                ++nart;
        }
        art_start_ = nvars_ + nslack;
        ncols_ = art_start_ + nart;

        tab_.assign(rows_.size(), std::vector<Rat>(rhs_col() + 1, Rat(0)));
        basis_.assign(rows_.size(), -1);
        int slack = nvars_, art = art_start_;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            for (int j = 0; j < nvars_; ++j)
                tab_[r][static_cast<std::size_t>(j)] = rows_[r].coeffs[static_cast<std::size_t>(j)];
            tab_[r][rhs_col()] = rows_[r].rhs;
            switch (rows_[r].rel) {
            case Relation::le:
                tab_[r][static_cast<std::size_t>(slack)] = 1;
                basis_[r] = slack++;
                break;
            case Relation::ge:
                tab_[r][static_cast<std::size_t>(slack++)] = -1;
                tab_[r][static_cast<std::size_t>(art)] = 1;
                basis_[r] = art++;
                break;
            case Relation::eq:
                tab_[r][static_cast<std::size_t>(art)] = 1;
                basis_[r] = art++;
                break;
            }
        }
    }

    void phase1() {
        // Cost 1 on each artificial; canonicalize so basic columns have
        // reduced cost zero.
        red_.assign(rhs_col() + 1, Rat(0));
        for (int j = art_start_; j < ncols_; ++j)
            red_[static_cast<std::size_t>(j)] = 1;
        obj_ = 0;
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            if (basis_[r] >= art_start_) {
                for (std::size_t j = 0; j <= rhs_col(); ++j)
                    red_[j] -= tab_[r][j];
                obj_ += tab_[r][rhs_col()];
            }
        }
        pivot_to_optimum(ncols_);
    }

    /// Drive leftover artificials out of the basis; rows that cannot be
    /// pivoted are linearly dependent on the others and get dropped.
    void purge_artificials() {
        for (std::size_t r = 0; r < basis_.size();) {
            if (basis_[r] < art_start_) {
                ++r;
                continue;
            }
            int enter = -1;
            for (int j = 0; j < art_start_; ++j) {
                if (tab_[r][static_cast<std::size_t>(j)] != 0) {
                    enter = j;
                    break;
                }
            }
            if (enter >= 0) {
                pivot(r, enter);
                ++r;
            } else {
                tab_.erase(tab_.begin() + static_cast<std::ptrdiff_t>(r));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
            }
        }
    }

    void set_objective(const std::vector<Rat>& objective) {
        red_.assign(rhs_col() + 1, Rat(0));
        for (int j = 0; j < nvars_; ++j)
            red_[static_cast<std::size_t>(j)] = objective[static_cast<std::size_t>(j)];
        obj_ = 0;
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            if (basis_[r] < nvars_) {
                const Rat& cb = objective[static_cast<std::size_t>(basis_[r])];
                if (cb == 0)
                    continue;
                for (std::size_t j = 0; j <= rhs_col(); ++j)
                    red_[j] -= cb * tab_[r][j];
                obj_ += cb * tab_[r][rhs_col()];
            }
        }
    }

    void pivot_to_optimum(int max_enter_col) {
        // Bland's rule: termination is guaranteed, so the cap is only a
        // tripwire against implementation bugs.
        for (long iter = 0; iter < 1000000; ++iter) {
            int enter = -1;
            for (int j = 0; j < max_enter_col; ++j) {
                if (red_[static_cast<std::size_t>(j)] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0)
                return;
            std::size_t leave = basis_.size();
            Rat best_ratio;
            for (std::size_t r = 0; r < basis_.size(); ++r) {
                const Rat& a = tab_[r][static_cast<std::size_t>(enter)];
                if (a <= 0)
                    continue;
                Rat ratio = tab_[r][rhs_col()] / a;
                if (leave == basis_.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            if (leave == basis_.size())
                throw Error("LP objective unbounded on the feasible set");
            pivot(leave, enter);
        }
        throw Error("simplex iteration cap exceeded");
    }

    void pivot(std::size_t row, int enter) {
        std::vector<Rat>& pr = tab_[row];
        Rat piv = pr[static_cast<std::size_t>(enter)];
        assert(piv != 0);
        for (auto& v : pr)
            v /= piv;
        for (std::size_t r = 0; r < tab_.size(); ++r) {
            if (r == row)
                continue;
            Rat factor = tab_[r][static_cast<std::size_t>(enter)];
            if (factor == 0)
                continue;
            for (std::size_t j = 0; j <= rhs_col(); ++j)
                tab_[r][j] -= factor * pr[j];
        }
        Rat rfac = red_[static_cast<std::size_t>(enter)];
        if (rfac != 0) {
            for (std::size_t j = 0; j <= rhs_col(); ++j)
                red_[j] -= rfac * pr[j];
            obj_ += rfac * pr[rhs_col()];
        }
        basis_[row] = enter;
    }
};

std::vector<Rat> dense_coeffs(const LinearConstraint& c, int nvars) {
    std::vector<Rat> out(static_cast<std::size_t>(nvars), Rat(0));
    for (const auto& [atom, coeff] : c.coeffs)
        out[static_cast<std::size_t>(atom)] = coeff;
    return out;
}

std::vector<Rat> indicator(const std::vector<int>& atoms, int nvars) {
    std::vector<Rat> out(static_cast<std::size_t>(nvars), Rat(0));
    for (int atom : atoms) {
        if (atom < 0 || atom >= nvars)
            throw ValidationError("event references atom " + std::to_string(atom) + " outside the system");
        out[static_cast<std::size_t>(atom)] = 1;
    }
    return out;
}

RationalSimplex build_simplex(const ConstraintSystem& system) {
    RationalSimplex lp(system.atom_count());
    std::vector<Rat> ones(static_cast<std::size_t>(system.atom_count()), Rat(1));
    lp.add_row(ones, Relation::eq, Rat(1));
    for (const auto& c : system.constraints())
        lp.add_row(dense_coeffs(c, system.atom_count()), c.rel, c.rhs);
    return lp;
}

} // namespace

LpSolution solve_lp(const ConstraintSystem& system, const std::vector<Rat>& objective, LpSense sense) {
    if (objective.size() != static_cast<std::size_t>(system.atom_count()))
        throw ValidationError("objective dimension does not match the system");
    RationalSimplex lp = build_simplex(system);
    std::vector<Rat> c = objective;
    if (sense == LpSense::maximize)
        for (auto& v : c)
            v = -v;
    if (lp.minimize(c) == RationalSimplex::Status::infeasible)
        throw InfeasibleError("constraint system is infeasible");
    Rat value = lp.objective_value();
    if (sense == LpSense::maximize)
        value = -value;
    return LpSolution{std::move(value), lp.solution()};
}

Interval prob_bounds(const ConstraintSystem& system, const std::vector<int>& query_atoms) {
    std::vector<Rat> obj = indicator(query_atoms, system.atom_count());
    Rat lo = solve_lp(system, obj, LpSense::minimize).value;
    Rat hi = solve_lp(system, obj, LpSense::maximize).value;
    return Interval{std::move(lo), std::move(hi)};
}

namespace {

// Shared scaffolding for the linear-fractional bounds: variables are
// y_0..y_{n-1} plus the scale t, with sum_B y = 1, sum y = t and every
// original row homogenized to a.y - rhs*t (rel) 0.
RationalSimplex build_fractional_simplex(const ConstraintSystem& system, const std::vector<Rat>& b_indicator) {
    int n = system.atom_count();
    RationalSimplex lp(n + 1);

    std::vector<Rat> row_b(b_indicator);
    row_b.push_back(Rat(0));
    lp.add_row(row_b, Relation::eq, Rat(1));

    std::vector<Rat> row_sum(static_cast<std::size_t>(n), Rat(1));
    row_sum.push_back(Rat(-1));
    lp.add_row(row_sum, Relation::eq, Rat(0));

    for (const auto& c : system.constraints()) {
        std::vector<Rat> row = dense_coeffs(c, n);
        row.push_back(-c.rhs);
        lp.add_row(std::move(row), c.rel, Rat(0));
    }
    return lp;
}

} // namespace

ConditionalBounds cond_prob_bounds(const ConstraintSystem& system, const std::vector<int>& a_atoms,
                                   const std::vector<int>& b_atoms) {
    int n = system.atom_count();
    std::vector<Rat> b_ind = indicator(b_atoms, n);

    // The conditional exists only if some member gives B positive mass.
    // This also surfaces InfeasibleError for an empty system.
    Interval pb = prob_bounds(system, b_atoms);
    if (!(pb.hi > 0))
        throw UndefinedConditionalError("P(B) = 0 over the entire polytope: conditional undefined");

    std::vector<Rat> a_ind = indicator(a_atoms, n);
    std::vector<Rat> obj(static_cast<std::size_t>(n + 1), Rat(0));
    for (int j = 0; j < n; ++j)
        if (a_ind[static_cast<std::size_t>(j)] == 1 && b_ind[static_cast<std::size_t>(j)] == 1)
            obj[static_cast<std::size_t>(j)] = 1; // indicator of A and B

    ConditionalBounds out;
    for (LpSense sense : {LpSense::minimize, LpSense::maximize}) {
        RationalSimplex lp = build_fractional_simplex(system, b_ind);
        std::vector<Rat> c = obj;
        if (sense == LpSense::maximize)
            for (auto& v : c)
                v = -v;
        if (lp.minimize(c) == RationalSimplex::Status::infeasible)
            throw InfeasibleError("constraint system is infeasible");
        Rat value = lp.objective_value();
        if (sense == LpSense::maximize)
            value = -value;
        std::vector<Rat> yt = lp.solution();
        Rat t = yt[static_cast<std::size_t>(n)];
        std::vector<Rat> witness;
        if (t > 0) {
            witness.resize(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j)
                witness[static_cast<std::size_t>(j)] = yt[static_cast<std::size_t>(j)] / t;
        }
        if (sense == LpSense::minimize) {
            out.interval.lo = std::move(value);
            out.lo_attained = t > 0;
            out.lo_witness = std::move(witness);
        } else {
            out.interval.hi = std::move(value);
            out.hi_attained = t > 0;
            out.hi_witness = std::move(witness);
        }
    }
    return out;
}

} // namespace evlogic
