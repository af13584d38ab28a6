#include "paper_table.hpp"

#include "evlogic/agreement.hpp"
#include "evlogic/frame.hpp"
#include "evlogic/prob_model.hpp"

namespace evlogic::cli {

namespace {

/// Joint distribution over {H, notH} x cells with P(H) = prior and
/// P(H|E1) = posterior, used to evaluate the confirmation ratio the way
/// the engine sees it: as marginals of one concrete assignment. P(E1) is
/// chosen as large as the two targets allow.
ProbAssignment swamping_joint(const Rat& prior, const Rat& posterior) {
    Frame frame = make_frame({"H", "notH"});
    // P(E1) = t: p(H & E1) = posterior*t <= prior and
    // p(notH & E1) = (1-posterior)*t <= 1-prior.
    Rat t = std::min(Rat(prior / posterior), Rat((Rat(1) - prior) / (Rat(1) - posterior)));
    std::vector<Rat> p(2 * num_cells, Rat(0));
    auto at = [&](int elem, EvidenceCell cell) -> Rat& {
        return p[static_cast<std::size_t>(elem * num_cells + static_cast<int>(cell))];
    };
    at(0, EvidenceCell::e1_not_e2) = posterior * t;
    at(1, EvidenceCell::e1_not_e2) = (Rat(1) - posterior) * t;
    at(0, EvidenceCell::neither) = prior - posterior * t;
    at(1, EvidenceCell::neither) = (Rat(1) - prior) - (Rat(1) - posterior) * t;
    return make_assignment(frame, std::move(p));
}

Rat ratio_for(const Rat& prior, const Rat& posterior) {
    ProbAssignment joint = swamping_joint(prior, posterior);
    Event h{subset(joint.frame(), {"H"}), cells_all};
    Event e1{SubsetMask::full(joint.frame()), cells_e1};
    return confirmation_ratio(joint, h, e1);
}

} // namespace

PaperTable paper_table() {
    PaperTable table;
    auto& rows = table.rows;

    // Prior swamping: equal 0.9 conditionals against a 0.999 prior. The
    // combination-rule side was published as an approximation (the exact
    // value is 81/82 = 0.987805...), the constraint side exactly.
    OddsResult swamp = odds_swamp(Rat(9, 10), Rat(9, 10), Rat(999, 1000));
    {
        PaperRow row{"prior swamping m1=m2=0.9 prior=0.999", swamp.dempster, swamp.problogic, "~0.99 / 0.075",
                     false};
        row.match = swamp.dempster == Rat(81, 82) && rat_abs(swamp.dempster - Rat(99, 100)) <= Rat(1, 200) &&
                    swamp.problogic == Rat(3, 40);
        rows.push_back(std::move(row));
    }
    {
        Rat ratio = ratio_for(Rat(999, 1000), Rat(9, 10));
        PaperRow row{"prior swamping, ratio P(H|E)/P(H)", std::nullopt, ratio, "< 1 (E disconfirms H)", false};
        row.match = ratio < 1;
        rows.push_back(std::move(row));
    }

    // Overlapping focal sets on {a,b,c}: the rule commits mass 1/2 to the
    // intersection, the witness assignment gives it conditional 0.
    {
        NonpartitionWitness w = nonpartition_witness();
        PaperRow row{"non-partition {a,b}/{b,c}, value on {b}",
                     w.combined.combined.mass_of(subset(w.frame, {"b"}).bits()), w.conditional, "0.5 / 0", false};
        row.match = *row.dempster == Rat(1, 2) && *row.problogic == 0 && w.report.all_pass();
        rows.push_back(std::move(row));
    }

    // Lottery with 112 participants, ticket evidence at 0.1.
    LotteryResult ticket = lottery(112, Rat(1, 10));
    {
        PaperRow row{"lottery n=112 m1=0.1, value on {x1}", ticket.m3x1, ticket.posterior, "0.001 / 0.1", false};
        row.match = ticket.m3x1 == Rat(1, 1000) && ticket.bel == Rat(1, 1000) && ticket.posterior == Rat(1, 10);
        rows.push_back(std::move(row));
    }
    {
        // The same numbers through the competing-denominator forms.
        PaperRow row{"lottery n=112 m1=0.1, m1/(m1+T)", ticket.m1x1 / (ticket.m1x1 + ticket.t1),
                     ticket.m1x1 / (ticket.m1x1 + ticket.t2), "0.001 / 0.1", false};
        row.match = *row.dempster == Rat(1, 1000) && *row.problogic == Rat(1, 10);
        rows.push_back(std::move(row));
    }
    {
        Rat ratio = ratio_for(Rat(1, 112), Rat(1, 10));
        PaperRow row{"lottery, ratio P(x1|E)/P(x1)", std::nullopt, ratio, "> 1 (E confirms x1)", false};
        row.match = ratio > 1;
        rows.push_back(std::move(row));
    }

    // Modified lottery: ticket evidence at 0.9.
    {
        LotteryResult sure = lottery(112, Rat(9, 10));
        PaperRow row{"lottery n=112 m1=0.9, value on {x1}", sure.bel, sure.posterior, "0.075 / 0.9", false};
        row.match = sure.bel == Rat(3, 40) && sure.posterior == Rat(9, 10);
        rows.push_back(std::move(row));
    }

    table.all_match = true;
    for (const auto& row : rows)
        table.all_match = table.all_match && row.match;
    return table;
}

} // namespace evlogic::cli
