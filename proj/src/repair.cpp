#include "onti/repair.hpp"

#include <algorithm>

namespace onti {

namespace {

struct PairRepair {
    Alignment kept;
    std::vector<std::pair<Cell, Iri>> removed;
    int iterations = 0;
    std::set<Iri> residual_unsat;
};

bool remove_before(const Cell& a, const Cell& b) {
    if (a.measure != b.measure) return a.measure < b.measure;
    if (a.doc_order != b.doc_order) return a.doc_order > b.doc_order;
    return a.entity1 < b.entity1;
}

PairRepair repair_pair(const Ontology& o1, const Ontology& o2,
                       const Alignment& input, const OutputConfig& cfg,
                       const IntegrationPlan& plan) {
    PairRepair out;
    out.kept = threshold_filter(input, plan.threshold);
    if (plan.one_to_one) out.kept = to_one_to_one(out.kept);

    // refactored class IRI -> original, for residual reporting
    std::unordered_map<Iri, Iri> original;
    const Ontology* sources[2] = {&o1, &o2};
    for (int i = 0; i < 2; ++i)
        for (const Iri& c : sources[i]->entities(EntityKind::Class))
            if (!c.is_anonymous())
                original.emplace(refactor_iri(c, cfg, i + 1), c);

    std::vector<Ontology> pair_onts{o1, o2};
    IntegrationPlan bridge_plan = plan;
    bridge_plan.mode = Mode::Bridge;
    bridge_plan.style = Style::Refactor;

    std::size_t max_iterations = out.kept.cells.size() + 1;
    for (std::size_t iter = 0; iter < max_iterations; ++iter) {
        ++out.iterations;
        IntegrationOutcome b =
            bridge(pair_onts, {{{1, 2}, out.kept}}, cfg, bridge_plan);
        Taxonomy t = classify(b.ontology);
        UnsatReport r = unsatisfiable_classes(b.ontology, t);
        if (r.unsat.empty()) return out;

        // implicated cells across the justifications of all direct roots
        std::vector<std::pair<Cell, Iri>> implicated;
        for (const auto& [cls, pair] : r.direct_witness) {
            (void)pair;
            Justification j = justify_unsat(cls, b.ontology, t, r);
            for (const Axiom& ax : j.contributing)
                for (const auto& [bax, cell] : b.bridge_axioms)
                    if (bax == ax) {
                        bool known = false;
                        for (const auto& [c2, _] : implicated)
                            if (c2 == cell) known = true;
                        if (!known) implicated.emplace_back(cell, cls);
                    }
        }
        if (implicated.empty()) {
            for (const Iri& u : r.unsat) {
                auto it = original.find(u);
                out.residual_unsat.insert(it == original.end() ? u : it->second);
            }
            return out;
        }
        auto victim = std::min_element(
            implicated.begin(), implicated.end(),
            [](const auto& a, const auto& b) {
                return remove_before(a.first, b.first);
            });
        out.removed.push_back(*victim);
        auto& cells = out.kept.cells;
        cells.erase(std::remove(cells.begin(), cells.end(), victim->first),
                    cells.end());
    }
    return out;  // unreachable in practice: one cell leaves per iteration
}

}  // namespace

RepairOutcome repair_alignment(const std::vector<Ontology>& ontologies,
                               const std::vector<PairedAlignment>& alignments,
                               const OutputConfig& cfg,
                               const IntegrationPlan& plan) {
    RepairOutcome out;
    for (const auto& [pair, alignment] : alignments) {
        const Ontology& o1 = ontologies.at(pair.first - 1);
        const Ontology& o2 = ontologies.at(pair.second - 1);
        PairRepair pr = repair_pair(o1, o2, alignment, cfg, plan);
        out.kept.emplace_back(pair, std::move(pr.kept));
        out.removed.insert(out.removed.end(), pr.removed.begin(),
                           pr.removed.end());
        out.iterations += pr.iterations;
        out.residual_unsat.insert(pr.residual_unsat.begin(),
                                  pr.residual_unsat.end());
    }
    return out;
}

}  // namespace onti
