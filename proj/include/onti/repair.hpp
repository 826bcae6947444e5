#pragma once

#include <set>

#include "onti/integrator.hpp"
#include "onti/reasoner.hpp"

namespace onti {

struct RepairOutcome {
    // surviving cells, one alignment per input pair
    std::vector<PairedAlignment> kept;
    // removed cell plus the unsatisfiable class whose justification named it
    std::vector<std::pair<Cell, Iri>> removed;
    int iterations = 0;
    // unsat classes (original IRIs) not attributable to any bridging cell
    std::set<Iri> residual_unsat;
};

// Greedy coherence repair: re-bridge, find the unsatisfiable classes, drop
// the implicated bridging cell with the lowest confidence, repeat. Pairs are
// repaired independently of each other.
RepairOutcome repair_alignment(const std::vector<Ontology>& ontologies,
                               const std::vector<PairedAlignment>& alignments,
                               const OutputConfig& cfg,
                               const IntegrationPlan& plan);

}  // namespace onti
