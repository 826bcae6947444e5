#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "onti/alignment.hpp"
#include "onti/ontology.hpp"

namespace onti {

struct TooFewOntologies : std::runtime_error {
    explicit TooFewOntologies(const std::string& what)
        : std::runtime_error(what) {}
};

struct TooManyOntologies : std::runtime_error {
    explicit TooManyOntologies(const std::string& what)
        : std::runtime_error(what) {}
};

struct NotOneToOne : std::runtime_error {
    explicit NotOneToOne(const std::string& what) : std::runtime_error(what) {}
};

enum class Mode { Aggregate, Bridge, FullMerge };
enum class Style { Refactor, Reference };
enum class Topology { TwoToTwo, OneToN, NToN };

struct IntegrationPlan {
    Mode mode = Mode::Bridge;
    Style style = Style::Refactor;
    Topology topology = Topology::NToN;
    int pivot = 1;            // OneToN only, 1-based
    double threshold = 0.0;
    bool one_to_one = false;
    bool repair = false;
};

struct TypeEntry {
    int ont_index;
    EntityKind kind;
};

// Original IRI -> (source index, kind), one table per bridgeable kind.
// Punning may place an IRI in several tables; within a table first wins.
class EntityTypeMap {
  public:
    void record(const Iri& iri, int ont_index, EntityKind kind);

    const TypeEntry* find(const Iri& iri, EntityKind kind) const;

    // Tables holding this IRI, in kind priority order (class first).
    std::vector<TypeEntry> lookup(const Iri& iri) const;

    std::size_t size() const;

  private:
    const std::unordered_map<Iri, TypeEntry>* table(EntityKind k) const;
    std::unordered_map<Iri, TypeEntry>* table(EntityKind k);

    std::unordered_map<Iri, TypeEntry> classes_;
    std::unordered_map<Iri, TypeEntry> object_props_;
    std::unordered_map<Iri, TypeEntry> data_props_;
    std::unordered_map<Iri, TypeEntry> individuals_;
};

enum class SkipReason {
    UnknownEntity,
    KindMismatch,
    UnsupportedRelation,
    UnsupportedKind,
    DegenerateCell,
    NotOneToOneCell,
};

const char* to_string(SkipReason r);

struct SkippedCell {
    Cell cell;
    SkipReason reason;
};

struct IntegrationOutcome {
    Ontology ontology;
    EntityTypeMap type_map;
    int bridged_cells = 0;  // cells turned into bridge axioms / merges
    std::vector<SkippedCell> skipped_cells;
    std::vector<std::size_t> per_source_logical;
    // emitted bridge axiom paired with the cell it came from (Bridge mode)
    std::vector<std::pair<Axiom, Cell>> bridge_axioms;
    // merged original-entity pairs, class pairs counted separately (FullMerge)
    std::vector<std::pair<Iri, Iri>> merged_pairs;
    std::size_t merged_class_pairs = 0;
};

// Which ontology pairs contribute alignments under each topology. 1-based,
// i < j throughout.
std::vector<std::pair<int, int>> plan_alignment_pairs(int n, Topology topology,
                                                      int pivot = 1);

// Union of all sources, IRIs rewritten per style. No bridging.
IntegrationOutcome aggregate(const std::vector<Ontology>& ontologies,
                             const OutputConfig& cfg, Style style);

// Aggregate plus one equivalence axiom per kept "="/"?" cell whose endpoints
// resolve to the same kind. Threshold and 1-to-1 reduction applied per plan.
using PairedAlignment = std::pair<std::pair<int, int>, Alignment>;
IntegrationOutcome bridge(const std::vector<Ontology>& ontologies,
                          const std::vector<PairedAlignment>& alignments,
                          const OutputConfig& cfg, const IntegrationPlan& plan);

// Two-ontology fusion: each resolvable 1-to-1 cell collapses its endpoints
// into one /000 entity; everything else is refactored as in aggregate.
IntegrationOutcome full_merge(const Ontology& o1, const Ontology& o2,
                              const Alignment& a, const OutputConfig& cfg);

}  // namespace onti
