#include "onti/integrator.hpp"

#include <algorithm>

namespace onti {

void EntityTypeMap::record(const Iri& iri, int ont_index, EntityKind kind) {
    if (auto* t = table(kind)) t->try_emplace(iri, TypeEntry{ont_index, kind});
}

const TypeEntry* EntityTypeMap::find(const Iri& iri, EntityKind kind) const {
    const auto* t = table(kind);
    if (!t) return nullptr;
    auto it = t->find(iri);
    return it == t->end() ? nullptr : &it->second;
}

std::vector<TypeEntry> EntityTypeMap::lookup(const Iri& iri) const {
    std::vector<TypeEntry> out;
    for (EntityKind k :
         {EntityKind::Class, EntityKind::ObjectProperty,
          EntityKind::DataProperty, EntityKind::NamedIndividual})
        if (const TypeEntry* e = find(iri, k)) out.push_back(*e);
    return out;
}

std::size_t EntityTypeMap::size() const {
    return classes_.size() + object_props_.size() + data_props_.size() +
           individuals_.size();
}

const std::unordered_map<Iri, TypeEntry>* EntityTypeMap::table(
    EntityKind k) const {
    switch (k) {
        case EntityKind::Class: return &classes_;
        case EntityKind::ObjectProperty: return &object_props_;
        case EntityKind::DataProperty: return &data_props_;
        case EntityKind::NamedIndividual: return &individuals_;
        default: return nullptr;
    }
}

std::unordered_map<Iri, TypeEntry>* EntityTypeMap::table(EntityKind k) {
    return const_cast<std::unordered_map<Iri, TypeEntry>*>(
        static_cast<const EntityTypeMap*>(this)->table(k));
}

const char* to_string(SkipReason r) {
    switch (r) {
        case SkipReason::UnknownEntity: return "UnknownEntity";
        case SkipReason::KindMismatch: return "KindMismatch";
        case SkipReason::UnsupportedRelation: return "UnsupportedRelation";
        case SkipReason::UnsupportedKind: return "UnsupportedKind";
        case SkipReason::DegenerateCell: return "DegenerateCell";
        case SkipReason::NotOneToOneCell: return "NotOneToOneCell";
    }
    return "?";
}

std::vector<std::pair<int, int>> plan_alignment_pairs(int n, Topology topology,
                                                      int pivot) {
    if (n < 2) throw TooFewOntologies("need at least 2 ontologies");
    std::vector<std::pair<int, int>> pairs;
    switch (topology) {
        case Topology::TwoToTwo:
            for (int i = 1; i < n; ++i) pairs.emplace_back(i, i + 1);
            break;
        case Topology::OneToN:
            if (pivot < 1 || pivot > n)
                throw TooFewOntologies("pivot outside [1, n]");
            for (int j = 1; j <= n; ++j)
                if (j != pivot)
                    pairs.emplace_back(std::min(pivot, j), std::max(pivot, j));
            std::sort(pairs.begin(), pairs.end());
            break;
        case Topology::NToN:
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
            break;
    }
    return pairs;
}

namespace {

// Rewrites one axiom's entity operands for source `idx`, recording the
// original IRIs in the type map along the way.
Axiom copy_axiom(const Axiom& a, int idx, Style style, const OutputConfig& cfg,
                 EntityTypeMap& map) {
    Axiom out = a;
    for (const ArgSlot& s : entity_slots(a)) {
        const Iri& orig = a.args[s.pos];
        bool anon = orig.is_anonymous();
        if (s.kind && !anon) {
            switch (*s.kind) {
                case EntityKind::Class:
                case EntityKind::ObjectProperty:
                case EntityKind::DataProperty:
                case EntityKind::NamedIndividual:
                    map.record(orig, idx, *s.kind);
                    break;
                default:
                    break;
            }
        }
        if (style == Style::Reference) continue;
        if (s.kind && *s.kind == EntityKind::Datatype) continue;  // built-ins
        out.args[s.pos] =
            anon ? refactor_anonymous(orig, idx) : refactor_iri(orig, cfg, idx);
    }
    return out;
}

struct Resolved {
    TypeEntry e1, e2;
};

// Common-kind lookup for a cell's endpoints. Annotation properties are not
// tabled, so annotation-property cells surface as UnknownEntity.
std::optional<Resolved> resolve_cell(const Cell& c, const EntityTypeMap& map,
                                     SkipReason& reason) {
    auto k1 = map.lookup(c.entity1);
    auto k2 = map.lookup(c.entity2);
    if (k1.empty() || k2.empty()) {
        reason = SkipReason::UnknownEntity;
        return std::nullopt;
    }
    for (const TypeEntry& a : k1)
        for (const TypeEntry& b : k2)
            if (a.kind == b.kind) return Resolved{a, b};
    reason = SkipReason::KindMismatch;
    return std::nullopt;
}

AxiomKind equivalence_kind(EntityKind k) {
    switch (k) {
        case EntityKind::Class: return AxiomKind::EquivalentClasses;
        case EntityKind::ObjectProperty:
            return AxiomKind::EquivalentObjectProperties;
        case EntityKind::DataProperty:
            return AxiomKind::EquivalentDataProperties;
        default: return AxiomKind::SameIndividual;
    }
}

}  // namespace

IntegrationOutcome aggregate(const std::vector<Ontology>& ontologies,
                             const OutputConfig& cfg, Style style) {
    if (ontologies.empty()) throw TooFewOntologies("no input ontologies");
    if (style == Style::Refactor &&
        ontologies.size() > static_cast<std::size_t>(OutputConfig::max_index))
        throw TooManyOntologies("more than 999 sources");

    IntegrationOutcome out;
    out.ontology.set_iri(cfg.base_iri);
    for (std::size_t i = 0; i < ontologies.size(); ++i) {
        const Ontology& src = ontologies[i];
        out.per_source_logical.push_back(src.logical_count());
        int idx = static_cast<int>(i) + 1;
        for (const Axiom& a : src.axioms())
            out.ontology.add(copy_axiom(a, idx, style, cfg, out.type_map));
    }
    return out;
}

IntegrationOutcome bridge(const std::vector<Ontology>& ontologies,
                          const std::vector<PairedAlignment>& alignments,
                          const OutputConfig& cfg,
                          const IntegrationPlan& plan) {
    IntegrationOutcome out = aggregate(ontologies, cfg, plan.style);

    for (const auto& [pair, raw] : alignments) {
        (void)pair;  // endpoints resolve through the type map
        Alignment a = threshold_filter(raw, plan.threshold);
        if (plan.one_to_one) a = to_one_to_one(a);
        for (const Cell& c : a.cells) {
            if (c.relation != "=" && c.relation != "?") {
                out.skipped_cells.push_back({c, SkipReason::UnsupportedRelation});
                continue;
            }
            SkipReason reason{};
            auto res = resolve_cell(c, out.type_map, reason);
            if (!res) {
                out.skipped_cells.push_back({c, reason});
                continue;
            }
            Iri i1 = c.entity1;
            Iri i2 = c.entity2;
            if (plan.style == Style::Refactor) {
                i1 = refactor_iri(i1, cfg, res->e1.ont_index);
                i2 = refactor_iri(i2, cfg, res->e2.ont_index);
            }
            Axiom ax;
            ax.kind = equivalence_kind(res->e1.kind);
            ax.args = {std::move(i1), std::move(i2)};
            if (!canonicalize(ax)) {
                out.skipped_cells.push_back({c, SkipReason::DegenerateCell});
                continue;
            }
            out.ontology.add(ax);
            out.bridge_axioms.emplace_back(std::move(ax), c);
            ++out.bridged_cells;
        }
    }
    return out;
}

IntegrationOutcome full_merge(const Ontology& o1, const Ontology& o2,
                              const Alignment& a, const OutputConfig& cfg) {
    // type map first, so cell endpoints can be resolved before any copy
    EntityTypeMap map;
    const Ontology* sources[2] = {&o1, &o2};
    OutputConfig scratch_cfg = cfg;
    for (int i = 0; i < 2; ++i)
        for (const Axiom& ax : sources[i]->axioms())
            copy_axiom(ax, i + 1, Style::Reference, scratch_cfg, map);

    IntegrationOutcome out;
    out.ontology.set_iri(cfg.base_iri);
    out.type_map = map;
    out.per_source_logical = {o1.logical_count(), o2.logical_count()};

    Alignment filtered = to_one_to_one(a);

    std::unordered_map<Iri, Iri> merge_map;  // original -> /000 IRI
    for (const Cell& c : filtered.cells) {
        if (c.relation != "=" && c.relation != "?") {
            out.skipped_cells.push_back({c, SkipReason::UnsupportedRelation});
            continue;
        }
        SkipReason reason{};
        auto res = resolve_cell(c, map, reason);
        if (!res) {
            out.skipped_cells.push_back({c, reason});
            continue;
        }
        if (merge_map.count(c.entity1) || merge_map.count(c.entity2)) {
            out.skipped_cells.push_back({c, SkipReason::NotOneToOneCell});
            continue;
        }
        // first operand name comes from the lower-indexed ontology
        const Iri& lo =
            res->e1.ont_index <= res->e2.ont_index ? c.entity1 : c.entity2;
        const Iri& hi = &lo == &c.entity1 ? c.entity2 : c.entity1;
        Iri merged = merged_iri(local_name(lo), local_name(hi), cfg);
        merge_map.emplace(c.entity1, merged);
        merge_map.emplace(c.entity2, merged);
        out.merged_pairs.emplace_back(c.entity1, c.entity2);
        if (res->e1.kind == EntityKind::Class) ++out.merged_class_pairs;
        ++out.bridged_cells;
    }

    for (int i = 0; i < 2; ++i) {
        int idx = i + 1;
        for (const Axiom& src : sources[i]->axioms()) {
            Axiom ax = src;
            for (const ArgSlot& s : entity_slots(src)) {
                const Iri& orig = src.args[s.pos];
                if (auto it = merge_map.find(orig); it != merge_map.end()) {
                    ax.args[s.pos] = it->second;
                } else if (orig.is_anonymous()) {
                    ax.args[s.pos] = refactor_anonymous(orig, idx);
                } else if (!s.kind || *s.kind != EntityKind::Datatype) {
                    ax.args[s.pos] = refactor_iri(orig, cfg, idx);
                }
            }
            out.ontology.add(std::move(ax));
        }
    }
    return out;
}

}  // namespace onti
