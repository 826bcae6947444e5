#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <unordered_set>
#include <vector>

#include "onti/axiom.hpp"

namespace onti {

// One entity-valued operand position of an axiom. kind == nullopt marks an
// entity reference of unknown kind (the subject of an AnnotationAssertion):
// it is rewritten by the integrator but never indexed.
struct ArgSlot {
    std::size_t pos;
    std::optional<EntityKind> kind;
};

// Positional kinds of every entity operand. Individual positions report
// NamedIndividual; callers downgrade to AnonymousIndividual when the operand
// starts "_:". Literal operands and annotation values are not slots.
std::vector<ArgSlot> entity_slots(const Axiom& a);

// Named set of axioms with set semantics (structural equality) plus a
// per-kind index of declared-or-used entities.
class Ontology {
  public:
    explicit Ontology(Iri iri = Iri("http://example.org/onto"))
        : iri_(std::move(iri)) {}

    const Iri& iri() const { return iri_; }
    void set_iri(Iri iri) { iri_ = std::move(iri); }

    // Canonicalizes, then inserts unless already present. Returns true when
    // the axiom set grew; false for duplicates and degenerate lists.
    bool add(Axiom a);

    bool contains(const Axiom& a) const { return seen_.count(a) != 0; }

    const std::vector<Axiom>& axioms() const { return axioms_; }

    const std::unordered_set<Iri>& entities(EntityKind k) const {
        return index_[static_cast<std::size_t>(k)];
    }
    std::size_t entity_count(EntityKind k) const { return entities(k).size(); }

    std::size_t logical_count() const { return logical_; }
    std::size_t declaration_count() const { return declarations_; }
    std::size_t annotation_count() const { return annotations_; }

    bool operator==(const Ontology& o) const {
        return iri_ == o.iri_ && seen_ == o.seen_;
    }

  private:
    Iri iri_;
    std::vector<Axiom> axioms_;
    std::unordered_set<Axiom> seen_;
    std::array<std::unordered_set<Iri>, 7> index_;
    std::size_t logical_ = 0;
    std::size_t declarations_ = 0;
    std::size_t annotations_ = 0;
};

}  // namespace onti
