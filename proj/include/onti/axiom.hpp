#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "onti/iri.hpp"

namespace onti {

enum class AxiomKind {
    Declaration,
    SubClassOf,
    EquivalentClasses,
    DisjointClasses,
    SubObjectPropertyOf,
    EquivalentObjectProperties,
    DisjointObjectProperties,
    InverseObjectProperties,
    ObjectPropertyDomain,
    ObjectPropertyRange,
    PropertyCharacteristic,
    SubDataPropertyOf,
    EquivalentDataProperties,
    DisjointDataProperties,
    DataPropertyDomain,
    DataPropertyRange,
    SubAnnotationPropertyOf,
    ClassAssertion,
    ObjectPropertyAssertion,
    DataPropertyAssertion,
    SameIndividual,
    DifferentIndividuals,
    AnnotationAssertion,
};

enum class PropertyTrait {
    Functional,
    InverseFunctional,
    Transitive,
    Symmetric,
    Reflexive,
    Irreflexive,
};

const char* to_string(AxiomKind k);
const char* to_string(PropertyTrait t);

struct Literal {
    std::string lexical;
    std::string datatype;  // full IRI, empty if untyped
    std::string lang;      // language tag, empty if none

    auto operator<=>(const Literal&) const = default;
};

// Literal-or-IRI, the value slot of an AnnotationAssertion.
using AnnotationValue = std::variant<Iri, Literal>;

// One axiom of the named-entity subset. Operands live in `args`, in the
// variant's positional order; unordered-list variants (Equivalent*,
// Disjoint*, Inverse, Same, Different) are kept sorted so structural
// equality ignores operand order.
struct Axiom {
    AxiomKind kind{};
    EntityKind decl_kind{};              // Declaration only
    PropertyTrait trait{};               // PropertyCharacteristic only
    std::vector<Iri> args;
    std::optional<Literal> literal;      // DataPropertyAssertion only
    std::optional<AnnotationValue> ann_value;  // AnnotationAssertion only

    bool is_logical() const {
        return kind != AxiomKind::Declaration &&
               kind != AxiomKind::AnnotationAssertion;
    }

    bool operator==(const Axiom&) const = default;
};

// True for variants whose operand list is an unordered set of >= 2 IRIs.
bool has_unordered_args(AxiomKind k);

// Sorts unordered-list operands and drops exact duplicates. Returns false
// (degenerate) when fewer than 2 distinct operands remain.
bool canonicalize(Axiom& a);

std::size_t hash_value(const Axiom& a);

// --- constructors for the common variants ---

Axiom declaration(EntityKind kind, Iri entity);
Axiom sub_class_of(Iri sub, Iri sup);
Axiom equivalent_classes(std::vector<Iri> classes);
Axiom disjoint_classes(std::vector<Iri> classes);
Axiom class_assertion(Iri cls, Iri individual);
Axiom same_individual(std::vector<Iri> individuals);
Axiom different_individuals(std::vector<Iri> individuals);

}  // namespace onti

template <>
struct std::hash<onti::Axiom> {
    size_t operator()(const onti::Axiom& a) const noexcept {
        return onti::hash_value(a);
    }
};
