#include "onti/axiom.hpp"

#include <algorithm>

namespace onti {

const char* to_string(AxiomKind k) {
    switch (k) {
        case AxiomKind::Declaration: return "Declaration";
        case AxiomKind::SubClassOf: return "SubClassOf";
        case AxiomKind::EquivalentClasses: return "EquivalentClasses";
        case AxiomKind::DisjointClasses: return "DisjointClasses";
        case AxiomKind::SubObjectPropertyOf: return "SubObjectPropertyOf";
        case AxiomKind::EquivalentObjectProperties: return "EquivalentObjectProperties";
        case AxiomKind::DisjointObjectProperties: return "DisjointObjectProperties";
        case AxiomKind::InverseObjectProperties: return "InverseObjectProperties";
        case AxiomKind::ObjectPropertyDomain: return "ObjectPropertyDomain";
        case AxiomKind::ObjectPropertyRange: return "ObjectPropertyRange";
        case AxiomKind::PropertyCharacteristic: return "PropertyCharacteristic";
        case AxiomKind::SubDataPropertyOf: return "SubDataPropertyOf";
        case AxiomKind::EquivalentDataProperties: return "EquivalentDataProperties";
        case AxiomKind::DisjointDataProperties: return "DisjointDataProperties";
        case AxiomKind::DataPropertyDomain: return "DataPropertyDomain";
        case AxiomKind::DataPropertyRange: return "DataPropertyRange";
        case AxiomKind::SubAnnotationPropertyOf: return "SubAnnotationPropertyOf";
        case AxiomKind::ClassAssertion: return "ClassAssertion";
        case AxiomKind::ObjectPropertyAssertion: return "ObjectPropertyAssertion";
        case AxiomKind::DataPropertyAssertion: return "DataPropertyAssertion";
        case AxiomKind::SameIndividual: return "SameIndividual";
        case AxiomKind::DifferentIndividuals: return "DifferentIndividuals";
        case AxiomKind::AnnotationAssertion: return "AnnotationAssertion";
    }
    return "?";
}

const char* to_string(PropertyTrait t) {
    switch (t) {
        case PropertyTrait::Functional: return "Functional";
        case PropertyTrait::InverseFunctional: return "InverseFunctional";
        case PropertyTrait::Transitive: return "Transitive";
        case PropertyTrait::Symmetric: return "Symmetric";
        case PropertyTrait::Reflexive: return "Reflexive";
        case PropertyTrait::Irreflexive: return "Irreflexive";
    }
    return "?";
}

bool has_unordered_args(AxiomKind k) {
    switch (k) {
        case AxiomKind::EquivalentClasses:
        case AxiomKind::DisjointClasses:
        case AxiomKind::EquivalentObjectProperties:
        case AxiomKind::DisjointObjectProperties:
        case AxiomKind::InverseObjectProperties:
        case AxiomKind::EquivalentDataProperties:
        case AxiomKind::DisjointDataProperties:
        case AxiomKind::SameIndividual:
        case AxiomKind::DifferentIndividuals:
            return true;
        default:
            return false;
    }
}

bool canonicalize(Axiom& a) {
    if (!has_unordered_args(a.kind)) return true;
    std::sort(a.args.begin(), a.args.end());
    a.args.erase(std::unique(a.args.begin(), a.args.end()), a.args.end());
    return a.args.size() >= 2;
}

static void mix(std::size_t& h, std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
}

std::size_t hash_value(const Axiom& a) {
    std::size_t h = static_cast<std::size_t>(a.kind);
    if (a.kind == AxiomKind::Declaration)
        mix(h, static_cast<std::size_t>(a.decl_kind));
    if (a.kind == AxiomKind::PropertyCharacteristic)
        mix(h, static_cast<std::size_t>(a.trait));
    std::hash<std::string> hs;
    for (const auto& i : a.args) mix(h, hs(i.value));
    if (a.literal) {
        mix(h, hs(a.literal->lexical));
        mix(h, hs(a.literal->datatype));
        mix(h, hs(a.literal->lang));
    }
    if (a.ann_value) {
        if (const Iri* i = std::get_if<Iri>(&*a.ann_value)) {
            mix(h, hs(i->value));
        } else {
            const Literal& l = std::get<Literal>(*a.ann_value);
            mix(h, hs(l.lexical));
            mix(h, hs(l.datatype));
            mix(h, hs(l.lang));
        }
    }
    return h;
}

Axiom declaration(EntityKind kind, Iri entity) {
    Axiom a;
    a.kind = AxiomKind::Declaration;
    a.decl_kind = kind;
    a.args = {std::move(entity)};
    return a;
}

Axiom sub_class_of(Iri sub, Iri sup) {
    Axiom a;
    a.kind = AxiomKind::SubClassOf;
    a.args = {std::move(sub), std::move(sup)};
    return a;
}

static Axiom list_axiom(AxiomKind k, std::vector<Iri> xs) {
    Axiom a;
    a.kind = k;
    a.args = std::move(xs);
    canonicalize(a);
    return a;
}

Axiom equivalent_classes(std::vector<Iri> classes) {
    return list_axiom(AxiomKind::EquivalentClasses, std::move(classes));
}

Axiom disjoint_classes(std::vector<Iri> classes) {
    return list_axiom(AxiomKind::DisjointClasses, std::move(classes));
}

Axiom class_assertion(Iri cls, Iri individual) {
    Axiom a;
    a.kind = AxiomKind::ClassAssertion;
    a.args = {std::move(cls), std::move(individual)};
    return a;
}

Axiom same_individual(std::vector<Iri> individuals) {
    return list_axiom(AxiomKind::SameIndividual, std::move(individuals));
}

Axiom different_individuals(std::vector<Iri> individuals) {
    return list_axiom(AxiomKind::DifferentIndividuals, std::move(individuals));
}

}  // namespace onti
