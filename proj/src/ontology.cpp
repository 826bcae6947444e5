#include "onti/ontology.hpp"

namespace onti {

std::vector<ArgSlot> entity_slots(const Axiom& a) {
    using K = EntityKind;
    auto all = [&](K k) {
        std::vector<ArgSlot> s;
        for (std::size_t i = 0; i < a.args.size(); ++i) s.push_back({i, k});
        return s;
    };
    switch (a.kind) {
        case AxiomKind::Declaration:
            return {{0, a.decl_kind}};
        case AxiomKind::SubClassOf:
        case AxiomKind::EquivalentClasses:
        case AxiomKind::DisjointClasses:
            return all(K::Class);
        case AxiomKind::SubObjectPropertyOf:
        case AxiomKind::EquivalentObjectProperties:
        case AxiomKind::DisjointObjectProperties:
        case AxiomKind::InverseObjectProperties:
        case AxiomKind::PropertyCharacteristic:
            return all(K::ObjectProperty);
        case AxiomKind::ObjectPropertyDomain:
        case AxiomKind::ObjectPropertyRange:
            return {{0, K::ObjectProperty}, {1, K::Class}};
        case AxiomKind::SubDataPropertyOf:
        case AxiomKind::EquivalentDataProperties:
        case AxiomKind::DisjointDataProperties:
            return all(K::DataProperty);
        case AxiomKind::DataPropertyDomain:
            return {{0, K::DataProperty}, {1, K::Class}};
        case AxiomKind::DataPropertyRange:
            return {{0, K::DataProperty}, {1, K::Datatype}};
        case AxiomKind::SubAnnotationPropertyOf:
            return all(K::AnnotationProperty);
        case AxiomKind::ClassAssertion:
            return {{0, K::Class}, {1, K::NamedIndividual}};
        case AxiomKind::ObjectPropertyAssertion:
            return {{0, K::ObjectProperty},
                    {1, K::NamedIndividual},
                    {2, K::NamedIndividual}};
        case AxiomKind::DataPropertyAssertion:
            return {{0, K::DataProperty}, {1, K::NamedIndividual}};
        case AxiomKind::SameIndividual:
        case AxiomKind::DifferentIndividuals:
            return all(K::NamedIndividual);
        case AxiomKind::AnnotationAssertion:
            return {{0, K::AnnotationProperty}, {1, std::nullopt}};
    }
    return {};
}

bool Ontology::add(Axiom a) {
    if (!canonicalize(a)) return false;
    if (seen_.count(a)) return false;

    for (const ArgSlot& s : entity_slots(a)) {
        if (!s.kind) continue;  // annotation subjects stay unindexed
        EntityKind k = *s.kind;
        if (k == EntityKind::NamedIndividual && a.args[s.pos].is_anonymous())
            k = EntityKind::AnonymousIndividual;
        index_[static_cast<std::size_t>(k)].insert(a.args[s.pos]);
    }
    if (a.is_logical())
        ++logical_;
    else if (a.kind == AxiomKind::Declaration)
        ++declarations_;
    else
        ++annotations_;

    seen_.insert(a);
    axioms_.push_back(std::move(a));
    return true;
}

}  // namespace onti
