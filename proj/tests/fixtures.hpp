// Shared synthetic fixtures for unit and acceptance tests.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "onti/alignment.hpp"
#include "onti/integrator.hpp"
#include "onti/ontology.hpp"

namespace onti::testing {

inline Iri ent(const std::string& ns, const std::string& name) {
    return Iri(ns + "#" + name);
}

inline Cell cell(Iri e1, Iri e2, double m = 1.0, int order = 0,
                 const char* rel = "=") {
    return Cell{std::move(e1), std::move(e2), rel, m, order};
}

inline Alignment align(const Ontology& o1, const Ontology& o2,
                       std::vector<Cell> cells) {
    Alignment a;
    a.onto1 = o1.iri();
    a.onto2 = o2.iri();
    a.cells = std::move(cells);
    return a;
}

// Random ontology over `n` classes: tree-ish subsumption plus extra random
// edges, optional equivalences and disjointness.
inline Ontology random_ontology(std::mt19937& rng, const std::string& ns,
                                int n, int extra_edges, int equivalences,
                                int disjoint_axioms) {
    Ontology o((Iri(ns)));
    auto cls = [&](int i) { return ent(ns, "C" + std::to_string(i)); };
    for (int i = 0; i < n; ++i) o.add(declaration(EntityKind::Class, cls(i)));
    for (int i = 1; i < n; ++i)
        o.add(sub_class_of(cls(i), cls(static_cast<int>(rng() % i))));
    for (int e = 0; e < extra_edges; ++e) {
        int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
        if (a != b) o.add(sub_class_of(cls(a), cls(b)));
    }
    for (int e = 0; e < equivalences; ++e) {
        int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
        if (a != b) o.add(equivalent_classes({cls(a), cls(b)}));
    }
    for (int e = 0; e < disjoint_axioms; ++e) {
        int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
        if (a != b) o.add(disjoint_classes({cls(a), cls(b)}));
    }
    return o;
}

// A coherent chain-plus-branches ontology of exactly `n` classes.
inline Ontology coherent_ontology(std::mt19937& rng, const std::string& ns,
                                  int n) {
    return random_ontology(rng, ns, n, n / 4, 0, 0);
}

// The incoherence-formation fixture: one source with disjoint parents, a
// second contributing one class equated to children of both.
struct IncoherenceFixture {
    Ontology o1, o2;
    Alignment alignment;  // C = A1 (0.9), C = A2 (0.6)
};

inline IncoherenceFixture incoherence_fixture() {
    IncoherenceFixture f;
    f.o1 = Ontology(Iri("http://src1"));
    Iri a1 = ent("http://src1", "A1"), a2 = ent("http://src1", "A2");
    Iri d1 = ent("http://src1", "D1"), d2 = ent("http://src1", "D2");
    f.o1.add(sub_class_of(a1, d1));
    f.o1.add(sub_class_of(a2, d2));
    f.o1.add(disjoint_classes({d1, d2}));
    f.o2 = Ontology(Iri("http://src2"));
    f.o2.add(declaration(EntityKind::Class, ent("http://src2", "C")));
    f.alignment = align(f.o2, f.o1,
                        {cell(ent("http://src2", "C"), a1, 0.9, 0),
                         cell(ent("http://src2", "C"), a2, 0.6, 1)});
    return f;
}

}  // namespace onti::testing
