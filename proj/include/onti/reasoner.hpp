#pragma once

#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "onti/ontology.hpp"

namespace onti {

inline constexpr const char* kOwlThing = "http://www.w3.org/2002/07/owl#Thing";
inline constexpr const char* kOwlNothing =
    "http://www.w3.org/2002/07/owl#Nothing";

struct NotUnsatisfiable : std::runtime_error {
    explicit NotUnsatisfiable(const std::string& what)
        : std::runtime_error(what) {}
};

// Subsumption structure over the named classes of one ontology: a
// class-level graph (equivalence edges weight 0, subsumption edges weight 1)
// condensed into a DAG of mutual-subsumption components.
class Taxonomy {
  public:
    struct Edge {
        int to;          // class id
        int weight;      // 0 = equivalence-derived, 1 = SubClassOf
        std::size_t axiom;  // index into ontology.axioms()
    };

    int class_id(const Iri& c) const;          // -1 when unknown
    const Iri& class_iri(int id) const { return classes_[id]; }
    std::size_t class_count() const { return classes_.size(); }

    int node_of(int class_id) const { return comp_[class_id]; }
    std::size_t node_count() const { return node_members_.size(); }
    const std::vector<int>& members(int node) const {
        return node_members_[node];
    }

    // condensed DAG, child -> parent
    const std::vector<std::vector<int>>& node_parents() const {
        return node_up_;
    }
    const std::vector<std::vector<int>>& node_children() const {
        return node_down_;
    }

    // class-level graph, sub -> sup
    const std::vector<std::vector<Edge>>& up_edges() const { return up_; }

    // sup subsumes sub (reflexive). Lazily cached per query source.
    bool subsumes(const Iri& sup, const Iri& sub) const;

    // reflexive descendant nodes of `node` in the condensed DAG
    std::vector<int> descendant_nodes(int node) const;

  private:
    friend Taxonomy classify(const Ontology& o);

    std::vector<Iri> classes_;
    std::unordered_map<Iri, int> ids_;
    std::vector<std::vector<Edge>> up_;
    std::vector<int> comp_;
    std::vector<std::vector<int>> node_members_;
    std::vector<std::vector<int>> node_up_;
    std::vector<std::vector<int>> node_down_;

    mutable std::unordered_map<int, std::set<int>> ancestor_cache_;
};

Taxonomy classify(const Ontology& o);

// Why one class is unsatisfiable: a disjoint pair plus the two subsumption
// chains that reach it. Zero-weight (equivalence) hops appear inside the
// paths; their axioms are listed with the contributing set.
struct Justification {
    Iri unsat_class;
    std::pair<Iri, Iri> disjoint_pair;
    std::vector<Iri> path1;  // unsat class ... disjoint_pair.first
    std::vector<Iri> path2;  // unsat class ... disjoint_pair.second
    std::vector<Axiom> contributing;
};

struct UnsatReport {
    std::set<Iri> unsat;
    // rule-(a) roots: class -> witnessing disjoint pair
    std::map<Iri, std::pair<Iri, Iri>> direct_witness;
};

UnsatReport unsatisfiable_classes(const Ontology& o, const Taxonomy& t);

struct ConsistencyVerdict {
    bool consistent = true;
    std::vector<std::string> reasons;
};

ConsistencyVerdict is_consistent(const Ontology& o, const Taxonomy& t,
                                 const UnsatReport& r);

// Levels on the longest root-to-leaf chain of the condensed DAG,
// owl:Thing/Nothing excluded; 0 when there are no classes.
int hierarchy_depth(const Taxonomy& t);

Justification justify_unsat(const Iri& c, const Ontology& o, const Taxonomy& t,
                            const UnsatReport& r);

}  // namespace onti
