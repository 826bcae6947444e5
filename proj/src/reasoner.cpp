#include "onti/reasoner.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>

namespace onti {

int Taxonomy::class_id(const Iri& c) const {
    auto it = ids_.find(c);
    return it == ids_.end() ? -1 : it->second;
}

bool Taxonomy::subsumes(const Iri& sup, const Iri& sub) const {
    if (sup == sub) return true;
    int a = class_id(sup);
    int b = class_id(sub);
    if (a < 0 || b < 0) return false;
    int from = comp_[b];
    int to = comp_[a];
    if (from == to) return true;
    auto it = ancestor_cache_.find(from);
    if (it == ancestor_cache_.end()) {
        std::set<int> anc;
        std::deque<int> q{from};
        anc.insert(from);
        while (!q.empty()) {
            int n = q.front();
            q.pop_front();
            for (int p : node_up_[n])
                if (anc.insert(p).second) q.push_back(p);
        }
        it = ancestor_cache_.emplace(from, std::move(anc)).first;
    }
    return it->second.count(to) != 0;
}

std::vector<int> Taxonomy::descendant_nodes(int node) const {
    std::vector<int> out{node};
    std::vector<char> seen(node_members_.size(), 0);
    seen[node] = 1;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (int c : node_down_[out[i]])
            if (!seen[c]) {
                seen[c] = 1;
                out.push_back(c);
            }
    return out;
}

Taxonomy classify(const Ontology& o) {
    Taxonomy t;
    t.classes_.assign(o.entities(EntityKind::Class).begin(),
                      o.entities(EntityKind::Class).end());
    std::sort(t.classes_.begin(), t.classes_.end());
    for (std::size_t i = 0; i < t.classes_.size(); ++i)
        t.ids_[t.classes_[i]] = static_cast<int>(i);
    const int n = static_cast<int>(t.classes_.size());
    t.up_.resize(n);

    const auto& axioms = o.axioms();
    for (std::size_t ai = 0; ai < axioms.size(); ++ai) {
        const Axiom& a = axioms[ai];
        if (a.kind == AxiomKind::SubClassOf) {
            int sub = t.ids_[a.args[0]];
            int sup = t.ids_[a.args[1]];
            t.up_[sub].push_back({sup, 1, ai});
        } else if (a.kind == AxiomKind::EquivalentClasses) {
            for (std::size_t i = 0; i + 1 < a.args.size(); ++i) {
                int x = t.ids_[a.args[i]];
                int y = t.ids_[a.args[i + 1]];
                t.up_[x].push_back({y, 0, ai});
                t.up_[y].push_back({x, 0, ai});
            }
        }
    }

    // iterative Tarjan
    t.comp_.assign(n, -1);
    std::vector<int> low(n, 0), num(n, -1), stk;
    std::vector<char> on_stack(n, 0);
    int counter = 0, comp_count = 0;
    struct Frame {
        int v;
        std::size_t edge;
    };
    for (int start = 0; start < n; ++start) {
        if (num[start] != -1) continue;
        std::vector<Frame> frames{{start, 0}};
        num[start] = low[start] = counter++;
        stk.push_back(start);
        on_stack[start] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.edge < t.up_[f.v].size()) {
                int w = t.up_[f.v][f.edge++].to;
                if (num[w] == -1) {
                    num[w] = low[w] = counter++;
                    stk.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                int v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                if (low[v] == num[v]) {
                    int c = comp_count++;
                    t.node_members_.push_back({});
                    for (;;) {
                        int w = stk.back();
                        stk.pop_back();
                        on_stack[w] = 0;
                        t.comp_[w] = c;
                        t.node_members_.back().push_back(w);
                        if (w == v) break;
                    }
                }
            }
        }
    }
    for (auto& m : t.node_members_) std::sort(m.begin(), m.end());

    t.node_up_.resize(comp_count);
    t.node_down_.resize(comp_count);
    for (int v = 0; v < n; ++v)
        for (const Taxonomy::Edge& e : t.up_[v]) {
            int a = t.comp_[v], b = t.comp_[e.to];
            if (a != b) {
                t.node_up_[a].push_back(b);
                t.node_down_[b].push_back(a);
            }
        }
    auto dedup = [](std::vector<std::vector<int>>& adj) {
        for (auto& v : adj) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        }
    };
    dedup(t.node_up_);
    dedup(t.node_down_);
    return t;
}

namespace {

struct DisjointPair {
    Iri d1, d2;
    std::size_t axiom;
};

std::vector<DisjointPair> disjoint_pairs(const Ontology& o) {
    std::vector<DisjointPair> pairs;
    const auto& axioms = o.axioms();
    for (std::size_t ai = 0; ai < axioms.size(); ++ai) {
        const Axiom& a = axioms[ai];
        if (a.kind != AxiomKind::DisjointClasses) continue;
        for (std::size_t i = 0; i < a.args.size(); ++i)
            for (std::size_t j = i + 1; j < a.args.size(); ++j)
                pairs.push_back({a.args[i], a.args[j], ai});
    }
    return pairs;
}

bool is_builtin(const Iri& c) {
    return c.value == kOwlThing || c.value == kOwlNothing;
}

}  // namespace

UnsatReport unsatisfiable_classes(const Ontology& o, const Taxonomy& t) {
    UnsatReport r;
    auto pairs = disjoint_pairs(o);
    if (pairs.empty()) return r;

    std::unordered_map<int, std::vector<int>> desc_cache;
    auto descendants = [&](int node) -> const std::vector<int>& {
        auto it = desc_cache.find(node);
        if (it == desc_cache.end())
            it = desc_cache.emplace(node, t.descendant_nodes(node)).first;
        return it->second;
    };

    std::vector<char> direct(t.node_count(), 0);
    std::map<int, std::pair<Iri, Iri>> witness;
    for (const DisjointPair& p : pairs) {
        int n1 = t.node_of(t.class_id(p.d1));
        int n2 = t.node_of(t.class_id(p.d2));
        auto mark = [&](int node) {
            if (!direct[node]) {
                direct[node] = 1;
                witness.emplace(node, std::make_pair(p.d1, p.d2));
            }
        };
        if (n1 == n2) {
            mark(n1);  // self-disjoint via equivalence collapse
            continue;
        }
        const auto& da = descendants(n1);
        const auto& db = descendants(n2);
        std::vector<char> in_a(t.node_count(), 0);
        for (int x : da) in_a[x] = 1;
        for (int x : db)
            if (in_a[x]) mark(x);
    }

    // downward closure: everything subsumed by an unsat node is unsat
    std::vector<int> frontier;
    std::vector<char> unsat_node(t.node_count(), 0);
    for (std::size_t n = 0; n < t.node_count(); ++n)
        if (direct[n]) {
            unsat_node[n] = 1;
            frontier.push_back(static_cast<int>(n));
        }
    for (std::size_t i = 0; i < frontier.size(); ++i)
        for (int c : t.node_children()[frontier[i]])
            if (!unsat_node[c]) {
                unsat_node[c] = 1;
                frontier.push_back(c);
            }

    for (std::size_t n = 0; n < t.node_count(); ++n) {
        if (!unsat_node[n]) continue;
        for (int cid : t.members(static_cast<int>(n))) {
            const Iri& c = t.class_iri(cid);
            if (c.value == kOwlNothing) continue;
            r.unsat.insert(c);
            if (direct[n]) r.direct_witness.emplace(c, witness.at(n));
        }
    }
    return r;
}

int hierarchy_depth(const Taxonomy& t) {
    const std::size_t nn = t.node_count();
    if (nn == 0) return 0;
    std::vector<char> counted(nn, 1);
    std::size_t usable = 0;
    for (std::size_t n = 0; n < nn; ++n) {
        bool all_builtin = true;
        for (int cid : t.members(static_cast<int>(n)))
            if (!is_builtin(t.class_iri(cid))) all_builtin = false;
        counted[n] = all_builtin ? 0 : 1;
        usable += counted[n];
    }
    if (usable == 0) return 0;

    // children-first order over the condensed DAG
    // indeg counts unprocessed children; leaves go first
    std::vector<int> indeg(nn, 0);
    for (std::size_t n = 0; n < nn; ++n)
        indeg[n] = static_cast<int>(t.node_children()[n].size());
    std::vector<int> order;
    order.reserve(nn);
    for (std::size_t n = 0; n < nn; ++n)
        if (indeg[n] == 0) order.push_back(static_cast<int>(n));
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int p : t.node_parents()[order[i]])
            if (--indeg[p] == 0) order.push_back(p);

    std::vector<int> chain(nn, 0);
    int best = 0;
    for (int n : order) {
        int below = 0;
        for (int c : t.node_children()[n]) below = std::max(below, chain[c]);
        chain[n] = below + counted[n];
        best = std::max(best, chain[n]);
    }
    return best;
}

ConsistencyVerdict is_consistent(const Ontology& o, const Taxonomy& t,
                                 const UnsatReport& r) {
    ConsistencyVerdict v;
    // SameIndividual closure via union-find
    std::unordered_map<Iri, Iri> parent;
    std::function<Iri(const Iri&)> find = [&](const Iri& x) -> Iri {
        auto it = parent.find(x);
        if (it == parent.end() || it->second == x) return x;
        Iri root = find(it->second);
        parent[x] = root;
        return root;
    };
    auto unite = [&](const Iri& a, const Iri& b) {
        Iri ra = find(a), rb = find(b);
        if (!(ra == rb)) parent[std::max(ra, rb)] = std::min(ra, rb);
    };
    for (const Axiom& a : o.axioms())
        if (a.kind == AxiomKind::SameIndividual)
            for (std::size_t i = 0; i + 1 < a.args.size(); ++i)
                unite(a.args[i], a.args[i + 1]);

    std::map<Iri, std::set<Iri>> asserted;  // group root -> classes
    for (const Axiom& a : o.axioms()) {
        if (a.kind != AxiomKind::ClassAssertion) continue;
        const Iri& cls = a.args[0];
        const Iri& ind = a.args[1];
        if (r.unsat.count(cls))
            v.reasons.push_back("individual <" + ind.value +
                                "> instantiates unsatisfiable class <" +
                                cls.value + ">");
        asserted[find(ind)].insert(cls);
    }

    auto pairs = disjoint_pairs(o);
    for (const auto& [root, classes] : asserted) {
        for (const DisjointPair& p : pairs) {
            const Iri* c1 = nullptr;
            const Iri* c2 = nullptr;
            for (const Iri& c : classes) {
                if (!c1 && t.subsumes(p.d1, c)) c1 = &c;
                if (t.subsumes(p.d2, c) && (!c1 || !(c == *c1))) {
                    c2 = &c;
                    if (!c1)
                        for (const Iri& c1b : classes)
                            if (!(c1b == c) && t.subsumes(p.d1, c1b)) c1 = &c1b;
                }
            }
            if (c1 && c2 && !(*c1 == *c2)) {
                v.reasons.push_back(
                    "individual group of <" + root.value + "> asserted into <" +
                    c1->value + "> and <" + c2->value +
                    "> which fall under disjoint classes <" + p.d1.value +
                    "> / <" + p.d2.value + ">");
                break;
            }
        }
    }

    for (const Axiom& a : o.axioms())
        if (a.kind == AxiomKind::DifferentIndividuals)
            for (std::size_t i = 0; i < a.args.size(); ++i)
                for (std::size_t j = i + 1; j < a.args.size(); ++j)
                    if (find(a.args[i]) == find(a.args[j]))
                        v.reasons.push_back("individuals <" + a.args[i].value +
                                            "> and <" + a.args[j].value +
                                            "> are both same and different");

    v.consistent = v.reasons.empty();
    return v;
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// 0-1 BFS over the class-level up graph; distance counts subsumption hops.
std::vector<int> zero_one_bfs(const Taxonomy& t, int source) {
    std::vector<int> dist(t.class_count(), kInf);
    std::deque<int> dq{source};
    dist[source] = 0;
    while (!dq.empty()) {
        int v = dq.front();
        dq.pop_front();
        for (const Taxonomy::Edge& e : t.up_edges()[v]) {
            int nd = dist[v] + e.weight;
            if (nd < dist[e.to]) {
                dist[e.to] = nd;
                if (e.weight == 0)
                    dq.push_front(e.to);
                else
                    dq.push_back(e.to);
            }
        }
    }
    return dist;
}

// Shortest c -> target path along "tight" edges, reconstructed backward.
// Expansion in lexicographic class order keeps ties deterministic.
struct PathResult {
    std::vector<Iri> classes;
    std::vector<std::size_t> axioms;
};

PathResult tight_path(const Taxonomy& t, const std::vector<int>& dist,
                      int source, int target) {
    // reverse tight edges: for v, predecessors u with dist[u] + w == dist[v]
    std::vector<std::vector<std::pair<int, std::size_t>>> preds(t.class_count());
    for (std::size_t u = 0; u < t.class_count(); ++u) {
        if (dist[u] == kInf) continue;
        for (const Taxonomy::Edge& e : t.up_edges()[u])
            if (dist[u] + e.weight == dist[e.to])
                preds[e.to].emplace_back(static_cast<int>(u), e.axiom);
    }
    for (auto& p : preds)
        std::sort(p.begin(), p.end(), [&](const auto& a, const auto& b) {
            return t.class_iri(a.first) < t.class_iri(b.first);
        });

    std::vector<int> back(t.class_count(), -1);
    std::vector<std::size_t> back_axiom(t.class_count(), 0);
    std::vector<char> seen(t.class_count(), 0);
    std::deque<int> q{target};
    seen[target] = 1;
    while (!q.empty() && !seen[source]) {
        int v = q.front();
        q.pop_front();
        for (const auto& [u, ax] : preds[v])
            if (!seen[u]) {
                seen[u] = 1;
                back[u] = v;
                back_axiom[u] = ax;
                q.push_back(u);
            }
    }
    PathResult pr;
    int v = source;
    pr.classes.push_back(t.class_iri(v));
    while (v != target) {
        pr.axioms.push_back(back_axiom[v]);
        v = back[v];
        pr.classes.push_back(t.class_iri(v));
    }
    return pr;
}

}  // namespace

Justification justify_unsat(const Iri& c, const Ontology& o, const Taxonomy& t,
                            const UnsatReport& r) {
    if (!r.unsat.count(c))
        throw NotUnsatisfiable("<" + c.value + "> is satisfiable");
    int source = t.class_id(c);
    std::vector<int> dist = zero_one_bfs(t, source);

    // best witnessing pair: minimal combined path length, lexicographic ties
    auto pairs = disjoint_pairs(o);
    const DisjointPair* best = nullptr;
    long best_len = 0;
    for (const DisjointPair& p : pairs) {
        int a = t.class_id(p.d1);
        int b = t.class_id(p.d2);
        if (dist[a] == kInf || dist[b] == kInf) continue;
        long len = static_cast<long>(dist[a]) + dist[b];
        if (!best || len < best_len ||
            (len == best_len &&
             std::tie(p.d1, p.d2) < std::tie(best->d1, best->d2))) {
            best = &p;
            best_len = len;
        }
    }
    if (!best)
        throw NotUnsatisfiable("<" + c.value +
                               "> has no reachable disjoint pair");

    Justification j;
    j.unsat_class = c;
    j.disjoint_pair = {best->d1, best->d2};
    PathResult p1 = tight_path(t, dist, source, t.class_id(best->d1));
    PathResult p2 = tight_path(t, dist, source, t.class_id(best->d2));
    j.path1 = std::move(p1.classes);
    j.path2 = std::move(p2.classes);

    std::vector<std::size_t> axs = p1.axioms;
    axs.insert(axs.end(), p2.axioms.begin(), p2.axioms.end());
    axs.push_back(best->axiom);
    std::sort(axs.begin(), axs.end());
    axs.erase(std::unique(axs.begin(), axs.end()), axs.end());
    for (std::size_t ai : axs) j.contributing.push_back(o.axioms()[ai]);
    return j;
}

}  // namespace onti
