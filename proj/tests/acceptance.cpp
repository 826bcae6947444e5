// Acceptance suite: one line per criterion, non-zero exit on any failure.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>

#include "fixtures.hpp"
#include "onti/parser.hpp"
#include "onti/repair.hpp"
#include "onti/report.hpp"
#include "oracle.hpp"

using namespace onti;
using namespace onti::testing;

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

void report(int n, const char* label, bool pass, double seconds) {
    std::printf("criterion %2d %-38s %s  (%.2fs)\n", n, label,
                pass ? "PASS" : "FAIL", seconds);
    if (!pass) ++g_failures;
}

struct Timer {
    Clock::time_point t0 = Clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - t0).count();
    }
};

const OutputConfig kCfg{Iri("http://acc")};

std::set<Iri> unsat_of(const Ontology& o) {
    Taxonomy t = classify(o);
    return unsatisfiable_classes(o, t).unsat;
}

// Coherent ontology that still carries disjointness: disjoint axioms are only
// added between classes without a common descendant.
Ontology coherent_with_disjointness(std::mt19937& rng, const std::string& ns,
                                    int n, int disjoint_axioms) {
    Ontology o = random_ontology(rng, ns, n, n / 4, 0, 0);
    BruteForce bf(o);
    auto cls = [&](int i) { return ent(ns, "C" + std::to_string(i)); };
    int added = 0;
    for (int attempt = 0; attempt < 20 * disjoint_axioms && added < disjoint_axioms;
         ++attempt) {
        int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
        if (a == b) continue;
        bool overlap = false;
        for (const Iri& c : bf.classes)
            if (bf.subsumes(cls(a), c) && bf.subsumes(cls(b), c)) overlap = true;
        if (!overlap && o.add(disjoint_classes({cls(a), cls(b)}))) ++added;
    }
    return o;
}

// ---- criterion 1: axiom-preservation law ---------------------------------

void criterion1() {
    Timer timer;
    std::mt19937 rng(101);
    std::vector<Ontology> onts{coherent_ontology(rng, "http://c1", 50),
                               coherent_ontology(rng, "http://c2", 70),
                               coherent_ontology(rng, "http://c3", 90)};
    std::vector<PairedAlignment> all;
    for (auto [i, j] : plan_alignment_pairs(3, Topology::NToN)) {
        std::vector<Cell> cells;
        for (int k = 0; k < 5; ++k)
            cells.push_back(cell(
                ent(onts[i - 1].iri().value, "C" + std::to_string(k)),
                ent(onts[j - 1].iri().value, "C" + std::to_string(k)), 0.9, k));
        all.emplace_back(std::make_pair(i, j),
                         align(onts[i - 1], onts[j - 1], cells));
    }

    bool pass = true;
    for (Topology topo : {Topology::TwoToTwo, Topology::OneToN, Topology::NToN})
        for (Style style : {Style::Refactor, Style::Reference}) {
            IntegrationPlan plan;
            plan.topology = topo;
            plan.style = style;
            auto planned = plan_alignment_pairs(3, topo, plan.pivot);
            std::vector<PairedAlignment> in_plan;
            for (const auto& pa : all)
                if (std::find(planned.begin(), planned.end(), pa.first) !=
                    planned.end())
                    in_plan.push_back(pa);
            auto out = bridge(onts, in_plan, kCfg, plan);
            std::size_t expected = out.bridged_cells;
            for (const Ontology& o : onts) expected += o.logical_count();
            if (out.ontology.logical_count() != expected) pass = false;
            if (out.bridged_cells !=
                static_cast<int>(5 * planned.size()))
                pass = false;
        }
    report(1, "axiom-preservation law", pass && timer.elapsed() < 1.0,
           timer.elapsed());
}

// ---- criterion 2: incoherence formation and resolution -------------------

void criterion2() {
    Timer timer;
    IncoherenceFixture f = incoherence_fixture();
    IntegrationPlan plan;
    plan.style = Style::Reference;
    auto out = bridge({f.o1, f.o2}, {{{1, 2}, f.alignment}}, kCfg, plan);
    std::set<Iri> u = unsat_of(out.ontology);
    std::set<Iri> expected{ent("http://src2", "C"), ent("http://src1", "A1"),
                           ent("http://src1", "A2")};
    bool pass = u == expected &&
                u == BruteForce(out.ontology).unsat(out.ontology);

    plan.one_to_one = true;
    auto resolved = bridge({f.o1, f.o2}, {{{1, 2}, f.alignment}}, kCfg, plan);
    pass = pass && unsat_of(resolved.ontology).empty();
    report(2, "incoherence formation/resolution",
           pass && timer.elapsed() < 1.0, timer.elapsed());
}

// ---- criterion 3: pairwise repair to zero --------------------------------

void criterion3() {
    Timer timer;
    std::mt19937 rng(303);
    bool pass = true;
    for (int trial = 0; trial < 20; ++trial) {
        Ontology o1 = coherent_with_disjointness(rng, "http://ra", 15, 4);
        Ontology o2 = coherent_with_disjointness(rng, "http://rb", 15, 4);
        std::vector<Cell> cells;
        int n = 4 + static_cast<int>(rng() % 8);
        for (int i = 0; i < n; ++i)
            cells.push_back(
                cell(ent("http://ra", "C" + std::to_string(rng() % 15)),
                     ent("http://rb", "C" + std::to_string(rng() % 15)),
                     (1 + rng() % 100) / 100.0, i));
        std::vector<Ontology> onts{o1, o2};
        std::vector<PairedAlignment> als{{{1, 2}, align(o1, o2, cells)}};
        IntegrationPlan plan;
        RepairOutcome r = repair_alignment(onts, als, kCfg, plan);
        if (!r.residual_unsat.empty()) pass = false;
        plan.style = Style::Refactor;
        auto out = bridge(onts, r.kept, kCfg, plan);
        if (!unsat_of(out.ontology).empty()) pass = false;
    }
    report(3, "pairwise repair to zero", pass && timer.elapsed() < 5.0,
           timer.elapsed());
}

// ---- criterion 4: topology ordering --------------------------------------

struct TopologyFixture {
    std::vector<Ontology> onts;
    std::vector<PairedAlignment> all;
};

// O1 carries disjoint parents D1/D2 with 5 children under each; O2 and O3
// contribute 5 plain classes apiece. The pairwise equations close a triangle
// only under N-to-N.
TopologyFixture topology_fixture() {
    TopologyFixture f;
    Ontology o1((Iri("http://t1")));
    Iri d1 = ent("http://t1", "D1"), d2 = ent("http://t1", "D2");
    o1.add(disjoint_classes({d1, d2}));
    for (int i = 0; i < 5; ++i) {
        o1.add(sub_class_of(ent("http://t1", "A" + std::to_string(i)), d1));
        o1.add(sub_class_of(ent("http://t1", "Z" + std::to_string(i)), d2));
    }
    Ontology o2((Iri("http://t2"))), o3((Iri("http://t3")));
    for (int i = 0; i < 5; ++i) {
        o2.add(declaration(EntityKind::Class,
                           ent("http://t2", "B" + std::to_string(i))));
        o3.add(declaration(EntityKind::Class,
                           ent("http://t3", "E" + std::to_string(i))));
    }
    std::vector<Cell> c12, c13, c23;
    for (int i = 0; i < 5; ++i) {
        std::string s = std::to_string(i);
        c12.push_back(cell(ent("http://t2", "B" + s), ent("http://t1", "A" + s),
                           0.9, i));
        c13.push_back(cell(ent("http://t3", "E" + s), ent("http://t1", "Z" + s),
                           0.9, i));
        c23.push_back(cell(ent("http://t2", "B" + s), ent("http://t3", "E" + s),
                           0.9, i));
    }
    f.all = {{{1, 2}, align(o2, o1, c12)},
             {{1, 3}, align(o3, o1, c13)},
             {{2, 3}, align(o2, o3, c23)}};
    f.onts = {std::move(o1), std::move(o2), std::move(o3)};
    return f;
}

std::size_t unsat_under(const TopologyFixture& f, Topology topo) {
    IntegrationPlan plan;
    plan.topology = topo;
    plan.style = Style::Reference;
    auto planned = plan_alignment_pairs(3, topo, plan.pivot);
    std::vector<PairedAlignment> in_plan;
    for (const auto& pa : f.all)
        if (std::find(planned.begin(), planned.end(), pa.first) !=
            planned.end())
            in_plan.push_back(pa);
    auto out = bridge(f.onts, in_plan, kCfg, plan);
    std::set<Iri> u = unsat_of(out.ontology);
    if (u != BruteForce(out.ontology).unsat(out.ontology)) return SIZE_MAX;
    return u.size();
}

void criterion4() {
    Timer timer;
    TopologyFixture f = topology_fixture();
    std::size_t two = unsat_under(f, Topology::TwoToTwo);
    std::size_t one = unsat_under(f, Topology::OneToN);
    std::size_t nn = unsat_under(f, Topology::NToN);
    bool pass = two != SIZE_MAX && one != SIZE_MAX && nn != SIZE_MAX &&
                nn >= two && nn >= one && nn > 0;
    report(4, "topology conflict ordering", pass && timer.elapsed() < 1.0,
           timer.elapsed());
}

// ---- criterion 5: full-merge coverage law --------------------------------

void criterion5() {
    Timer timer;
    std::mt19937 rng(505);
    bool pass = true;
    for (int trial = 0; trial < 10; ++trial) {
        Ontology o1 = coherent_ontology(rng, "http://m1", 8 + rng() % 10);
        Ontology o2 = coherent_ontology(rng, "http://m2", 8 + rng() % 10);
        std::vector<Cell> cells;
        int n = static_cast<int>(rng() % 6);
        for (int i = 0; i < n; ++i)
            cells.push_back(
                cell(ent("http://m1", "C" + std::to_string(rng() % 8)),
                     ent("http://m2", "C" + std::to_string(rng() % 8)),
                     (1 + rng() % 100) / 100.0, i));
        auto out = full_merge(o1, o2, align(o1, o2, cells), kCfg);
        std::size_t expected = o1.entity_count(EntityKind::Class) +
                               o2.entity_count(EntityKind::Class) -
                               out.merged_class_pairs;
        if (out.ontology.entity_count(EntityKind::Class) != expected)
            pass = false;
    }
    report(5, "full-merge coverage law", pass && timer.elapsed() < 1.0,
           timer.elapsed());
}

// ---- criterion 6: merge never conflicts more than bridge -----------------

void criterion6() {
    Timer timer;
    bool pass = true;

    // fixture of criterion 2
    {
        IncoherenceFixture f = incoherence_fixture();
        IntegrationPlan plan;
        auto b = bridge({f.o1, f.o2}, {{{1, 2}, f.alignment}}, kCfg, plan);
        auto m = full_merge(f.o1, f.o2, f.alignment, kCfg);
        if (unsat_of(m.ontology).size() > unsat_of(b.ontology).size())
            pass = false;
    }
    // two-ontology slice of the criterion-4 pattern: every B matched to a
    // child of each disjoint parent
    {
        TopologyFixture f = topology_fixture();
        std::vector<Cell> cells;
        for (int i = 0; i < 5; ++i) {
            std::string s = std::to_string(i);
            cells.push_back(cell(ent("http://t2", "B" + s),
                                 ent("http://t1", "A" + s), 0.9, 2 * i));
            cells.push_back(cell(ent("http://t2", "B" + s),
                                 ent("http://t1", "Z" + s), 0.6, 2 * i + 1));
        }
        Alignment a = align(f.onts[1], f.onts[0], cells);
        IntegrationPlan plan;
        auto b = bridge({f.onts[0], f.onts[1]}, {{{1, 2}, a}}, kCfg, plan);
        auto m = full_merge(f.onts[0], f.onts[1], a, kCfg);
        std::size_t ub = unsat_of(b.ontology).size();
        std::size_t um = unsat_of(m.ontology).size();
        if (um > ub || ub == 0) pass = false;
    }
    report(6, "merge-vs-bridge conflict ordering",
           pass && timer.elapsed() < 1.0, timer.elapsed());
}

// ---- criterion 7: aggregate neutrality -----------------------------------

void criterion7() {
    Timer timer;
    std::mt19937 rng(707);
    bool pass = true;
    for (int trial = 0; trial < 20; ++trial) {
        int k = 2 + static_cast<int>(rng() % 2);
        std::vector<Ontology> sources;
        std::set<Iri> expected_unsat;
        int max_depth = 0;
        for (int s = 0; s < k; ++s) {
            Ontology o = random_ontology(rng, "http://g" + std::to_string(s),
                                         6 + rng() % 12, rng() % 6, rng() % 3,
                                         rng() % 3);
            Taxonomy t = classify(o);
            for (const Iri& u : unsatisfiable_classes(o, t).unsat)
                expected_unsat.insert(refactor_iri(u, kCfg, s + 1));
            max_depth = std::max(max_depth, hierarchy_depth(t));
            sources.push_back(std::move(o));
        }
        auto out = aggregate(sources, kCfg, Style::Refactor);
        Taxonomy t = classify(out.ontology);
        if (unsatisfiable_classes(out.ontology, t).unsat != expected_unsat)
            pass = false;
        if (hierarchy_depth(t) != max_depth) pass = false;
    }
    report(7, "aggregate neutrality", pass && timer.elapsed() < 1.0,
           timer.elapsed());
}

// ---- criterion 8: oracle equivalence -------------------------------------

void criterion8() {
    Timer timer;
    std::mt19937 rng(808);
    bool pass = true;
    for (int trial = 0; trial < 200; ++trial) {
        Ontology o = random_ontology(rng, "http://x", 4 + rng() % 27,
                                     rng() % 14, rng() % 6, rng() % 5);
        if (unsat_of(o) != BruteForce(o).unsat(o)) pass = false;
    }
    report(8, "oracle equivalence (200 ontologies)",
           pass && timer.elapsed() < 10.0, timer.elapsed());
}

// ---- criterion 9: performance at scale -----------------------------------

Ontology scale_ontology(std::mt19937& rng, const std::string& ns, int classes,
                        int logical_target, int disjoint_axioms) {
    Ontology o((Iri(ns)));
    auto cls = [&](int i) { return ent(ns, "C" + std::to_string(i)); };
    for (int i = 0; i < classes; ++i)
        o.add(declaration(EntityKind::Class, cls(i)));
    for (int i = 1; i < classes; ++i)
        o.add(sub_class_of(cls(i), cls(static_cast<int>(rng() % i))));
    while (static_cast<int>(o.logical_count()) < logical_target - disjoint_axioms) {
        int a = static_cast<int>(rng() % classes);
        int b = static_cast<int>(rng() % classes);
        if (a != b) o.add(sub_class_of(cls(a), cls(b)));
    }
    for (int d = 0; d < disjoint_axioms;) {
        int a = static_cast<int>(rng() % classes);
        int b = static_cast<int>(rng() % classes);
        if (a != b && o.add(disjoint_classes({cls(a), cls(b)}))) ++d;
    }
    return o;
}

void criterion9() {
    Timer total;
    std::mt19937 rng(909);
    // 250k classes / 370k logical axioms across three sources
    std::vector<std::string> docs;
    {
        std::vector<Ontology> build{
            scale_ontology(rng, "http://big1", 100000, 148000, 20),
            scale_ontology(rng, "http://big2", 100000, 148000, 20),
            scale_ontology(rng, "http://big3", 50000, 74000, 10)};
        for (const Ontology& o : build) docs.push_back(serialize_ontology(o));
    }

    // parse stage (counts toward the 5-minute budget only)
    std::vector<Ontology> onts;
    std::size_t classes = 0, logical = 0;
    for (const std::string& d : docs) {
        onts.push_back(parse_ontology(d).ontology);
        classes += onts.back().entity_count(EntityKind::Class);
        logical += onts.back().logical_count();
    }
    docs.clear();
    bool sized = classes == 250000 && logical >= 370000;

    // 25k cells over the three N-to-N pairs
    std::vector<PairedAlignment> als;
    int sizes[3] = {100000, 100000, 50000};
    for (auto [i, j] : plan_alignment_pairs(3, Topology::NToN)) {
        std::vector<Cell> cells;
        for (int k = 0; k < 8334 && static_cast<int>(cells.size()) < 8334; ++k)
            cells.push_back(cell(
                ent(onts[i - 1].iri().value,
                    "C" + std::to_string(rng() % sizes[i - 1])),
                ent(onts[j - 1].iri().value,
                    "C" + std::to_string(rng() % sizes[j - 1])),
                (1 + rng() % 100) / 100.0, k));
        als.emplace_back(std::make_pair(i, j),
                         align(onts[i - 1], onts[j - 1], cells));
    }

    Timer bridge_timer;
    IntegrationPlan plan;
    auto out = bridge(onts, als, kCfg, plan);
    double bridge_seconds = bridge_timer.elapsed();

    Taxonomy t = classify(out.ontology);
    UnsatReport r = unsatisfiable_classes(out.ontology, t);
    std::string serialized = serialize_ontology(out.ontology);
    double total_seconds = total.elapsed();

    bool pass = sized && serialized.size() > 0 && bridge_seconds < 60.0 &&
                total_seconds < 300.0 &&
                out.ontology.logical_count() > logical;
    (void)r;
    report(9, "performance at scale", pass, total_seconds);
    std::printf("             bridge stage: %.2fs (limit 60s)\n",
                bridge_seconds);
}

// ---- criterion 10: round-trips -------------------------------------------

void criterion10() {
    Timer timer;
    bool pass = true;
    std::mt19937 rng(111);
    IncoherenceFixture f = incoherence_fixture();
    std::vector<Ontology> corpus{f.o1, f.o2,
                                 coherent_ontology(rng, "http://rt1", 40),
                                 random_ontology(rng, "http://rt2", 20, 8, 4, 4),
                                 Ontology(Iri("http://rt3"))};
    for (const Ontology& o : corpus)
        if (!(parse_ontology(serialize_ontology(o)).ontology == o))
            pass = false;

    std::vector<Alignment> alignments{f.alignment, Alignment{}};
    alignments[1].onto1 = Iri("http://rt1");
    alignments[1].onto2 = Iri("http://rt2");
    for (const Alignment& a : alignments) {
        Alignment back = parse_alignment(serialize_alignment(a));
        if (back.onto1 != a.onto1 || back.onto2 != a.onto2 ||
            back.cells != a.cells)
            pass = false;
    }
    report(10, "parse/serialize round-trips", pass, timer.elapsed());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (g_failures) std::printf("%d criterion(s) FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
