#include "onti/report.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "onti/parser.hpp"

namespace onti {

namespace {

double ms_round(double seconds) { return std::round(seconds * 1000.0) / 1000.0; }

using Json = nlohmann::ordered_json;

Json to_json(const JustificationSummary& j) {
    return Json{{"class", j.unsat_class},
                {"disjoint", {j.disjoint1, j.disjoint2}},
                {"path1", j.path1},
                {"path2", j.path2},
                {"contributing", j.contributing}};
}

JustificationSummary justification_from_json(const Json& j) {
    JustificationSummary s;
    s.unsat_class = j.at("class");
    s.disjoint1 = j.at("disjoint").at(0);
    s.disjoint2 = j.at("disjoint").at(1);
    s.path1 = j.at("path1").get<std::vector<std::string>>();
    s.path2 = j.at("path2").get<std::vector<std::string>>();
    s.contributing = j.at("contributing").get<std::vector<std::string>>();
    return s;
}

}  // namespace

bool MetricsReport::operator==(const MetricsReport& o) const {
    return entity_counts == o.entity_counts &&
           logical_axioms == o.logical_axioms &&
           declarations == o.declarations &&
           annotation_assertions == o.annotation_assertions &&
           total_axioms == o.total_axioms && bridged_cells == o.bridged_cells &&
           expected_logical == o.expected_logical &&
           expected_law_pass == o.expected_law_pass &&
           unsat_count == o.unsat_count &&
           sample_justifications == o.sample_justifications &&
           coherent == o.coherent && consistent == o.consistent &&
           inconsistency_reasons == o.inconsistency_reasons &&
           hierarchy_depth == o.hierarchy_depth &&
           timings.parse_seconds == o.timings.parse_seconds &&
           timings.integrate_seconds == o.timings.integrate_seconds &&
           timings.reason_seconds == o.timings.reason_seconds &&
           timings.total_seconds == o.timings.total_seconds &&
           skipped == o.skipped;
}

MetricsReport compute_metrics(const IntegrationOutcome& outcome,
                              const Ontology& o, const Taxonomy& t,
                              const UnsatReport& r,
                              const ConsistencyVerdict& v,
                              const Timings& timers) {
    MetricsReport m;
    for (EntityKind k :
         {EntityKind::Class, EntityKind::ObjectProperty, EntityKind::DataProperty,
          EntityKind::AnnotationProperty, EntityKind::NamedIndividual,
          EntityKind::AnonymousIndividual, EntityKind::Datatype})
        m.entity_counts[to_string(k)] = o.entity_count(k);
    m.logical_axioms = o.logical_count();
    m.declarations = o.declaration_count();
    m.annotation_assertions = o.annotation_count();
    m.total_axioms = o.axioms().size();
    m.bridged_cells = static_cast<std::size_t>(outcome.bridged_cells);
    m.expected_logical =
        std::accumulate(outcome.per_source_logical.begin(),
                        outcome.per_source_logical.end(), std::size_t{0}) +
        m.bridged_cells;
    m.expected_law_pass = m.expected_logical == m.logical_axioms;
    m.unsat_count = r.unsat.size();
    m.coherent = r.unsat.empty();
    m.consistent = v.consistent;
    m.inconsistency_reasons = v.reasons;
    m.hierarchy_depth = onti::hierarchy_depth(t);

    std::size_t samples = 0;
    for (const auto& [cls, witness] : r.direct_witness) {
        (void)witness;
        if (samples++ == 3) break;
        Justification j = justify_unsat(cls, o, t, r);
        JustificationSummary s;
        s.unsat_class = j.unsat_class.value;
        s.disjoint1 = j.disjoint_pair.first.value;
        s.disjoint2 = j.disjoint_pair.second.value;
        for (const Iri& i : j.path1) s.path1.push_back(i.value);
        for (const Iri& i : j.path2) s.path2.push_back(i.value);
        for (const Axiom& a : j.contributing)
            s.contributing.push_back(serialize_axiom(a));
        m.sample_justifications.push_back(std::move(s));
    }

    for (const SkippedCell& s : outcome.skipped_cells)
        ++m.skipped[to_string(s.reason)];

    m.timings.parse_seconds = ms_round(timers.parse_seconds);
    m.timings.integrate_seconds = ms_round(timers.integrate_seconds);
    m.timings.reason_seconds = ms_round(timers.reason_seconds);
    m.timings.total_seconds = ms_round(timers.total_seconds);
    return m;
}

std::string render(const MetricsReport& m, ReportFormat format) {
    if (format == ReportFormat::Json) {
        Json j;
        j["entities"] = m.entity_counts;
        j["axioms"] = {{"logical", m.logical_axioms},
                       {"declarations", m.declarations},
                       {"annotation_assertions", m.annotation_assertions},
                       {"total", m.total_axioms}};
        j["bridged_cells"] = m.bridged_cells;
        j["expected_logical"] = m.expected_logical;
        j["expected_law"] = m.expected_law_pass ? "PASS" : "FAIL";
        j["unsat_count"] = m.unsat_count;
        j["coherent"] = m.coherent;
        j["consistent"] = m.consistent;
        j["inconsistency_reasons"] = m.inconsistency_reasons;
        Json js = Json::array();
        for (const auto& s : m.sample_justifications) js.push_back(to_json(s));
        j["sample_justifications"] = js;
        j["hierarchy_depth"] = m.hierarchy_depth;
        j["timings"] = {{"parse_seconds", m.timings.parse_seconds},
                        {"integrate_seconds", m.timings.integrate_seconds},
                        {"reason_seconds", m.timings.reason_seconds},
                        {"total_seconds", m.timings.total_seconds}};
        j["skipped_cells"] = m.skipped;
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "entities:\n";
    for (const auto& [k, n] : m.entity_counts) os << "  " << k << ": " << n << "\n";
    os << "axioms: total " << m.total_axioms << " (logical " << m.logical_axioms
       << ", declarations " << m.declarations << ", annotations "
       << m.annotation_assertions << ")\n";
    os << "bridged cells: " << m.bridged_cells << "\n";
    os << "expected logical axioms: " << m.expected_logical << " ["
       << (m.expected_law_pass ? "PASS" : "FAIL") << "]\n";
    os << "unsatisfiable classes: " << m.unsat_count << "\n";
    os << "coherent: " << (m.coherent ? "yes" : "no") << "\n";
    os << "consistent: " << (m.consistent ? "yes" : "no") << "\n";
    for (const auto& reason : m.inconsistency_reasons)
        os << "  reason: " << reason << "\n";
    for (const auto& s : m.sample_justifications) {
        os << "justification for <" << s.unsat_class << ">: disjoint <"
           << s.disjoint1 << "> / <" << s.disjoint2 << ">\n";
        auto chain = [&os](const std::vector<std::string>& p) {
            for (std::size_t i = 0; i < p.size(); ++i)
                os << (i ? " -> " : "  ") << "<" << p[i] << ">";
            os << "\n";
        };
        chain(s.path1);
        chain(s.path2);
        for (const auto& ax : s.contributing) os << "    " << ax << "\n";
    }
    os << "hierarchy depth: " << m.hierarchy_depth << "\n";
    os << "timings: parse " << m.timings.parse_seconds << "s, integrate "
       << m.timings.integrate_seconds << "s, reason " << m.timings.reason_seconds
       << "s, total " << m.timings.total_seconds << "s\n";
    if (!m.skipped.empty()) {
        os << "skipped cells:\n";
        for (const auto& [reason, n] : m.skipped)
            os << "  " << reason << ": " << n << "\n";
    }
    return os.str();
}

MetricsReport parse_json_report(const std::string& text) {
    Json j = Json::parse(text);
    MetricsReport m;
    m.entity_counts = j.at("entities").get<std::map<std::string, std::size_t>>();
    m.logical_axioms = j.at("axioms").at("logical");
    m.declarations = j.at("axioms").at("declarations");
    m.annotation_assertions = j.at("axioms").at("annotation_assertions");
    m.total_axioms = j.at("axioms").at("total");
    m.bridged_cells = j.at("bridged_cells");
    m.expected_logical = j.at("expected_logical");
    m.expected_law_pass = j.at("expected_law") == "PASS";
    m.unsat_count = j.at("unsat_count");
    m.coherent = j.at("coherent");
    m.consistent = j.at("consistent");
    m.inconsistency_reasons =
        j.at("inconsistency_reasons").get<std::vector<std::string>>();
    for (const auto& s : j.at("sample_justifications"))
        m.sample_justifications.push_back(justification_from_json(s));
    m.hierarchy_depth = j.at("hierarchy_depth");
    m.timings.parse_seconds = j.at("timings").at("parse_seconds");
    m.timings.integrate_seconds = j.at("timings").at("integrate_seconds");
    m.timings.reason_seconds = j.at("timings").at("reason_seconds");
    m.timings.total_seconds = j.at("timings").at("total_seconds");
    m.skipped = j.at("skipped_cells").get<std::map<std::string, std::size_t>>();
    return m;
}

}  // namespace onti
