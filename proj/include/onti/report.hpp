#pragma once

#include <map>
#include <string>
#include <vector>

#include "onti/integrator.hpp"
#include "onti/reasoner.hpp"

namespace onti {

struct Timings {
    double parse_seconds = 0;      // loading
    double integrate_seconds = 0;  // effective integration
    double reason_seconds = 0;
    double total_seconds = 0;
};

struct JustificationSummary {
    std::string unsat_class;
    std::string disjoint1;
    std::string disjoint2;
    std::vector<std::string> path1;
    std::vector<std::string> path2;
    std::vector<std::string> contributing;  // serialized axioms

    bool operator==(const JustificationSummary&) const = default;
};

struct MetricsReport {
    std::map<std::string, std::size_t> entity_counts;  // kind name -> count
    std::size_t logical_axioms = 0;
    std::size_t declarations = 0;
    std::size_t annotation_assertions = 0;
    std::size_t total_axioms = 0;
    std::size_t bridged_cells = 0;
    std::size_t expected_logical = 0;  // sum over sources + bridged cells
    bool expected_law_pass = false;
    std::size_t unsat_count = 0;
    std::vector<JustificationSummary> sample_justifications;
    bool coherent = true;
    bool consistent = true;
    std::vector<std::string> inconsistency_reasons;
    int hierarchy_depth = 0;
    Timings timings;
    std::map<std::string, std::size_t> skipped;  // reason -> count

    bool operator==(const MetricsReport&) const;
};

MetricsReport compute_metrics(const IntegrationOutcome& outcome,
                              const Ontology& o, const Taxonomy& t,
                              const UnsatReport& r,
                              const ConsistencyVerdict& v,
                              const Timings& timers);

enum class ReportFormat { Json, Text };

std::string render(const MetricsReport& report, ReportFormat format);

// inverse of the JSON rendering, for round-trip checks and tooling
MetricsReport parse_json_report(const std::string& json);

}  // namespace onti
