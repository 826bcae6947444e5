#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "onti/parser.hpp"
#include "onti/repair.hpp"
#include "onti/report.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

struct AlignmentSpec {
    int i = 0, j = 0;  // 0 = infer from header
    std::string path;
};

AlignmentSpec parse_alignment_spec(const std::string& s) {
    AlignmentSpec spec;
    auto colon = s.find(':');
    auto eq = s.find('=');
    if (colon != std::string::npos && eq != std::string::npos && colon < eq) {
        spec.i = std::stoi(s.substr(0, colon));
        spec.j = std::stoi(s.substr(colon + 1, eq - colon - 1));
        spec.path = s.substr(eq + 1);
    } else {
        spec.path = s;
    }
    return spec;
}

struct IntegrateArgs {
    std::vector<std::string> ontology_paths;
    std::vector<std::string> alignment_specs;
    std::string mode = "bridge";
    std::string style = "refactor";
    std::string topology = "n-to-n";
    int pivot = 1;
    double threshold = 0.0;
    bool one_to_one = false;
    bool repair = false;
    std::string output_iri = "http://example.org/integrated";
    std::string output_path;
    std::string report_format = "json";
    std::string report_path;
};

int run_integrate(const IntegrateArgs& args) {
    using namespace onti;
    Timings timers;
    auto t_start = Clock::now();

    // concurrent parsing of inputs
    auto t_parse = Clock::now();
    std::vector<std::future<ParseResult>> parsing;
    for (const auto& p : args.ontology_paths)
        parsing.push_back(std::async(std::launch::async, [p] {
            return parse_ontology(read_file(p));
        }));
    std::vector<Ontology> ontologies;
    for (std::size_t i = 0; i < parsing.size(); ++i) {
        ParseResult r = parsing[i].get();
        for (const auto& [line, msg] : r.diagnostics.warnings)
            std::cerr << args.ontology_paths[i] << ":" << line << ": warning: "
                      << msg << "\n";
        ontologies.push_back(std::move(r.ontology));
    }

    IntegrationPlan plan;
    plan.mode = args.mode == "aggregate"    ? Mode::Aggregate
                : args.mode == "full-merge" ? Mode::FullMerge
                                            : Mode::Bridge;
    plan.style =
        args.style == "reference" ? Style::Reference : Style::Refactor;
    plan.topology = args.topology == "2-to-2"   ? Topology::TwoToTwo
                    : args.topology == "1-to-n" ? Topology::OneToN
                                                : Topology::NToN;
    plan.pivot = args.pivot;
    plan.threshold = args.threshold;
    plan.one_to_one = args.one_to_one;
    plan.repair = args.repair;

    // resolve alignment files to ontology pairs
    std::vector<PairedAlignment> alignments;
    for (const auto& raw : args.alignment_specs) {
        AlignmentSpec spec = parse_alignment_spec(raw);
        Alignment a = parse_alignment(read_file(spec.path));
        int i = spec.i, j = spec.j;
        if (i == 0) {
            for (std::size_t k = 0; k < ontologies.size(); ++k) {
                if (ontologies[k].iri() == a.onto1) i = static_cast<int>(k) + 1;
                if (ontologies[k].iri() == a.onto2) j = static_cast<int>(k) + 1;
            }
            if (i == 0 || j == 0 || i == j)
                throw std::runtime_error(
                    "PairResolutionError: cannot match alignment header of " +
                    spec.path + " to loaded ontologies");
        }
        if (i < 1 || j < 1 ||
            i > static_cast<int>(ontologies.size()) ||
            j > static_cast<int>(ontologies.size()) || i == j)
            throw std::runtime_error("PairResolutionError: bad pair for " +
                                     spec.path);
        if (i > j) std::swap(i, j);
        alignments.emplace_back(std::make_pair(i, j), std::move(a));
    }
    timers.parse_seconds = seconds_since(t_parse);

    if (plan.mode == Mode::Bridge && ontologies.size() >= 2) {
        auto planned = plan_alignment_pairs(
            static_cast<int>(ontologies.size()), plan.topology, plan.pivot);
        std::vector<PairedAlignment> in_plan;
        for (auto& pa : alignments) {
            if (std::find(planned.begin(), planned.end(), pa.first) !=
                planned.end())
                in_plan.push_back(std::move(pa));
            else
                std::cerr << "warning: alignment for pair (" << pa.first.first
                          << "," << pa.first.second
                          << ") not in topology plan, skipped\n";
        }
        alignments = std::move(in_plan);
    }

    OutputConfig cfg{Iri(args.output_iri)};

    auto t_int = Clock::now();
    if (plan.repair && plan.mode == Mode::Bridge) {
        RepairOutcome rep = repair_alignment(ontologies, alignments, cfg, plan);
        std::cerr << "repair: removed " << rep.removed.size() << " cell(s) in "
                  << rep.iterations << " iteration(s)\n";
        for (const Iri& u : rep.residual_unsat)
            std::cerr << "repair: residual unsatisfiable class <" << u.value
                      << ">\n";
        alignments = std::move(rep.kept);
    }

    IntegrationOutcome outcome;
    switch (plan.mode) {
        case Mode::Aggregate:
            outcome = aggregate(ontologies, cfg, plan.style);
            break;
        case Mode::Bridge:
            outcome = bridge(ontologies, alignments, cfg, plan);
            break;
        case Mode::FullMerge: {
            if (ontologies.size() != 2)
                throw std::runtime_error(
                    "full-merge requires exactly 2 ontologies");
            Alignment a;
            if (!alignments.empty()) a = alignments.front().second;
            a = threshold_filter(a, plan.threshold);
            outcome = full_merge(ontologies[0], ontologies[1], a, cfg);
            break;
        }
    }
    timers.integrate_seconds = seconds_since(t_int);

    auto t_reason = Clock::now();
    Taxonomy taxonomy = classify(outcome.ontology);
    UnsatReport unsat = unsatisfiable_classes(outcome.ontology, taxonomy);
    ConsistencyVerdict verdict =
        is_consistent(outcome.ontology, taxonomy, unsat);
    timers.reason_seconds = seconds_since(t_reason);
    timers.total_seconds = seconds_since(t_start);

    MetricsReport report = compute_metrics(outcome, outcome.ontology, taxonomy,
                                           unsat, verdict, timers);

    std::string doc = serialize_ontology(outcome.ontology);
    if (args.output_path.empty())
        std::cout << doc << "\n";
    else
        write_file(args.output_path, doc);

    std::string rendered = render(report, args.report_format == "text"
                                              ? ReportFormat::Text
                                              : ReportFormat::Json);
    if (args.report_path.empty())
        std::cout << rendered;
    else
        write_file(args.report_path, rendered);
    return 0;
}

int run_check(const std::string& path) {
    using namespace onti;
    ParseResult r = parse_ontology(read_file(path));
    Taxonomy t = classify(r.ontology);
    UnsatReport unsat = unsatisfiable_classes(r.ontology, t);
    ConsistencyVerdict verdict = is_consistent(r.ontology, t, unsat);

    for (const Iri& c : unsat.unsat) {
        std::cout << "unsatisfiable: <" << c.value << ">\n";
        if (unsat.direct_witness.count(c)) {
            Justification j = justify_unsat(c, r.ontology, t, unsat);
            std::cout << "  disjoint <" << j.disjoint_pair.first.value
                      << "> / <" << j.disjoint_pair.second.value << ">\n";
            for (const Axiom& a : j.contributing)
                std::cout << "  " << serialize_axiom(a) << "\n";
        }
    }
    std::cout << "coherent: " << (unsat.unsat.empty() ? "yes" : "no") << "\n";
    std::cout << "consistent: " << (verdict.consistent ? "yes" : "no") << "\n";
    for (const auto& reason : verdict.reasons)
        std::cout << "  reason: " << reason << "\n";

    if (!verdict.consistent) return 3;
    return unsat.unsat.empty() ? 0 : 1;
}

int run_filter(const std::string& in_path, const std::string& out_path,
               double threshold, bool one_to_one) {
    using namespace onti;
    Alignment a = parse_alignment(read_file(in_path));
    std::size_t before = a.cells.size();
    a = threshold_filter(a, threshold);
    if (one_to_one) a = to_one_to_one(a);
    write_file(out_path, serialize_alignment(a));
    std::cout << "kept " << a.cells.size() << " dropped "
              << before - a.cells.size() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ontology integration toolkit"};
    app.require_subcommand(1);

    IntegrateArgs iargs;
    CLI::App* integrate = app.add_subcommand(
        "integrate", "integrate ontologies via alignments");
    integrate->add_option("-o,--ontology", iargs.ontology_paths,
                          "ontology file, repeatable, order defines indices")
        ->required();
    integrate->add_option("-a,--alignment", iargs.alignment_specs,
                          "alignment file, 'i:j=path' or bare path");
    integrate->add_option("--mode", iargs.mode, "aggregate|bridge|full-merge")
        ->check(CLI::IsMember({"aggregate", "bridge", "full-merge"}));
    integrate->add_option("--style", iargs.style, "refactor|reference")
        ->check(CLI::IsMember({"refactor", "reference"}));
    integrate->add_option("--topology", iargs.topology, "2-to-2|1-to-n|n-to-n")
        ->check(CLI::IsMember({"2-to-2", "1-to-n", "n-to-n"}));
    integrate->add_option("--pivot", iargs.pivot, "pivot index for 1-to-n");
    integrate->add_option("--threshold", iargs.threshold,
                          "minimum cell confidence");
    integrate->add_flag("--one-to-one", iargs.one_to_one,
                        "reduce alignments to 1-to-1 mappings");
    integrate->add_flag("--repair", iargs.repair,
                        "greedy coherence repair before bridging");
    integrate->add_option("--output-iri", iargs.output_iri,
                          "IRI of the output ontology");
    integrate->add_option("--output", iargs.output_path,
                          "output ontology file (stdout if omitted)");
    integrate->add_option("--report-format", iargs.report_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    integrate->add_option("--report", iargs.report_path,
                          "report file (stdout if omitted)");

    std::string check_path;
    CLI::App* check =
        app.add_subcommand("check", "coherence/consistency check");
    check->add_option("ontology", check_path, "ontology file")->required();

    std::string f_in, f_out;
    double f_threshold = 0.0;
    bool f_one_to_one = false;
    CLI::App* filter = app.add_subcommand("filter-alignment",
                                          "threshold / 1-to-1 filtering");
    filter->add_option("input", f_in, "alignment file")->required();
    filter->add_option("output", f_out, "filtered alignment file")->required();
    filter->add_option("--threshold", f_threshold, "minimum cell confidence");
    filter->add_flag("--one-to-one", f_one_to_one, "reduce to 1-to-1 mapping");

    CLI11_PARSE(app, argc, argv);

    try {
        if (integrate->parsed()) return run_integrate(iargs);
        if (check->parsed()) return run_check(check_path);
        if (filter->parsed())
            return run_filter(f_in, f_out, f_threshold, f_one_to_one);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
