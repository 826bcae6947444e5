#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "onti/ontology.hpp"

namespace onti {

struct SyntaxError : std::runtime_error {
    int line;
    SyntaxError(int line_, const std::string& expected)
        : std::runtime_error("line " + std::to_string(line_) + ": expected " +
                             expected),
          line(line_) {}
};

struct EmptyDocument : std::runtime_error {
    EmptyDocument() : std::runtime_error("empty document") {}
};

// Nothing is dropped silently: every skipped construct lands in
// ignored_constructs and produces a warning line.
struct ParseDiagnostics {
    std::vector<std::pair<int, std::string>> warnings;
    std::map<std::string, int> ignored_constructs;
};

struct ParseResult {
    Ontology ontology;
    ParseDiagnostics diagnostics;
};

// Functional-style subset: Prefix declarations, Ontology(<iri> ...), the
// Axiom variants of the model. Well-formed but unsupported constructs
// (restrictions, imports, ...) are skipped and recorded.
ParseResult parse_ontology(const std::string& text);

// Full-IRI form, one axiom per line; re-parses to a structurally equal
// ontology.
std::string serialize_ontology(const Ontology& o);

std::string serialize_axiom(const Axiom& a);

}  // namespace onti
