#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "onti/iri.hpp"

namespace onti {

struct XmlError : std::runtime_error {
    explicit XmlError(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownRelation : std::runtime_error {
    explicit UnknownRelation(const std::string& token)
        : std::runtime_error("unknown relation '" + token + "'") {}
};

struct MeasureOutOfRange : std::runtime_error {
    explicit MeasureOutOfRange(const std::string& what)
        : std::runtime_error(what) {}
};

struct ThresholdOutOfRange : std::runtime_error {
    explicit ThresholdOutOfRange(const std::string& what)
        : std::runtime_error(what) {}
};

// One correspondence. relation is one of "=", "?", "<", ">", "%".
struct Cell {
    Iri entity1;
    Iri entity2;
    std::string relation = "=";
    double measure = 1.0;
    int doc_order = 0;

    bool operator==(const Cell&) const = default;
};

struct Alignment {
    Iri onto1;
    Iri onto2;
    std::vector<Cell> cells;
};

// Alignment-format XML (the OAEI wire format subset).
Alignment parse_alignment(const std::string& xml);
std::string serialize_alignment(const Alignment& a);

// Keeps exactly the cells with measure >= t.
Alignment threshold_filter(const Alignment& a, double t);

// Two-pass greedy 1-to-N -> 1-to-1 reduction: pass 1 keeps per source the
// strictly-best cell, pass 2 keeps per target the strictly-best survivor.
// Ties keep the earlier document order. Fixed point under repetition.
Alignment to_one_to_one(const Alignment& a);

}  // namespace onti
