#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace onti {

struct MalformedIri : std::runtime_error {
    explicit MalformedIri(const std::string& what) : std::runtime_error(what) {}
};

struct IndexOutOfRange : std::runtime_error {
    explicit IndexOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

// Absolute IRI of a named entity, or an anonymous node id starting "_:".
struct Iri {
    std::string value;

    Iri() = default;
    explicit Iri(std::string v) : value(std::move(v)) {}

    bool is_anonymous() const { return value.rfind("_:", 0) == 0; }

    auto operator<=>(const Iri&) const = default;
};

enum class EntityKind {
    Class,
    ObjectProperty,
    DataProperty,
    AnnotationProperty,
    NamedIndividual,
    AnonymousIndividual,
    Datatype,
};

const char* to_string(EntityKind k);

// Output namespace plus the fixed-width per-source id scheme.
// Refactored prefix = base_iri + "/" + zero-padded 3-digit index + "#".
// Index 0 is reserved for merged entities.
struct OutputConfig {
    Iri base_iri;

    static constexpr int id_width = 3;
    static constexpr int max_index = 999;
    static constexpr const char* merged_id = "000";
};

// Substring after the last '#', falling back to the last '/' segment.
std::string local_name(const Iri& iri);

// base + "/NNN#" + local_name(iri), 1 <= ont_index <= 999.
Iri refactor_iri(const Iri& iri, const OutputConfig& cfg, int ont_index);

// base + "/000#" + name1 + "=" + name2.
Iri merged_iri(const std::string& name1, const std::string& name2, const OutputConfig& cfg);

// "_:oN_id" -- keeps anonymous node ids from colliding across sources.
Iri refactor_anonymous(const Iri& iri, int ont_index);

}  // namespace onti

template <>
struct std::hash<onti::Iri> {
    size_t operator()(const onti::Iri& i) const noexcept {
        return std::hash<std::string>{}(i.value);
    }
};
