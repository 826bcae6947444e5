#include "onti/iri.hpp"

#include <array>
#include <cstdio>

namespace onti {

const char* to_string(EntityKind k) {
    switch (k) {
        case EntityKind::Class: return "Class";
        case EntityKind::ObjectProperty: return "ObjectProperty";
        case EntityKind::DataProperty: return "DataProperty";
        case EntityKind::AnnotationProperty: return "AnnotationProperty";
        case EntityKind::NamedIndividual: return "NamedIndividual";
        case EntityKind::AnonymousIndividual: return "AnonymousIndividual";
        case EntityKind::Datatype: return "Datatype";
    }
    return "?";
}

std::string local_name(const Iri& iri) {
    if (iri.is_anonymous())
        throw MalformedIri("local_name of anonymous node " + iri.value);
    auto pos = iri.value.rfind('#');
    if (pos == std::string::npos) pos = iri.value.rfind('/');
    std::string name =
        pos == std::string::npos ? iri.value : iri.value.substr(pos + 1);
    if (name.empty())
        throw MalformedIri("empty local name in " + iri.value);
    return name;
}

Iri refactor_iri(const Iri& iri, const OutputConfig& cfg, int ont_index) {
    if (ont_index < 1 || ont_index > OutputConfig::max_index)
        throw IndexOutOfRange("ontology index " + std::to_string(ont_index) +
                              " outside [1, 999]");
    std::array<char, 8> id{};
    std::snprintf(id.data(), id.size(), "%03d", ont_index);
    return Iri(cfg.base_iri.value + "/" + id.data() + "#" + local_name(iri));
}

Iri merged_iri(const std::string& name1, const std::string& name2,
               const OutputConfig& cfg) {
    if (name1.empty() || name2.empty())
        throw MalformedIri("merged_iri requires non-empty names");
    return Iri(cfg.base_iri.value + "/" + OutputConfig::merged_id + "#" +
               name1 + "=" + name2);
}

Iri refactor_anonymous(const Iri& iri, int ont_index) {
    if (ont_index < 1 || ont_index > OutputConfig::max_index)
        throw IndexOutOfRange("ontology index " + std::to_string(ont_index) +
                              " outside [1, 999]");
    return Iri("_:o" + std::to_string(ont_index) + "_" + iri.value.substr(2));
}

}  // namespace onti
