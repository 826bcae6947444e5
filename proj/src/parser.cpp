#include "onti/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace onti {

namespace {

struct Tok {
    enum Type { L, R, IriRef, Name, Str, Carets, Lang, Eq, End };
    Type type = End;
    std::string text;
    int line = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Tok next() {
        skip_ws();
        Tok t;
        t.line = line_;
        if (pos_ >= s_.size()) return t;
        char c = s_[pos_];
        if (c == '(') { ++pos_; t.type = Tok::L; return t; }
        if (c == ')') { ++pos_; t.type = Tok::R; return t; }
        if (c == '=') { ++pos_; t.type = Tok::Eq; return t; }
        if (c == '<') return iri_ref();
        if (c == '"') return string_lit();
        if (c == '^' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '^') {
            pos_ += 2;
            t.type = Tok::Carets;
            return t;
        }
        if (c == '@') return lang_tag();
        if (is_name_char(c)) return name();
        throw SyntaxError(line_, std::string("token, got '") + c + "'");
    }

  private:
    static bool is_name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
               c == '-' || c == '.' || c == ':';
    }

    void skip_ws() {
        while (pos_ < s_.size() &&
               std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            if (s_[pos_] == '\n') ++line_;
            ++pos_;
        }
    }

    Tok iri_ref() {
        Tok t;
        t.line = line_;
        t.type = Tok::IriRef;
        ++pos_;  // '<'
        while (pos_ < s_.size() && s_[pos_] != '>') {
            if (s_[pos_] == '\n') throw SyntaxError(line_, "'>'");
            t.text += s_[pos_++];
        }
        if (pos_ >= s_.size()) throw SyntaxError(line_, "'>'");
        ++pos_;
        return t;
    }

    Tok string_lit() {
        Tok t;
        t.line = line_;
        t.type = Tok::Str;
        ++pos_;  // '"'
        while (pos_ < s_.size() && s_[pos_] != '"') {
            char c = s_[pos_++];
            if (c == '\\') {
                if (pos_ >= s_.size()) throw SyntaxError(line_, "escape");
                c = s_[pos_++];
                if (c != '"' && c != '\\')
                    throw SyntaxError(line_, "escape \\\" or \\\\");
            } else if (c == '\n') {
                ++line_;
            }
            t.text += c;
        }
        if (pos_ >= s_.size()) throw SyntaxError(line_, "closing '\"'");
        ++pos_;
        return t;
    }

    Tok lang_tag() {
        Tok t;
        t.line = line_;
        t.type = Tok::Lang;
        ++pos_;  // '@'
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                s_[pos_] == '-'))
            t.text += s_[pos_++];
        if (t.text.empty()) throw SyntaxError(line_, "language tag");
        return t;
    }

    Tok name() {
        Tok t;
        t.line = line_;
        t.type = Tok::Name;
        while (pos_ < s_.size() && is_name_char(s_[pos_]))
            t.text += s_[pos_++];
        return t;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

const std::map<std::string, EntityKind> kKindKeywords = {
    {"Class", EntityKind::Class},
    {"ObjectProperty", EntityKind::ObjectProperty},
    {"DataProperty", EntityKind::DataProperty},
    {"AnnotationProperty", EntityKind::AnnotationProperty},
    {"NamedIndividual", EntityKind::NamedIndividual},
    {"Datatype", EntityKind::Datatype},
};

const std::map<std::string, PropertyTrait> kTraitKeywords = {
    {"FunctionalObjectProperty", PropertyTrait::Functional},
    {"InverseFunctionalObjectProperty", PropertyTrait::InverseFunctional},
    {"TransitiveObjectProperty", PropertyTrait::Transitive},
    {"SymmetricObjectProperty", PropertyTrait::Symmetric},
    {"ReflexiveObjectProperty", PropertyTrait::Reflexive},
    {"IrreflexiveObjectProperty", PropertyTrait::Irreflexive},
};

// keyword -> (AxiomKind, fixed arity; 0 = list of >= 2)
struct AxiomSig {
    AxiomKind kind;
    int arity;
};

const std::map<std::string, AxiomSig> kAxiomKeywords = {
    {"SubClassOf", {AxiomKind::SubClassOf, 2}},
    {"EquivalentClasses", {AxiomKind::EquivalentClasses, 0}},
    {"DisjointClasses", {AxiomKind::DisjointClasses, 0}},
    {"SubObjectPropertyOf", {AxiomKind::SubObjectPropertyOf, 2}},
    {"EquivalentObjectProperties", {AxiomKind::EquivalentObjectProperties, 0}},
    {"DisjointObjectProperties", {AxiomKind::DisjointObjectProperties, 0}},
    {"InverseObjectProperties", {AxiomKind::InverseObjectProperties, 0}},
    {"ObjectPropertyDomain", {AxiomKind::ObjectPropertyDomain, 2}},
    {"ObjectPropertyRange", {AxiomKind::ObjectPropertyRange, 2}},
    {"SubDataPropertyOf", {AxiomKind::SubDataPropertyOf, 2}},
    {"EquivalentDataProperties", {AxiomKind::EquivalentDataProperties, 0}},
    {"DisjointDataProperties", {AxiomKind::DisjointDataProperties, 0}},
    {"DataPropertyDomain", {AxiomKind::DataPropertyDomain, 2}},
    {"DataPropertyRange", {AxiomKind::DataPropertyRange, 2}},
    {"SubAnnotationPropertyOf", {AxiomKind::SubAnnotationPropertyOf, 2}},
    {"ClassAssertion", {AxiomKind::ClassAssertion, 2}},
    {"ObjectPropertyAssertion", {AxiomKind::ObjectPropertyAssertion, 3}},
    {"SameIndividual", {AxiomKind::SameIndividual, 0}},
    {"DifferentIndividuals", {AxiomKind::DifferentIndividuals, 0}},
};

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) { advance(); }

    ParseResult run() {
        if (cur_.type == Tok::End) throw EmptyDocument();
        while (cur_.type == Tok::Name && cur_.text == "Prefix")
            parse_prefix();
        expect_name("Ontology");
        expect(Tok::L, "'('");
        result_.ontology.set_iri(parse_entity_iri());
        while (cur_.type != Tok::R) {
            if (cur_.type == Tok::End) throw SyntaxError(cur_.line, "')'");
            parse_axiom();
        }
        advance();  // ')'
        if (cur_.type != Tok::End)
            throw SyntaxError(cur_.line, "end of document");
        warn_undeclared();
        return std::move(result_);
    }

  private:
    void advance() { cur_ = lex_.next(); }

    void expect(Tok::Type t, const char* what) {
        if (cur_.type != t) throw SyntaxError(cur_.line, what);
        advance();
    }

    void expect_name(const std::string& kw) {
        if (cur_.type != Tok::Name || cur_.text != kw)
            throw SyntaxError(cur_.line, "'" + kw + "'");
        advance();
    }

    void parse_prefix() {
        advance();  // Prefix
        expect(Tok::L, "'('");
        if (cur_.type != Tok::Name || cur_.text.empty() ||
            cur_.text.back() != ':')
            throw SyntaxError(cur_.line, "prefix name ending ':'");
        std::string pname = cur_.text.substr(0, cur_.text.size() - 1);
        advance();
        expect(Tok::Eq, "':='");
        if (cur_.type != Tok::IriRef) throw SyntaxError(cur_.line, "IRI");
        prefixes_[pname] = cur_.text;
        advance();
        expect(Tok::R, "')'");
    }

    Iri resolve_pname(const Tok& t) {
        auto colon = t.text.find(':');
        std::string prefix = t.text.substr(0, colon);
        auto it = prefixes_.find(prefix);
        if (it == prefixes_.end())
            throw SyntaxError(t.line, "declared prefix '" + prefix + ":'");
        return Iri(it->second + t.text.substr(colon + 1));
    }

    // IRI reference, prefixed name, or anonymous node id.
    Iri parse_entity_iri() {
        if (cur_.type == Tok::IriRef) {
            Iri i(cur_.text);
            advance();
            return i;
        }
        if (cur_.type == Tok::Name) {
            if (cur_.text.rfind("_:", 0) == 0) {
                Iri i(cur_.text);
                advance();
                return i;
            }
            if (cur_.text.find(':') != std::string::npos) {
                Iri i = resolve_pname(cur_);
                advance();
                return i;
            }
        }
        throw SyntaxError(cur_.line, "entity IRI");
    }

    void skip_balanced() {
        int depth = 1;
        while (depth > 0) {
            if (cur_.type == Tok::End) throw SyntaxError(cur_.line, "')'");
            if (cur_.type == Tok::L) ++depth;
            if (cur_.type == Tok::R) --depth;
            advance();
        }
    }

    void record_skip(const std::string& construct, int line,
                     const std::string& why) {
        ++result_.diagnostics.ignored_constructs[construct];
        result_.diagnostics.warnings.emplace_back(line, why);
    }

    Literal parse_literal() {
        Literal lit;
        lit.lexical = cur_.text;
        advance();
        if (cur_.type == Tok::Carets) {
            advance();
            lit.datatype = parse_entity_iri().value;
        } else if (cur_.type == Tok::Lang) {
            lit.lang = cur_.text;
            advance();
        }
        return lit;
    }

    // Returns false when the operand is a nested construct: the whole
    // enclosing axiom is abandoned and its tokens consumed.
    bool parse_operand(std::vector<Iri>& out, const std::string& axiom_kw) {
        if (cur_.type == Tok::Name && cur_.text.rfind("_:", 0) != 0 &&
            cur_.text.find(':') == std::string::npos) {
            // bare name: nested construct like ObjectSomeValuesFrom
            std::string construct = cur_.text;
            int line = cur_.line;
            advance();
            expect(Tok::L, "'('");
            skip_balanced();
            skip_balanced();  // rest of the enclosing axiom
            record_skip(construct, line,
                        axiom_kw + " skipped: unsupported " + construct);
            return false;
        }
        out.push_back(parse_entity_iri());
        return true;
    }

    void parse_axiom() {
        if (cur_.type != Tok::Name)
            throw SyntaxError(cur_.line, "axiom keyword");
        std::string kw = cur_.text;
        int line = cur_.line;
        advance();
        expect(Tok::L, "'('");

        if (kw == "Import") {
            skip_balanced();
            record_skip("Import", line, "import ignored");
            return;
        }
        if (kw == "Declaration") {
            parse_declaration(line);
            return;
        }
        if (auto it = kTraitKeywords.find(kw); it != kTraitKeywords.end()) {
            Axiom a;
            a.kind = AxiomKind::PropertyCharacteristic;
            a.trait = it->second;
            if (!parse_operand(a.args, kw)) return;
            expect(Tok::R, "')'");
            add(std::move(a), kw, line);
            return;
        }
        if (kw == "DataPropertyAssertion" || kw == "AnnotationAssertion") {
            parse_value_axiom(kw, line);
            return;
        }
        auto it = kAxiomKeywords.find(kw);
        if (it == kAxiomKeywords.end()) {
            skip_balanced();
            record_skip(kw, line, "unsupported construct " + kw);
            return;
        }
        Axiom a;
        a.kind = it->second.kind;
        int arity = it->second.arity;
        if (arity > 0) {
            for (int i = 0; i < arity; ++i)
                if (!parse_operand(a.args, kw)) return;
        } else {
            while (cur_.type != Tok::R)
                if (!parse_operand(a.args, kw)) return;
            if (a.args.size() < 2)
                throw SyntaxError(line, ">= 2 operands in " + kw);
        }
        expect(Tok::R, "')'");
        add(std::move(a), kw, line);
    }

    void parse_declaration(int line) {
        if (cur_.type != Tok::Name)
            throw SyntaxError(cur_.line, "entity kind keyword");
        auto it = kKindKeywords.find(cur_.text);
        if (it == kKindKeywords.end()) {
            std::string kw = cur_.text;
            advance();
            expect(Tok::L, "'('");
            skip_balanced();
            skip_balanced();
            record_skip(kw, line, "unsupported declaration kind " + kw);
            return;
        }
        advance();
        expect(Tok::L, "'('");
        Iri entity = parse_entity_iri();
        expect(Tok::R, "')'");
        expect(Tok::R, "')'");
        declared_.insert({it->second, entity});
        Axiom a = declaration(it->second, std::move(entity));
        add(std::move(a), "Declaration", line);
    }

    void parse_value_axiom(const std::string& kw, int line) {
        Axiom a;
        a.kind = kw == "DataPropertyAssertion" ? AxiomKind::DataPropertyAssertion
                                               : AxiomKind::AnnotationAssertion;
        if (!parse_operand(a.args, kw)) return;  // property
        if (!parse_operand(a.args, kw)) return;  // subject
        if (cur_.type == Tok::Str) {
            Literal lit = parse_literal();
            if (a.kind == AxiomKind::DataPropertyAssertion)
                a.literal = std::move(lit);
            else
                a.ann_value = std::move(lit);
        } else if (a.kind == AxiomKind::AnnotationAssertion) {
            a.ann_value = parse_entity_iri();
        } else {
            throw SyntaxError(cur_.line, "literal");
        }
        expect(Tok::R, "')'");
        add(std::move(a), kw, line);
    }

    void add(Axiom a, const std::string& kw, int line) {
        Axiom probe = a;
        if (!canonicalize(probe)) {
            record_skip(kw, line, "degenerate " + kw + " skipped");
            return;
        }
        result_.ontology.add(std::move(a));
    }

    void warn_undeclared() {
        static constexpr EntityKind kinds[] = {
            EntityKind::Class, EntityKind::ObjectProperty,
            EntityKind::DataProperty, EntityKind::AnnotationProperty,
            EntityKind::NamedIndividual};
        std::vector<std::string> missing;
        for (EntityKind k : kinds)
            for (const Iri& e : result_.ontology.entities(k))
                if (!declared_.count({k, e}))
                    missing.push_back(std::string(to_string(k)) + " <" +
                                      e.value + "> used but not declared");
        std::sort(missing.begin(), missing.end());
        for (auto& m : missing)
            result_.diagnostics.warnings.emplace_back(0, std::move(m));
    }

    Lexer lex_;
    Tok cur_;
    std::map<std::string, std::string> prefixes_;
    std::set<std::pair<EntityKind, Iri>> declared_;
    ParseResult result_;
};

void write_iri(std::ostream& os, const Iri& i) {
    if (i.is_anonymous())
        os << i.value;
    else
        os << '<' << i.value << '>';
}

void write_literal(std::ostream& os, const Literal& l) {
    os << '"';
    for (char c : l.lexical) {
        if (c == '"' || c == '\\') os << '\\';
        os << c;
    }
    os << '"';
    if (!l.datatype.empty())
        os << "^^<" << l.datatype << '>';
    else if (!l.lang.empty())
        os << '@' << l.lang;
}

void write_axiom(std::ostream& os, const Axiom& a) {
    switch (a.kind) {
        case AxiomKind::Declaration:
            os << "Declaration(" << to_string(a.decl_kind) << '(';
            write_iri(os, a.args[0]);
            os << "))";
            return;
        case AxiomKind::PropertyCharacteristic:
            os << to_string(a.trait) << "ObjectProperty(";
            write_iri(os, a.args[0]);
            os << ')';
            return;
        default:
            break;
    }
    os << to_string(a.kind) << '(';
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (i) os << ' ';
        write_iri(os, a.args[i]);
    }
    if (a.literal) {
        os << ' ';
        write_literal(os, *a.literal);
    }
    if (a.ann_value) {
        os << ' ';
        if (const Iri* i = std::get_if<Iri>(&*a.ann_value))
            write_iri(os, *i);
        else
            write_literal(os, std::get<Literal>(*a.ann_value));
    }
    os << ')';
}

}  // namespace

ParseResult parse_ontology(const std::string& text) {
    return Parser(text).run();
}

std::string serialize_axiom(const Axiom& a) {
    std::ostringstream os;
    write_axiom(os, a);
    return os.str();
}

std::string serialize_ontology(const Ontology& o) {
    std::ostringstream os;
    os << "Ontology(<" << o.iri().value << ">\n";
    for (const Axiom& a : o.axioms()) {
        write_axiom(os, a);
        os << '\n';
    }
    os << ')';
    return os.str();
}

}  // namespace onti
