#include "onti/alignment.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstring>
#include <cstdlib>
#include <map>
#include <sstream>
#include <unordered_map>

namespace onti {

namespace {

constexpr const char* kAlignNs =
    "http://knowledgeweb.semanticweb.org/heterogeneity/alignment";
constexpr const char* kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";

// ---- minimal namespace-aware XML reader --------------------------------

struct XmlNode {
    std::string name;  // "{namespace-uri}local"
    std::vector<std::pair<std::string, std::string>> attrs;
    std::vector<XmlNode> children;
    std::string text;

    const std::string* attr(const std::string& n) const {
        for (const auto& [k, v] : attrs)
            if (k == n) return &v;
        return nullptr;
    }
    const XmlNode* child(const std::string& n) const {
        for (const auto& c : children)
            if (c.name == n) return &c;
        return nullptr;
    }
};

class XmlReader {
  public:
    explicit XmlReader(const std::string& s) : s_(s) {}

    XmlNode parse() {
        scopes_.push_back({});
        skip_misc();
        if (pos_ >= s_.size() || s_[pos_] != '<')
            throw XmlError("expected root element");
        XmlNode root = element();
        skip_misc();
        if (pos_ < s_.size()) throw XmlError("trailing content after root");
        return root;
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() &&
               std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool starts(const char* p) const { return s_.compare(pos_, strlen(p), p) == 0; }

    void skip_until(const char* end) {
        auto e = s_.find(end, pos_);
        if (e == std::string::npos) throw XmlError("unterminated markup");
        pos_ = e + strlen(end);
    }

    // prolog, comments, PIs, doctype
    void skip_misc() {
        for (;;) {
            skip_ws();
            if (starts("<?")) { skip_until("?>"); continue; }
            if (starts("<!--")) { skip_until("-->"); continue; }
            if (starts("<!")) { skip_until(">"); continue; }
            return;
        }
    }

    static bool name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
               c == '-' || c == '.' || c == ':';
    }

    std::string read_name() {
        std::string n;
        while (pos_ < s_.size() && name_char(s_[pos_])) n += s_[pos_++];
        if (n.empty()) throw XmlError("expected name");
        return n;
    }

    std::string decode(const std::string& raw) {
        std::string out;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] != '&') { out += raw[i]; continue; }
            auto semi = raw.find(';', i);
            if (semi == std::string::npos) throw XmlError("bad entity");
            std::string ent = raw.substr(i + 1, semi - i - 1);
            if (ent == "amp") out += '&';
            else if (ent == "lt") out += '<';
            else if (ent == "gt") out += '>';
            else if (ent == "quot") out += '"';
            else if (ent == "apos") out += '\'';
            else if (!ent.empty() && ent[0] == '#')
                out += static_cast<char>(
                    std::strtol(ent.c_str() + (ent[1] == 'x' ? 2 : 1), nullptr,
                                ent[1] == 'x' ? 16 : 10));
            else throw XmlError("unknown entity &" + ent + ";");
            i = semi;
        }
        return out;
    }

    std::string expand(const std::string& qname, bool is_attr) {
        auto colon = qname.find(':');
        std::string prefix = colon == std::string::npos ? "" : qname.substr(0, colon);
        std::string local = colon == std::string::npos ? qname : qname.substr(colon + 1);
        if (is_attr && prefix.empty()) return local;  // attrs: no default ns
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
            auto f = it->find(prefix);
            if (f != it->end())
                return "{" + f->second + "}" + local;
        }
        if (prefix.empty()) return local;
        throw XmlError("undeclared namespace prefix '" + prefix + "'");
    }

    XmlNode element() {
        ++pos_;  // '<'
        std::string qname = read_name();
        std::vector<std::pair<std::string, std::string>> raw_attrs;
        scopes_.push_back({});
        for (;;) {
            skip_ws();
            if (pos_ >= s_.size()) throw XmlError("unterminated tag");
            if (s_[pos_] == '>' || starts("/>")) break;
            std::string an = read_name();
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] != '=')
                throw XmlError("expected '=' in attribute");
            ++pos_;
            skip_ws();
            char q = s_[pos_];
            if (q != '"' && q != '\'') throw XmlError("expected quoted value");
            auto end = s_.find(q, pos_ + 1);
            if (end == std::string::npos) throw XmlError("unterminated attribute");
            std::string av = decode(s_.substr(pos_ + 1, end - pos_ - 1));
            pos_ = end + 1;
            if (an == "xmlns")
                scopes_.back()[""] = av;
            else if (an.rfind("xmlns:", 0) == 0)
                scopes_.back()[an.substr(6)] = av;
            else
                raw_attrs.emplace_back(an, av);
        }
        XmlNode node;
        node.name = expand(qname, false);
        for (auto& [k, v] : raw_attrs)
            node.attrs.emplace_back(expand(k, true), v);

        if (starts("/>")) {
            pos_ += 2;
            scopes_.pop_back();
            return node;
        }
        ++pos_;  // '>'
        for (;;) {
            if (pos_ >= s_.size()) throw XmlError("unterminated element " + qname);
            if (starts("<!--")) { skip_until("-->"); continue; }
            if (starts("<![CDATA[")) {
                auto e = s_.find("]]>", pos_);
                if (e == std::string::npos) throw XmlError("unterminated CDATA");
                node.text += s_.substr(pos_ + 9, e - pos_ - 9);
                pos_ = e + 3;
                continue;
            }
            if (starts("<?")) { skip_until("?>"); continue; }
            if (starts("</")) {
                pos_ += 2;
                std::string close = read_name();
                if (close != qname)
                    throw XmlError("mismatched </" + close + ">, open <" + qname + ">");
                skip_ws();
                if (pos_ >= s_.size() || s_[pos_] != '>')
                    throw XmlError("expected '>'");
                ++pos_;
                scopes_.pop_back();
                return node;
            }
            if (s_[pos_] == '<') {
                node.children.push_back(element());
                continue;
            }
            auto next = s_.find('<', pos_);
            if (next == std::string::npos) throw XmlError("unterminated element");
            node.text += decode(s_.substr(pos_, next - pos_));
            pos_ = next;
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    std::vector<std::map<std::string, std::string>> scopes_;
};

// ---- Alignment-format interpretation -----------------------------------

std::string ns(const char* uri, const char* local) {
    return std::string("{") + uri + "}" + local;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Iri read_onto(const XmlNode& alignment, const char* which) {
    const XmlNode* o = alignment.child(ns(kAlignNs, which));
    if (!o) return Iri("");
    if (const XmlNode* wrapped = o->child(ns(kAlignNs, "Ontology"))) {
        if (const std::string* about = wrapped->attr(ns(kRdfNs, "about")))
            return Iri(*about);
        return Iri("");
    }
    return Iri(trim(o->text));
}

Cell read_cell(const XmlNode& cell, int doc_order) {
    Cell c;
    c.doc_order = doc_order;
    const XmlNode* e1 = cell.child(ns(kAlignNs, "entity1"));
    const XmlNode* e2 = cell.child(ns(kAlignNs, "entity2"));
    if (!e1 || !e2) throw XmlError("Cell missing entity1/entity2");
    const std::string* r1 = e1->attr(ns(kRdfNs, "resource"));
    const std::string* r2 = e2->attr(ns(kRdfNs, "resource"));
    if (!r1 || !r2) throw XmlError("entity without rdf:resource");
    c.entity1 = Iri(*r1);
    c.entity2 = Iri(*r2);
    if (const XmlNode* m = cell.child(ns(kAlignNs, "measure"))) {
        std::string t = trim(m->text);
        char* end = nullptr;
        double v = std::strtod(t.c_str(), &end);
        if (t.empty() || end != t.c_str() + t.size())
            throw MeasureOutOfRange("unparseable measure '" + t + "'");
        if (v < 0.0 || v > 1.0)
            throw MeasureOutOfRange("measure " + t + " outside [0,1]");
        c.measure = v;
    }
    if (const XmlNode* r = cell.child(ns(kAlignNs, "relation"))) {
        std::string t = trim(r->text);
        if (t != "=" && t != "?" && t != "<" && t != ">" && t != "%")
            throw UnknownRelation(t);
        c.relation = t;
    }
    return c;
}

std::string xml_escape(const std::string& s, bool attr) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': if (attr) { out += "&quot;"; break; } [[fallthrough]];
            default: out += c;
        }
    }
    return out;
}

std::string format_measure(double v) {
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

}  // namespace

Alignment parse_alignment(const std::string& xml) {
    XmlNode root = XmlReader(xml).parse();
    const XmlNode* alignment = nullptr;
    if (root.name == ns(kAlignNs, "Alignment")) {
        alignment = &root;
    } else if (root.name == ns(kRdfNs, "RDF")) {
        alignment = root.child(ns(kAlignNs, "Alignment"));
    }
    if (!alignment) throw XmlError("no Alignment element");

    Alignment a;
    a.onto1 = read_onto(*alignment, "onto1");
    a.onto2 = read_onto(*alignment, "onto2");
    int order = 0;
    for (const XmlNode& child : alignment->children) {
        if (child.name == ns(kAlignNs, "map")) {
            for (const XmlNode& cell : child.children)
                if (cell.name == ns(kAlignNs, "Cell"))
                    a.cells.push_back(read_cell(cell, order++));
        } else if (child.name == ns(kAlignNs, "Cell")) {
            a.cells.push_back(read_cell(child, order++));
        }
    }
    return a;
}

std::string serialize_alignment(const Alignment& a) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n"
       << "<rdf:RDF xmlns=\"" << kAlignNs << "\"\n"
       << "         xmlns:rdf=\"" << kRdfNs << "\">\n"
       << "<Alignment>\n"
       << "  <xml>yes</xml>\n"
       << "  <level>0</level>\n"
       << "  <type>**</type>\n";
    os << "  <onto1><Ontology rdf:about=\"" << xml_escape(a.onto1.value, true)
       << "\"/></onto1>\n";
    os << "  <onto2><Ontology rdf:about=\"" << xml_escape(a.onto2.value, true)
       << "\"/></onto2>\n";
    os << "  <map>\n";
    for (const Cell& c : a.cells) {
        os << "    <Cell>\n"
           << "      <entity1 rdf:resource=\"" << xml_escape(c.entity1.value, true)
           << "\"/>\n"
           << "      <entity2 rdf:resource=\"" << xml_escape(c.entity2.value, true)
           << "\"/>\n"
           << "      <measure>" << format_measure(c.measure) << "</measure>\n"
           << "      <relation>" << xml_escape(c.relation, false)
           << "</relation>\n"
           << "    </Cell>\n";
    }
    os << "  </map>\n</Alignment>\n</rdf:RDF>\n";
    return os.str();
}

Alignment threshold_filter(const Alignment& a, double t) {
    if (t < 0.0 || t > 1.0)
        throw ThresholdOutOfRange("threshold " + std::to_string(t) +
                                  " outside [0,1]");
    Alignment out;
    out.onto1 = a.onto1;
    out.onto2 = a.onto2;
    for (const Cell& c : a.cells)
        if (c.measure >= t) out.cells.push_back(c);
    return out;
}

Alignment to_one_to_one(const Alignment& a) {
    // pass 1: best cell per source, strictly-greater measure replaces
    std::unordered_map<Iri, std::size_t> best1;
    std::vector<Cell> pass1;
    for (const Cell& c : a.cells) {
        auto [it, fresh] = best1.try_emplace(c.entity1, pass1.size());
        if (fresh)
            pass1.push_back(c);
        else if (c.measure > pass1[it->second].measure)
            pass1[it->second] = c;
    }
    // pass 2 over survivors, ascending doc order; best per target
    std::sort(pass1.begin(), pass1.end(),
              [](const Cell& x, const Cell& y) { return x.doc_order < y.doc_order; });
    std::unordered_map<Iri, std::size_t> best2;
    std::vector<Cell> pass2;
    for (const Cell& c : pass1) {
        auto [it, fresh] = best2.try_emplace(c.entity2, pass2.size());
        if (fresh)
            pass2.push_back(c);
        else if (c.measure > pass2[it->second].measure)
            pass2[it->second] = c;
    }
    std::sort(pass2.begin(), pass2.end(),
              [](const Cell& x, const Cell& y) { return x.doc_order < y.doc_order; });
    Alignment out;
    out.onto1 = a.onto1;
    out.onto2 = a.onto2;
    out.cells = std::move(pass2);
    return out;
}

}  // namespace onti
