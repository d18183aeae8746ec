#include "lieposet/io.hpp"

#include <map>
#include <sstream>

#include "lieposet/error.hpp"

namespace lieposet {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

int as_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) fail(what + " must be an integer");
    return j.get<int>();
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
    return j.at(key);
}

Rational as_rational(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    fail("coefficient must be an integer or a \"p/q\" string");
}

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
}

Poset poset_from_json(const Json& j) {
    const int n = as_int(field(j, "n"), "n");
    if (n < 0) fail("n must be nonnegative");
    std::vector<Relation> gens;
    if (j.contains("relations")) {
        const Json& rels = j.at("relations");
        if (!rels.is_array()) fail("relations must be an array");
        for (const Json& r : rels) {
            if (!r.is_array() || r.size() != 2) fail("each relation is a pair [i, j]");
            gens.emplace_back(as_int(r[0], "relation entry"), as_int(r[1], "relation entry"));
        }
    }
    return Poset::from_generators(n, gens);
}

Json poset_to_json(const Poset& p) {
    Json rels = Json::array();
    for (const auto& [a, b] : p.covers()) rels.push_back({a, b});
    return Json{{"n", p.size()}, {"relations", rels}};
}

LieAlgebra algebra_from_json(const Json& j) {
    const int dim = as_int(field(j, "dim"), "dim");
    std::vector<std::tuple<int, int, SparseVector>> brackets;
    const Json& list = field(j, "brackets");
    if (!list.is_array()) fail("brackets must be an array");
    for (const Json& b : list) {
        if (!b.is_array() || b.size() != 3 || !b[2].is_object()) fail("each bracket is [i, j, {\"k\": c}]");
        SparseVector v;
        for (const auto& [key, value] : b[2].items()) {
            int k = 0;
            try {
                std::size_t used = 0;
                k = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::logic_error&) {
                fail("bracket output index '" + key + "' is not an integer");
            }
            v.emplace_back(k, as_rational(value));
        }
        brackets.emplace_back(as_int(b[0], "bracket index"), as_int(b[1], "bracket index"), std::move(v));
    }
    return build_raw(dim, brackets);
}

ContactSequence sequence_from_json(const Json& j) {
    const Json& steps = field(j, "steps");
    if (!steps.is_array()) fail("steps must be an array");
    ContactSequence seq;
    for (const Json& s : steps) {
        GluingStep step;
        const Json& block = field(s, "block");
        if (!block.is_string()) fail("block must be a string");
        step.block = parse_block(block.get<std::string>());
        if (s.contains("rule")) {
            if (!s.at("rule").is_string()) fail("rule must be a string");
            step.rule = parse_rule(s.at("rule").get<std::string>());
        }
        if (s.contains("c")) step.x = as_int(s.at("c"), "c");
        if (s.contains("a1")) step.y = as_int(s.at("a1"), "a1");
        if (s.contains("a2")) step.z = as_int(s.at("a2"), "a2");
        seq.steps.push_back(step);
    }
    return seq;
}

Json sequence_to_json(const ContactSequence& seq) {
    Json steps = Json::array();
    for (const GluingStep& s : seq.steps) {
        Json o{{"block", std::string(to_string(s.block))}};
        if (s.rule) o["rule"] = std::string(to_string(*s.rule));
        if (s.x) o["c"] = *s.x;
        if (s.y) o["a1"] = *s.y;
        if (s.z) o["a2"] = *s.z;
        steps.push_back(o);
    }
    return Json{{"steps", steps}};
}

SimplicialComplex complex_from_json(const Json& j) {
    const Json& faces = field(j, "faces");
    if (!faces.is_array()) fail("faces must be an array");
    std::vector<Face> out;
    for (const Json& f : faces) {
        if (!f.is_array() || f.empty()) fail("each face is a nonempty vertex list");
        Face face;
        for (const Json& v : f) face.push_back(as_int(v, "vertex"));
        out.push_back(std::move(face));
    }
    return complex_from_faces(std::move(out));
}

Json complex_to_json(const SimplicialComplex& k) {
    Json faces = Json::array();
    for (const auto& level : k.faces)
        for (const Face& f : level) faces.push_back(f);
    return Json{{"faces", faces}};
}

Json functional_to_json(const Functional& phi) {
    Json out = Json::array();
    for (const auto& [pos, c] : phi.terms) out.push_back({pos.first, pos.second, to_fraction(c)});
    return out;
}

Json classification_to_json(const Classification& c) {
    Json out{{"verdict", c.contact ? "Contact" : "NotContact"}};
    if (c.contact) {
        Json cert = Json::object();
        if (c.sequence) cert["sequence"] = sequence_to_json(*c.sequence);
        if (!c.components.empty()) cert["components"] = c.components;
        if (c.form) cert["contact_form"] = functional_to_json(*c.form);
        out["certificate"] = cert;
        return out;
    }
    Json list = Json::array();
    for (const Obstruction& o : c.obstructions) {
        Json item{{"kind", o.kind}, {"detail", o.detail}, {"witness", o.witness}};
        if (!o.hasse_cycle.empty()) item["hasse_cycle"] = o.hasse_cycle;
        list.push_back(item);
    }
    out["obstruction"] = list.empty() ? Json() : list.front();
    out["obstructions"] = list;
    return out;
}

std::string hasse_dot(const Poset& p, const std::string& name) {
    const HasseData h = p.hasse();
    std::map<int, std::vector<Element>> ranks;
    for (Element e = 1; e <= p.size(); ++e) ranks[h.heights[e - 1]].push_back(e);
    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (const auto& [r, elems] : ranks) {
        out << "  { rank=same;";
        for (Element e : elems) out << ' ' << e << ';';
        out << " }  // height " << r << '\n';
    }
    for (const auto& [a, b] : h.covers) out << "  " << a << " -> " << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace lieposet
