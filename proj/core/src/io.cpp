#include "olat/io.hpp"

#include <algorithm>
#include <fstream>

namespace olat {

json lattice_to_json(const FiniteLattice& l) {
    json doc;
    doc["elements"] = l.names();
    json covers = json::array();
    for (auto [x, y] : l.covers()) covers.push_back(json::array({x, y}));
    doc["covers"] = std::move(covers);
    doc["bottom"] = l.bottom();
    doc["top"] = l.top();
    return doc;
}

Poset poset_from_json(const json& doc) {
    if (!doc.contains("elements")) throw IoError("document lacks \"elements\"");
    std::vector<std::string> names = doc.at("elements").get<std::vector<std::string>>();
    const int n = static_cast<int>(names.size());

    Poset p;
    if (doc.contains("covers")) {
        std::vector<std::pair<int, int>> covers;
        for (const auto& pair : doc.at("covers")) {
            int a = pair.at(0).get<int>(), b = pair.at(1).get<int>();
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw IoError("cover index out of range");
            covers.emplace_back(a, b);
        }
        p = Poset::from_covers(std::move(names), covers);
    } else if (doc.contains("leq")) {
        BitRel rel(n);
        for (const auto& pair : doc.at("leq")) {
            int a = pair.at(0).get<int>(), b = pair.at(1).get<int>();
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw IoError("leq index out of range");
            rel.set(a, b);
        }
        rel.reflexive_close();
        p = Poset::from_relation(std::move(names), std::move(rel));
    } else {
        throw IoError("document needs \"covers\" or \"leq\"");
    }
    if (doc.contains("bottom")) p.bottom = doc.at("bottom").get<int>();
    if (doc.contains("top")) p.top = doc.at("top").get<int>();
    return p;
}

FiniteLattice lattice_from_json(const json& doc) {
    auto res = validate_lattice(poset_from_json(doc));
    if (auto* err = std::get_if<LatticeError>(&res)) throw IoError(describe(*err));
    return std::get<FiniteLattice>(std::move(res));
}

json ortho_to_json(const Ortholattice& o) {
    json doc = lattice_to_json(*o.lattice);
    doc["perp"] = o.perp;
    return doc;
}

Ortholattice ortho_from_json(const json& doc) {
    if (!doc.contains("perp")) throw IoError("ortholattice document lacks \"perp\"");
    auto l = std::make_shared<const FiniteLattice>(lattice_from_json(doc));
    auto res = validate_ortho(l, doc.at("perp").get<std::vector<ElementId>>());
    if (auto* err = std::get_if<OrthoError>(&res)) throw IoError(describe(*err));
    return std::get<Ortholattice>(std::move(res));
}

json embedding_to_json(const Embedding& e) {
    json doc;
    doc["source"] = lattice_to_json(*e.source);
    doc["target"] = lattice_to_json(*e.target);
    doc["map"] = e.map;
    json certs = json::array();
    for (Cert c : e.certs) certs.push_back(cert_name(c));
    doc["certificates"] = std::move(certs);
    return doc;
}

namespace {
LatticePtr lattice_ref_from_json(const json& node) {
    if (node.is_string()) return resolve_lattice(node.get<std::string>());
    return std::make_shared<const FiniteLattice>(lattice_from_json(node));
}
}  // namespace

Embedding embedding_from_json(const json& doc) {
    Embedding e;
    e.source = lattice_ref_from_json(doc.at("source"));
    e.target = lattice_ref_from_json(doc.at("target"));
    e.map = doc.at("map").get<std::vector<ElementId>>();
    return e;
}

json term_to_json(const TermPtr& t) {
    json doc;
    switch (t->kind) {
        case TermKind::Var:
            doc["kind"] = "var";
            doc["index"] = t->var;
            break;
        case TermKind::Coeff:
            doc["kind"] = "coeff";
            doc["name"] = t->coeff;
            break;
        case TermKind::Perp:
            doc["kind"] = "perp";
            doc["arg"] = term_to_json(t->lhs);
            break;
        case TermKind::Meet:
        case TermKind::Join:
            doc["kind"] = t->kind == TermKind::Meet ? "meet" : "join";
            doc["lhs"] = term_to_json(t->lhs);
            doc["rhs"] = term_to_json(t->rhs);
            break;
    }
    return doc;
}

TermPtr term_from_json(const json& doc) {
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "var") return tvar(doc.at("index").get<int>());
    if (kind == "coeff") return tcoeff(doc.at("name").get<std::string>());
    if (kind == "perp") return tperp(term_from_json(doc.at("arg")));
    if (kind == "meet") return tmeet(term_from_json(doc.at("lhs")), term_from_json(doc.at("rhs")));
    if (kind == "join") return tjoin(term_from_json(doc.at("lhs")), term_from_json(doc.at("rhs")));
    throw IoError("unknown term kind: " + kind);
}

json function_to_json(const FunctionTable& f) {
    json doc;
    doc["arity"] = f.arity;
    json entries = json::array();
    for (const auto& [key, value] : f.entries)
        entries.push_back(json::array({json(key), json(value)}));
    doc["entries"] = std::move(entries);
    return doc;
}

FunctionTable function_from_json(const json& doc, LatticePtr domain) {
    FunctionTable f;
    f.arity = doc.at("arity").get<int>();
    f.domain = std::move(domain);
    for (const auto& e : doc.at("entries"))
        f.entries[e.at(0).get<std::vector<ElementId>>()] = e.at(1).get<ElementId>();
    return f;
}

namespace {

std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

ElementId element_by_name(const FiniteLattice& l, const std::string& name) {
    for (ElementId x = 0; x < l.size(); ++x)
        if (l.name(x) == name) return x;
    throw IoError("no element named \"" + name + "\"");
}

}  // namespace

FunctionTable parse_function_literal(LatticePtr domain, const std::string& text) {
    FunctionTable f;
    f.domain = domain;
    f.arity = 1;
    for (const std::string& raw : split_top_level(text, ',')) {
        std::string entry = trim(raw);
        if (entry.empty()) continue;
        // First top-level colon separates key from value; names with
        // colons must use the parenthesized tuple form.
        std::size_t pos = std::string::npos;
        int depth = 0;
        for (std::size_t i = 0; i < entry.size(); ++i) {
            if (entry[i] == '(') ++depth;
            if (entry[i] == ')') --depth;
            if (entry[i] == ':' && depth == 0) { pos = i; break; }
        }
        if (pos == std::string::npos)
            throw IoError("function entry \"" + entry + "\" lacks a colon");
        std::string key = trim(entry.substr(0, pos));
        std::string value = trim(entry.substr(pos + 1));

        std::vector<ElementId> k;
        if (!key.empty() && key.front() == '(' && key.back() == ')') {
            for (const std::string& part :
                 split_top_level(key.substr(1, key.size() - 2), ','))
                k.push_back(element_by_name(*domain, trim(part)));
        } else {
            k.push_back(element_by_name(*domain, key));
        }
        f.arity = static_cast<int>(k.size());
        f.entries[k] = element_by_name(*domain, value);
    }
    return f;
}

std::string export_dot(const FiniteLattice& l, const std::vector<ElementId>* perp) {
    const int n = l.size();
    std::vector<int> height = l.heights();
    std::vector<ElementId> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
        if (height[a] != height[b]) return height[a] < height[b];
        if (l.name(a) != l.name(b)) return l.name(a) < l.name(b);
        return a < b;
    });

    auto esc = [](const std::string& s) {
        std::string out;
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out;
    };

    std::string dot = "digraph lattice {\n  rankdir=BT;\n";
    for (ElementId x : order)
        dot += "  n" + std::to_string(x) + " [label=\"" + esc(l.name(x)) + "\"];\n";

    int max_h = 0;
    for (int h : height) max_h = std::max(max_h, h);
    for (int h = 0; h <= max_h; ++h) {
        std::string line = "  { rank=same;";
        bool any = false;
        for (ElementId x : order)
            if (height[x] == h) {
                line += " n" + std::to_string(x) + ";";
                any = true;
            }
        line += " }\n";
        if (any) dot += line;
    }

    for (auto [x, y] : l.covers())
        dot += "  n" + std::to_string(x) + " -> n" + std::to_string(y) + ";\n";

    if (perp) {
        for (ElementId x = 0; x < n; ++x) {
            ElementId y = (*perp)[x];
            if (x < y)
                dot += "  n" + std::to_string(x) + " -> n" + std::to_string(y) +
                       " [style=dashed, dir=none, constraint=false];\n";
        }
    }
    dot += "}\n";
    return dot;
}

namespace {
json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    json doc;
    in >> doc;
    return doc;
}

bool is_zoo_name(const std::string& spec, std::string& name) {
    if (spec.rfind("zoo:", 0) == 0) {
        name = spec.substr(4);
        return true;
    }
    for (const auto& n : zoo::lattice_names())
        if (n == spec) { name = spec; return true; }
    for (const auto& n : zoo::ortho_names())
        if (n == spec) { name = spec; return true; }
    return false;
}
}  // namespace

LatticePtr resolve_lattice(const std::string& spec) {
    std::string name;
    if (is_zoo_name(spec, name)) {
        for (const auto& n : zoo::lattice_names())
            if (n == name)
                return std::make_shared<const FiniteLattice>(zoo::lattice(name));
        return zoo::ortho(name).lattice;
    }
    return std::make_shared<const FiniteLattice>(lattice_from_json(load_json_file(spec)));
}

Ortholattice resolve_ortho(const std::string& spec) {
    std::string name;
    if (is_zoo_name(spec, name)) return zoo::ortho(name);
    return ortho_from_json(load_json_file(spec));
}

json workspace_to_json(const Workspace& w) {
    json doc;
    doc["version"] = 1;
    json lats = json::object();
    for (const auto& [name, l] : w.lattices) lats[name] = lattice_to_json(l);
    doc["lattices"] = std::move(lats);
    json orthos = json::object();
    for (const auto& [name, o] : w.ortholattices) orthos[name] = ortho_to_json(o);
    doc["ortholattices"] = std::move(orthos);
    json embs = json::object();
    for (const auto& [name, e] : w.embeddings) {
        json je;
        je["source"] = e.source;
        je["target"] = e.target;
        je["map"] = e.map;
        embs[name] = std::move(je);
    }
    doc["embeddings"] = std::move(embs);
    json fns = json::object();
    for (const auto& [name, f] : w.functions) {
        json jf;
        jf["domain"] = f.domain;
        jf["arity"] = f.arity;
        json entries = json::array();
        for (const auto& [key, value] : f.entries)
            entries.push_back(json::array({json(key), json(value)}));
        jf["entries"] = std::move(entries);
        fns[name] = std::move(jf);
    }
    doc["functions"] = std::move(fns);
    json terms = json::object();
    for (const auto& [name, t] : w.terms) terms[name] = term_to_json(t);
    doc["terms"] = std::move(terms);
    return doc;
}

Workspace workspace_from_json(const json& doc) {
    Workspace w;
    if (doc.contains("lattices"))
        for (const auto& [name, jl] : doc.at("lattices").items())
            w.lattices.emplace(name, lattice_from_json(jl));
    if (doc.contains("ortholattices"))
        for (const auto& [name, jo] : doc.at("ortholattices").items())
            w.ortholattices.emplace(name, ortho_from_json(jo));

    auto has_lattice = [&](const std::string& name) {
        return w.lattices.count(name) || w.ortholattices.count(name);
    };
    if (doc.contains("embeddings"))
        for (const auto& [name, je] : doc.at("embeddings").items()) {
            WorkspaceEmbedding e;
            e.source = je.at("source").get<std::string>();
            e.target = je.at("target").get<std::string>();
            e.map = je.at("map").get<std::vector<ElementId>>();
            if (!has_lattice(e.source) || !has_lattice(e.target))
                throw IoError("embedding " + name + " references unknown lattices");
            w.embeddings.emplace(name, std::move(e));
        }
    if (doc.contains("functions"))
        for (const auto& [name, jf] : doc.at("functions").items()) {
            WorkspaceFunction f;
            f.domain = jf.at("domain").get<std::string>();
            f.arity = jf.at("arity").get<int>();
            for (const auto& e : jf.at("entries"))
                f.entries[e.at(0).get<std::vector<ElementId>>()] = e.at(1).get<ElementId>();
            if (!has_lattice(f.domain))
                throw IoError("function " + name + " references unknown lattice");
            w.functions.emplace(name, std::move(f));
        }
    if (doc.contains("terms"))
        for (const auto& [name, jt] : doc.at("terms").items())
            w.terms.emplace(name, term_from_json(jt));
    return w;
}

}  // namespace olat
