#include "olat/terms.hpp"

#include <algorithm>
#include <cctype>

namespace olat {

TermPtr tvar(int index) {
    auto t = std::make_shared<Term>();
    t->kind = TermKind::Var;
    t->var = index;
    return t;
}

TermPtr tcoeff(std::string name) {
    auto t = std::make_shared<Term>();
    t->kind = TermKind::Coeff;
    t->coeff = std::move(name);
    return t;
}

namespace {
TermPtr binary(TermKind k, TermPtr a, TermPtr b) {
    auto t = std::make_shared<Term>();
    t->kind = k;
    t->lhs = std::move(a);
    t->rhs = std::move(b);
    return t;
}
}  // namespace

TermPtr tmeet(TermPtr a, TermPtr b) { return binary(TermKind::Meet, std::move(a), std::move(b)); }
TermPtr tjoin(TermPtr a, TermPtr b) { return binary(TermKind::Join, std::move(a), std::move(b)); }

TermPtr tperp(TermPtr a) {
    auto t = std::make_shared<Term>();
    t->kind = TermKind::Perp;
    t->lhs = std::move(a);
    return t;
}

int term_size(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Var:
        case TermKind::Coeff: return 1;
        case TermKind::Perp: return 1 + term_size(t->lhs);
        default: return 1 + term_size(t->lhs) + term_size(t->rhs);
    }
}

int perp_count(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Var:
        case TermKind::Coeff: return 0;
        case TermKind::Perp: return 1 + perp_count(t->lhs);
        default: return perp_count(t->lhs) + perp_count(t->rhs);
    }
}

int term_arity(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Var: return t->var + 1;
        case TermKind::Coeff: return 0;
        case TermKind::Perp: return term_arity(t->lhs);
        default: return std::max(term_arity(t->lhs), term_arity(t->rhs));
    }
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case TermKind::Var: return a->var == b->var;
        case TermKind::Coeff: return a->coeff == b->coeff;
        case TermKind::Perp: return term_equal(a->lhs, b->lhs);
        default: return term_equal(a->lhs, b->lhs) && term_equal(a->rhs, b->rhs);
    }
}

std::size_t term_hash(const TermPtr& t) {
    auto mix = [](std::size_t h, std::size_t v) {
        return h * 1000003u ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    };
    std::size_t h = static_cast<std::size_t>(t->kind) + 11;
    switch (t->kind) {
        case TermKind::Var: return mix(h, static_cast<std::size_t>(t->var));
        case TermKind::Coeff: return mix(h, std::hash<std::string>{}(t->coeff));
        case TermKind::Perp: return mix(h, term_hash(t->lhs));
        default: return mix(mix(h, term_hash(t->lhs)), term_hash(t->rhs));
    }
}

EvalContext eval_context(const FiniteLattice& l, const CoeffBinding& coeffs) {
    return EvalContext{&l, nullptr, &coeffs};
}

EvalContext eval_context(const Ortholattice& o, const CoeffBinding& coeffs) {
    return EvalContext{o.lattice.get(), &o.perp, &coeffs};
}

ElementId eval(const TermPtr& t, const EvalContext& ctx,
               std::span<const ElementId> assignment) {
    using K = TermError::Kind;
    switch (t->kind) {
        case TermKind::Var:
            if (t->var < 0 || t->var >= static_cast<int>(assignment.size()))
                throw TermError(K::UnboundVariable,
                                "variable x" + std::to_string(t->var) + " unbound");
            return assignment[t->var];
        case TermKind::Coeff: {
            auto it = ctx.coeffs ? ctx.coeffs->find(t->coeff) : CoeffBinding::const_iterator{};
            if (!ctx.coeffs || it == ctx.coeffs->end())
                throw TermError(K::UnresolvedCoefficient,
                                "coefficient " + t->coeff + " unresolved");
            return it->second;
        }
        case TermKind::Meet:
            return ctx.lattice->meet(eval(t->lhs, ctx, assignment),
                                     eval(t->rhs, ctx, assignment));
        case TermKind::Join:
            return ctx.lattice->join(eval(t->lhs, ctx, assignment),
                                     eval(t->rhs, ctx, assignment));
        case TermKind::Perp:
            if (!ctx.perp)
                throw TermError(K::PerpUnavailable, "no orthocomplement in scope");
            return (*ctx.perp)[eval(t->lhs, ctx, assignment)];
    }
    throw std::logic_error("unreachable");
}

CoeffBinding coeff_binding_for(const FiniteLattice& l) {
    CoeffBinding b;
    for (ElementId x = 0; x < l.size(); ++x) b[coeff_name_for(l, x)] = x;
    return b;
}

std::string coeff_name_for(const FiniteLattice& l, ElementId x) {
    int count = 0;
    for (ElementId y = 0; y < l.size(); ++y)
        if (l.name(y) == l.name(x)) ++count;
    if (count == 1) return l.name(x);
    return "#" + std::to_string(x);
}

CoeffBinding transport(const CoeffBinding& binding, const Embedding& e) {
    CoeffBinding out;
    for (const auto& [name, x] : binding) out[name] = e.map[x];
    return out;
}

namespace {

TermPtr nnf_go(const TermPtr& t, bool negated) {
    switch (t->kind) {
        case TermKind::Var:
        case TermKind::Coeff:
            return negated ? tperp(t) : t;
        case TermKind::Perp:
            return nnf_go(t->lhs, !negated);
        case TermKind::Meet:
            return negated ? tjoin(nnf_go(t->lhs, true), nnf_go(t->rhs, true))
                           : tmeet(nnf_go(t->lhs, false), nnf_go(t->rhs, false));
        case TermKind::Join:
            return negated ? tmeet(nnf_go(t->lhs, true), nnf_go(t->rhs, true))
                           : tjoin(nnf_go(t->lhs, false), nnf_go(t->rhs, false));
    }
    throw std::logic_error("unreachable");
}

}  // namespace

TermPtr nnf(const TermPtr& t) { return nnf_go(t, false); }

bool is_nnf(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Var:
        case TermKind::Coeff: return true;
        case TermKind::Perp:
            return t->lhs->kind == TermKind::Var || t->lhs->kind == TermKind::Coeff;
        default: return is_nnf(t->lhs) && is_nnf(t->rhs);
    }
}

namespace {

TermPtr two_var_go(const TermPtr& t,
                   std::vector<std::pair<std::string, std::string>>& perps) {
    switch (t->kind) {
        case TermKind::Var: return t;
        case TermKind::Coeff: return t;
        case TermKind::Perp:
            if (t->lhs->kind == TermKind::Var) return tvar(1);
            if (t->lhs->kind == TermKind::Coeff) {
                std::string fresh = t->lhs->coeff + "~";
                if (std::find_if(perps.begin(), perps.end(), [&](const auto& p) {
                        return p.first == fresh;
                    }) == perps.end())
                    perps.emplace_back(fresh, t->lhs->coeff);
                return tcoeff(fresh);
            }
            throw TermError(TermError::Kind::NotUnary, "term is not in NNF");
        case TermKind::Meet:
            return tmeet(two_var_go(t->lhs, perps), two_var_go(t->rhs, perps));
        case TermKind::Join:
            return tjoin(two_var_go(t->lhs, perps), two_var_go(t->rhs, perps));
    }
    throw std::logic_error("unreachable");
}

}  // namespace

TwoVarTerm as_two_variable_lattice_term(const TermPtr& t) {
    if (term_arity(t) > 1)
        throw TermError(TermError::Kind::NotUnary, "term uses more than one variable");
    TwoVarTerm out;
    out.term = two_var_go(t, out.perp_coeffs);
    return out;
}

CoeffBinding extend_binding_with_perps(
    CoeffBinding binding,
    const std::vector<std::pair<std::string, std::string>>& perp_coeffs,
    const Ortholattice& o) {
    for (const auto& [fresh, base] : perp_coeffs)
        binding[fresh] = o.perp[binding.at(base)];
    return binding;
}

TermPtr subst_vars(const TermPtr& t, std::span<const TermPtr> replacements) {
    switch (t->kind) {
        case TermKind::Var:
            if (t->var < 0 || t->var >= static_cast<int>(replacements.size()))
                throw TermError(TermError::Kind::UnboundVariable,
                                "no replacement for x" + std::to_string(t->var));
            return replacements[t->var];
        case TermKind::Coeff: return t;
        case TermKind::Perp: return tperp(subst_vars(t->lhs, replacements));
        case TermKind::Meet:
            return tmeet(subst_vars(t->lhs, replacements), subst_vars(t->rhs, replacements));
        case TermKind::Join:
            return tjoin(subst_vars(t->lhs, replacements), subst_vars(t->rhs, replacements));
    }
    throw std::logic_error("unreachable");
}

namespace {

bool plain_ident(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    // x<digits> always reads back as a variable, so such a coefficient
    // must be quoted.
    if (s[0] == 'x' && s.size() > 1 &&
        std::all_of(s.begin() + 1, s.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return false;
    return true;
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

// precedence: 0 join, 1 meet, 2 perp/atom
void print_go(const TermPtr& t, int parent_prec, std::string& out) {
    switch (t->kind) {
        case TermKind::Var:
            out += "x" + std::to_string(t->var);
            return;
        case TermKind::Coeff:
            out += plain_ident(t->coeff) ? t->coeff : quote(t->coeff);
            return;
        case TermKind::Perp:
            print_go(t->lhs, 2, out);
            out += "^'";
            return;
        case TermKind::Meet: {
            bool paren = parent_prec > 1;
            if (paren) out += "(";
            print_go(t->lhs, 1, out);
            out += " & ";
            // parse is left-associative, so a right-nested meet needs parens
            print_go(t->rhs, 2, out);
            if (paren) out += ")";
            return;
        }
        case TermKind::Join: {
            bool paren = parent_prec > 0;
            if (paren) out += "(";
            print_go(t->lhs, 0, out);
            out += " | ";
            print_go(t->rhs, 1, out);
            if (paren) out += ")";
            return;
        }
    }
}

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    TermPtr parse_join() {
        TermPtr t = parse_meet();
        while (peek() == '|') {
            ++pos;
            t = tjoin(t, parse_meet());
        }
        return t;
    }
    TermPtr parse_meet() {
        TermPtr t = parse_postfix();
        while (peek() == '&') {
            ++pos;
            t = tmeet(t, parse_postfix());
        }
        return t;
    }
    TermPtr parse_postfix() {
        TermPtr t = parse_atom();
        while (peek() == '^') {
            ++pos;
            if (pos >= s.size() || s[pos] != '\'')
                throw TermParseError(pos, "expected ' after ^");
            ++pos;
            t = tperp(t);
        }
        return t;
    }
    TermPtr parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            TermPtr t = parse_join();
            if (peek() != ')') throw TermParseError(pos, "expected )");
            ++pos;
            return t;
        }
        if (c == '"') {
            ++pos;
            std::string name;
            while (pos < s.size() && s[pos] != '"') {
                if (s[pos] == '\\' && pos + 1 < s.size()) ++pos;
                name += s[pos++];
            }
            if (pos >= s.size()) throw TermParseError(pos, "unterminated string");
            ++pos;
            return tcoeff(std::move(name));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                      s[pos] == '_'))
                ++pos;
            std::string word = s.substr(start, pos - start);
            if (word[0] == 'x' && word.size() > 1 &&
                std::all_of(word.begin() + 1, word.end(), [](char d) {
                    return std::isdigit(static_cast<unsigned char>(d));
                }))
                return tvar(std::stoi(word.substr(1)));
            return tcoeff(std::move(word));
        }
        throw TermParseError(pos, "unexpected character");
    }
};

}  // namespace

std::string print_term(const TermPtr& t) {
    std::string out;
    print_go(t, 0, out);
    return out;
}

TermPtr parse_term(const std::string& text) {
    Parser p{text};
    TermPtr t = p.parse_join();
    if (!p.eof()) throw TermParseError(p.pos, "trailing input");
    return t;
}

}  // namespace olat
