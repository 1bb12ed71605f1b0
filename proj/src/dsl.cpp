#include "algforge/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace algforge {

namespace {

std::string describe(SourcePos pos) {
    return "line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column);
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

}  // namespace

ParseError::ParseError(SourcePos pos, std::vector<std::string> expected, std::string found)
    : Error(describe(pos) + ": expected " + join(expected, " or ") + ", found " + found),
      pos_(pos),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

SemanticError::SemanticError(SourcePos pos, const std::string& what) : Error(describe(pos) + ": " + what), pos_(pos) {}

namespace {

enum class Tok { ident, integer, punct, end };

struct Token {
    Tok kind;
    std::string text;
    SourcePos pos;
};

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    SourcePos pos;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j) {
            if (src[i] == '\n') {
                ++pos.line;
                pos.column = 1;
            } else {
                ++pos.column;
            }
            ++i;
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const SourcePos start = pos;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            out.push_back({Tok::ident, std::string(src.substr(i, j - i)), start});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Tok::integer, std::string(src.substr(i, j - i)), start});
            advance(j - i);
            continue;
        }
        if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            out.push_back({Tok::punct, "->", start});
            advance(2);
            continue;
        }
        if (std::string_view("()[]{},;+-*/^=").find(c) != std::string_view::npos) {
            out.push_back({Tok::punct, std::string(1, c), start});
            advance(1);
            continue;
        }
        throw ParseError(start, {"a token"}, "'" + std::string(1, c) + "'");
    }
    out.push_back({Tok::end, "", pos});
    return out;
}

const std::set<std::string> kKeywords = {"base",   "bundle", "anchor", "bracket",  "kernel", "section",
                                         "connection", "endo", "cometric", "form", "rank", "gens",
                                         "on",     "default", "w"};

bool is_field_name(const std::string& s) {
    return s.size() > 1 && s[0] == 'd' && s.find_first_not_of("0123456789", 1) == std::string::npos;
}

// Value of an expression; a zero polynomial converts to the zero of any kind.
struct Value {
    enum Kind { poly, section, field, form } kind = poly;
    Poly p;
    Section s;
    VectorField v;
    Form f;
    bool int_literal = false;

    bool zero_poly() const { return kind == poly && p.is_zero(); }

    static Value of(Poly x) {
        Value v;
        v.p = std::move(x);
        return v;
    }
    static Value of(Section x) {
        Value v;
        v.kind = section;
        v.s = std::move(x);
        return v;
    }
    static Value of(VectorField x) {
        Value v;
        v.kind = field;
        v.v = std::move(x);
        return v;
    }
    static Value of(Form x) {
        Value v;
        v.kind = form;
        v.f = std::move(x);
        return v;
    }
};

const char* kind_name(Value::Kind k) {
    switch (k) {
        case Value::poly: return "a function";
        case Value::section: return "a section";
        case Value::field: return "a vector field";
        case Value::form: return "a form";
    }
    return "?";
}

struct Scope {
    std::vector<std::string> vars;
    std::vector<std::string> gens;
    const Named<Section>* sections = nullptr;
    const Named<Form>* forms = nullptr;

    std::size_t n() const { return vars.size(); }
    std::size_t m() const { return gens.size(); }
};

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    Document document();
    Poly lone_poly(const std::vector<std::string>& vars);

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool at_punct(const char* p) const { return peek().kind == Tok::punct && peek().text == p; }
    bool at_word(const char* w) const { return peek().kind == Tok::ident && peek().text == w; }

    std::string found() const {
        const Token& t = peek();
        return t.kind == Tok::end ? std::string("end of input") : "'" + t.text + "'";
    }
    [[noreturn]] void fail(std::vector<std::string> expected) const { throw ParseError(peek().pos, std::move(expected), found()); }

    void expect_punct(const char* p) {
        if (!at_punct(p)) fail({std::string("'") + p + "'"});
        next();
    }
    void expect_word(const char* w) {
        if (!at_word(w)) fail({std::string("'") + w + "'"});
        next();
    }
    const Token& expect_ident(const char* what) {
        if (peek().kind != Tok::ident) fail({what});
        return next();
    }
    const Token& expect_int() {
        if (peek().kind != Tok::integer) fail({"an integer"});
        return next();
    }
    std::vector<Token> ident_list(const char* what) {
        std::vector<Token> out;
        out.push_back(expect_ident(what));
        while (at_punct(",")) {
            next();
            out.push_back(expect_ident(what));
        }
        return out;
    }

    // expressions
    Value expr();
    Value term();
    Value power();
    Value atom();
    Value resolve(const Token& t);

    Value add(Value a, Value b, bool subtract, SourcePos pos) const;
    Value mul(Value a, Value b, SourcePos pos) const;

    Poly as_poly(const Value& v, SourcePos pos) const;
    Section as_section(const Value& v, SourcePos pos) const;
    VectorField as_field(const Value& v, SourcePos pos) const;
    Form as_form(const Value& v, SourcePos pos) const;

    void declare(const Token& t);
    std::size_t gen_index(const Token& t) const;

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    Scope scope_;
    std::set<std::string> names_;
};

Value Parser::expr() {
    const SourcePos start = peek().pos;
    bool negate = false;
    if (at_punct("-") || at_punct("+")) negate = next().text == "-";
    Value v = term();
    if (negate) {
        v = mul(Value::of(Poly::constant(scope_.n(), -1)), v, start);
        v.int_literal = false;
    }
    while (at_punct("+") || at_punct("-")) {
        const Token op = next();
        Value rhs = term();
        v = add(std::move(v), std::move(rhs), op.text == "-", op.pos);
    }
    return v;
}

Value Parser::term() {
    Value v = power();
    while (at_punct("*") || at_punct("/")) {
        const Token op = next();
        Value rhs = power();
        if (op.text == "*") {
            v = mul(std::move(v), std::move(rhs), op.pos);
        } else {
            if (rhs.kind != Value::poly || !rhs.p.is_constant() || rhs.p.is_zero())
                throw SemanticError(op.pos, "can only divide by a nonzero constant");
            v = mul(std::move(v), Value::of(Poly::constant(scope_.n(), 1 / rhs.p.constant_term())), op.pos);
        }
        v.int_literal = false;
    }
    return v;
}

Value Parser::power() {
    Value base = atom();
    if (!at_punct("^")) return base;
    const Token op = next();
    Value rhs = power();
    if (base.kind == Value::poly && rhs.int_literal) {
        const Scalar e = rhs.p.is_zero() ? Scalar(0) : rhs.p.constant_term();
        if (e > 64) throw SemanticError(op.pos, "exponent too large");
        return Value::of(base.p.pow(static_cast<unsigned>(e.get_num().get_ui())));
    }
    if (base.kind == Value::form && rhs.kind == Value::form) return Value::of(wedge(base.f, rhs.f));
    if (base.kind == Value::poly && rhs.kind == Value::form) return mul(std::move(base), std::move(rhs), op.pos);
    if (base.kind == Value::form && rhs.kind == Value::poly) return mul(std::move(base), std::move(rhs), op.pos);
    throw SemanticError(op.pos, "'^' needs an integer exponent or two forms");
}

Value Parser::atom() {
    const Token& t = peek();
    if (t.kind == Tok::integer) {
        next();
        Value v = Value::of(Poly::constant(scope_.n(), Scalar(mpz_class(t.text))));
        v.int_literal = true;
        return v;
    }
    if (at_punct("(")) {
        next();
        Value v = expr();
        expect_punct(")");
        v.int_literal = false;
        return v;
    }
    if (t.kind == Tok::ident) {
        const Token id = next();
        if (id.text == "w" && at_punct("(")) {
            next();
            const Token g = expect_ident("a generator name");
            expect_punct(")");
            Value v;
            v.kind = Value::form;
            v.f = Form::dual(scope_.m(), scope_.n(), gen_index(g));
            return v;
        }
        return resolve(id);
    }
    fail({"a number", "a name", "'('"});
}

Value Parser::resolve(const Token& t) {
    const std::size_t n = scope_.n();
    for (std::size_t i = 0; i < n; ++i)
        if (scope_.vars[i] == t.text) return Value::of(Poly::variable(n, i));
    for (std::size_t i = 0; i < scope_.m(); ++i)
        if (scope_.gens[i] == t.text) return Value::of(Section::unit(scope_.m(), n, i));
    if (scope_.sections)
        if (const Section* s = find_named(*scope_.sections, t.text)) return Value::of(*s);
    if (scope_.forms)
        if (const Form* f = find_named(*scope_.forms, t.text)) return Value::of(*f);
    if (is_field_name(t.text)) {
        const unsigned long k = std::stoul(t.text.substr(1));
        if (k >= 1 && k <= n) return Value::of(VectorField::unit(n, n, k - 1));
        throw SemanticError(t.pos, "'" + t.text + "' is not a coordinate field of a " + std::to_string(n) +
                                       "-dimensional base");
    }
    throw SemanticError(t.pos, "undeclared name '" + t.text + "'");
}

Value Parser::add(Value a, Value b, bool subtract, SourcePos pos) const {
    if (subtract) b = mul(Value::of(Poly::constant(scope_.n(), -1)), std::move(b), pos);
    a.int_literal = false;
    if (b.zero_poly()) return a;
    if (a.zero_poly()) return b;
    if (a.kind == Value::poly && b.kind == Value::form) a = Value::of(Form::function(scope_.m(), a.p));
    if (b.kind == Value::poly && a.kind == Value::form) b = Value::of(Form::function(scope_.m(), b.p));
    if (a.kind != b.kind)
        throw SemanticError(pos, std::string("cannot add ") + kind_name(a.kind) + " and " + kind_name(b.kind));
    switch (a.kind) {
        case Value::poly: a.p += b.p; break;
        case Value::section: a.s += b.s; break;
        case Value::field: a.v += b.v; break;
        case Value::form:
            if (a.f.degree() != b.f.degree()) throw SemanticError(pos, "cannot add forms of different degrees");
            a.f += b.f;
            break;
    }
    return a;
}

Value Parser::mul(Value a, Value b, SourcePos pos) const {
    if (b.kind == Value::poly && a.kind != Value::poly) std::swap(a, b);
    if (a.kind != Value::poly) throw SemanticError(pos, "'*' needs a function on one side (use '^' for wedges)");
    const Poly& f = a.p;
    switch (b.kind) {
        case Value::poly: b.p = f * b.p; break;
        case Value::section: b.s = f * b.s; break;
        case Value::field: b.v = f * b.v; break;
        case Value::form: b.f = f * b.f; break;
    }
    b.int_literal = false;
    return b;
}

Poly Parser::as_poly(const Value& v, SourcePos pos) const {
    if (v.kind != Value::poly) throw SemanticError(pos, std::string("expected a function, found ") + kind_name(v.kind));
    return v.p;
}

Section Parser::as_section(const Value& v, SourcePos pos) const {
    if (v.zero_poly()) return Section(scope_.m(), scope_.n());
    if (v.kind != Value::section) throw SemanticError(pos, std::string("expected a section, found ") + kind_name(v.kind));
    return v.s;
}

VectorField Parser::as_field(const Value& v, SourcePos pos) const {
    if (v.zero_poly()) return VectorField(scope_.n(), scope_.n());
    if (v.kind != Value::field)
        throw SemanticError(pos, std::string("expected a vector field, found ") + kind_name(v.kind));
    return v.v;
}

Form Parser::as_form(const Value& v, SourcePos pos) const {
    if (v.kind == Value::poly) return Form::function(scope_.m(), v.p);
    if (v.kind != Value::form) throw SemanticError(pos, std::string("expected a form, found ") + kind_name(v.kind));
    return v.f;
}

void Parser::declare(const Token& t) {
    if (kKeywords.count(t.text) || is_field_name(t.text))
        throw SemanticError(t.pos, "'" + t.text + "' is reserved");
    if (!names_.insert(t.text).second) throw SemanticError(t.pos, "name '" + t.text + "' is already declared");
}

std::size_t Parser::gen_index(const Token& t) const {
    for (std::size_t i = 0; i < scope_.m(); ++i)
        if (scope_.gens[i] == t.text) return i;
    throw SemanticError(t.pos, "'" + t.text + "' is not a generator of the bundle");
}

Document Parser::document() {
    Document doc;
    scope_.sections = &doc.sections;
    scope_.forms = &doc.forms;
    bool have_base = false, have_bundle = false;
    SourcePos bundle_pos;
    std::vector<std::optional<VectorField>> anchor;
    StructureTable brackets;
    struct PendingConnection {
        std::string name;
        SourcePos pos;
        std::vector<Section> gamma;
        std::vector<bool> set;
    };
    std::vector<PendingConnection> conns;
    std::vector<SourcePos> kernel_pos;

    auto need_bundle = [&](const Token& kw) {
        if (!have_bundle) throw SemanticError(kw.pos, "'" + kw.text + "' before the bundle declaration");
    };

    while (peek().kind != Tok::end) {
        if (peek().kind != Tok::ident || !kKeywords.count(peek().text))
            fail({"'base'", "'bundle'", "'anchor'", "'bracket'", "'kernel'", "'section'", "'connection'", "'endo'",
                  "'cometric'", "'form'"});
        const Token kw = next();
        const std::string& k = kw.text;
        if (k == "base") {
            if (have_base) throw SemanticError(kw.pos, "only one base per document");
            const Token dim = expect_int();
            expect_punct("(");
            const auto vars = ident_list("a variable name");
            expect_punct(")");
            if (std::to_string(vars.size()) != dim.text)
                throw SemanticError(dim.pos, "base dimension " + dim.text + " but " + std::to_string(vars.size()) +
                                                 " variables");
            for (const auto& v : vars) {
                declare(v);
                scope_.vars.push_back(v.text);
            }
            have_base = true;
        } else if (k == "bundle") {
            if (!have_base) throw SemanticError(kw.pos, "bundle before the base declaration");
            if (have_bundle) throw SemanticError(kw.pos, "only one bundle per document");
            const Token name = expect_ident("a bundle name");
            declare(name);
            expect_word("rank");
            const Token rank = expect_int();
            expect_word("gens");
            expect_punct("(");
            const auto gens = ident_list("a generator name");
            expect_punct(")");
            if (std::to_string(gens.size()) != rank.text)
                throw SemanticError(rank.pos, "rank " + rank.text + " but " + std::to_string(gens.size()) +
                                                  " generators");
            for (const auto& g : gens) {
                declare(g);
                scope_.gens.push_back(g.text);
            }
            doc.bundle_name = name.text;
            anchor.assign(gens.size(), std::nullopt);
            have_bundle = true;
            bundle_pos = kw.pos;
        } else if (k == "anchor") {
            need_bundle(kw);
            const Token g = expect_ident("a generator name");
            const std::size_t i = gen_index(g);
            expect_punct("->");
            const SourcePos at = peek().pos;
            VectorField v = as_field(expr(), at);
            if (anchor[i]) throw SemanticError(g.pos, "anchor of '" + g.text + "' given twice");
            anchor[i] = std::move(v);
        } else if (k == "bracket") {
            need_bundle(kw);
            expect_punct("[");
            const Token a = expect_ident("a generator name");
            expect_punct(",");
            const Token b = expect_ident("a generator name");
            expect_punct("]");
            expect_punct("=");
            const SourcePos at = peek().pos;
            Section s = as_section(expr(), at);
            std::size_t i = gen_index(a), j = gen_index(b);
            if (i == j) {
                if (!s.is_zero()) throw SemanticError(kw.pos, "diagonal bracket [" + a.text + ", " + a.text + "] must be zero");
                continue;
            }
            if (i > j) {
                std::swap(i, j);
                s = -s;
            }
            if (!brackets.emplace(std::pair{i, j}, std::move(s)).second)
                throw SemanticError(kw.pos, "bracket [" + a.text + ", " + b.text + "] given twice");
        } else if (k == "kernel") {
            need_bundle(kw);
            if (!doc.kernel.empty()) throw SemanticError(kw.pos, "kernel given twice");
            for (const auto& t : ident_list("a section name")) {
                const bool is_gen = std::find(scope_.gens.begin(), scope_.gens.end(), t.text) != scope_.gens.end();
                if (!is_gen && !doc.section(t.text)) throw SemanticError(t.pos, "undeclared section '" + t.text + "'");
                doc.kernel.push_back(t.text);
                kernel_pos.push_back(t.pos);
            }
        } else if (k == "section") {
            need_bundle(kw);
            const Token name = expect_ident("a section name");
            expect_punct("=");
            const SourcePos at = peek().pos;
            Section s = as_section(expr(), at);
            declare(name);
            doc.sections.emplace_back(name.text, std::move(s));
        } else if (k == "connection") {
            need_bundle(kw);
            const Token name = expect_ident("a connection name");
            declare(name);
            expect_word("on");
            const Token target = expect_ident("a bundle name");
            if (target.text != doc.bundle_name) throw SemanticError(target.pos, "unknown bundle '" + target.text + "'");
            expect_punct("{");
            const std::size_t m = scope_.m();
            PendingConnection pc{name.text, kw.pos, std::vector<Section>(m * m, Section(m, scope_.n())),
                                 std::vector<bool>(m * m, false)};
            while (!at_punct("}")) {
                if (at_word("default")) {
                    next();
                    const Token z = expect_int();
                    if (z.text != "0") throw SemanticError(z.pos, "only 'default 0' is supported");
                    continue;
                }
                const Token a = expect_ident("a generator name or 'default'");
                const Token b = expect_ident("a generator name");
                expect_punct("->");
                const SourcePos at = peek().pos;
                Section s = as_section(expr(), at);
                const std::size_t i = gen_index(a), j = gen_index(b);
                if (pc.set[i * m + j]) throw SemanticError(a.pos, "rule for " + a.text + " " + b.text + " given twice");
                pc.set[i * m + j] = true;
                pc.gamma[i * m + j] = std::move(s);
            }
            next();
            conns.push_back(std::move(pc));
        } else if (k == "endo") {
            need_bundle(kw);
            const Token name = expect_ident("an endomorphism name");
            declare(name);
            expect_punct("{");
            Endomorphism e;
            e.images.assign(scope_.m(), Section(scope_.m(), scope_.n()));
            std::vector<bool> set(scope_.m(), false);
            while (!at_punct("}")) {
                const Token g = expect_ident("a generator name");
                expect_punct("->");
                const SourcePos at = peek().pos;
                Section s = as_section(expr(), at);
                const std::size_t i = gen_index(g);
                if (set[i]) throw SemanticError(g.pos, "image of '" + g.text + "' given twice");
                set[i] = true;
                e.images[i] = std::move(s);
            }
            next();
            doc.endos.emplace_back(name.text, std::move(e));
        } else if (k == "cometric") {
            need_bundle(kw);
            const Token name = expect_ident("a cometric name");
            declare(name);
            expect_punct("=");
            expect_punct("[");
            PolyMatrix rows(1);
            while (true) {
                const SourcePos at = peek().pos;
                rows.back().push_back(as_poly(expr(), at));
                if (at_punct(",")) {
                    next();
                } else if (at_punct(";")) {
                    next();
                    rows.emplace_back();
                } else if (at_punct("]")) {
                    next();
                    break;
                } else {
                    fail({"','", "';'", "']'"});
                }
            }
            if (rows.size() != scope_.m())
                throw SemanticError(name.pos, "cometric needs " + std::to_string(scope_.m()) + " rows");
            for (const auto& r : rows)
                if (r.size() != scope_.m())
                    throw SemanticError(name.pos, "cometric rows need " + std::to_string(scope_.m()) + " entries");
            try {
                doc.cometrics.emplace_back(name.text, CoMetric(std::move(rows)));
            } catch (const Error& e) {
                throw SemanticError(name.pos, e.what());
            }
        } else if (k == "form") {
            need_bundle(kw);
            const Token name = expect_ident("a form name");
            expect_punct("=");
            const SourcePos at = peek().pos;
            Form f = as_form(expr(), at);
            declare(name);
            doc.forms.emplace_back(name.text, std::move(f));
        } else {
            fail({"a statement"});
        }
    }
    if (!have_base) throw SemanticError(peek().pos, "document has no base declaration");
    if (!have_bundle) throw SemanticError(peek().pos, "document has no bundle declaration");

    std::vector<VectorField> rows;
    for (auto& a : anchor) rows.push_back(a ? std::move(*a) : VectorField(scope_.n(), scope_.n()));
    try {
        doc.algebroid = Algebroid(BaseSpace{scope_.vars}, scope_.gens, std::move(rows), brackets);
    } catch (const Error& e) {
        throw SemanticError(bundle_pos, e.what());
    }
    const std::vector<Section> ks = doc.kernel_sections();
    for (std::size_t i = 0; i < ks.size(); ++i)
        if (!anchor_apply(doc.algebroid, ks[i]).is_zero())
            throw SemanticError(kernel_pos[i], "'" + doc.kernel[i] + "' is not in the kernel of the anchor");
    for (auto& pc : conns)
        doc.connections.emplace_back(pc.name, EConnection(doc.algebroid, scope_.gens, std::move(pc.gamma)));
    return doc;
}

Poly Parser::lone_poly(const std::vector<std::string>& vars) {
    scope_.vars = vars;
    const SourcePos at = peek().pos;
    Poly p = as_poly(expr(), at);
    if (peek().kind != Tok::end) fail({"end of input"});
    return p;
}

std::string combo_to_string(const std::vector<Poly>& coeffs, const std::vector<std::string>& names,
                            const std::vector<std::string>& vars) {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Poly& p = coeffs[i];
        if (p.is_zero()) continue;
        std::string coef = p.to_string(vars);
        bool negative = false;
        if (p.size() == 1 && coef.front() == '-') {
            negative = true;
            coef.erase(0, 1);
        }
        std::string term;
        if (coef == "1")
            term = names[i];
        else if (p.size() == 1)
            term = coef + "*" + names[i];
        else
            term = "(" + coef + ")*" + names[i];
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string section_to_string(const Section& s, const std::vector<std::string>& gen_names,
                              const std::vector<std::string>& var_names) {
    return combo_to_string(s.coeffs(), gen_names, var_names);
}

std::string field_to_string(const VectorField& v, const std::vector<std::string>& var_names) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < v.size(); ++i) names.push_back("d" + std::to_string(i + 1));
    return combo_to_string(v.coeffs(), names, var_names);
}

Document parse_document(std::string_view text) { return Parser(text).document(); }

Poly parse_poly(std::string_view text, const std::vector<std::string>& vars) { return Parser(text).lone_poly(vars); }

std::string serialize(const Document& doc) {
    const Algebroid& a = doc.algebroid;
    const auto& vars = a.base().var_names;
    const auto& gens = a.gen_names();
    std::string out;
    out += "base " + std::to_string(vars.size()) + " (" + join(vars, ", ") + ")\n";
    out += "bundle " + doc.bundle_name + " rank " + std::to_string(gens.size()) + " gens (" + join(gens, ", ") + ")\n";
    for (std::size_t i = 0; i < a.rank(); ++i)
        if (!a.anchor_of(i).is_zero()) out += "anchor " + gens[i] + " -> " + field_to_string(a.anchor_of(i), vars) + "\n";
    for (const auto& [ij, s] : a.upper_table())
        out += "bracket [" + gens[ij.first] + ", " + gens[ij.second] + "] = " + section_to_string(s, gens, vars) + "\n";
    for (const auto& [name, s] : doc.sections) out += "section " + name + " = " + section_to_string(s, gens, vars) + "\n";
    if (!doc.kernel.empty()) out += "kernel " + join(doc.kernel, ", ") + "\n";
    for (const auto& [name, e] : doc.endos) {
        out += "endo " + name + " {\n";
        for (std::size_t i = 0; i < e.images.size(); ++i)
            if (!e.images[i].is_zero()) out += "  " + gens[i] + " -> " + section_to_string(e.images[i], gens, vars) + "\n";
        out += "}\n";
    }
    for (const auto& [name, c] : doc.connections) {
        out += "connection " + name + " on " + doc.bundle_name + " {\n";
        for (std::size_t i = 0; i < a.rank(); ++i)
            for (std::size_t j = 0; j < c.target_rank(); ++j)
                if (!c.gamma(i, j).is_zero())
                    out += "  " + gens[i] + " " + gens[j] + " -> " + section_to_string(c.gamma(i, j), gens, vars) + "\n";
        out += "  default 0\n}\n";
    }
    for (const auto& [name, g] : doc.cometrics) {
        out += "cometric " + name + " = [";
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (i) out += "; ";
            for (std::size_t j = 0; j < g.size(); ++j) out += (j ? ", " : "") + g.matrix()[i][j].to_string(vars);
        }
        out += "]\n";
    }
    for (const auto& [name, f] : doc.forms) {
        std::string body = form_to_string(f, gens, vars);
        if (f.is_zero() && f.degree() > 0) {
            body = "0";
            for (unsigned k = 0; k < f.degree(); ++k) body += (k ? "^w(" : "*w(") + gens[k] + ")";
        }
        out += "form " + name + " = " + body + "\n";
    }
    return out;
}

}  // namespace algforge
