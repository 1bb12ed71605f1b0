#include "algforge/builtins.hpp"

namespace algforge {

std::vector<Section> Document::kernel_sections() const {
    std::vector<Section> out;
    for (const auto& n : kernel) {
        if (const Section* s = section(n))
            out.push_back(*s);
        else if (const auto g = algebroid.gen_index(n))
            out.push_back(algebroid.unit(*g));
        else
            throw Error("kernel refers to unknown section '" + n + "'");
    }
    return out;
}

namespace {

constexpr std::size_t kVars = 2;

Poly var(std::size_t i) { return Poly::variable(kVars, i); }
Poly num(long c) { return Poly::constant(kVars, c); }
Poly sq(std::size_t i) { return var(i) * var(i); }

BaseSpace plane() { return BaseSpace{{"x1", "x2"}}; }

VectorField field(const Poly& a, const Poly& b) { return VectorField(kVars, {a, b}); }

Section combo(std::size_t rank, std::initializer_list<std::pair<std::size_t, Poly>> terms) {
    Section s(rank, kVars);
    for (const auto& [i, p] : terms) s[i] += p;
    return s;
}

// X_j^i with 1-based i (upper) and j (lower); frame order X11, X21, X12, X22
std::size_t e0_index(std::size_t i, std::size_t j) { return (i - 1) * 2 + (j - 1); }

Algebroid e0_algebroid() {
    std::vector<VectorField> anchor(4);
    for (std::size_t i = 1; i <= 2; ++i)
        for (std::size_t j = 1; j <= 2; ++j) {
            VectorField v(kVars, kVars);
            v[j - 1] = sq(i - 1);
            anchor[e0_index(i, j)] = v;
        }
    std::vector<Section> full(16, Section(4, kVars));
    for (std::size_t i = 1; i <= 2; ++i)
        for (std::size_t j = 1; j <= 2; ++j)
            for (std::size_t k = 1; k <= 2; ++k)
                for (std::size_t l = 1; l <= 2; ++l) {
                    Section s(4, kVars);
                    if (j == k) s[e0_index(i, l)] += 2 * var(k - 1);
                    if (l == i) s[e0_index(k, j)] -= 2 * var(i - 1);
                    full[e0_index(i, j) * 4 + e0_index(k, l)] = s;
                }
    StructureTable t;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b)
            if (!full[a * 4 + b].is_zero()) t.emplace(std::pair{a, b}, full[a * 4 + b]);
    return Algebroid(plane(), {"X11", "X21", "X12", "X22"}, anchor, t);
}

EConnection e0_torsion_free(const Algebroid& e0) {
    std::vector<Section> g(16, Section(4, kVars));
    for (std::size_t i = 1; i <= 2; ++i)
        for (std::size_t j = 1; j <= 2; ++j)
            for (std::size_t k = 1; k <= 2; ++k)
                for (std::size_t l = 1; l <= 2; ++l)
                    if (j == k) g[e0_index(i, j) * 4 + e0_index(k, l)][e0_index(i, l)] += 2 * var(k - 1);
    return EConnection(e0, e0.gen_names(), std::move(g));
}

Document e0_document() {
    Document d;
    d.bundle_name = "E0";
    d.algebroid = e0_algebroid();
    d.sections = {
        {"K1", combo(4, {{0, sq(1)}, {2, -sq(0)}})},
        {"K2", combo(4, {{1, sq(1)}, {3, -sq(0)}})},
        {"A1", combo(4, {{0, num(1)}, {2, num(1)}})},
        {"B1", combo(4, {{1, num(1)}, {3, num(1)}})},
    };
    d.kernel = {"K1", "K2"};
    Endomorphism j;
    j.images = {combo(4, {{1, num(-1)}}), combo(4, {{0, num(1)}}), combo(4, {{3, num(-1)}}), combo(4, {{2, num(1)}})};
    d.endos = {{"J", j}};
    d.connections = {{"flat", EConnection::flat(d.algebroid)}, {"torsion_free", e0_torsion_free(d.algebroid)}};
    PolyMatrix id(4, std::vector<Poly>(4, Poly(kVars)));
    for (std::size_t i = 0; i < 4; ++i) id[i][i] = num(1);
    d.cometrics = {{"identity", CoMetric(id)}};
    d.forms = {{"w21", Form::dual(4, kVars, 1)}};
    return d;
}

Document e0prime_document(bool lie) {
    Document d;
    d.bundle_name = lie ? "E0prime_lie" : "E0prime";
    std::vector<VectorField> anchor = {field(sq(0), num(0)), field(num(0), sq(1)), field(num(0), num(0)),
                                       field(num(0), num(0))};
    StructureTable t;
    t.emplace(std::pair{0, 3}, combo(4, {{3, 2 * var(0)}}));
    t.emplace(std::pair{1, 2}, combo(4, {{2, 2 * var(1)}}));
    if (!lie) t.emplace(std::pair{2, 3}, combo(4, {{2, 2 * sq(0) * var(1)}, {3, 2 * var(0) * sq(1)}}));
    d.algebroid = Algebroid(plane(), {"Y11", "Y22", "Yc1", "Yc2"}, anchor, t);
    d.kernel = {"Yc1", "Yc2"};
    d.connections = {{"flat", EConnection::flat(d.algebroid)}};
    return d;
}

Poly radius() { return sq(0) + sq(1); }

Document e0doubleprime_document() {
    Document d;
    d.bundle_name = "E0doubleprime";
    StructureTable t;
    t.emplace(std::pair{0, 1}, combo(2, {{0, -2 * var(1)}, {1, 2 * var(0)}}));
    d.algebroid = Algebroid(plane(), {"A1", "B1"}, {field(radius(), num(0)), field(num(0), radius())}, t);
    d.connections = {{"flat", EConnection::flat(d.algebroid)}};
    return d;
}

Document e00_document() {
    Document d;
    d.bundle_name = "E00";
    StructureTable t;
    t.emplace(std::pair{0, 1}, combo(4, {{0, -2 * var(1)}, {1, 2 * var(0)}}));
    d.algebroid = Algebroid(plane(), {"A1p", "A2p", "K1p", "K2p"},
                            {field(radius(), num(0)), field(num(0), radius()), field(num(0), num(0)),
                             field(num(0), num(0))},
                            t);
    d.kernel = {"K1p", "K2p"};
    d.connections = {{"flat", EConnection::flat(d.algebroid)}};
    return d;
}

Document e0_restriction(const std::string& name, std::vector<std::size_t> idx) {
    const Algebroid e0 = e0_algebroid();
    std::vector<Section> gens;
    std::vector<std::string> names;
    for (auto i : idx) {
        gens.push_back(e0.unit(i));
        names.push_back(e0.gen_names()[i]);
    }
    SubalgebroidResult r = subalgebroid_restrict(e0, gens, names, 2);
    if (!r.closed) throw Error("restriction " + name + " is not closed");
    Document d;
    d.bundle_name = name;
    d.algebroid = *r.algebroid;
    d.connections = {{"flat", EConnection::flat(d.algebroid)}};
    return d;
}

}  // namespace

Algebroid tangent_algebroid(std::size_t n) {
    BaseSpace b{default_var_names(n)};
    std::vector<std::string> gens;
    std::vector<VectorField> anchor;
    for (std::size_t i = 0; i < n; ++i) {
        gens.push_back("D" + std::to_string(i + 1));
        VectorField v(n, n);
        v[i] = Poly::constant(n, 1);
        anchor.push_back(std::move(v));
    }
    return Algebroid(b, gens, anchor, {});
}

Document builtin(const std::string& name) {
    if (name == "E0") return e0_document();
    if (name == "E0prime") return e0prime_document(false);
    if (name == "E0prime_lie") return e0prime_document(true);
    if (name == "E0doubleprime") return e0doubleprime_document();
    if (name == "E00") return e00_document();
    if (name == "E01") return e0_restriction("E01", {0, 1, 3});
    if (name == "E02") return e0_restriction("E02", {0, 2, 3});
    const std::string prefix = "tangent(";
    if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size() + 1 && name.back() == ')') {
        const std::string digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
        if (!digits.empty() && digits.size() < 3 && digits.find_first_not_of("0123456789") == std::string::npos) {
            const std::size_t n = std::stoul(digits);
            if (n >= 1 && n <= 16) {
                Document d;
                d.bundle_name = "T" + digits;
                d.algebroid = tangent_algebroid(n);
                d.connections = {{"flat", EConnection::flat(d.algebroid)}};
                return d;
            }
        }
    }
    throw Error("unknown built-in '" + name + "'");
}

std::vector<std::string> builtin_names() {
    return {"E0", "E0prime", "E0prime_lie", "E0doubleprime", "E00", "E01", "E02", "tangent(2)"};
}

Algebroid e0_itemized_variant() {
    const Algebroid e0 = e0_algebroid();
    StructureTable t = e0.upper_table();
    t[{0, 1}] = combo(4, {{1, 2 * var(1)}});
    return Algebroid(e0.base(), e0.gen_names(), e0.anchor(), t);
}

BundleMap e0_morphism_f0() {
    BundleMap f;
    f.images = {combo(4, {{0, num(1)}}), combo(4, {{3, num(1)}}), combo(4, {{0, sq(1)}, {2, -sq(0)}}),
                combo(4, {{1, sq(1)}, {3, -sq(0)}})};
    return f;
}

}  // namespace algforge
