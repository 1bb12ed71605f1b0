#include "algforge/commands.hpp"

#include <cctype>

#include "algforge/charclass.hpp"
#include "algforge/dsl.hpp"
#include "algforge/obstruction.hpp"

namespace algforge {

namespace {

const std::vector<std::string>& vars_of(const Document& d) { return d.algebroid.base().var_names; }

std::string gen(const Document& d, std::size_t i) { return d.algebroid.gen_names()[i]; }

std::string pair_name(const Document& d, std::size_t i, std::size_t j) { return gen(d, i) + ", " + gen(d, j); }

Status status_of(Verdict v) {
    switch (v) {
        case Verdict::yes: return Status::pass;
        case Verdict::no: return Status::fail;
        case Verdict::no_witness_within_bound: return Status::inconclusive;
    }
    return Status::fail;
}

const EConnection& need_connection(const Document& d, const std::string& name) {
    if (const EConnection* c = d.connection(name)) return *c;
    throw UsageError("no connection named '" + name + "'");
}

std::string bound_note(unsigned maxdeg) { return "degree bound " + std::to_string(maxdeg); }

}  // namespace

std::string show(const Document& doc, const Section& s) {
    return section_to_string(s, doc.algebroid.gen_names(), vars_of(doc));
}

std::string show(const Document& doc, const VectorField& v) { return field_to_string(v, vars_of(doc)); }

std::string show(const Document& doc, const Form& w) { return form_to_string(w, doc.algebroid.gen_names(), vars_of(doc)); }

std::string show(const Document& doc, const PolyMatrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += "; ";
        for (std::size_t j = 0; j < m[i].size(); ++j) out += (j ? ", " : "") + m[i][j].to_string(vars_of(doc));
    }
    return out + "]";
}

std::string triple_name(const Document& doc, const Triple& t) {
    return "(" + gen(doc, t[0]) + ", " + gen(doc, t[1]) + ", " + gen(doc, t[2]) + ")";
}

Triple parse_triple(const Document& doc, const std::string& text) {
    Triple t{};
    std::size_t count = 0, start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.erase(0, 1);
        while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.pop_back();
        if (count == 3) throw UsageError("a triple has exactly three entries: '" + text + "'");
        if (const auto g = doc.algebroid.gen_index(part)) {
            t[count++] = *g;
        } else if (!part.empty() && part.find_first_not_of("0123456789") == std::string::npos &&
                   part.size() < 10 && std::stoul(part) >= 1 && std::stoul(part) <= doc.algebroid.rank()) {
            t[count++] = std::stoul(part) - 1;
        } else {
            throw UsageError("'" + part + "' is neither a generator nor an index in 1.." +
                             std::to_string(doc.algebroid.rank()));
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (count != 3) throw UsageError("a triple has exactly three entries: '" + text + "'");
    return t;
}

Report cmd_check(const Document& doc) {
    Report r;
    r.command = "check";
    for (const auto& p : check_axioms(doc.algebroid).pairs)
        r.add("anchor compatibility on [" + pair_name(doc, p.i, p.j) + "]", p.defect.is_zero(),
              p.defect.is_zero() ? "" : show(doc, p.defect));
    return r;
}

Report cmd_jacobiator(const Document& doc, const std::vector<Triple>& triples) {
    Report r;
    r.command = "jacobiator";
    const Algebroid& a = doc.algebroid;
    std::vector<Triple> todo = triples;
    if (todo.empty())
        for (std::size_t i = 0; i < a.rank(); ++i)
            for (std::size_t j = i + 1; j < a.rank(); ++j)
                for (std::size_t k = j + 1; k < a.rank(); ++k) todo.push_back({i, j, k});
    for (const auto& t : todo) {
        const Section v = jacobiator(a, a.unit(t[0]), a.unit(t[1]), a.unit(t[2]));
        std::string note;
        if (!v.is_zero())
            note = anchor_apply(a, v).is_zero() ? "value lies in the kernel of the anchor"
                                                : "value is not in the kernel of the anchor";
        r.add("Jacobiator on " + triple_name(doc, t) + " vanishes", v.is_zero(), v.is_zero() ? "" : show(doc, v), note);
    }
    return r;
}

Report cmd_lie(const Document& doc) {
    Report r;
    r.command = "lie";
    const LieReport lie = check_lie(doc.algebroid);
    std::string first;
    for (const auto& p : check_axioms(doc.algebroid).pairs)
        if (!p.defect.is_zero() && first.empty()) first = "[" + pair_name(doc, p.i, p.j) + "]: " + show(doc, p.defect);
    r.add("anchor compatibility on all generator pairs", lie.axioms_ok, first);
    const auto bad = lie.nonzero();
    if (bad.empty()) {
        r.add("Jacobi identity on all " + std::to_string(lie.triples.size()) + " generator triples", true);
        return r;
    }
    for (const auto& t : bad)
        r.add("Jacobi identity on " + triple_name(doc, {t.i, t.j, t.k}), false, show(doc, t.value));
    return r;
}

Report cmd_connection_report(const Document& doc, const std::string& connection) {
    const EConnection& c = need_connection(doc, connection);
    Report r;
    r.command = "connection-report";
    const ConnectionReport cr = connection_report(c);
    for (const auto& t : cr.torsion)
        r.add("torsion T(" + pair_name(doc, t.i, t.j) + ") vanishes", t.value.is_zero(),
              t.value.is_zero() ? "" : show(doc, t.value));
    const Algebroid& a = c.algebroid();
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = i + 1; j < a.rank(); ++j) {
            std::string witness;
            bool in_kernel = true;
            for (const auto& t : cr.curvature) {
                if (t.i != i || t.j != j || t.value.is_zero()) continue;
                if (!witness.empty()) witness += "; ";
                witness += c.target_gens()[t.k] + " -> " + show(doc, t.value);
                if (c.on_self() && !anchor_apply(a, t.value).is_zero()) in_kernel = false;
            }
            if (!c.on_self()) {
                r.add("curvature R(" + pair_name(doc, i, j) + ")", true, witness);
                continue;
            }
            r.add("curvature R(" + pair_name(doc, i, j) + ") takes values in the kernel of the anchor", in_kernel,
                  witness);
        }
    for (const auto& t : cr.bianchi)
        r.add("Bianchi identity on " + triple_name(doc, {t.i, t.j, t.k}), t.value.is_zero(),
              t.value.is_zero() ? "" : show(doc, t.value));
    return r;
}

Report cmd_derive(const Document& doc, const std::string& connection, Document& derived) {
    const EConnection& c = need_connection(doc, connection);
    Report r;
    r.command = "derive";
    if (!c.on_self()) throw UsageError("connection '" + connection + "' is not a connection on the bundle itself");
    bool torsion_free = true;
    std::string witness;
    for (const auto& t : connection_report(c).torsion)
        if (!t.value.is_zero() && torsion_free) {
            torsion_free = false;
            witness = "T(" + pair_name(doc, t.i, t.j) + ") = " + show(doc, t.value);
        }
    r.add("connection '" + connection + "' is torsion-free", torsion_free, witness);
    if (!torsion_free) return r;

    const DerivedBundle d = derive_bundle(c);
    derived = Document{};
    derived.bundle_name = doc.bundle_name + "_derived";
    derived.algebroid = d.derived;
    derived.connections = {{"lifted", d.lifted}, {"plain", d.plain}};

    const LieReport lie = check_lie(d.derived);
    r.add("derived bundle satisfies the anchor axiom", lie.axioms_ok);
    const auto bad = lie.nonzero();
    std::string first;
    if (!bad.empty())
        first = triple_name(derived, {bad[0].i, bad[0].j, bad[0].k}) + ": " + show(derived, bad[0].value);
    r.add("derived bundle satisfies the Jacobi identity on all " + std::to_string(lie.triples.size()) + " triples",
          bad.empty(), first);
    return r;
}

Report cmd_cohomology(const Document& doc, const std::string& form, unsigned maxdeg) {
    const Form* w = doc.form(form);
    if (!w) throw UsageError("no form named '" + form + "'");
    const Algebroid& a = doc.algebroid;
    Report r;
    r.command = "cohomology";
    const Form dw = differential(a, *w);
    r.add("'" + form + "' is closed", dw.is_zero(), dw.is_zero() ? "" : show(doc, dw));

    const StrongClosed sc = strong_closed(a, *w, maxdeg);
    r.checks.push_back({"'" + form + "' is strong closed", status_of(sc.verdict),
                        sc.verdict == Verdict::yes ? "theta = " + show(doc, sc.theta) : "", bound_note(maxdeg)});
    const Lambda2Membership wc = weak_closed(a, *w, maxdeg);
    r.checks.push_back({"'" + form + "' is weak closed", status_of(wc.verdict), "", bound_note(maxdeg)});
    const WeakExact we = weak_exact(a, *w, maxdeg);
    std::string witness;
    if (we.verdict == Verdict::yes)
        witness = "theta = " + show(doc, we.theta) +
                  "; ideal part = " + show(doc, ideal_element(a, lambda2_basis(a), we.ideal));
    r.checks.push_back({"'" + form + "' is weak exact", status_of(we.verdict), witness, bound_note(maxdeg)});
    return r;
}

Report cmd_charclass(const Document& doc, const std::string& connection, unsigned max_k, unsigned maxdeg) {
    const EConnection& c = need_connection(doc, connection);
    if (!c.on_self()) throw UsageError("connection '" + connection + "' is not a connection on the bundle itself");
    const Algebroid& a = doc.algebroid;
    Report r;
    r.command = "charclass";
    r.add("Cartan structure equation", cartan_residual(c).is_zero());
    r.add("differentiated Cartan equation", dR_residual(c).is_zero());
    for (unsigned k = 1; k <= max_k; ++k) {
        const Form f = char_form(c, k);
        const std::string name = "Tr R^" + std::to_string(k);
        const std::string shown = name + " = " + show(doc, f);
        if (k == 1) {
            const StrongClosed sc = strong_closed(a, f, maxdeg);
            r.checks.push_back({name + " is strong closed", status_of(sc.verdict),
                                shown + (sc.verdict == Verdict::yes ? "; theta = " + show(doc, sc.theta) : ""),
                                bound_note(maxdeg)});
        }
        const Lambda2Membership wc = weak_closed(a, f, maxdeg);
        r.checks.push_back({name + " is weak closed", status_of(wc.verdict), shown, bound_note(maxdeg)});
    }
    return r;
}

Report cmd_transgression(const Document& doc, const std::string& c1, const std::string& c2, unsigned k,
                         unsigned maxdeg) {
    const EConnection& a = need_connection(doc, c1);
    const EConnection& b = need_connection(doc, c2);
    if (!a.on_self() || !b.on_self()) throw UsageError("transgression needs connections on the bundle itself");
    if (k == 0) throw UsageError("--k must be at least 1");
    Report r;
    r.command = "transgression";
    const TransgressionReport t = transgression_check(a, b, k, maxdeg);
    const std::string name = "Tr R^" + std::to_string(k);
    r.add("interpolated connection restricts to '" + c1 + "' and '" + c2 + "' at the ends", t.endpoints_ok);
    r.add(name + "('" + c2 + "') - " + name + "('" + c1 + "') = d theta + ideal part", t.residual.is_zero(),
          "theta = " + show(doc, t.theta) + "; ideal part = " + show(doc, t.ideal_part),
          t.residual.is_zero() ? "" : "residual " + show(doc, t.residual));
    r.checks.push_back({"ideal part lies in the ideal generated by d^2 of 1-forms", status_of(t.membership.verdict), "",
                        bound_note(maxdeg)});
    return r;
}

Report cmd_courant(const Document& doc, unsigned maxdeg) {
    const Algebroid& a = doc.algebroid;
    Report r;
    r.command = "courant";
    for (const auto& [name, g] : doc.cometrics) {
        const PolyMatrix defect = courant_defect(a, g);
        bool zero = true;
        for (const auto& row : defect)
            for (const auto& p : row) zero = zero && p.is_zero();
        r.add("cometric '" + name + "' satisfies the Courant condition", zero, zero ? "" : show(doc, defect));
    }
    const std::vector<Scalar> origin(a.nvars(), Scalar(0));
    for (auto ansatz : {CometricAnsatz::symmetric, CometricAnsatz::block_symmetric}) {
        if (ansatz == CometricAnsatz::block_symmetric && (a.nvars() == 0 || a.rank() % a.nvars() != 0)) continue;
        const CourantSolutions s = courant_solution_space(a, maxdeg, origin, ansatz);
        const std::string label = ansatz == CometricAnsatz::symmetric ? "symmetric" : "block-symmetric";
        const std::string note = label + " cometrics, " + bound_note(maxdeg) + ", solution space dimension " +
                                 std::to_string(s.basis.size()) + ", " + std::to_string(s.nonzero_at_point) +
                                 " basis elements nonzero at the origin";
        r.add("no " + label + " Courant cometric is invertible at the origin", !s.nondegenerate,
              s.nondegenerate ? show(doc, s.nondegenerate->matrix()) : "", note);
    }
    return r;
}

Report cmd_nijenhuis(const Document& doc, const std::string& endo) {
    const Endomorphism* j = doc.endo(endo);
    if (!j) throw UsageError("no endomorphism named '" + endo + "'");
    const Algebroid& a = doc.algebroid;
    Report r;
    r.command = "nijenhuis";
    const bool complex = is_almost_complex(*j);
    r.add("'" + endo + "' squares to minus the identity", complex);
    if (!complex) return r;
    for (std::size_t p = 0; p < a.rank(); ++p)
        for (std::size_t q = p + 1; q < a.rank(); ++q) {
            const Section n = nijenhuis(a, *j, a.unit(p), a.unit(q));
            r.add("Nijenhuis tensor on (" + pair_name(doc, p, q) + ") vanishes", n.is_zero(),
                  n.is_zero() ? "" : show(doc, n));
        }
    return r;
}

Report cmd_obstruction(const Document& doc, const Triple& triple, unsigned maxdeg) {
    const Algebroid& a = doc.algebroid;
    if (doc.kernel.empty()) throw UsageError("the document declares no kernel sections");
    Report r;
    r.command = "obstruction";
    const InfeasibilityCertificate c = lie_infeasibility_certificate(a, doc.kernel_sections(), triple, maxdeg);
    std::string note = std::to_string(c.parameters) + " parameters, " + bound_note(maxdeg);
    std::string witness;
    if (c.status != CertificateStatus::trivially_feasible) {
        witness = "J = " + show(doc, c.jacobiator) + "; lowest part = " + show(doc, c.lowest_part);
        note += ", Jacobiator starts in degree " + std::to_string(c.jacobiator_min_degree) +
                ", modifier terms start in degree " +
                (c.modifier_min_degree < 0 ? std::string("none") : std::to_string(c.modifier_min_degree));
    }
    const Status st = c.status == CertificateStatus::infeasible     ? Status::pass
                      : c.status == CertificateStatus::inconclusive ? Status::inconclusive
                                                                    : Status::fail;
    r.checks.push_back({"no kernel-valued bracket modification of degree <= " + std::to_string(maxdeg) +
                            " kills the Jacobiator on " + triple_name(doc, triple),
                        st, witness, note + " (" + to_string(c.status) + ")"});
    r.add("modified Jacobiator agrees with the expanded modifier terms", c.cross_check);
    return r;
}

}  // namespace algforge
