#include "algforge/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace algforge {

std::string scalar_to_string(const Scalar& s) { return s.get_str(); }

unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) return da < db;
    // equal degree: the monomial with the larger leading exponent is greater
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool divides(const Monomial& divisor, const Monomial& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (divisor[i] > m[i]) return false;
    return true;
}

namespace {

void enumerate(std::size_t nvars, unsigned remaining, std::size_t pos, Monomial& cur,
               std::vector<Monomial>& out) {
    if (pos == nvars) {
        out.push_back(cur);
        return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
        cur[pos] = e;
        enumerate(nvars, remaining - e, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned maxdeg) {
    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    enumerate(nvars, maxdeg, 0, cur, out);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

Poly Poly::constant(std::size_t nvars, const Scalar& c) {
    Poly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw ShapeError("variable index out of range");
    Monomial m(nvars, 0);
    m[index] = 1;
    return term(std::move(m), Scalar(1));
}

Poly Poly::term(Monomial m, const Scalar& c) {
    Poly p(m.size());
    p.add_term(m, c);
    return p;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.rbegin()->first));
}

int Poly::min_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.begin()->first));
}

int Poly::min_degree_in(std::size_t nbase) const {
    int best = -1;
    for (const auto& [m, c] : terms_) {
        const int d = static_cast<int>(
            std::accumulate(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(std::min(nbase, m.size())), 0u));
        if (best < 0 || d < best) best = d;
    }
    return best;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && degree() == 0); }

Scalar Poly::constant_term() const { return coefficient(Monomial(nvars_, 0)); }

Scalar Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (m.size() != nvars_) throw ShapeError("monomial length does not match variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::check_same(const Poly& o) const {
    if (nvars_ != o.nvars_)
        throw ShapeError("polynomial variable counts differ (" + std::to_string(nvars_) + " vs " +
                         std::to_string(o.nvars_) + ")");
}

Poly& Poly::operator+=(const Poly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same(b);
    Poly r(a.nvars_);
    Monomial m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

Poly Poly::pow(unsigned e) const {
    Poly r = constant(nvars_, 1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

Poly Poly::partial(std::size_t var) const {
    if (var >= nvars_) throw ShapeError("partial: variable index out of range");
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * m[var]);
    }
    return r;
}

Poly Poly::integrate_unit(std::size_t var) const {
    if (var >= nvars_) throw ShapeError("integrate_unit: variable index out of range");
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        Monomial d = m;
        d[var] = 0;
        r.add_term(d, c / Scalar(m[var] + 1));
    }
    return r;
}

Scalar Poly::eval(std::span<const Scalar> point) const {
    if (point.size() != nvars_) throw ShapeError("eval: point length does not match variable count");
    Scalar total = 0;
    for (const auto& [m, c] : terms_) {
        Scalar v = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned e = 0; e < m[i]; ++e) v *= point[i];
        total += v;
    }
    return total;
}

Poly Poly::substitute(std::size_t var, const Scalar& value) const {
    if (var >= nvars_) throw ShapeError("substitute: variable index out of range");
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        Scalar v = c;
        for (unsigned e = 0; e < m[var]; ++e) v *= value;
        Monomial d = m;
        d[var] = 0;
        r.add_term(d, v);
    }
    return r;
}

Poly Poly::eliminate(std::size_t var, const Scalar& value) const {
    const Poly s = substitute(var, value);
    Poly r(nvars_ - 1);
    for (const auto& [m, c] : s.terms_) {
        Monomial d;
        d.reserve(nvars_ - 1);
        for (std::size_t i = 0; i < nvars_; ++i)
            if (i != var) d.push_back(m[i]);
        r.add_term(d, c);
    }
    return r;
}

Poly Poly::extend(std::size_t nvars) const {
    if (nvars < nvars_) throw ShapeError("extend: cannot shrink the variable count");
    Poly r(nvars);
    for (const auto& [m, c] : terms_) {
        Monomial d = m;
        d.resize(nvars, 0);
        r.terms_.emplace(std::move(d), c);
    }
    return r;
}

Poly Poly::homogeneous_part(unsigned d, std::size_t nbase) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        unsigned deg = 0;
        for (std::size_t i = 0; i < std::min(nbase, m.size()); ++i) deg += m[i];
        if (deg == d) r.terms_.emplace(m, c);
    }
    return r;
}

namespace {

std::string monomial_to_string(const Monomial& m, std::span<const std::string> names) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out;
}

}  // namespace

std::string Poly::to_string(std::span<const std::string> var_names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool neg = c < 0;
        const Scalar mag = neg ? Scalar(-c) : c;
        if (first) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        const std::string mono = monomial_to_string(m, var_names);
        if (mono.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.get_str() + '*' + mono;
        }
    }
    return out;
}

std::vector<std::string> default_var_names(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i + 1));
    return v;
}

}  // namespace algforge
