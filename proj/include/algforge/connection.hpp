#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "algforge/algebroid.hpp"

namespace algforge {

/// Linear E-connection on a trivial bundle A, fixed by the values
/// gamma(beta, b) = nabla_{e_beta} a_b and extended by the Koszul rules.
class EConnection {
public:
    EConnection() = default;
    EConnection(Algebroid e, std::vector<std::string> target_gens, std::vector<Section> gamma);

    /// All gamma zero, on the bundle E itself.
    static EConnection flat(const Algebroid& e);
    /// All gamma zero, on a bundle with the given generators.
    static EConnection flat(const Algebroid& e, std::vector<std::string> target_gens);

    const Algebroid& algebroid() const { return e_; }
    std::size_t target_rank() const { return target_.size(); }
    const std::vector<std::string>& target_gens() const { return target_; }
    /// Target bundle is E, so torsion makes sense.
    bool on_self() const { return target_ == e_.gen_names(); }

    const Section& gamma(std::size_t beta, std::size_t b) const { return gamma_[beta * target_.size() + b]; }
    const std::vector<Section>& gamma_table() const { return gamma_; }

    Section target_zero() const { return Section(target_rank(), e_.nvars()); }
    Section target_unit(std::size_t b) const { return Section::unit(target_rank(), e_.nvars(), b); }

    friend bool operator==(const EConnection&, const EConnection&) = default;

private:
    Algebroid e_;
    std::vector<std::string> target_;
    std::vector<Section> gamma_;
};

Section covariant_derivative(const EConnection& c, const Section& x, const Section& s);
/// T(X,Y) = nabla_X Y - nabla_Y X - [X,Y]
Section torsion(const EConnection& c, const Section& x, const Section& y);
/// R(X,Y)s = nabla_X nabla_Y s - nabla_Y nabla_X s - nabla_[X,Y] s
Section curvature(const EConnection& c, const Section& x, const Section& y, const Section& s);
/// Cyclic sum of R(X,Y)Z minus the torsion and Jacobiator terms of the first Bianchi identity.
Section bianchi_defect(const EConnection& c, const Section& x, const Section& y, const Section& z);

/// E-connection on TM given by nabla_X s = D_{rho(X)} s, with D a connection
/// of the tangent algebroid on itself.
EConnection induced_connection(const Algebroid& a, const EConnection& base);

struct ConnectionReport {
    struct Pair {
        std::size_t i = 0, j = 0;
        Section value;
    };
    struct Triple {
        std::size_t i = 0, j = 0, k = 0;
        Section value;
    };
    std::vector<Pair> torsion;       // empty unless the connection is on E
    std::vector<Triple> curvature;   // R(e_i, e_j) a_k for i < j, all k
    std::vector<Triple> bianchi;     // i < j < k, empty unless on E
    bool curvature_in_kernel = true; // only meaningful when on E
};

ConnectionReport connection_report(const EConnection& c);

/// E plus E^E with the lifted torsion-free connection and its bracket.
struct DerivedBundle {
    Algebroid base_algebroid;
    EConnection base_connection;
    Algebroid derived;
    /// Lift with the half wedge correction on E-arguments.
    EConnection lifted;
    /// Same lift without the correction term.
    EConnection plain;
    std::vector<std::pair<std::size_t, std::size_t>> wedge_pairs;

    std::size_t wedge_index(std::size_t i, std::size_t j) const;
    /// Y ^ Z for sections supported on the E part; throws otherwise.
    Section wedge(const Section& y, const Section& z) const;
};

std::string wedge_gen_name(const std::string& a, const std::string& b);

DerivedBundle derive_bundle(const EConnection& c);

struct DerivedIdentity {
    int item = 0;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string first_failure;
};

std::vector<DerivedIdentity> check_derived_identities(const DerivedBundle& d);

}  // namespace algforge
