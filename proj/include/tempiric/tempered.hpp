#pragma once

// Tempered-dual bookkeeping at continuous parameter zero: principal series
// classes, their minimal K-types and constituents, and the discrete series
// with Blattner multiplicities.

#include "tempiric/branching.hpp"

#include <compare>
#include <string>
#include <variant>
#include <vector>

namespace tempiric {

/// Associate class {sigma, w sigma} of the minimal parabolic. The
/// continuous parameter is fixed at nu = 0.
struct PrincipalClass {
    std::vector<MTypeLabel> orbit; // sorted, size 1 or 2
    int w_sigma_order = 2;         // |W_sigma|; 2 iff orbit is a singleton
    int a_dim = 1;

    const MTypeLabel &representative() const { return orbit.front(); }
    auto operator<=>(const PrincipalClass &) const = default;
};

struct DiscreteSeriesRep {
    std::vector<int> hc_param; // Harish-Chandra parameter lambda
    KTypeLabel blattner;       // Lambda = lambda + rho_n - rho_c

    auto operator<=>(const DiscreteSeriesRep &) const = default;
};

struct PrincipalConstituent {
    PrincipalClass cls;
    KTypeLabel minimal_ktype;
    bool split = false;

    auto operator<=>(const PrincipalConstituent &) const = default;
};

struct TempiricRep {
    std::variant<DiscreteSeriesRep, PrincipalConstituent> kind;

    bool is_discrete() const {
        return std::holds_alternative<DiscreteSeriesRep>(kind);
    }
    const DiscreteSeriesRep &discrete() const {
        return std::get<DiscreteSeriesRep>(kind);
    }
    const PrincipalConstituent &principal() const {
        return std::get<PrincipalConstituent>(kind);
    }
    const KTypeLabel &minimal_ktype() const;

    auto operator<=>(const TempiricRep &) const = default;
};

std::string describe(const PrincipalClass &cls);
/// Stable human-readable identifier, e.g. "DS(lambda=(2,1))" or
/// "PS(sigma={1},min=(1,0))".
std::string describe(const TempiricRep &rep);

/// Orbits {sigma, w sigma} over the support of the window K-types, in order
/// of first appearance while scanning the window.
std::vector<PrincipalClass> principal_classes(const GroupDatum &datum,
                                              const std::vector<KTypeLabel> &kwindow);

PrincipalClass principal_class_of(const GroupDatum &datum,
                                  const MTypeLabel &sigma);

/// Multiplicity of tau in Ind(sigma, 0), via Frobenius reciprocity.
long long induced_ktype_mult(const GroupDatum &datum, const PrincipalClass &cls,
                             const KTypeLabel &tau);

/// The K-types of Ind(sigma, 0) of least Vogan norm, sorted. The sweep is
/// exhaustive below the minimum. Throws InternalError if nothing is found
/// below the sweep ceiling or a minimum has multiplicity other than one.
std::vector<KTypeLabel> minimal_ktypes(const GroupDatum &datum,
                                       const PrincipalClass &cls);

/// One constituent per minimal K-type. Throws InternalError for more than
/// two minimal K-types.
std::vector<TempiricRep> constituents(const GroupDatum &datum,
                                      const PrincipalClass &cls);

/// Discrete series with Blattner parameter of norm <= bound, one per
/// W_K-orbit, sorted by (norm, Lambda). Throws DomainError for unequal rank.
std::vector<TempiricRep> ds_enumerate(const GroupDatum &datum,
                                      const Rational &bound);

/// Discrete series with the given Harish-Chandra parameter.
/// Throws DomainError if lambda is singular or not K-dominant.
TempiricRep discrete_series(const GroupDatum &datum,
                            const std::vector<int> &lambda);

/// Number of ways to write v as a nonnegative integer combination of
/// `roots`. `functional` must pair strictly positively with every root.
long long partition_count(const std::vector<std::vector<int>> &roots,
                          const std::vector<int> &functional,
                          const std::vector<int> &v);

/// Blattner multiplicity of tau in the discrete series `ds`.
long long blattner_mult(const GroupDatum &datum, const TempiricRep &ds,
                        const KTypeLabel &tau);

/// Discrete series and principal series constituents whose minimal K-type
/// has norm <= bound, sorted by (norm, minimal K-type).
std::vector<TempiricRep> tempiric_window(const GroupDatum &datum,
                                         const Rational &bound);

} // namespace tempiric
