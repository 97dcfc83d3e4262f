#pragma once

// Exact combinatorics of the compact groups that occur as K and M in the
// catalog: products of circle groups, Z/2, SU(2) and SO(3).

#include "tempiric/errors.hpp"
#include "tempiric/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tempiric {

enum class Atom { Torus1, Cyclic2, SU2, SO3 };

std::string_view atom_name(Atom a);
/// Inverse of atom_name; throws ParseError.
Atom parse_atom(std::string_view name);

/// A compact group presented as an ordered product of atoms.
class CompactGroup {
  public:
    explicit CompactGroup(std::vector<Atom> atoms);

    const std::vector<Atom> &atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    /// Number of lattice coordinates (Torus1, SU2 and SO3 atoms).
    std::size_t lattice_dim() const { return lattice_dim_; }
    /// Number of Z/2 labels (Cyclic2 atoms).
    std::size_t parity_dim() const { return atoms_.size() - lattice_dim_; }

    bool operator==(const CompactGroup &) const = default;

  private:
    std::vector<Atom> atoms_;
    std::size_t lattice_dim_ = 0;
};

/// Label of an irreducible representation: one entry per atom.
/// Torus1: character n; Cyclic2: bit; SU2: a >= 0 (dimension a+1);
/// SO3: j >= 0 (dimension 2j+1).
struct IrrepLabel {
    std::vector<int> parts;

    auto operator<=>(const IrrepLabel &) const = default;
};

using KTypeLabel = IrrepLabel;
using MTypeLabel = IrrepLabel;

/// Weight in the group's coordinate system. Lattice coordinates for the
/// continuous atoms, one bit per Cyclic2 atom.
struct WeightVec {
    std::vector<int> coords;
    std::vector<int> parity;

    auto operator<=>(const WeightVec &) const = default;
};

/// Element of a free abelian group on an ordered key set.
/// Zero coefficients are never stored.
template <class Key> class FormalSum {
  public:
    using map_type = std::map<Key, long long>;
    using const_iterator = typename map_type::const_iterator;

    FormalSum() = default;
    FormalSum(std::initializer_list<std::pair<const Key, long long>> init) {
        for (const auto &[k, m] : init)
            add(k, m);
    }

    void add(const Key &key, long long mult) {
        if (mult == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(key, mult);
        if (!inserted) {
            it->second += mult;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    void add(const FormalSum &other, long long scale = 1) {
        for (const auto &[k, m] : other.terms_)
            add(k, m * scale);
    }

    long long coefficient(const Key &key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? 0 : it->second;
    }

    FormalSum scaled(long long factor) const {
        FormalSum out;
        out.add(*this, factor);
        return out;
    }

    friend FormalSum operator+(FormalSum a, const FormalSum &b) {
        a.add(b);
        return a;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const map_type &terms() const { return terms_; }

    bool operator==(const FormalSum &) const = default;

  private:
    map_type terms_;
};

/// Quadratic form used for minimal K-type ordering:
/// |mu|^2 = (mu + 2 rho_c)^T gram (mu + 2 rho_c).
struct NormForm {
    std::vector<std::vector<Rational>> gram;
    std::vector<int> two_rho_c;

    bool operator==(const NormForm &) const = default;
};

/// Throws LabelError unless `label` is a valid irreducible label for `g`.
void validate_label(const CompactGroup &g, const IrrepLabel &label);

long long weyl_dim(const CompactGroup &g, const IrrepLabel &label);

/// Full weight multiset, sorted; its size is weyl_dim.
std::vector<WeightVec> weights_of(const CompactGroup &g,
                                  const IrrepLabel &label);

/// Label of the contragredient representation (Torus1 characters negate).
IrrepLabel dual(const CompactGroup &g, const IrrepLabel &label);

IrrepLabel trivial_label(const CompactGroup &g);

FormalSum<IrrepLabel> tensor_decompose(const CompactGroup &g,
                                       const IrrepLabel &a,
                                       const IrrepLabel &b);

/// dim Hom_G(V1, V2), computed as the multiplicity of the trivial
/// representation in V1* (x) V2. Throws ValidationError on negative
/// multiplicities.
long long hom_invariant_dim(const CompactGroup &g,
                            const FormalSum<IrrepLabel> &v1,
                            const FormalSum<IrrepLabel> &v2);

/// Highest weight in lattice coordinates (Cyclic2 bits dropped).
std::vector<int> highest_weight(const CompactGroup &g, const IrrepLabel &label);

/// Inverse of highest_weight with all Cyclic2 bits zero. Throws LabelError
/// if the coordinates are not dominant.
IrrepLabel label_from_highest_weight(const CompactGroup &g,
                                     const std::vector<int> &coords);

/// Throws ValidationError if the form is not symmetric positive-definite or
/// sized inconsistently with `g`.
void validate_norm_form(const CompactGroup &g, const NormForm &form);

Rational vogan_norm(const CompactGroup &g, const NormForm &form,
                    const IrrepLabel &label);

/// All labels with norm <= bound, sorted by (norm, label).
std::vector<IrrepLabel> enumerate_by_norm(const CompactGroup &g,
                                          const NormForm &form,
                                          const Rational &bound);

/// "3" for single-atom groups, "(1,0)" otherwise.
std::string to_string(const IrrepLabel &label);
std::string to_string(const std::vector<int> &coords);

/// x^T gram y over the rationals.
Rational pairing(const std::vector<std::vector<Rational>> &gram,
                 const std::vector<int> &x, const std::vector<int> &y);

} // namespace tempiric
