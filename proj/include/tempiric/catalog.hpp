#pragma once

// Catalog of rank-one groups: structure data for K, M, the restriction rule
// K -> M, the minimal K-type norm, and discrete series data when
// rank G = rank K.

#include "tempiric/weights.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tempiric {

using Json = nlohmann::ordered_json;
using IntMatrix = std::vector<std::vector<long long>>;

enum class BranchingKind {
    Parity,           // Torus1 -> Cyclic2
    TorusRestriction, // SO3 -> Torus1
    ClebschDiagonal,  // SU2 x SU2 -> diagonal SU2
};

std::string_view branching_name(BranchingKind k);
BranchingKind parse_branching(std::string_view name);

struct BranchingRule {
    BranchingKind kind;

    bool operator==(const BranchingRule &) const = default;
};

/// Throws ValidationError unless K and M have the atom shapes the rule
/// template expects.
void validate_branching(const BranchingRule &rule, const CompactGroup &k,
                        const CompactGroup &m);

/// Action of the nontrivial restricted Weyl element on M-hat, as an
/// integer matrix on M lattice coordinates.
struct WeylAction {
    std::string rule; // "identity", "negate-torus" or "matrix"
    std::vector<std::vector<int>> matrix;

    bool operator==(const WeylAction &) const = default;
};

WeylAction weyl_action_from_rule(std::string_view rule, const CompactGroup &m);

struct WeylElement {
    std::vector<std::vector<int>> matrix;
    int det = 1;

    bool operator==(const WeylElement &) const = default;
};

/// Per-chamber constants in doubled coordinates so that everything stays
/// integral. A chamber is identified by the set of noncompact roots that
/// are positive on its sample parameter.
struct Chamber {
    std::vector<int> sample;
    std::vector<int> two_rho_c;
    std::vector<int> two_rho_n;
    std::vector<int> two_rho;

    bool operator==(const Chamber &) const = default;
};

struct DiscreteSeriesDatum {
    std::vector<std::vector<int>> compact_roots;
    std::vector<std::vector<int>> noncompact_roots;
    std::vector<WeylElement> wk_elements;
    std::vector<Chamber> chambers;

    bool operator==(const DiscreteSeriesDatum &) const = default;
};

struct GroupDatum {
    std::string name;
    CompactGroup k;
    CompactGroup m;
    BranchingRule branching;
    NormForm norm;
    WeylAction weyl_on_mhat;
    bool equal_rank = false;
    std::optional<DiscreteSeriesDatum> ds;
    // dim a for the minimal parabolic block; the G-block has dim 0.
    int a_dim = 1;

    bool operator==(const GroupDatum &) const = default;
};

std::vector<std::string> builtin_names();

/// One of "SL2R", "SO31", "Sp11". Throws ValidationError otherwise.
GroupDatum builtin(std::string_view name);

/// Parses and validates a group definition document.
/// Throws ParseError or ValidationError with a field-level message.
GroupDatum load(std::string_view text);
GroupDatum load_file(const std::string &path);

Json to_json(const GroupDatum &datum);
std::string serialize(const GroupDatum &datum);

/// Checks every type invariant; throws ValidationError.
void validate(const GroupDatum &datum);

// Convenience wrappers over the weights module.
Rational vogan_norm(const GroupDatum &datum, const KTypeLabel &tau);
std::vector<KTypeLabel> enumerate_ktypes(const GroupDatum &datum,
                                         const Rational &bound);

MTypeLabel weyl_act(const GroupDatum &datum, const MTypeLabel &sigma);

/// Compact roots that are lexicographically positive.
std::vector<std::vector<int>>
positive_compact_roots(const DiscreteSeriesDatum &ds);

/// 2 rho_c implied by the atom structure of K (SU2: 2 e_i, SO3: e_i).
std::vector<int> atom_two_rho_c(const CompactGroup &k);

/// Noncompact roots positive on `lambda` with respect to the gram form.
std::vector<std::vector<int>>
positive_noncompact_roots(const GroupDatum &datum,
                          const std::vector<int> &lambda);

/// Recomputes stored structure constants from the root data.
/// Returns one message per mismatch; empty means consistent.
std::vector<std::string> consistency_failures(const GroupDatum &datum);

} // namespace tempiric
