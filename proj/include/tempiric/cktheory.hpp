#pragma once

// Multiplicity matrix of K-types against tempiric representations, the
// composite map R(K) -> R(G)_tempiric, and the finite-window checks built
// on top of it.

#include "tempiric/tempered.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tempiric {

enum class Resolution { Exact, AggregateOnly };

std::string_view resolution_name(Resolution r);

/// Sparse nonnegative integer matrix. Rows are the K-type window in norm
/// order; columns the tempiric window sorted by minimal K-type.
///
/// Aggregate-only columns belong to a split pair whose K-type distribution
/// is not resolved: they carry the multiplicities of the whole induced
/// representation, except at the pair's two minimal K-types (`exact_rows`).
struct MultMatrix {
    std::vector<KTypeLabel> rows;
    std::vector<Rational> row_norms;
    std::vector<TempiricRep> cols;
    std::vector<Resolution> resolution;
    std::vector<std::map<std::size_t, long long>> entries; // per column
    std::vector<std::set<std::size_t>> exact_rows;         // aggregate cols

    long long at(std::size_t row, std::size_t col) const;
    bool is_exact(std::size_t row, std::size_t col) const;
    std::optional<std::size_t> row_index(const KTypeLabel &tau) const;
    bool all_exact() const;
};

MultMatrix mult_matrix(const GroupDatum &datum, const Rational &bound);

/// Outcome of a single check. A failure always carries a counterexample.
class VerificationReport {
  public:
    static VerificationReport pass(std::string name);
    static VerificationReport fail(std::string name, std::string counterexample);

    const std::string &name() const { return name_; }
    bool passed() const { return passed_; }
    const std::string &counterexample() const { return counterexample_; }

    /// Named integer results (e.g. lhs/rhs of an identity).
    std::vector<std::pair<std::string, long long>> values;

  private:
    std::string name_;
    bool passed_ = true;
    std::string counterexample_;
};

VerificationReport vogan_bijection_check(const MultMatrix &matrix);
VerificationReport vogan_bijection_check(const GroupDatum &datum,
                                         const Rational &bound);

VerificationReport triangularity_check(const MultMatrix &matrix);
VerificationReport triangularity_check(const GroupDatum &datum,
                                       const Rational &bound);

struct CompositeImage {
    FormalSum<TempiricRep> terms;
    // false if some coefficient came from an aggregate-only cell
    bool exact = true;
};

/// sum_pi mult(tau, pi) [pi]. Throws WindowError if tau is outside the
/// window of `bound`.
CompositeImage composite_map(const GroupDatum &datum, const KTypeLabel &tau,
                             const Rational &bound);

struct WindowInverse {
    bool refused = false;
    std::vector<std::size_t> unresolved_cols;
    IntMatrix inverse; // indexed (column basis) x (row basis)
};

/// Two-sided integer inverse. Refuses when aggregate-only columns exist;
/// throws InternalError if the matrix is singular or not unimodular.
WindowInverse invert_window(const MultMatrix &matrix);

/// lhs = dim Hom_M(V1|_M, V2|_M), rhs = sum_sigma
/// dim[L_sigma (x) V1]^M dim[L_sigma (x) V2]^M.
VerificationReport dimension_identity_check(const GroupDatum &datum,
                                            const KSum &v1, const KSum &v2);

enum class BoundaryCase {
    DiscreteSeries,  // P = G: the boundary of a_P^* is empty
    FixedClass,      // W_sigma = Z/2 acts freely on the two boundary points
    InequivalentPair // W_sigma trivial, two inequivalent sigma's
};

struct BoundaryBlock {
    std::string block;
    BoundaryCase boundary_case;
    long long dim = 0;
};

std::vector<BoundaryBlock> boundary_block_dims(const GroupDatum &datum,
                                               const KSum &v1, const KSum &v2);

VerificationReport admissibility_check(const GroupDatum &datum, const KSum &v);

/// Blattner multiplicity one at Lambda and vanishing at every K-type of
/// strictly smaller norm, for every discrete series of norm <= bound.
VerificationReport blattner_consistency_check(const GroupDatum &datum,
                                              const Rational &bound);

/// Stored catalog constants agree with the root data.
VerificationReport catalog_consistency_check(const GroupDatum &datum);

struct KTheorySummary {
    std::vector<std::string> generators;
    bool triangular = false;
    std::string status; // "invertible", "refused", or "not-triangular"
    std::vector<std::string> refused_columns;
    std::string k1_note;
};

KTheorySummary ktheory_summary(const GroupDatum &datum, const Rational &bound);

/// Deterministic pseudo-random K-representations built from K-types of
/// norm <= norm_bound: 1-3 draws, each adding multiplicity 1-3.
class RandomKSums {
  public:
    RandomKSums(const GroupDatum &datum, const Rational &norm_bound,
                std::uint64_t seed);
    KSum next();

  private:
    std::vector<KTypeLabel> pool_;
    std::mt19937_64 engine_;
    std::uint64_t draw(std::uint64_t n) { return engine_() % n; }
};

inline constexpr std::uint64_t kDefaultSeed = 1729;

/// The full verify suite: catalog consistency, Vogan bijection,
/// triangularity, dimension identity over `pairs` random pairs,
/// admissibility over `singles` random V, Blattner consistency.
std::vector<VerificationReport> run_verification(const GroupDatum &datum,
                                                 const Rational &bound,
                                                 std::uint64_t seed,
                                                 int pairs = 200,
                                                 int singles = 100);

} // namespace tempiric
