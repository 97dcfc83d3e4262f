#include "tempiric/cktheory.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace tempiric {

std::string_view resolution_name(Resolution r) {
    return r == Resolution::Exact ? "exact" : "aggregate-only";
}

long long MultMatrix::at(std::size_t row, std::size_t col) const {
    const auto &c = entries.at(col);
    auto it = c.find(row);
    return it == c.end() ? 0 : it->second;
}

bool MultMatrix::is_exact(std::size_t row, std::size_t col) const {
    return resolution.at(col) == Resolution::Exact ||
           exact_rows.at(col).contains(row);
}

std::optional<std::size_t> MultMatrix::row_index(const KTypeLabel &tau) const {
    auto it = std::find(rows.begin(), rows.end(), tau);
    if (it == rows.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - rows.begin());
}

bool MultMatrix::all_exact() const {
    return std::all_of(resolution.begin(), resolution.end(),
                       [](Resolution r) { return r == Resolution::Exact; });
}

namespace {

int sign(int x) { return (x > 0) - (x < 0); }

// The two constituents of a split class of SO(2) partition its K-types by
// the sign of the character (holomorphic and antiholomorphic halves).
bool sign_resolvable(const GroupDatum &datum) {
    return datum.k.atoms() == std::vector<Atom>{Atom::Torus1};
}

} // namespace

MultMatrix mult_matrix(const GroupDatum &datum, const Rational &bound) {
    MultMatrix mm;
    mm.rows = enumerate_ktypes(datum, bound);
    for (const auto &tau : mm.rows)
        mm.row_norms.push_back(vogan_norm(datum, tau));
    mm.cols = tempiric_window(datum, bound);
    const std::size_t nrows = mm.rows.size();

    for (const TempiricRep &rep : mm.cols) {
        std::map<std::size_t, long long> col;
        std::set<std::size_t> exact;
        Resolution res = Resolution::Exact;
        if (rep.is_discrete()) {
            for (std::size_t i = 0; i < nrows; ++i)
                if (long long v = blattner_mult(datum, rep, mm.rows[i]))
                    col[i] = v;
        } else {
            const PrincipalConstituent &pc = rep.principal();
            for (std::size_t i = 0; i < nrows; ++i)
                if (long long v = induced_ktype_mult(datum, pc.cls, mm.rows[i]))
                    col[i] = v;
            if (pc.split && sign_resolvable(datum)) {
                const int own = sign(pc.minimal_ktype.parts[0]);
                std::erase_if(col, [&](const auto &kv) {
                    return sign(mm.rows[kv.first].parts[0]) != own;
                });
            } else if (pc.split) {
                res = Resolution::AggregateOnly;
                for (const auto &tau : minimal_ktypes(datum, pc.cls)) {
                    auto idx = mm.row_index(tau);
                    if (!idx)
                        throw InternalError("split partner " + to_string(tau) +
                                            " outside the window");
                    exact.insert(*idx);
                    if (tau != pc.minimal_ktype)
                        col.erase(*idx);
                }
            }
        }
        mm.entries.push_back(std::move(col));
        mm.exact_rows.push_back(std::move(exact));
        mm.resolution.push_back(res);
    }
    return mm;
}

VerificationReport VerificationReport::pass(std::string name) {
    VerificationReport r;
    r.name_ = std::move(name);
    return r;
}

VerificationReport VerificationReport::fail(std::string name,
                                            std::string counterexample) {
    VerificationReport r;
    r.name_ = std::move(name);
    r.passed_ = false;
    r.counterexample_ = counterexample.empty() ? "(unspecified)"
                                               : std::move(counterexample);
    return r;
}

VerificationReport vogan_bijection_check(const MultMatrix &mm) {
    const std::string name = "vogan-bijection";
    std::vector<std::optional<std::size_t>> owner(mm.rows.size());
    for (std::size_t j = 0; j < mm.cols.size(); ++j) {
        const KTypeLabel &tau = mm.cols[j].minimal_ktype();
        auto i = mm.row_index(tau);
        if (!i)
            return VerificationReport::fail(
                name, "minimal K-type " + to_string(tau) + " of " +
                          describe(mm.cols[j]) + " is outside the window");
        if (owner[*i])
            return VerificationReport::fail(
                name, "K-type " + to_string(tau) +
                          " is the minimal K-type of both " +
                          describe(mm.cols[*owner[*i]]) + " and " +
                          describe(mm.cols[j]));
        owner[*i] = j;
        if (long long v = mm.at(*i, j); v != 1)
            return VerificationReport::fail(
                name, "minimal K-type " + to_string(tau) + " occurs in " +
                          describe(mm.cols[j]) + " with multiplicity " +
                          std::to_string(v));
    }
    for (std::size_t i = 0; i < mm.rows.size(); ++i)
        if (!owner[i])
            return VerificationReport::fail(
                name, "K-type " + to_string(mm.rows[i]) +
                          " is not the minimal K-type of any tempiric "
                          "representation in the window");
    auto r = VerificationReport::pass(name);
    r.values = {{"ktypes", static_cast<long long>(mm.rows.size())},
                {"tempirics", static_cast<long long>(mm.cols.size())}};
    return r;
}

VerificationReport vogan_bijection_check(const GroupDatum &datum,
                                         const Rational &bound) {
    return vogan_bijection_check(mult_matrix(datum, bound));
}

VerificationReport triangularity_check(const MultMatrix &mm) {
    const std::string name = "triangularity";
    for (std::size_t j = 0; j < mm.cols.size(); ++j) {
        const KTypeLabel &tau = mm.cols[j].minimal_ktype();
        auto r = mm.row_index(tau);
        if (!r)
            return VerificationReport::fail(
                name, "minimal K-type " + to_string(tau) + " of " +
                          describe(mm.cols[j]) + " is outside the window");
        if (long long v = mm.at(*r, j); v != 1)
            return VerificationReport::fail(
                name, "diagonal entry (" + to_string(tau) + ", " +
                          describe(mm.cols[j]) + ") = " + std::to_string(v));
        for (std::size_t i = 0; i < mm.rows.size(); ++i) {
            if (mm.row_norms[i] >= mm.row_norms[*r])
                break;
            if (long long v = mm.at(i, j); v != 0)
                return VerificationReport::fail(
                    name, "entry (" + to_string(mm.rows[i]) + ", " +
                              describe(mm.cols[j]) + ") = " +
                              std::to_string(v) +
                              " above the minimal K-type " + to_string(tau));
        }
    }
    return VerificationReport::pass(name);
}

VerificationReport triangularity_check(const GroupDatum &datum,
                                       const Rational &bound) {
    return triangularity_check(mult_matrix(datum, bound));
}

CompositeImage composite_map(const GroupDatum &datum, const KTypeLabel &tau,
                             const Rational &bound) {
    validate_label(datum.k, tau);
    if (vogan_norm(datum, tau) > bound)
        throw WindowError("K-type " + to_string(tau) + " has norm " +
                          to_string(vogan_norm(datum, tau)) +
                          " above the window bound " + to_string(bound));
    MultMatrix mm = mult_matrix(datum, bound);
    // Every pi with mult(tau, pi) != 0 has minimal K-type of norm
    // <= |tau| <= bound, hence lies in the column window, provided the
    // window is triangular.
    if (auto tri = triangularity_check(mm); !tri.passed())
        throw InternalError("window not triangular: " + tri.counterexample());
    std::size_t i = *mm.row_index(tau);
    CompositeImage out;
    for (std::size_t j = 0; j < mm.cols.size(); ++j) {
        long long v = mm.at(i, j);
        if (v == 0)
            continue;
        out.terms.add(mm.cols[j], v);
        if (!mm.is_exact(i, j))
            out.exact = false;
    }
    return out;
}

WindowInverse invert_window(const MultMatrix &mm) {
    WindowInverse out;
    for (std::size_t j = 0; j < mm.cols.size(); ++j)
        if (mm.resolution[j] != Resolution::Exact)
            out.unresolved_cols.push_back(j);
    if (!out.unresolved_cols.empty()) {
        out.refused = true;
        return out;
    }
    const std::size_t n = mm.rows.size();
    if (mm.cols.size() != n)
        throw InternalError("window matrix is " + std::to_string(n) + "x" +
                            std::to_string(mm.cols.size()) +
                            ", not square");

    // Gauss-Jordan over Q on [A | I].
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = mm.at(i, j);
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            throw InternalError("window matrix is singular");
        std::swap(a[p], a[c]);
        Rational pivot = a[c][c];
        for (auto &x : a[c])
            x /= pivot;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0)
                continue;
            Rational f = a[r][c];
            for (std::size_t k = c; k < 2 * n; ++k)
                a[r][k] -= f * a[c][k];
        }
    }
    // A is rows x cols, so A^-1 is cols x rows.
    out.inverse.assign(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational &x = a[i][n + j];
            if (boost::multiprecision::denominator(x) != 1)
                throw InternalError("window matrix is not unimodular");
            out.inverse[i][j] =
                static_cast<long long>(boost::multiprecision::numerator(x));
        }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long long left = 0;  // (A * A^-1)[i][j]
            long long right = 0; // (A^-1 * A)[i][j]
            for (std::size_t k = 0; k < n; ++k) {
                left += mm.at(i, k) * out.inverse[k][j];
                right += out.inverse[i][k] * mm.at(k, j);
            }
            long long want = i == j ? 1 : 0;
            if (left != want || right != want)
                throw InternalError("inverse check failed at (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + ")");
        }
    return out;
}

VerificationReport dimension_identity_check(const GroupDatum &datum,
                                            const KSum &v1, const KSum &v2) {
    const std::string name = "dimension-identity";
    const long long lhs = hom_invariant_dim(
        datum.m, restrict_decompose(datum, v1), restrict_decompose(datum, v2));

    std::vector<MTypeLabel> sigmas = support_sigmas(datum, v1);
    for (auto &s : support_sigmas(datum, v2))
        sigmas.push_back(std::move(s));
    std::sort(sigmas.begin(), sigmas.end());
    sigmas.erase(std::unique(sigmas.begin(), sigmas.end()), sigmas.end());
    long long rhs = 0;
    for (const auto &sigma : sigmas)
        rhs += mult_space_dim(datum, sigma, v1) *
               mult_space_dim(datum, sigma, v2);

    auto report = lhs == rhs
                      ? VerificationReport::pass(name)
                      : VerificationReport::fail(
                            name, "dim Hom_M = " + std::to_string(lhs) +
                                      " but sum over sigma = " +
                                      std::to_string(rhs));
    report.values = {{"lhs", lhs}, {"rhs", rhs}};
    return report;
}

std::vector<BoundaryBlock> boundary_block_dims(const GroupDatum &datum,
                                               const KSum &v1,
                                               const KSum &v2) {
    std::vector<BoundaryBlock> out;
    if (v1.empty() && v2.empty())
        return out;
    Rational max_norm = 0;
    for (const auto *v : {&v1, &v2})
        for (const auto &[tau, m] : *v)
            max_norm = std::max(max_norm, vogan_norm(datum, tau));

    auto d = [&](const MTypeLabel &sigma) {
        return mult_space_dim(datum, sigma, v1) *
               mult_space_dim(datum, sigma, v2);
    };
    for (const auto &cls :
         principal_classes(datum, enumerate_ktypes(datum, max_norm))) {
        BoundaryBlock b;
        b.block = "[P," + describe(cls) + "]";
        b.boundary_case = cls.orbit.size() == 1 ? BoundaryCase::FixedClass
                                                : BoundaryCase::InequivalentPair;
        for (const auto &sigma : cls.orbit)
            b.dim += d(sigma);
        out.push_back(std::move(b));
    }
    if (datum.equal_rank)
        for (const auto &rep : ds_enumerate(datum, max_norm))
            out.push_back(
                BoundaryBlock{"[G," + describe(rep) + "]",
                              BoundaryCase::DiscreteSeries, 0});
    return out;
}

VerificationReport admissibility_check(const GroupDatum &datum, const KSum &v) {
    const std::string name = "admissibility";
    const std::vector<MTypeLabel> support = support_sigmas(datum, v);

    int ceiling = 4;
    for (const auto &[tau, m] : v)
        for (int x : highest_weight(datum.k, tau))
            ceiling += 2 * std::abs(x);

    for (const auto &sigma : support)
        for (std::size_t i = 0; i < datum.m.size(); ++i)
            if (datum.m.atoms()[i] != Atom::Cyclic2 &&
                std::abs(sigma.parts[i]) > ceiling)
                return VerificationReport::fail(
                    name, "support element " + to_string(sigma) +
                              " lies beyond the sweep ceiling");

    long long swept = 0;
    MTypeLabel sigma{std::vector<int>(datum.m.size(), 0)};
    std::optional<std::string> bad;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (bad)
            return;
        if (i == datum.m.size()) {
            ++swept;
            bool direct = mult_space_dim(datum, sigma, v) > 0;
            bool listed =
                std::binary_search(support.begin(), support.end(), sigma);
            if (direct != listed)
                bad = "sigma=" + to_string(sigma) +
                      (direct ? " has nonzero multiplicity space but is not "
                                "in the support"
                              : " is in the support but has zero "
                                "multiplicity space");
            return;
        }
        int lo = 0, hi = ceiling;
        switch (datum.m.atoms()[i]) {
        case Atom::Torus1:
            lo = -ceiling;
            break;
        case Atom::Cyclic2:
            hi = 1;
            break;
        default:
            break;
        }
        for (int x = lo; x <= hi; ++x) {
            sigma.parts[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
    auto report = bad ? VerificationReport::fail(name, *bad)
                      : VerificationReport::pass(name);
    report.values = {{"support", static_cast<long long>(support.size())},
                     {"swept", swept}};
    return report;
}

VerificationReport blattner_consistency_check(const GroupDatum &datum,
                                              const Rational &bound) {
    const std::string name = "blattner-consistency";
    if (!datum.equal_rank) {
        auto r = VerificationReport::pass(name);
        r.values = {{"discrete_series", 0}};
        return r;
    }
    std::vector<TempiricRep> reps = ds_enumerate(datum, bound);
    std::vector<KTypeLabel> window = enumerate_ktypes(datum, bound);
    for (const auto &rep : reps) {
        const KTypeLabel &top = rep.discrete().blattner;
        if (long long v = blattner_mult(datum, rep, top); v != 1)
            return VerificationReport::fail(
                name, describe(rep) + " has multiplicity " +
                          std::to_string(v) + " at Lambda=" + to_string(top));
        const Rational top_norm = vogan_norm(datum, top);
        for (const auto &tau : window) {
            if (vogan_norm(datum, tau) >= top_norm)
                break;
            if (long long v = blattner_mult(datum, rep, tau); v != 0)
                return VerificationReport::fail(
                    name, describe(rep) + " contains " + to_string(tau) +
                              " (multiplicity " + std::to_string(v) +
                              ") below Lambda=" + to_string(top));
        }
    }
    auto r = VerificationReport::pass(name);
    r.values = {{"discrete_series", static_cast<long long>(reps.size())}};
    return r;
}

VerificationReport catalog_consistency_check(const GroupDatum &datum) {
    const std::string name = "catalog-consistency";
    auto failures = consistency_failures(datum);
    if (failures.empty())
        return VerificationReport::pass(name);
    std::string msg;
    for (const auto &f : failures)
        msg += (msg.empty() ? "" : "; ") + f;
    return VerificationReport::fail(name, msg);
}

KTheorySummary ktheory_summary(const GroupDatum &datum, const Rational &bound) {
    KTheorySummary s;
    MultMatrix mm = mult_matrix(datum, bound);
    for (const auto &c : mm.cols)
        s.generators.push_back(describe(c));
    s.triangular = triangularity_check(mm).passed();
    s.k1_note = "K_1 = 0 (analytic result; reported, not computed)";
    if (!s.triangular) {
        s.status = "not-triangular";
        return s;
    }
    WindowInverse inv = invert_window(mm);
    if (inv.refused) {
        s.status = "refused";
        for (auto j : inv.unresolved_cols)
            s.refused_columns.push_back(describe(mm.cols[j]));
    } else {
        s.status = "invertible";
    }
    return s;
}

RandomKSums::RandomKSums(const GroupDatum &datum, const Rational &norm_bound,
                         std::uint64_t seed)
    : pool_(enumerate_ktypes(datum, norm_bound)), engine_(seed) {}

KSum RandomKSums::next() {
    KSum v;
    if (pool_.empty())
        return v;
    const auto terms = 1 + draw(3);
    for (std::uint64_t t = 0; t < terms; ++t) {
        const auto &tau = pool_[draw(pool_.size())];
        v.add(tau, static_cast<long long>(1 + draw(3)));
    }
    return v;
}

namespace {

VerificationReport guarded(const std::string &name,
                           const std::function<VerificationReport()> &f) {
    try {
        return f();
    } catch (const Error &e) {
        return VerificationReport::fail(name, e.what());
    }
}

} // namespace

std::vector<VerificationReport> run_verification(const GroupDatum &datum,
                                                 const Rational &bound,
                                                 std::uint64_t seed, int pairs,
                                                 int singles) {
    std::vector<VerificationReport> out;
    out.push_back(guarded("catalog-consistency",
                          [&] { return catalog_consistency_check(datum); }));

    std::optional<MultMatrix> mm;
    try {
        mm = mult_matrix(datum, bound);
    } catch (const Error &e) {
        out.push_back(VerificationReport::fail("vogan-bijection", e.what()));
        out.push_back(VerificationReport::fail("triangularity", e.what()));
    }
    if (mm) {
        out.push_back(vogan_bijection_check(*mm));
        out.push_back(triangularity_check(*mm));
    }

    out.push_back(guarded("dimension-identity", [&] {
        RandomKSums gen(datum, bound, seed);
        long long checked = 0;
        for (int i = 0; i < pairs; ++i) {
            KSum v1 = gen.next();
            KSum v2 = gen.next();
            auto r = dimension_identity_check(datum, v1, v2);
            if (!r.passed())
                return VerificationReport::fail(
                    r.name(), "pair " + std::to_string(i) + ": " +
                                  r.counterexample());
            long long total = 0;
            for (const auto &b : boundary_block_dims(datum, v1, v2))
                total += b.dim;
            if (total != r.values[0].second)
                return VerificationReport::fail(
                    r.name(), "pair " + std::to_string(i) +
                                  ": boundary blocks total " +
                                  std::to_string(total) + " != lhs " +
                                  std::to_string(r.values[0].second));
            ++checked;
        }
        auto r = VerificationReport::pass("dimension-identity");
        r.values = {{"pairs", checked}};
        return r;
    }));

    out.push_back(guarded("admissibility", [&] {
        RandomKSums gen(datum, bound, seed + 1);
        for (int i = 0; i < singles; ++i) {
            auto r = admissibility_check(datum, gen.next());
            if (!r.passed())
                return VerificationReport::fail(
                    r.name(), "V " + std::to_string(i) + ": " +
                                  r.counterexample());
        }
        auto r = VerificationReport::pass("admissibility");
        r.values = {{"samples", singles}};
        return r;
    }));

    out.push_back(guarded("blattner-consistency", [&] {
        return blattner_consistency_check(datum, bound);
    }));
    return out;
}

} // namespace tempiric
