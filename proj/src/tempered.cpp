#include "tempiric/tempered.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace tempiric {

const KTypeLabel &TempiricRep::minimal_ktype() const {
    if (is_discrete())
        return discrete().blattner;
    return principal().minimal_ktype;
}

std::string describe(const PrincipalClass &cls) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < cls.orbit.size(); ++i)
        os << (i ? "," : "") << to_string(cls.orbit[i]);
    os << '}';
    return os.str();
}

std::string describe(const TempiricRep &rep) {
    if (rep.is_discrete())
        return "DS(lambda=" + to_string(rep.discrete().hc_param) + ")";
    const auto &p = rep.principal();
    return "PS(sigma=" + describe(p.cls) +
           ",min=" + to_string(p.minimal_ktype) + ")";
}

PrincipalClass principal_class_of(const GroupDatum &datum,
                                  const MTypeLabel &sigma) {
    validate_label(datum.m, sigma);
    PrincipalClass cls;
    cls.orbit = {sigma};
    MTypeLabel moved = weyl_act(datum, sigma);
    if (moved != sigma)
        cls.orbit.push_back(moved);
    std::sort(cls.orbit.begin(), cls.orbit.end());
    cls.w_sigma_order = cls.orbit.size() == 1 ? 2 : 1;
    cls.a_dim = datum.a_dim;
    return cls;
}

std::vector<PrincipalClass>
principal_classes(const GroupDatum &datum,
                  const std::vector<KTypeLabel> &kwindow) {
    std::vector<PrincipalClass> out;
    std::set<MTypeLabel> seen;
    for (const auto &tau : kwindow) {
        for (const auto &sigma : support_sigmas(datum, KSum{{tau, 1}})) {
            if (seen.contains(sigma))
                continue;
            PrincipalClass cls = principal_class_of(datum, sigma);
            seen.insert(cls.orbit.begin(), cls.orbit.end());
            out.push_back(std::move(cls));
        }
    }
    return out;
}

long long induced_ktype_mult(const GroupDatum &datum, const PrincipalClass &cls,
                             const KTypeLabel &tau) {
    return mult_space_dim(datum, cls.representative(), KSum{{tau, 1}});
}

std::vector<KTypeLabel> minimal_ktypes(const GroupDatum &datum,
                                       const PrincipalClass &cls) {
    const Rational ceiling = 1 << 14;
    for (Rational bound = 16; bound <= ceiling; bound *= 4) {
        std::vector<KTypeLabel> window = enumerate_ktypes(datum, bound);
        auto first = std::find_if(window.begin(), window.end(),
                                  [&](const KTypeLabel &tau) {
                                      return induced_ktype_mult(datum, cls,
                                                                tau) > 0;
                                  });
        if (first == window.end())
            continue;
        // The window is complete below `bound`, so every K-type of the
        // minimal norm is in it.
        const Rational min_norm = vogan_norm(datum, *first);
        std::vector<KTypeLabel> out;
        for (auto it = first; it != window.end(); ++it) {
            if (vogan_norm(datum, *it) != min_norm)
                break;
            long long m = induced_ktype_mult(datum, cls, *it);
            if (m == 0)
                continue;
            if (m != 1)
                throw InternalError("minimal K-type " + to_string(*it) +
                                    " of " + describe(cls) +
                                    " has multiplicity " + std::to_string(m));
            out.push_back(*it);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    throw InternalError("no K-type of " + describe(cls) +
                        " found below norm " + to_string(ceiling));
}

std::vector<TempiricRep> constituents(const GroupDatum &datum,
                                      const PrincipalClass &cls) {
    std::vector<KTypeLabel> mins = minimal_ktypes(datum, cls);
    if (mins.size() > 2)
        throw InternalError(describe(cls) + " has " +
                            std::to_string(mins.size()) +
                            " minimal K-types; at most 2 expected in rank one");
    std::vector<TempiricRep> out;
    for (const auto &tau : mins)
        out.push_back(
            TempiricRep{PrincipalConstituent{cls, tau, mins.size() == 2}});
    return out;
}

namespace {

// Integer multiple of gram * lambda; pairs with x like <x, lambda> up to a
// positive factor.
std::vector<int> integer_functional(const GroupDatum &datum,
                                    const std::vector<int> &lambda) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    const auto &gram = datum.norm.gram;
    const std::size_t n = lambda.size();
    std::vector<Rational> f(n, Rational(0));
    BigInt scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            f[i] += gram[i][j] * lambda[j];
        scale = boost::multiprecision::lcm(scale, denominator(f[i]));
    }
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = static_cast<int>(numerator(Rational(f[i] * scale)));
    return out;
}

long long dot(const std::vector<int> &a, const std::vector<int> &b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += static_cast<long long>(a[i]) * b[i];
    return s;
}

const Chamber &chamber_of(const GroupDatum &datum,
                          const std::vector<int> &lambda) {
    auto positive = positive_noncompact_roots(datum, lambda);
    for (const Chamber &c : datum.ds->chambers)
        if (positive_noncompact_roots(datum, c.sample) == positive)
            return c;
    throw InternalError("no stored chamber contains lambda=" +
                        to_string(lambda));
}

void require_equal_rank(const GroupDatum &datum) {
    if (!datum.equal_rank || !datum.ds)
        throw DomainError(datum.name +
                          " has no discrete series (rank G != rank K)");
}

} // namespace

TempiricRep discrete_series(const GroupDatum &datum,
                            const std::vector<int> &lambda) {
    require_equal_rank(datum);
    const DiscreteSeriesDatum &ds = *datum.ds;
    const std::size_t n = datum.k.lattice_dim();
    if (lambda.size() != n)
        throw DomainError("lambda=" + to_string(lambda) +
                          " has wrong dimension");
    for (const auto *roots : {&ds.compact_roots, &ds.noncompact_roots})
        for (const auto &r : *roots)
            if (pairing(datum.norm.gram, r, lambda) == 0)
                throw DomainError("lambda=" + to_string(lambda) +
                                  " is singular");
    for (const auto &r : positive_compact_roots(ds))
        if (pairing(datum.norm.gram, r, lambda) < 0)
            throw DomainError("lambda=" + to_string(lambda) +
                              " is not K-dominant");

    const Chamber &c = chamber_of(datum, lambda);
    std::vector<int> big_lambda(n);
    for (std::size_t i = 0; i < n; ++i) {
        int twice = 2 * lambda[i] + c.two_rho_n[i] - c.two_rho_c[i];
        if (twice % 2 != 0)
            throw InternalError("Blattner parameter of lambda=" +
                                to_string(lambda) + " is not integral");
        big_lambda[i] = twice / 2;
    }
    KTypeLabel blattner;
    try {
        blattner = label_from_highest_weight(datum.k, big_lambda);
    } catch (const LabelError &) {
        throw InternalError("Blattner parameter " + to_string(big_lambda) +
                            " of lambda=" + to_string(lambda) +
                            " is not K-dominant");
    }
    return TempiricRep{DiscreteSeriesRep{lambda, std::move(blattner)}};
}

std::vector<TempiricRep> ds_enumerate(const GroupDatum &datum,
                                      const Rational &bound) {
    require_equal_rank(datum);
    if (bound < 0)
        return {};
    const DiscreteSeriesDatum &ds = *datum.ds;
    const std::size_t n = datum.k.lattice_dim();

    // Every Blattner parameter of norm <= bound is a label in the K-type
    // window; lambda differs from it by rho_c - rho_n, bounded per
    // coordinate by half the sum of |root coordinates|.
    std::vector<KTypeLabel> window = enumerate_ktypes(datum, bound);
    if (window.empty())
        return {};
    std::vector<int> lo(n, 0), hi(n, 0), shift(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int s = 0;
        for (const auto *roots : {&ds.compact_roots, &ds.noncompact_roots})
            for (const auto &r : *roots)
                s += std::abs(r[i]);
        shift[i] = (s + 1) / 2;
    }
    for (std::size_t w = 0; w < window.size(); ++w) {
        std::vector<int> mu = highest_weight(datum.k, window[w]);
        for (std::size_t i = 0; i < n; ++i) {
            lo[i] = w == 0 ? mu[i] : std::min(lo[i], mu[i]);
            hi[i] = w == 0 ? mu[i] : std::max(hi[i], mu[i]);
        }
    }

    std::vector<std::pair<Rational, TempiricRep>> found;
    std::vector<int> lambda(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            TempiricRep rep;
            try {
                rep = discrete_series(datum, lambda);
            } catch (const DomainError &) {
                return;
            }
            Rational norm = vogan_norm(datum, rep.discrete().blattner);
            if (norm <= bound)
                found.emplace_back(std::move(norm), std::move(rep));
            return;
        }
        for (int v = lo[i] - shift[i]; v <= hi[i] + shift[i]; ++v) {
            lambda[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    std::sort(found.begin(), found.end(), [](const auto &a, const auto &b) {
        if (a.first != b.first)
            return a.first < b.first;
        return a.second.discrete().blattner < b.second.discrete().blattner;
    });
    std::vector<TempiricRep> out;
    for (auto &[norm, rep] : found)
        out.push_back(std::move(rep));
    return out;
}

long long partition_count(const std::vector<std::vector<int>> &roots,
                          const std::vector<int> &functional,
                          const std::vector<int> &v) {
    for (const auto &r : roots)
        if (dot(functional, r) <= 0)
            throw InternalError("partition_count: functional not positive on " +
                                to_string(r));
    std::function<long long(std::size_t, std::vector<int> &)> rec =
        [&](std::size_t idx, std::vector<int> &rest) -> long long {
        if (idx == roots.size())
            return std::all_of(rest.begin(), rest.end(),
                               [](int x) { return x == 0; })
                       ? 1
                       : 0;
        long long total = 0;
        const auto &r = roots[idx];
        std::size_t k = 0;
        // The remaining roots pair positively with the functional, so a
        // negative pairing can never be completed.
        while (dot(functional, rest) >= 0) {
            total += rec(idx + 1, rest);
            for (std::size_t i = 0; i < rest.size(); ++i)
                rest[i] -= r[i];
            ++k;
        }
        for (std::size_t i = 0; i < rest.size(); ++i)
            rest[i] += static_cast<int>(k) * r[i];
        return total;
    };
    std::vector<int> rest = v;
    return rec(0, rest);
}

long long blattner_mult(const GroupDatum &datum, const TempiricRep &rep,
                        const KTypeLabel &tau) {
    require_equal_rank(datum);
    if (!rep.is_discrete())
        throw DomainError("blattner_mult: " + describe(rep) +
                          " is not a discrete series");
    const std::vector<int> &lambda = rep.discrete().hc_param;
    const Chamber &c = chamber_of(datum, lambda);
    const auto roots = positive_noncompact_roots(datum, lambda);
    const auto functional = integer_functional(datum, lambda);
    const std::size_t n = lambda.size();

    std::vector<int> shifted = highest_weight(datum.k, tau); // 2(mu + rho_c)
    for (std::size_t i = 0; i < n; ++i)
        shifted[i] = 2 * shifted[i] + c.two_rho_c[i];

    long long total = 0;
    for (const WeylElement &w : datum.ds->wk_elements) {
        std::vector<int> v(n, 0);
        bool integral = true;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                v[i] += w.matrix[i][j] * shifted[j];
            v[i] -= 2 * lambda[i] + c.two_rho_n[i];
            if (v[i] % 2 != 0)
                integral = false;
            v[i] /= 2;
        }
        if (integral)
            total += w.det * partition_count(roots, functional, v);
    }
    if (total < 0)
        throw InternalError("negative Blattner multiplicity " +
                            std::to_string(total) + " for " + to_string(tau) +
                            " in " + describe(rep));
    return total;
}

std::vector<TempiricRep> tempiric_window(const GroupDatum &datum,
                                         const Rational &bound) {
    std::vector<std::pair<Rational, TempiricRep>> reps;
    if (datum.equal_rank)
        for (auto &rep : ds_enumerate(datum, bound))
            reps.emplace_back(vogan_norm(datum, rep.minimal_ktype()),
                              std::move(rep));
    for (const auto &cls :
         principal_classes(datum, enumerate_ktypes(datum, bound))) {
        for (auto &rep : constituents(datum, cls)) {
            Rational norm = vogan_norm(datum, rep.minimal_ktype());
            if (norm <= bound)
                reps.emplace_back(std::move(norm), std::move(rep));
        }
    }
    std::sort(reps.begin(), reps.end(), [](const auto &a, const auto &b) {
        if (a.first != b.first)
            return a.first < b.first;
        if (a.second.minimal_ktype() != b.second.minimal_ktype())
            return a.second.minimal_ktype() < b.second.minimal_ktype();
        return a.second < b.second;
    });
    std::vector<TempiricRep> out;
    for (auto &[norm, rep] : reps)
        out.push_back(std::move(rep));
    return out;
}

} // namespace tempiric
