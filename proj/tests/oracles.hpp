#pragma once

// Brute-force reimplementations used as test oracles. Nothing here calls
// the library's algorithms; the library is only used for its data types
// and for reading catalog entries.

#include "tempiric/tempered.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

using tempiric::Atom;
using tempiric::CompactGroup;
using tempiric::GroupDatum;
using tempiric::IrrepLabel;
using tempiric::Rational;

using Weight = std::vector<int>;          // one entry per atom
using Multiset = std::map<Weight, long long>;
using Decomp = std::map<std::vector<int>, long long>;

// Weights of one atom's irreducible, as per-atom entries.
inline std::vector<int> atom_weights(Atom a, int label) {
    switch (a) {
    case Atom::Torus1:
    case Atom::Cyclic2:
        return {label};
    case Atom::SU2: {
        std::vector<int> w;
        for (int x = -label; x <= label; x += 2)
            w.push_back(x);
        return w;
    }
    case Atom::SO3: {
        std::vector<int> w;
        for (int x = -label; x <= label; ++x)
            w.push_back(x);
        return w;
    }
    }
    return {};
}

inline Multiset weights(const CompactGroup &g, const std::vector<int> &label) {
    Multiset out{{Weight{}, 1}};
    for (std::size_t i = 0; i < g.size(); ++i) {
        Multiset next;
        for (const auto &[w, c] : out)
            for (int x : atom_weights(g.atoms()[i], label[i])) {
                Weight v = w;
                v.push_back(x);
                next[v] += c;
            }
        out = std::move(next);
    }
    return out;
}

inline int combine(Atom a, int x, int y) {
    return a == Atom::Cyclic2 ? (x + y) % 2 : x + y;
}

// Peels the lexicographically largest weight until the multiset is empty.
// For products of rank-one atoms the largest weight is always the highest
// weight of a constituent.
inline Decomp peel(const CompactGroup &g, Multiset ms) {
    Decomp out;
    while (!ms.empty()) {
        auto top = std::prev(ms.end());
        Weight hw = top->first;
        long long c = top->second;
        if (c < 0)
            throw std::logic_error("negative weight multiplicity");
        out[hw] += c;
        for (const auto &[w, k] : weights(g, hw)) {
            auto it = ms.find(w);
            if (it == ms.end())
                throw std::logic_error("peeling left a hole");
            it->second -= k * c;
            if (it->second == 0)
                ms.erase(it);
        }
    }
    return out;
}

inline Decomp tensor(const CompactGroup &g, const std::vector<int> &a,
                     const std::vector<int> &b) {
    Multiset prod;
    for (const auto &[wa, ca] : weights(g, a))
        for (const auto &[wb, cb] : weights(g, b)) {
            Weight w(wa.size());
            for (std::size_t i = 0; i < w.size(); ++i)
                w[i] = combine(g.atoms()[i], wa[i], wb[i]);
            prod[w] += ca * cb;
        }
    return peel(g, prod);
}

// Projection of K weights to M weights, written out per catalog rule.
inline Weight project(const GroupDatum &d, const Weight &w) {
    switch (d.branching.kind) {
    case tempiric::BranchingKind::Parity:
        return {((w[0] % 2) + 2) % 2};
    case tempiric::BranchingKind::TorusRestriction:
        return {w[0]};
    case tempiric::BranchingKind::ClebschDiagonal:
        return {w[0] + w[1]};
    }
    return {};
}

inline Decomp restrict(const GroupDatum &d, const std::vector<int> &tau) {
    Multiset ms;
    for (const auto &[w, c] : weights(d.k, tau))
        ms[project(d, w)] += c;
    return peel(d.m, ms);
}

inline Rational norm(const GroupDatum &d, const std::vector<int> &tau) {
    std::vector<Rational> x;
    std::size_t c = 0;
    for (std::size_t i = 0; i < d.k.size(); ++i)
        if (d.k.atoms()[i] != Atom::Cyclic2)
            x.push_back(Rational(tau[i] + d.norm.two_rho_c[c++]));
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            s += x[i] * d.norm.gram[i][j] * x[j];
    return s;
}

// Every K label with entries in [-box, box] (Torus1) or [0, box].
inline std::vector<std::vector<int>> label_box(const CompactGroup &g, int box) {
    std::vector<std::vector<int>> out{{}};
    for (Atom a : g.atoms()) {
        int lo = a == Atom::Torus1 ? -box : 0;
        int hi = a == Atom::Cyclic2 ? 1 : box;
        std::vector<std::vector<int>> next;
        for (const auto &p : out)
            for (int x = lo; x <= hi; ++x) {
                auto q = p;
                q.push_back(x);
                next.push_back(q);
            }
        out = std::move(next);
    }
    return out;
}

/// K-types of least norm containing sigma on restriction, by sweeping a
/// box of side `box`.
inline std::vector<std::vector<int>>
minimal_ktypes(const GroupDatum &d, const std::vector<int> &sigma, int box) {
    std::vector<std::vector<int>> best;
    Rational best_norm = -1;
    for (const auto &tau : label_box(d.k, box)) {
        auto r = restrict(d, tau);
        auto it = r.find(sigma);
        if (it == r.end())
            continue;
        Rational n = norm(d, tau);
        if (best_norm < 0 || n < best_norm) {
            best = {tau};
            best_norm = n;
        } else if (n == best_norm) {
            best.push_back(tau);
        }
    }
    std::sort(best.begin(), best.end());
    return best;
}

inline long long dot(const std::vector<int> &a, const std::vector<int> &b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += static_cast<long long>(a[i]) * b[i];
    return s;
}

struct DsData {
    std::vector<std::vector<int>> pos_noncompact;
    std::vector<int> two_rho_c;
    std::vector<int> blattner; // Lambda
};

/// Chamber data for lambda, recomputed from the root lists. Returns false
/// if lambda is singular or not dominant for the lexicographic positive
/// compact roots. Assumes a Euclidean gram, as for every builtin.
inline bool ds_data(const GroupDatum &d, const std::vector<int> &lambda,
                    DsData &out) {
    const auto &ds = *d.ds;
    const std::size_t n = lambda.size();
    std::vector<int> two_rho_n(n, 0);
    out = {};
    out.two_rho_c.assign(n, 0);
    for (const auto &r : ds.compact_roots) {
        auto first = std::find_if(r.begin(), r.end(), [](int x) { return x; });
        if (*first < 0)
            continue;
        if (dot(r, lambda) <= 0)
            return false;
        for (std::size_t i = 0; i < n; ++i)
            out.two_rho_c[i] += r[i];
    }
    for (const auto &r : ds.noncompact_roots) {
        long long p = dot(r, lambda);
        if (p == 0)
            return false;
        if (p > 0) {
            out.pos_noncompact.push_back(r);
            for (std::size_t i = 0; i < n; ++i)
                two_rho_n[i] += r[i];
        }
    }
    out.blattner.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        int twice = 2 * lambda[i] + two_rho_n[i] - out.two_rho_c[i];
        if (twice % 2)
            return false;
        out.blattner[i] = twice / 2;
    }
    return true;
}

/// Number of nonnegative integer vectors k with sum k_i roots_i = target,
/// by enumerating the box 0 <= k_i <= sum |target_j|.
inline long long partitions(const std::vector<std::vector<int>> &roots,
                            const std::vector<int> &target) {
    int cap = 0;
    for (int t : target)
        cap += std::abs(t);
    std::vector<int> k(roots.size(), 0);
    long long count = 0;
    while (true) {
        std::vector<int> s(target.size(), 0);
        for (std::size_t r = 0; r < roots.size(); ++r)
            for (std::size_t i = 0; i < s.size(); ++i)
                s[i] += k[r] * roots[r][i];
        if (s == target)
            ++count;
        std::size_t pos = 0;
        while (pos < k.size() && k[pos] == cap)
            k[pos++] = 0;
        if (pos == k.size())
            break;
        ++k[pos];
    }
    return count;
}

/// Blattner's formula with the compact Weyl group generated independently
/// as sign changes of the SU2/SO3 coordinates.
inline long long blattner(const GroupDatum &d, const std::vector<int> &lambda,
                          const std::vector<int> &mu) {
    DsData data;
    if (!ds_data(d, lambda, data))
        throw std::logic_error("oracle: bad lambda");
    std::vector<std::size_t> flippable;
    std::size_t c = 0;
    for (Atom a : d.k.atoms()) {
        if (a == Atom::Cyclic2)
            continue;
        if (a == Atom::SU2 || a == Atom::SO3)
            flippable.push_back(c);
        ++c;
    }
    const std::size_t n = mu.size();
    long long total = 0;
    for (unsigned mask = 0; mask < (1u << flippable.size()); ++mask) {
        std::vector<int> v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = 2 * mu[i] + data.two_rho_c[i];
        int sign = 1;
        for (std::size_t b = 0; b < flippable.size(); ++b)
            if (mask & (1u << b)) {
                v[flippable[b]] = -v[flippable[b]];
                sign = -sign;
            }
        std::vector<int> t(n);
        bool odd = false;
        for (std::size_t i = 0; i < n; ++i) {
            int twice = v[i] - 2 * data.blattner[i] - data.two_rho_c[i];
            odd |= (twice % 2 != 0);
            t[i] = twice / 2;
        }
        if (!odd)
            total += sign * partitions(data.pos_noncompact, t);
    }
    return total;
}

/// All regular, K-dominant integral lambda in [-box, box]^n whose Blattner
/// parameter has norm <= bound, as (norm, Lambda, lambda) sorted.
inline std::vector<std::vector<int>> ds_lambdas(const GroupDatum &d,
                                                const Rational &bound,
                                                int box) {
    const std::size_t n = d.k.lattice_dim();
    std::vector<std::tuple<Rational, std::vector<int>, std::vector<int>>> found;
    std::vector<int> lambda(n, -box);
    while (true) {
        DsData data;
        if (ds_data(d, lambda, data)) {
            Rational nm = norm(d, data.blattner);
            if (nm <= bound)
                found.emplace_back(nm, data.blattner, lambda);
        }
        std::size_t pos = 0;
        while (pos < n && lambda[pos] == box)
            lambda[pos++] = -box;
        if (pos == n)
            break;
        ++lambda[pos];
    }
    std::sort(found.begin(), found.end());
    std::vector<std::vector<int>> out;
    for (const auto &f : found)
        out.push_back(std::get<2>(f));
    return out;
}

inline std::string str(const std::vector<int> &v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

inline std::string str(const Decomp &d) {
    std::string s;
    for (const auto &[k, c] : d)
        s += str(k) + ":" + std::to_string(c) + ";";
    return s;
}

template <class Sum> std::string str_sum(const Sum &sum) {
    std::string s;
    for (const auto &[k, c] : sum)
        s += str(k.parts) + ":" + std::to_string(c) + ";";
    return s;
}

} // namespace oracle
