#include "tempiric/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <utility>

namespace tempiric {

std::string_view atom_name(Atom a) {
    switch (a) {
    case Atom::Torus1:
        return "Torus1";
    case Atom::Cyclic2:
        return "Cyclic2";
    case Atom::SU2:
        return "SU2";
    case Atom::SO3:
        return "SO3";
    }
    return "?";
}

Atom parse_atom(std::string_view name) {
    for (Atom a : {Atom::Torus1, Atom::Cyclic2, Atom::SU2, Atom::SO3})
        if (atom_name(a) == name)
            return a;
    throw ParseError("unknown atom kind '" + std::string(name) + "'");
}

CompactGroup::CompactGroup(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty())
        throw ValidationError("compact group needs at least one atom");
    lattice_dim_ = static_cast<std::size_t>(
        std::count_if(atoms_.begin(), atoms_.end(),
                      [](Atom a) { return a != Atom::Cyclic2; }));
}

void validate_label(const CompactGroup &g, const IrrepLabel &label) {
    if (label.parts.size() != g.size())
        throw LabelError("label " + to_string(label) + " has " +
                         std::to_string(label.parts.size()) +
                         " entries, group has " + std::to_string(g.size()) +
                         " atoms");
    for (std::size_t i = 0; i < g.size(); ++i) {
        int v = label.parts[i];
        switch (g.atoms()[i]) {
        case Atom::Torus1:
            break;
        case Atom::Cyclic2:
            if (v != 0 && v != 1)
                throw LabelError("Cyclic2 entry must be 0 or 1 in " +
                                 to_string(label));
            break;
        case Atom::SU2:
        case Atom::SO3:
            if (v < 0)
                throw LabelError("negative SU2/SO3 entry in " +
                                 to_string(label));
            break;
        }
    }
}

long long weyl_dim(const CompactGroup &g, const IrrepLabel &label) {
    validate_label(g, label);
    long long dim = 1;
    for (std::size_t i = 0; i < g.size(); ++i) {
        switch (g.atoms()[i]) {
        case Atom::SU2:
            dim *= label.parts[i] + 1;
            break;
        case Atom::SO3:
            dim *= 2LL * label.parts[i] + 1;
            break;
        default:
            break;
        }
    }
    return dim;
}

namespace {

// Weights of a single atom irrep: (lattice coordinate or parity bit).
std::vector<int> atom_weights(Atom a, int v) {
    std::vector<int> out;
    switch (a) {
    case Atom::Torus1:
    case Atom::Cyclic2:
        out.push_back(v);
        break;
    case Atom::SU2:
        for (int w = -v; w <= v; w += 2)
            out.push_back(w);
        break;
    case Atom::SO3:
        for (int w = -v; w <= v; ++w)
            out.push_back(w);
        break;
    }
    return out;
}

// Irreducible constituents of a single-atom tensor product.
std::vector<int> atom_tensor(Atom a, int x, int y) {
    std::vector<int> out;
    switch (a) {
    case Atom::Torus1:
        out.push_back(x + y);
        break;
    case Atom::Cyclic2:
        out.push_back(x ^ y);
        break;
    case Atom::SU2:
        for (int c = std::abs(x - y); c <= x + y; c += 2)
            out.push_back(c);
        break;
    case Atom::SO3:
        for (int c = std::abs(x - y); c <= x + y; ++c)
            out.push_back(c);
        break;
    }
    return out;
}

} // namespace

std::vector<WeightVec> weights_of(const CompactGroup &g,
                                  const IrrepLabel &label) {
    validate_label(g, label);
    std::vector<WeightVec> out{WeightVec{}};
    for (std::size_t i = 0; i < g.size(); ++i) {
        Atom a = g.atoms()[i];
        std::vector<WeightVec> next;
        for (const WeightVec &w : out) {
            for (int x : atom_weights(a, label.parts[i])) {
                WeightVec v = w;
                (a == Atom::Cyclic2 ? v.parity : v.coords).push_back(x);
                next.push_back(std::move(v));
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

IrrepLabel dual(const CompactGroup &g, const IrrepLabel &label) {
    validate_label(g, label);
    IrrepLabel out = label;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.atoms()[i] == Atom::Torus1)
            out.parts[i] = -out.parts[i];
    return out;
}

IrrepLabel trivial_label(const CompactGroup &g) {
    return IrrepLabel{std::vector<int>(g.size(), 0)};
}

FormalSum<IrrepLabel> tensor_decompose(const CompactGroup &g,
                                       const IrrepLabel &a,
                                       const IrrepLabel &b) {
    validate_label(g, a);
    validate_label(g, b);
    std::vector<IrrepLabel> partial{IrrepLabel{}};
    for (std::size_t i = 0; i < g.size(); ++i) {
        std::vector<IrrepLabel> next;
        for (const IrrepLabel &p : partial) {
            for (int c : atom_tensor(g.atoms()[i], a.parts[i], b.parts[i])) {
                IrrepLabel q = p;
                q.parts.push_back(c);
                next.push_back(std::move(q));
            }
        }
        partial = std::move(next);
    }
    FormalSum<IrrepLabel> out;
    for (const IrrepLabel &p : partial)
        out.add(p, 1);
    return out;
}

long long hom_invariant_dim(const CompactGroup &g,
                            const FormalSum<IrrepLabel> &v1,
                            const FormalSum<IrrepLabel> &v2) {
    for (const auto *v : {&v1, &v2})
        for (const auto &[label, m] : *v)
            if (m < 0)
                throw ValidationError("negative multiplicity for " +
                                      to_string(label));
    const IrrepLabel trivial = trivial_label(g);
    long long total = 0;
    for (const auto &[a, ma] : v1) {
        IrrepLabel a_dual = dual(g, a);
        for (const auto &[b, mb] : v2)
            total += ma * mb *
                     tensor_decompose(g, a_dual, b).coefficient(trivial);
    }
    return total;
}

std::vector<int> highest_weight(const CompactGroup &g,
                                const IrrepLabel &label) {
    validate_label(g, label);
    std::vector<int> out;
    out.reserve(g.lattice_dim());
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.atoms()[i] != Atom::Cyclic2)
            out.push_back(label.parts[i]);
    return out;
}

IrrepLabel label_from_highest_weight(const CompactGroup &g,
                                     const std::vector<int> &coords) {
    if (coords.size() != g.lattice_dim())
        throw LabelError("weight " + to_string(coords) +
                         " has wrong dimension");
    IrrepLabel out;
    std::size_t k = 0;
    for (Atom a : g.atoms())
        out.parts.push_back(a == Atom::Cyclic2 ? 0 : coords[k++]);
    validate_label(g, out);
    return out;
}

Rational pairing(const std::vector<std::vector<Rational>> &gram,
                 const std::vector<int> &x, const std::vector<int> &y) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            if (x[i] != 0 && y[j] != 0)
                s += gram[i][j] * x[i] * y[j];
    return s;
}

namespace {

// Gauss-Jordan without row swaps. Every pivot is a ratio of leading
// principal minors, so all pivots > 0 iff the matrix is positive-definite.
bool invert_spd(std::vector<std::vector<Rational>> a,
                std::vector<std::vector<Rational>> &inv) {
    const std::size_t n = a.size();
    inv.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        if (a[c][c] <= 0)
            return false;
        Rational p = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= p;
            inv[c][j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0)
                continue;
            Rational f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return true;
}

} // namespace

void validate_norm_form(const CompactGroup &g, const NormForm &form) {
    const std::size_t n = g.lattice_dim();
    if (form.gram.size() != n)
        throw ValidationError("gram: expected " + std::to_string(n) + " rows");
    for (const auto &row : form.gram)
        if (row.size() != n)
            throw ValidationError("gram: expected " + std::to_string(n) +
                                  " columns");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (form.gram[i][j] != form.gram[j][i])
                throw ValidationError("gram: not symmetric");
    std::vector<std::vector<Rational>> inv;
    if (!invert_spd(form.gram, inv))
        throw ValidationError("gram: not positive-definite");
    if (form.two_rho_c.size() != n)
        throw ValidationError("two_rho_c: expected " + std::to_string(n) +
                              " coordinates");
}

Rational vogan_norm(const CompactGroup &g, const NormForm &form,
                    const IrrepLabel &label) {
    std::vector<int> x = highest_weight(g, label);
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] += form.two_rho_c[i];
    return pairing(form.gram, x, x);
}

std::vector<IrrepLabel> enumerate_by_norm(const CompactGroup &g,
                                          const NormForm &form,
                                          const Rational &bound) {
    if (bound < 0)
        return {};
    std::vector<std::vector<Rational>> inv;
    if (!invert_spd(form.gram, inv))
        throw ValidationError("gram: not positive-definite");

    // For x = mu + 2 rho_c, Cauchy-Schwarz in the dual form gives
    // x_i^2 <= |x|^2 * (gram^-1)_ii.
    std::vector<std::pair<int, int>> coord_range;
    std::size_t k = 0;
    for (Atom a : g.atoms()) {
        if (a == Atom::Cyclic2) {
            coord_range.emplace_back(0, 1);
            continue;
        }
        int r = static_cast<int>(isqrt_floor(bound * inv[k][k]));
        int lo = -r - form.two_rho_c[k];
        int hi = r - form.two_rho_c[k];
        if (a != Atom::Torus1)
            lo = std::max(lo, 0);
        coord_range.emplace_back(lo, hi);
        ++k;
    }

    std::vector<std::pair<Rational, IrrepLabel>> found;
    IrrepLabel cur{std::vector<int>(g.size(), 0)};
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == g.size()) {
            Rational n = vogan_norm(g, form, cur);
            if (n <= bound)
                found.emplace_back(std::move(n), cur);
            return;
        }
        for (int v = coord_range[i].first; v <= coord_range[i].second; ++v) {
            cur.parts[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    std::sort(found.begin(), found.end());
    std::vector<IrrepLabel> out;
    out.reserve(found.size());
    for (auto &[n, label] : found)
        out.push_back(std::move(label));
    return out;
}

std::string to_string(const std::vector<int> &coords) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords.size(); ++i)
        os << (i ? "," : "") << coords[i];
    os << ')';
    return os.str();
}

std::string to_string(const IrrepLabel &label) {
    if (label.parts.size() == 1)
        return std::to_string(label.parts[0]);
    return to_string(label.parts);
}

} // namespace tempiric
