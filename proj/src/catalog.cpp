#include "tempiric/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace tempiric {

std::string_view branching_name(BranchingKind k) {
    switch (k) {
    case BranchingKind::Parity:
        return "parity";
    case BranchingKind::TorusRestriction:
        return "torus-restriction";
    case BranchingKind::ClebschDiagonal:
        return "clebsch-diagonal";
    }
    return "?";
}

BranchingKind parse_branching(std::string_view name) {
    for (BranchingKind k :
         {BranchingKind::Parity, BranchingKind::TorusRestriction,
          BranchingKind::ClebschDiagonal})
        if (branching_name(k) == name)
            return k;
    throw ParseError("branching_rule: unknown rule '" + std::string(name) +
                     "'");
}

void validate_branching(const BranchingRule &rule, const CompactGroup &k,
                        const CompactGroup &m) {
    std::vector<Atom> want_k, want_m;
    switch (rule.kind) {
    case BranchingKind::Parity:
        want_k = {Atom::Torus1};
        want_m = {Atom::Cyclic2};
        break;
    case BranchingKind::TorusRestriction:
        want_k = {Atom::SO3};
        want_m = {Atom::Torus1};
        break;
    case BranchingKind::ClebschDiagonal:
        want_k = {Atom::SU2, Atom::SU2};
        want_m = {Atom::SU2};
        break;
    }
    if (k.atoms() != want_k || m.atoms() != want_m)
        throw ValidationError("branching_rule: '" +
                              std::string(branching_name(rule.kind)) +
                              "' does not match the K/M atom lists");
}

WeylAction weyl_action_from_rule(std::string_view rule, const CompactGroup &m) {
    const std::size_t n = m.lattice_dim();
    WeylAction w;
    w.rule = std::string(rule);
    w.matrix.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        w.matrix[i][i] = 1;
    if (rule == "identity")
        return w;
    if (rule == "negate-torus") {
        std::size_t c = 0;
        for (Atom a : m.atoms()) {
            if (a == Atom::Cyclic2)
                continue;
            if (a == Atom::Torus1)
                w.matrix[c][c] = -1;
            ++c;
        }
        return w;
    }
    throw ParseError("weyl_on_mhat: unknown rule '" + std::string(rule) + "'");
}

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix multiply(const Matrix &a, const Matrix &b) {
    const std::size_t n = a.size();
    Matrix c(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                c[i][j] += a[i][k] * b[k][j];
    return c;
}

std::vector<int> mat_apply(const Matrix &a, const std::vector<int> &v) {
    std::vector<int> out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            out[i] += a[i][j] * v[j];
    return out;
}

bool is_identity(const Matrix &a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != (i == j ? 1 : 0))
                return false;
    return true;
}

// Determinant of a signed permutation matrix; nullopt if it is not one.
std::optional<int> signed_permutation_det(const Matrix &a) {
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    int sign = 1;
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n)
            return std::nullopt;
        int nonzero = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (a[i][j] == 0)
                continue;
            if (a[i][j] != 1 && a[i][j] != -1)
                return std::nullopt;
            ++nonzero;
            perm[i] = j;
            sign *= a[i][j];
        }
        if (nonzero != 1 || used[perm[i]])
            return std::nullopt;
        used[perm[i]] = true;
    }
    // parity of the permutation
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i])
            continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0)
            sign = -sign;
    }
    return sign;
}

bool lex_positive(const std::vector<int> &v) {
    for (int x : v)
        if (x != 0)
            return x > 0;
    return false;
}

std::vector<int> add(std::vector<int> a, const std::vector<int> &b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

std::vector<int> root_sum(const std::vector<std::vector<int>> &roots,
                          std::size_t dim) {
    std::vector<int> s(dim, 0);
    for (const auto &r : roots)
        s = add(s, r);
    return s;
}

std::vector<std::vector<Rational>> identity_gram(std::size_t n) {
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        g[i][i] = 1;
    return g;
}

GroupDatum make_sl2r() {
    CompactGroup k({Atom::Torus1});
    CompactGroup m({Atom::Cyclic2});
    DiscreteSeriesDatum ds;
    ds.noncompact_roots = {{2}, {-2}};
    ds.wk_elements = {WeylElement{{{1}}, 1}};
    ds.chambers = {Chamber{{1}, {0}, {2}, {2}},
                   Chamber{{-1}, {0}, {-2}, {-2}}};
    return GroupDatum{"SL2R",
                      k,
                      m,
                      BranchingRule{BranchingKind::Parity},
                      NormForm{identity_gram(1), {0}},
                      weyl_action_from_rule("identity", m),
                      true,
                      ds,
                      1};
}

GroupDatum make_so31() {
    CompactGroup k({Atom::SO3});
    CompactGroup m({Atom::Torus1});
    return GroupDatum{"SO31",
                      k,
                      m,
                      BranchingRule{BranchingKind::TorusRestriction},
                      NormForm{identity_gram(1), {1}},
                      weyl_action_from_rule("negate-torus", m),
                      false,
                      std::nullopt,
                      1};
}

GroupDatum make_sp11() {
    CompactGroup k({Atom::SU2, Atom::SU2});
    CompactGroup m({Atom::SU2});
    DiscreteSeriesDatum ds;
    ds.compact_roots = {{2, 0}, {-2, 0}, {0, 2}, {0, -2}};
    ds.noncompact_roots = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    for (int s1 : {1, -1})
        for (int s2 : {1, -1})
            ds.wk_elements.push_back(
                WeylElement{{{s1, 0}, {0, s2}}, s1 * s2});
    ds.chambers = {Chamber{{2, 1}, {2, 2}, {2, 0}, {4, 2}},
                   Chamber{{1, 2}, {2, 2}, {0, 2}, {2, 4}}};
    return GroupDatum{"Sp11",
                      k,
                      m,
                      BranchingRule{BranchingKind::ClebschDiagonal},
                      NormForm{identity_gram(2), {2, 2}},
                      weyl_action_from_rule("identity", m),
                      true,
                      ds,
                      1};
}

// --- JSON helpers -------------------------------------------------------

const Json &field(const Json &obj, const char *key, const std::string &ctx) {
    if (!obj.is_object() || !obj.contains(key))
        throw ParseError(ctx + ": missing key '" + key + "'");
    return obj.at(key);
}

int as_int(const Json &v, const std::string &ctx) {
    if (!v.is_number_integer())
        throw ParseError(ctx + ": expected an integer");
    auto x = v.get<long long>();
    if (x < -1000000 || x > 1000000)
        throw ParseError(ctx + ": integer out of range");
    return static_cast<int>(x);
}

std::vector<int> as_int_vector(const Json &v, const std::string &ctx) {
    if (!v.is_array())
        throw ParseError(ctx + ": expected an array of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(as_int(v[i], ctx + "[" + std::to_string(i) + "]"));
    return out;
}

Matrix as_int_matrix(const Json &v, const std::string &ctx) {
    if (!v.is_array())
        throw ParseError(ctx + ": expected an array of arrays");
    Matrix out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(as_int_vector(v[i], ctx + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<Atom> as_atoms(const Json &v, const std::string &ctx) {
    if (!v.is_array())
        throw ParseError(ctx + ": expected an array of atom names");
    std::vector<Atom> out;
    for (const auto &a : v) {
        if (!a.is_string())
            throw ParseError(ctx + ": atom names must be strings");
        try {
            out.push_back(parse_atom(a.get<std::string>()));
        } catch (const ParseError &e) {
            throw ParseError(ctx + ": " + e.what());
        }
    }
    if (out.empty())
        throw ValidationError(ctx + ": atom list must be nonempty");
    return out;
}

Json atoms_json(const CompactGroup &g) {
    Json a = Json::array();
    for (Atom x : g.atoms())
        a.push_back(std::string(atom_name(x)));
    return a;
}

} // namespace

std::vector<std::string> builtin_names() { return {"SL2R", "SO31", "Sp11"}; }

GroupDatum builtin(std::string_view name) {
    if (name == "SL2R")
        return make_sl2r();
    if (name == "SO31")
        return make_so31();
    if (name == "Sp11")
        return make_sp11();
    throw ValidationError("unknown builtin group '" + std::string(name) +
                          "' (expected SL2R, SO31 or Sp11)");
}

std::vector<std::vector<int>>
positive_compact_roots(const DiscreteSeriesDatum &ds) {
    std::vector<std::vector<int>> out;
    for (const auto &r : ds.compact_roots)
        if (lex_positive(r))
            out.push_back(r);
    return out;
}

std::vector<int> atom_two_rho_c(const CompactGroup &k) {
    std::vector<int> out;
    for (Atom a : k.atoms()) {
        if (a == Atom::SU2)
            out.push_back(2);
        else if (a == Atom::SO3)
            out.push_back(1);
        else if (a == Atom::Torus1)
            out.push_back(0);
    }
    return out;
}

std::vector<std::vector<int>>
positive_noncompact_roots(const GroupDatum &datum,
                          const std::vector<int> &lambda) {
    std::vector<std::vector<int>> out;
    if (!datum.ds)
        return out;
    for (const auto &r : datum.ds->noncompact_roots)
        if (pairing(datum.norm.gram, r, lambda) > 0)
            out.push_back(r);
    return out;
}

void validate(const GroupDatum &d) {
    if (d.name.empty())
        throw ValidationError("name: must be nonempty");
    validate_branching(d.branching, d.k, d.m);
    validate_norm_form(d.k, d.norm);

    const std::size_t mdim = d.m.lattice_dim();
    const auto &w = d.weyl_on_mhat.matrix;
    if (w.size() != mdim)
        throw ValidationError("weyl_on_mhat: matrix must be " +
                              std::to_string(mdim) + "x" +
                              std::to_string(mdim));
    for (const auto &row : w)
        if (row.size() != mdim)
            throw ValidationError("weyl_on_mhat: matrix must be square");
    if (!is_identity(multiply(w, w)))
        throw ValidationError("weyl_on_mhat: action is not an involution");
    {
        // SU2/SO3 labels are dominant weights; only Torus1 coordinates may
        // move.
        std::size_t c = 0;
        for (Atom a : d.m.atoms()) {
            if (a == Atom::Cyclic2)
                continue;
            if (a != Atom::Torus1)
                for (std::size_t j = 0; j < mdim; ++j)
                    if (w[c][j] != (j == c ? 1 : 0))
                        throw ValidationError(
                            "weyl_on_mhat: may only act on Torus1 "
                            "coordinates");
            ++c;
        }
    }

    if (d.equal_rank != d.ds.has_value())
        throw ValidationError(
            "equal_rank: must be true exactly when ds is present");
    if (d.a_dim != 1)
        throw ValidationError("a_dim: must be 1 in real rank one");
    if (!d.ds)
        return;

    const DiscreteSeriesDatum &ds = *d.ds;
    const std::size_t n = d.k.lattice_dim();
    if (d.k.parity_dim() != 0)
        throw ValidationError(
            "ds: discrete series data with Cyclic2 atoms in K is unsupported");
    auto check_roots = [&](const std::vector<std::vector<int>> &roots,
                           const char *what) {
        for (const auto &r : roots) {
            if (r.size() != n)
                throw ValidationError(std::string("ds.") + what +
                                      ": root " + to_string(r) +
                                      " has wrong dimension");
            if (std::all_of(r.begin(), r.end(), [](int x) { return x == 0; }))
                throw ValidationError(std::string("ds.") + what +
                                      ": zero root");
        }
    };
    check_roots(ds.compact_roots, "compact_roots");
    check_roots(ds.noncompact_roots, "noncompact_roots");
    if (ds.noncompact_roots.empty())
        throw ValidationError("ds.noncompact_roots: must be nonempty");

    if (ds.wk_elements.empty())
        throw ValidationError("ds.wk_elements: must contain the identity");
    const std::set<std::vector<int>> compact(ds.compact_roots.begin(),
                                             ds.compact_roots.end());
    bool has_identity = false;
    for (std::size_t i = 0; i < ds.wk_elements.size(); ++i) {
        const auto &e = ds.wk_elements[i];
        std::string ctx = "ds.wk_elements[" + std::to_string(i) + "]";
        if (e.matrix.size() != n)
            throw ValidationError(ctx + ": wrong dimension");
        auto det = signed_permutation_det(e.matrix);
        if (!det)
            throw ValidationError(ctx + ": not a signed permutation matrix");
        if (*det != e.det)
            throw ValidationError(ctx + ": stored determinant " +
                                  std::to_string(e.det) + " != " +
                                  std::to_string(*det));
        std::set<std::vector<int>> image;
        for (const auto &r : ds.compact_roots)
            image.insert(mat_apply(e.matrix, r));
        if (image != compact)
            throw ValidationError(ctx + ": does not permute the compact roots");
        has_identity = has_identity || is_identity(e.matrix);
    }
    if (!has_identity)
        throw ValidationError("ds.wk_elements: must contain the identity");

    if (ds.chambers.empty())
        throw ValidationError("ds.chambers: must be nonempty");
    std::set<std::vector<std::vector<int>>> seen;
    for (std::size_t i = 0; i < ds.chambers.size(); ++i) {
        const Chamber &c = ds.chambers[i];
        std::string ctx = "ds.chambers[" + std::to_string(i) + "]";
        for (const auto *v : {&c.sample, &c.two_rho_c, &c.two_rho_n, &c.two_rho})
            if (v->size() != n)
                throw ValidationError(ctx + ": wrong dimension");
        if (add(c.two_rho_c, c.two_rho_n) != c.two_rho)
            throw ValidationError(ctx + ": rho != rho_c + rho_n");
        for (const auto *roots : {&ds.compact_roots, &ds.noncompact_roots})
            for (const auto &r : *roots)
                if (pairing(d.norm.gram, r, c.sample) == 0)
                    throw ValidationError(ctx + ": sample is singular");
        for (const auto &r : positive_compact_roots(ds))
            if (pairing(d.norm.gram, r, c.sample) <= 0)
                throw ValidationError(ctx + ": sample is not K-dominant");
        // Lambda = lambda + rho_n - rho_c must be a dominant K-label.
        std::vector<int> two_lambda(n);
        for (std::size_t j = 0; j < n; ++j) {
            two_lambda[j] = 2 * c.sample[j] + c.two_rho_n[j] - c.two_rho_c[j];
            if (two_lambda[j] % 2 != 0)
                throw ValidationError(ctx + ": Lambda is not integral");
            two_lambda[j] /= 2;
        }
        try {
            label_from_highest_weight(d.k, two_lambda);
        } catch (const LabelError &) {
            throw ValidationError(ctx + ": Lambda is not K-dominant");
        }
        if (!seen.insert(positive_noncompact_roots(d, c.sample)).second)
            throw ValidationError(ctx + ": duplicate chamber");
    }
}

GroupDatum load(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("top level: expected an object");

    const Json &name = field(doc, "name", "top level");
    if (!name.is_string())
        throw ParseError("name: expected a string");

    CompactGroup k(as_atoms(field(doc, "k_atoms", "top level"), "k_atoms"));
    CompactGroup m(as_atoms(field(doc, "m_atoms", "top level"), "m_atoms"));

    const Json &rule = field(doc, "branching_rule", "top level");
    if (!rule.is_string())
        throw ParseError("branching_rule: expected a string");
    BranchingRule branching{parse_branching(rule.get<std::string>())};

    NormForm norm;
    const Json &gram = field(doc, "gram", "top level");
    if (!gram.is_array())
        throw ParseError("gram: expected an array of rows");
    for (std::size_t i = 0; i < gram.size(); ++i) {
        if (!gram[i].is_array())
            throw ParseError("gram[" + std::to_string(i) +
                             "]: expected an array");
        std::vector<Rational> row;
        for (std::size_t j = 0; j < gram[i].size(); ++j) {
            const Json &e = gram[i][j];
            std::string ctx =
                "gram[" + std::to_string(i) + "][" + std::to_string(j) + "]";
            if (e.is_number_integer()) {
                row.push_back(Rational(e.get<long long>()));
                continue;
            }
            if (!e.is_string())
                throw ParseError(ctx + ": expected an integer or a string \"p/q\"");
            try {
                row.push_back(parse_rational(e.get<std::string>()));
            } catch (const ParseError &err) {
                throw ParseError(ctx + ": " + err.what());
            }
        }
        norm.gram.push_back(std::move(row));
    }
    norm.two_rho_c =
        as_int_vector(field(doc, "two_rho_c", "top level"), "two_rho_c");

    WeylAction weyl;
    const Json &w = field(doc, "weyl_on_mhat", "top level");
    if (w.is_string()) {
        weyl = weyl_action_from_rule(w.get<std::string>(), m);
    } else if (w.is_object()) {
        weyl.rule = "matrix";
        weyl.matrix =
            as_int_matrix(field(w, "matrix", "weyl_on_mhat"), "weyl_on_mhat");
    } else {
        throw ParseError("weyl_on_mhat: expected a rule id or {\"matrix\": ...}");
    }

    const Json &eq = field(doc, "equal_rank", "top level");
    if (!eq.is_boolean())
        throw ParseError("equal_rank: expected a boolean");

    std::optional<DiscreteSeriesDatum> ds;
    if (doc.contains("ds") && !doc.at("ds").is_null()) {
        const Json &j = doc.at("ds");
        DiscreteSeriesDatum d;
        d.compact_roots = as_int_matrix(field(j, "compact_roots", "ds"),
                                        "ds.compact_roots");
        d.noncompact_roots = as_int_matrix(field(j, "noncompact_roots", "ds"),
                                           "ds.noncompact_roots");
        const Json &wk = field(j, "wk_elements", "ds");
        if (!wk.is_array())
            throw ParseError("ds.wk_elements: expected an array");
        for (std::size_t i = 0; i < wk.size(); ++i) {
            std::string ctx = "ds.wk_elements[" + std::to_string(i) + "]";
            d.wk_elements.push_back(
                WeylElement{as_int_matrix(field(wk[i], "matrix", ctx), ctx),
                            as_int(field(wk[i], "det", ctx), ctx + ".det")});
        }
        if (j.contains("hc_lattice")) {
            const Json &lat = j.at("hc_lattice");
            if (!lat.is_string() || lat.get<std::string>() != "integer")
                throw ValidationError(
                    "ds.hc_lattice: only \"integer\" is supported");
        }
        const Json &ch = field(j, "chambers", "ds");
        if (!ch.is_array())
            throw ParseError("ds.chambers: expected an array");
        for (std::size_t i = 0; i < ch.size(); ++i) {
            std::string ctx = "ds.chambers[" + std::to_string(i) + "]";
            d.chambers.push_back(Chamber{
                as_int_vector(field(ch[i], "sample", ctx), ctx + ".sample"),
                as_int_vector(field(ch[i], "two_rho_c", ctx),
                              ctx + ".two_rho_c"),
                as_int_vector(field(ch[i], "two_rho_n", ctx),
                              ctx + ".two_rho_n"),
                as_int_vector(field(ch[i], "two_rho", ctx), ctx + ".two_rho")});
        }
        ds = std::move(d);
    }

    GroupDatum datum{name.get<std::string>(),
                     std::move(k),
                     std::move(m),
                     branching,
                     std::move(norm),
                     std::move(weyl),
                     eq.get<bool>(),
                     std::move(ds),
                     1};
    validate(datum);
    return datum;
}

GroupDatum load_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open group file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load(ss.str());
}

Json to_json(const GroupDatum &d) {
    Json j;
    j["name"] = d.name;
    j["k_atoms"] = atoms_json(d.k);
    j["m_atoms"] = atoms_json(d.m);
    j["branching_rule"] = std::string(branching_name(d.branching.kind));
    Json gram = Json::array();
    for (const auto &row : d.norm.gram) {
        Json r = Json::array();
        for (const auto &x : row)
            r.push_back(to_string(x));
        gram.push_back(std::move(r));
    }
    j["gram"] = std::move(gram);
    j["two_rho_c"] = d.norm.two_rho_c;
    if (d.weyl_on_mhat.rule == "matrix")
        j["weyl_on_mhat"] = Json{{"matrix", d.weyl_on_mhat.matrix}};
    else
        j["weyl_on_mhat"] = d.weyl_on_mhat.rule;
    j["equal_rank"] = d.equal_rank;
    if (d.ds) {
        Json ds;
        ds["compact_roots"] = d.ds->compact_roots;
        ds["noncompact_roots"] = d.ds->noncompact_roots;
        Json wk = Json::array();
        for (const auto &e : d.ds->wk_elements)
            wk.push_back(Json{{"matrix", e.matrix}, {"det", e.det}});
        ds["wk_elements"] = std::move(wk);
        ds["hc_lattice"] = "integer";
        Json ch = Json::array();
        for (const auto &c : d.ds->chambers)
            ch.push_back(Json{{"sample", c.sample},
                              {"two_rho_c", c.two_rho_c},
                              {"two_rho_n", c.two_rho_n},
                              {"two_rho", c.two_rho}});
        ds["chambers"] = std::move(ch);
        j["ds"] = std::move(ds);
    }
    return j;
}

std::string serialize(const GroupDatum &datum) {
    return to_json(datum).dump(2) + "\n";
}

Rational vogan_norm(const GroupDatum &datum, const KTypeLabel &tau) {
    return vogan_norm(datum.k, datum.norm, tau);
}

std::vector<KTypeLabel> enumerate_ktypes(const GroupDatum &datum,
                                         const Rational &bound) {
    return enumerate_by_norm(datum.k, datum.norm, bound);
}

MTypeLabel weyl_act(const GroupDatum &datum, const MTypeLabel &sigma) {
    validate_label(datum.m, sigma);
    std::vector<int> coords = highest_weight(datum.m, sigma);
    std::vector<int> moved = mat_apply(datum.weyl_on_mhat.matrix, coords);
    MTypeLabel out = sigma;
    std::size_t c = 0;
    for (std::size_t i = 0; i < datum.m.size(); ++i)
        if (datum.m.atoms()[i] != Atom::Cyclic2)
            out.parts[i] = moved[c++];
    return out;
}

std::vector<std::string> consistency_failures(const GroupDatum &d) {
    std::vector<std::string> out;
    const std::size_t n = d.k.lattice_dim();
    std::vector<int> from_atoms = atom_two_rho_c(d.k);
    if (d.norm.two_rho_c != from_atoms)
        out.push_back("two_rho_c " + to_string(d.norm.two_rho_c) +
                      " != sum of positive compact roots of K " +
                      to_string(from_atoms));
    if (!d.ds)
        return out;
    std::vector<int> from_roots = root_sum(positive_compact_roots(*d.ds), n);
    if (d.norm.two_rho_c != from_roots)
        out.push_back("two_rho_c " + to_string(d.norm.two_rho_c) +
                      " != sum of positive compact roots in ds " +
                      to_string(from_roots));
    for (std::size_t i = 0; i < d.ds->chambers.size(); ++i) {
        const Chamber &c = d.ds->chambers[i];
        std::string ctx = "chamber " + to_string(c.sample);
        if (c.two_rho_c != from_roots)
            out.push_back(ctx + ": two_rho_c " + to_string(c.two_rho_c) +
                          " != " + to_string(from_roots));
        std::vector<int> rho_n =
            root_sum(positive_noncompact_roots(d, c.sample), n);
        if (c.two_rho_n != rho_n)
            out.push_back(ctx + ": two_rho_n " + to_string(c.two_rho_n) +
                          " != sum of positive noncompact roots " +
                          to_string(rho_n));
    }
    return out;
}

} // namespace tempiric
