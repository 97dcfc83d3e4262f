#include "tempiric/report.hpp"

#include <algorithm>
#include <sstream>

namespace tempiric {

namespace {

// Minimal CSV quoting: fields containing separators are wrapped in quotes.
std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string parameters(const TempiricRep &rep) {
    if (rep.is_discrete())
        return "lambda=" + to_string(rep.discrete().hc_param);
    return "sigma=" + describe(rep.principal().cls);
}

} // namespace

Json label_json(const IrrepLabel &label) { return Json(label.parts); }

Json ktypes_json(const GroupDatum &datum, const Rational &bound) {
    Json out = Json::array();
    for (const auto &tau : enumerate_ktypes(datum, bound))
        out.push_back(Json{{"ktype", to_string(tau)},
                           {"dim", weyl_dim(datum.k, tau)},
                           {"vogan_norm", to_string(vogan_norm(datum, tau))}});
    return out;
}

std::string ktypes_csv(const GroupDatum &datum, const Rational &bound) {
    std::ostringstream os;
    os << "ktype,dim,vogan_norm\n";
    for (const auto &tau : enumerate_ktypes(datum, bound))
        os << csv_field(to_string(tau)) << "," << weyl_dim(datum.k, tau) << ","
           << to_string(vogan_norm(datum, tau)) << "\n";
    return os.str();
}

Json branch_json(const GroupDatum &datum,
                 const std::vector<KTypeLabel> &ktypes) {
    Json out = Json::array();
    for (const auto &tau : ktypes) {
        Json parts = Json::array();
        for (const auto &[sigma, m] : restrict_decompose(datum, tau))
            parts.push_back(
                Json{{"mtype", to_string(sigma)}, {"multiplicity", m}});
        out.push_back(Json{{"ktype", to_string(tau)},
                           {"restriction", std::move(parts)}});
    }
    return out;
}

std::string branch_csv(const GroupDatum &datum,
                       const std::vector<KTypeLabel> &ktypes) {
    std::ostringstream os;
    os << "ktype,mtype,multiplicity\n";
    for (const auto &tau : ktypes)
        for (const auto &[sigma, m] : restrict_decompose(datum, tau))
            os << csv_field(to_string(tau)) << ","
               << csv_field(to_string(sigma)) << "," << m << "\n";
    return os.str();
}

Json tempiric_table_json(const GroupDatum &datum, const Rational &bound) {
    Json out = Json::array();
    for (const auto &rep : tempiric_window(datum, bound)) {
        bool split = !rep.is_discrete() && rep.principal().split;
        out.push_back(
            Json{{"kind", rep.is_discrete() ? "DS" : "PSConstituent"},
                 {"parameters", parameters(rep)},
                 {"minimal_ktype", to_string(rep.minimal_ktype())},
                 {"split", split},
                 {"vogan_norm",
                  to_string(vogan_norm(datum, rep.minimal_ktype()))}});
    }
    return out;
}

std::string tempiric_table_csv(const GroupDatum &datum, const Rational &bound) {
    std::ostringstream os;
    os << "kind,parameters,minimal_ktype,split,vogan_norm\n";
    for (const auto &row : tempiric_table_json(datum, bound))
        os << row["kind"].get<std::string>() << ","
           << csv_field(row["parameters"].get<std::string>()) << ","
           << csv_field(row["minimal_ktype"].get<std::string>()) << ","
           << (row["split"].get<bool>() ? "true" : "false") << ","
           << row["vogan_norm"].get<std::string>() << "\n";
    return os.str();
}

Json matrix_json(const MultMatrix &mm, const WindowInverse &inv) {
    Json out;
    Json rows = Json::array(), cols = Json::array(), res = Json::array();
    for (const auto &tau : mm.rows)
        rows.push_back(to_string(tau));
    for (std::size_t j = 0; j < mm.cols.size(); ++j) {
        cols.push_back(describe(mm.cols[j]));
        res.push_back(std::string(resolution_name(mm.resolution[j])));
    }
    Json entries = Json::array(), exact = Json::array();
    for (std::size_t j = 0; j < mm.cols.size(); ++j) {
        for (const auto &[i, v] : mm.entries[j])
            entries.push_back(Json::array({i, j, v}));
        for (auto i : mm.exact_rows[j])
            exact.push_back(Json::array({i, j}));
    }
    // entries sorted by (row, col)
    std::sort(entries.begin(), entries.end());
    std::sort(exact.begin(), exact.end());
    out["rows"] = std::move(rows);
    out["cols"] = std::move(cols);
    out["entries"] = std::move(entries);
    out["resolution"] = std::move(res);
    out["exact_cells"] = std::move(exact);
    if (inv.refused) {
        Json names = Json::array();
        for (auto j : inv.unresolved_cols)
            names.push_back(describe(mm.cols[j]));
        out["refusal"] = Json{
            {"reason", "aggregate-only columns: split constituents without "
                       "a resolved K-type distribution"},
            {"columns", std::move(names)}};
    } else {
        Json tri = Json::array();
        for (std::size_t i = 0; i < inv.inverse.size(); ++i)
            for (std::size_t j = 0; j < inv.inverse[i].size(); ++j)
                if (inv.inverse[i][j] != 0)
                    tri.push_back(Json::array({i, j, inv.inverse[i][j]}));
        out["inverse"] = std::move(tri);
    }
    return out;
}

std::string matrix_csv(const MultMatrix &mm, const WindowInverse &inv) {
    Json j = matrix_json(mm, inv);
    std::ostringstream os;
    os << "section,i,j,value\n";
    for (std::size_t i = 0; i < mm.rows.size(); ++i)
        os << "row," << i << ",," << csv_field(to_string(mm.rows[i])) << "\n";
    for (std::size_t c = 0; c < mm.cols.size(); ++c)
        os << "col," << c << "," << resolution_name(mm.resolution[c]) << ","
           << csv_field(describe(mm.cols[c])) << "\n";
    for (const auto &e : j["entries"])
        os << "entry," << e[0] << "," << e[1] << "," << e[2] << "\n";
    if (j.contains("inverse"))
        for (const auto &e : j["inverse"])
            os << "inverse," << e[0] << "," << e[1] << "," << e[2] << "\n";
    else
        for (auto c : inv.unresolved_cols)
            os << "refusal," << c << ",," << csv_field(describe(mm.cols[c]))
               << "\n";
    return os.str();
}

Json verification_json(const std::vector<VerificationReport> &reports) {
    Json out = Json::array();
    for (const auto &r : reports) {
        Json values = Json::object();
        for (const auto &[k, v] : r.values)
            values[k] = v;
        Json row{{"check", r.name()}, {"passed", r.passed()}};
        if (!r.passed())
            row["counterexample"] = r.counterexample();
        row["values"] = std::move(values);
        out.push_back(std::move(row));
    }
    return out;
}

std::string verification_text(const std::vector<VerificationReport> &reports) {
    std::ostringstream os;
    for (const auto &r : reports) {
        os << (r.passed() ? "PASS " : "FAIL ") << r.name();
        for (const auto &[k, v] : r.values)
            os << " " << k << "=" << v;
        if (!r.passed())
            os << ": " << r.counterexample();
        os << "\n";
    }
    return os.str();
}

IrrepLabel parse_label(std::string_view text) {
    std::string s(text);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    IrrepLabel out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            out.parts.push_back(std::stoi(part, &used));
            if (used != part.size())
                throw std::invalid_argument(part);
        } catch (const std::exception &) {
            throw ParseError("malformed label '" + std::string(text) + "'");
        }
    }
    if (out.parts.empty())
        throw ParseError("empty label");
    return out;
}

} // namespace tempiric
