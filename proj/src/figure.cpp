#include "tempiric/figure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace tempiric {

std::string_view marker_name(Marker m) {
    switch (m) {
    case Marker::Circle:
        return "circle";
    case Marker::Square:
        return "square";
    case Marker::Triangle:
        return "triangle";
    }
    return "?";
}

std::size_t DiagramSpec::count(Marker m) const {
    return static_cast<std::size_t>(
        std::count_if(nodes.begin(), nodes.end(),
                      [m](const DiagramNode &n) { return n.marker == m; }));
}

DiagramSpec figure(const GroupDatum &datum, int grid_bound) {
    if (grid_bound < 0)
        throw DomainError("grid bound must be nonnegative");
    if (datum.k.parity_dim() != 0 || datum.k.lattice_dim() < 1 ||
        datum.k.lattice_dim() > 2)
        throw DomainError("figures need K with one or two lattice atoms and "
                          "no Cyclic2 atoms");
    DiagramSpec spec;
    spec.group = datum.name;
    spec.grid_bound = grid_bound;
    spec.dims = datum.k.lattice_dim();

    std::vector<KTypeLabel> grid;
    KTypeLabel cur{std::vector<int>(datum.k.size(), 0)};
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == datum.k.size()) {
            grid.push_back(cur);
            return;
        }
        int lo = datum.k.atoms()[i] == Atom::Torus1 ? -grid_bound : 0;
        for (int x = lo; x <= grid_bound; ++x) {
            cur.parts[i] = x;
            rec(i + 1);
        }
    };
    rec(0);

    Rational bound = 0;
    for (const auto &tau : grid)
        bound = std::max(bound, vogan_norm(datum, tau));
    std::map<KTypeLabel, TempiricRep> owner;
    std::map<PrincipalClass, std::vector<KTypeLabel>> class_minima;
    for (auto &rep : tempiric_window(datum, bound)) {
        if (!rep.is_discrete())
            class_minima[rep.principal().cls].push_back(rep.minimal_ktype());
        KTypeLabel key = rep.minimal_ktype();
        if (!owner.emplace(key, std::move(rep)).second)
            throw InternalError("K-type " + to_string(key) +
                                " is minimal for two tempiric representations");
    }

    for (const auto &tau : grid) {
        auto it = owner.find(tau);
        if (it == owner.end())
            throw InternalError("K-type " + to_string(tau) +
                                " is not a minimal K-type in the window");
        const TempiricRep &rep = it->second;
        DiagramNode node{tau, Marker::Circle, std::nullopt, describe(rep)};
        if (!rep.is_discrete()) {
            const auto &pc = rep.principal();
            if (pc.split) {
                node.marker = Marker::Square;
                for (const auto &m : class_minima[pc.cls])
                    if (m != tau)
                        node.partner = m;
            } else {
                node.marker = Marker::Triangle;
            }
        }
        spec.nodes.push_back(std::move(node));
    }
    return spec;
}

namespace {

char glyph(Marker m) {
    switch (m) {
    case Marker::Circle:
        return 'O';
    case Marker::Square:
        return '#';
    case Marker::Triangle:
        return '^';
    }
    return '?';
}

std::string header(const DiagramSpec &spec) {
    return spec.group + " grid_bound=" + std::to_string(spec.grid_bound) +
           " (derived: minimal K-type labeling of the tempiric dual)";
}

// Pairs listed once, smaller label first.
std::vector<std::pair<KTypeLabel, KTypeLabel>> pairs(const DiagramSpec &spec) {
    std::vector<std::pair<KTypeLabel, KTypeLabel>> out;
    for (const auto &n : spec.nodes)
        if (n.partner && n.label < *n.partner)
            out.emplace_back(n.label, *n.partner);
    return out;
}

std::string counts(const DiagramSpec &spec) {
    std::ostringstream os;
    os << "triangles=" << spec.count(Marker::Triangle)
       << " squares=" << spec.count(Marker::Square)
       << " pairs=" << pairs(spec).size()
       << " circles=" << spec.count(Marker::Circle);
    return os.str();
}

// Plot position: the label coordinates themselves.
std::pair<int, int> position(const DiagramNode &n) {
    return {n.label.parts[0], n.label.parts.size() > 1 ? n.label.parts[1] : 0};
}

} // namespace

std::string render_text(const DiagramSpec &spec) {
    std::ostringstream os;
    os << "# figure " << header(spec) << "\n";
    os << "# O discrete series, # split principal series (paired), "
          "^ unsplit principal series\n";
    std::map<std::pair<int, int>, char> cell;
    int xmin = 0, xmax = 0, ymax = 0;
    for (const auto &n : spec.nodes) {
        auto p = position(n);
        cell[p] = glyph(n.marker);
        xmin = std::min(xmin, p.first);
        xmax = std::max(xmax, p.first);
        ymax = std::max(ymax, p.second);
    }
    auto pad = [](int v) {
        std::string s = std::to_string(v);
        return std::string(s.size() < 4 ? 4 - s.size() : 0, ' ') + s;
    };
    for (int y = ymax; y >= 0; --y) {
        os << (spec.dims == 2 ? pad(y) : std::string("    ")) << " |";
        for (int x = xmin; x <= xmax; ++x) {
            auto it = cell.find({x, y});
            os << "   " << (it == cell.end() ? '.' : it->second);
        }
        os << "\n";
    }
    os << "     +";
    for (int x = xmin; x <= xmax; ++x)
        os << "----";
    os << "\n      ";
    for (int x = xmin; x <= xmax; ++x)
        os << pad(x);
    os << "\n";
    os << "# pairs\n";
    for (const auto &[a, b] : pairs(spec))
        os << to_string(a) << " -- " << to_string(b) << "\n";
    os << "# " << counts(spec) << "\n";
    return os.str();
}

std::string render_dot(const DiagramSpec &spec) {
    std::ostringstream os;
    os << "graph \"" << spec.group << "\" {\n";
    os << "  // " << header(spec) << "\n";
    os << "  // " << counts(spec) << "\n";
    os << "  node [fixedsize=true, width=0.3, label=\"\"];\n";
    for (const auto &n : spec.nodes) {
        auto [x, y] = position(n);
        os << "  \"" << to_string(n.label) << "\" [shape=" << marker_name(n.marker)
           << ", pos=\"" << x << "," << y << "!\", tooltip=\"" << n.tempiric
           << "\"];\n";
    }
    for (const auto &[a, b] : pairs(spec))
        os << "  \"" << to_string(a) << "\" -- \"" << to_string(b) << "\";\n";
    os << "}\n";
    return os.str();
}

std::string render_svg(const DiagramSpec &spec) {
    constexpr int step = 40;
    constexpr int margin = 30;
    int xmin = 0, xmax = 0, ymax = 0;
    for (const auto &n : spec.nodes) {
        auto p = position(n);
        xmin = std::min(xmin, p.first);
        xmax = std::max(xmax, p.first);
        ymax = std::max(ymax, p.second);
    }
    const int width = (xmax - xmin) * step + 2 * margin;
    const int height = ymax * step + 2 * margin;
    auto px = [&](int x) { return margin + (x - xmin) * step; };
    auto py = [&](int y) { return margin + (ymax - y) * step; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
       << height << "\">\n";
    os << "<!-- " << header(spec) << " -->\n";
    os << "<!-- " << counts(spec) << " -->\n";
    for (const auto &[a, b] : pairs(spec)) {
        DiagramNode na, nb;
        na.label = a;
        nb.label = b;
        auto [x1, y1] = position(na);
        auto [x2, y2] = position(nb);
        os << "<line x1=\"" << px(x1) << "\" y1=\"" << py(y1) << "\" x2=\""
           << px(x2) << "\" y2=\"" << py(y2) << "\" stroke=\"black\"/>\n";
    }
    for (const auto &n : spec.nodes) {
        auto [x, y] = position(n);
        int cx = px(x), cy = py(y);
        switch (n.marker) {
        case Marker::Circle:
            os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"8\"";
            break;
        case Marker::Square:
            os << "<rect x=\"" << cx - 8 << "\" y=\"" << cy - 8
               << "\" width=\"16\" height=\"16\"";
            break;
        case Marker::Triangle:
            os << "<polygon points=\"" << cx << "," << cy - 9 << " " << cx - 8
               << "," << cy + 7 << " " << cx + 8 << "," << cy + 7 << "\"";
            break;
        }
        os << " data-ktype=\"" << to_string(n.label) << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace tempiric
