#pragma once

// Lattice diagrams of the minimal K-type labeling of the tempiric dual:
// one node per K-type in a coordinate box, marked by the kind of tempiric
// representation it is the minimal K-type of.

#include "tempiric/tempered.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tempiric {

enum class Marker {
    Circle,   // discrete series
    Square,   // split principal series constituent (paired)
    Triangle, // unsplit principal series
};

std::string_view marker_name(Marker m);

struct DiagramNode {
    KTypeLabel label;
    Marker marker = Marker::Circle;
    std::optional<KTypeLabel> partner; // squares only
    std::string tempiric;
};

struct DiagramSpec {
    std::string group;
    int grid_bound = 0;
    std::size_t dims = 0; // 1 (strip) or 2 (grid)
    std::vector<DiagramNode> nodes;

    std::size_t count(Marker m) const;
};

/// Grid of K-labels with every coordinate bounded by `grid_bound`
/// (Torus1 coordinates range over [-b, b], SU2/SO3 over [0, b]).
/// Throws DomainError unless K has one or two lattice atoms and no Cyclic2.
DiagramSpec figure(const GroupDatum &datum, int grid_bound);

std::string render_text(const DiagramSpec &spec);
std::string render_dot(const DiagramSpec &spec);
std::string render_svg(const DiagramSpec &spec);

} // namespace tempiric
