#include "tempiric/branching.hpp"

#include <algorithm>
#include <cstdlib>

namespace tempiric {

MSum restrict_decompose(const GroupDatum &datum, const KTypeLabel &tau) {
    validate_label(datum.k, tau);
    MSum out;
    switch (datum.branching.kind) {
    case BranchingKind::Parity: {
        int n = tau.parts[0];
        out.add(MTypeLabel{{((n % 2) + 2) % 2}}, 1);
        break;
    }
    case BranchingKind::TorusRestriction: {
        int j = tau.parts[0];
        for (int n = -j; n <= j; ++n)
            out.add(MTypeLabel{{n}}, 1);
        break;
    }
    case BranchingKind::ClebschDiagonal: {
        int a = tau.parts[0];
        int b = tau.parts[1];
        for (int c = std::abs(a - b); c <= a + b; c += 2)
            out.add(MTypeLabel{{c}}, 1);
        break;
    }
    }
    return out;
}

MSum restrict_decompose(const GroupDatum &datum, const KSum &v) {
    MSum out;
    for (const auto &[tau, m] : v)
        out.add(restrict_decompose(datum, tau), m);
    return out;
}

long long mult_space_dim(const GroupDatum &datum, const MTypeLabel &sigma,
                         const KSum &v) {
    return restrict_decompose(datum, v).coefficient(dual(datum.m, sigma));
}

std::vector<MTypeLabel> support_sigmas(const GroupDatum &datum, const KSum &v) {
    std::vector<MTypeLabel> out;
    for (const auto &[sigma_dual, m] : restrict_decompose(datum, v))
        if (m > 0)
            out.push_back(dual(datum.m, sigma_dual));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace tempiric
