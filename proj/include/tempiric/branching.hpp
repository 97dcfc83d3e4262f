#pragma once

// Restriction from K to M and the multiplicity spaces [L_sigma (x) V]^M.

#include "tempiric/catalog.hpp"

#include <vector>

namespace tempiric {

using KSum = FormalSum<KTypeLabel>;
using MSum = FormalSum<MTypeLabel>;

MSum restrict_decompose(const GroupDatum &datum, const KTypeLabel &tau);
MSum restrict_decompose(const GroupDatum &datum, const KSum &v);

/// dim [L_sigma (x) V]^M, i.e. the multiplicity of sigma* in V|_M.
long long mult_space_dim(const GroupDatum &datum, const MTypeLabel &sigma,
                         const KSum &v);

/// The sigma with mult_space_dim(sigma, V) > 0, sorted.
std::vector<MTypeLabel> support_sigmas(const GroupDatum &datum, const KSum &v);

} // namespace tempiric
