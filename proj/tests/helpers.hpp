#pragma once

#include "tempiric/cktheory.hpp"

#include <initializer_list>
#include <utility>

namespace testing {

inline tempiric::IrrepLabel L(std::initializer_list<int> parts) {
    return tempiric::IrrepLabel{std::vector<int>(parts)};
}

inline tempiric::KSum
ksum(std::initializer_list<std::pair<tempiric::IrrepLabel, long long>> terms) {
    tempiric::KSum v;
    for (const auto &[l, c] : terms)
        v.add(l, c);
    return v;
}

inline const tempiric::GroupDatum &SL2R() {
    static const auto d = tempiric::builtin("SL2R");
    return d;
}
inline const tempiric::GroupDatum &SO31() {
    static const auto d = tempiric::builtin("SO31");
    return d;
}
inline const tempiric::GroupDatum &Sp11() {
    static const auto d = tempiric::builtin("Sp11");
    return d;
}

} // namespace testing
