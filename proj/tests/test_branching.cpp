#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace tempiric;
using testing::ksum;
using testing::L;
using testing::SL2R;
using testing::SO31;
using testing::Sp11;

namespace {

MSum ms(std::initializer_list<std::pair<IrrepLabel, long long>> t) {
    MSum v;
    for (const auto &[l, c] : t)
        v.add(l, c);
    return v;
}

} // namespace

TEST_CASE("restrict_decompose examples") {
    CHECK(restrict_decompose(SL2R(), L({3})) == ms({{L({1}), 1}}));
    CHECK(restrict_decompose(SL2R(), L({-4})) == ms({{L({0}), 1}}));
    CHECK(restrict_decompose(Sp11(), L({1, 1})) ==
          ms({{L({0}), 1}, {L({2}), 1}}));
    CHECK(restrict_decompose(SO31(), L({2})) ==
          ms({{L({-2}), 1}, {L({-1}), 1}, {L({0}), 1}, {L({1}), 1}, {L({2}), 1}}));
    CHECK_THROWS_AS(restrict_decompose(Sp11(), L({1})), LabelError);
}

TEST_CASE("mult_space_dim examples") {
    CHECK(mult_space_dim(SL2R(), L({1}), ksum({{L({1}), 1}})) == 1);
    CHECK(mult_space_dim(Sp11(), L({1}), ksum({{L({1, 0}), 1}})) == 1);
    CHECK(mult_space_dim(SO31(), L({2}), ksum({{L({1}), 1}})) == 0);
    CHECK(mult_space_dim(Sp11(), L({0}), ksum({{L({1, 1}), 3}})) == 3);
}

TEST_CASE("support_sigmas examples") {
    CHECK(support_sigmas(SL2R(), ksum({{L({0}), 1}})) ==
          std::vector<MTypeLabel>{L({0})});
    CHECK(support_sigmas(Sp11(), ksum({{L({2, 0}), 1}})) ==
          std::vector<MTypeLabel>{L({2})});
    CHECK(support_sigmas(SO31(), ksum({{L({1}), 1}, {L({0}), 1}})) ==
          std::vector<MTypeLabel>{L({-1}), L({0}), L({1})});
    CHECK(support_sigmas(Sp11(), ksum({{L({3, 2}), 1}})) ==
          std::vector<MTypeLabel>{L({1}), L({3}), L({5})});
}

TEST_CASE("property: restriction preserves dimension and matches projection") {
    for (const auto *d : {&SL2R(), &SO31(), &Sp11()})
        for (const auto &tau : oracle::label_box(d->k, 8)) {
            auto r = restrict_decompose(*d, IrrepLabel{tau});
            long long dim = 0;
            for (const auto &[s, c] : r)
                dim += c * weyl_dim(d->m, s);
            CHECK(dim == weyl_dim(d->k, IrrepLabel{tau}));
            CHECK(oracle::str_sum(r) == oracle::str(oracle::restrict(*d, tau)));
        }
}

TEST_CASE("property: Frobenius consistency of multiplicity spaces") {
    // mult_space_dim(sigma, V) = dim Hom_M(sigma*, V|_M)
    for (const auto *d : {&SL2R(), &SO31(), &Sp11()}) {
        auto box = oracle::label_box(d->k, 4);
        for (const auto &tau : box) {
            KSum v = ksum({{IrrepLabel{tau}, 2}});
            MSum r = restrict_decompose(*d, v);
            for (const auto &sigma : oracle::label_box(d->m, 6)) {
                IrrepLabel s{sigma};
                FormalSum<IrrepLabel> one;
                one.add(dual(d->m, s), 1);
                CHECK(mult_space_dim(*d, s, v) ==
                      hom_invariant_dim(d->m, one, r));
            }
        }
    }
}

TEST_CASE("property: restriction is additive") {
    auto v1 = ksum({{L({2, 1}), 2}, {L({0, 3}), 1}});
    auto v2 = ksum({{L({1, 1}), 1}});
    auto sum = v1 + v2;
    CHECK(restrict_decompose(Sp11(), sum) ==
          restrict_decompose(Sp11(), v1) + restrict_decompose(Sp11(), v2));
}
