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

std::map<std::string, long long> by_describe(const CompositeImage &img) {
    std::map<std::string, long long> out;
    for (const auto &[rep, c] : img.terms)
        out[describe(rep)] = c;
    return out;
}

long long block_dim(const std::vector<BoundaryBlock> &bs, const std::string &name) {
    for (const auto &b : bs)
        if (b.block == name)
            return b.dim;
    FAIL("missing block " << name);
    return -1;
}

IntMatrix dense(const MultMatrix &mm) {
    IntMatrix a(mm.rows.size(), std::vector<long long>(mm.cols.size(), 0));
    for (std::size_t j = 0; j < mm.cols.size(); ++j)
        for (const auto &[i, v] : mm.entries[j])
            a[i][j] = v;
    return a;
}

IntMatrix multiply(const IntMatrix &a, const IntMatrix &b) {
    IntMatrix c(a.size(), std::vector<long long>(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j)
                c[i][j] += a[i][k] * b[k][j];
    return c;
}

bool is_identity(const IntMatrix &a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != (i == j ? 1 : 0))
                return false;
    return true;
}

} // namespace

TEST_CASE("vogan bijection on the reference windows") {
    CHECK(vogan_bijection_check(SL2R(), 16).passed());
    CHECK(vogan_bijection_check(SO31(), 25).passed());
    CHECK(vogan_bijection_check(Sp11(), 41).passed());
    CHECK(vogan_bijection_check(Sp11(), 0).passed());
}

TEST_CASE("minimal K-type assignment on Sp11") {
    auto mm = mult_matrix(Sp11(), 41);
    REQUIRE(mm.rows.size() == mm.cols.size());
    for (std::size_t j = 0; j < mm.cols.size(); ++j) {
        const auto &p = mm.cols[j].minimal_ktype().parts;
        int gap = std::abs(p[0] - p[1]);
        if (gap == 0)
            CHECK((!mm.cols[j].is_discrete() && !mm.cols[j].principal().split));
        else if (gap == 1)
            CHECK((!mm.cols[j].is_discrete() && mm.cols[j].principal().split));
        else
            CHECK(mm.cols[j].is_discrete());
        CHECK(mm.rows[j] == mm.cols[j].minimal_ktype());
    }
}

TEST_CASE("triangularity") {
    CHECK(triangularity_check(SO31(), 16).passed());
    CHECK(triangularity_check(SL2R(), 9).passed());
    CHECK(triangularity_check(Sp11(), 20).passed());
    auto mm = mult_matrix(Sp11(), 20);
    auto col = std::find_if(mm.cols.begin(), mm.cols.end(), [](const auto &c) {
        return c.is_discrete() && c.discrete().blattner == L({2, 0});
    });
    REQUIRE(col != mm.cols.end());
    std::size_t j = col - mm.cols.begin();
    for (const auto &tau : {L({0, 0}), L({1, 0}), L({0, 1}), L({1, 1})})
        CHECK(mm.at(*mm.row_index(tau), j) == 0);
    CHECK(mm.at(*mm.row_index(L({2, 0})), j) == 1);
}

TEST_CASE("a non-triangular matrix is reported") {
    auto mm = mult_matrix(SO31(), 16);
    mm.entries[2][0] = 1; // row 0 above the diagonal entry of column 2
    auto r = triangularity_check(mm);
    CHECK(!r.passed());
    CHECK(!r.counterexample().empty());
    mm = mult_matrix(SO31(), 16);
    mm.entries[1][1] = 2;
    CHECK(!triangularity_check(mm).passed());
    CHECK(!vogan_bijection_check(mm).passed());
}

TEST_CASE("composite map") {
    CHECK(by_describe(composite_map(SL2R(), L({0}), 16)) ==
          std::map<std::string, long long>{{"PS(sigma={0},min=0)", 1}});
    CHECK(by_describe(composite_map(SL2R(), L({2}), 16)) ==
          std::map<std::string, long long>{{"PS(sigma={0},min=0)", 1},
                                           {"DS(lambda=(1))", 1}});
    CHECK(by_describe(composite_map(Sp11(), L({0, 0}), 41)) ==
          std::map<std::string, long long>{{"PS(sigma={0},min=(0,0))", 1}});
    CHECK(composite_map(SL2R(), L({3}), 16).exact);
    CHECK_THROWS_AS(composite_map(SL2R(), L({5}), 16), WindowError);
}

TEST_CASE("SL2R composite map by sign resolution") {
    // The odd principal series splits into the n >= 1 and n <= -1 halves.
    auto img = by_describe(composite_map(SL2R(), L({5}), 25));
    CHECK(img == std::map<std::string, long long>{
                     {"PS(sigma={1},min=1)", 1},
                     {"DS(lambda=(2))", 1},
                     {"DS(lambda=(4))", 1}});
}

TEST_CASE("window inversion") {
    for (const auto &[d, b] : {std::pair{&SO31(), 16}, {&SL2R(), 9}, {&SL2R(), 200},
                               {&SO31(), 200}}) {
        auto mm = mult_matrix(*d, b);
        CHECK(mm.all_exact());
        auto inv = invert_window(mm);
        REQUIRE(!inv.refused);
        auto a = dense(mm);
        CHECK(is_identity(multiply(a, inv.inverse)));
        CHECK(is_identity(multiply(inv.inverse, a)));
    }
    auto so = invert_window(mult_matrix(SO31(), 16));
    CHECK(so.inverse == IntMatrix{{1, 0, 0, 0}, {-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}});

    auto sp = mult_matrix(Sp11(), 20);
    CHECK(!sp.all_exact());
    auto refused = invert_window(sp);
    CHECK(refused.refused);
    std::vector<std::string> names;
    for (auto j : refused.unresolved_cols)
        names.push_back(describe(sp.cols[j]));
    CHECK(names == std::vector<std::string>{"PS(sigma={1},min=(0,1))",
                                            "PS(sigma={1},min=(1,0))"});
}

TEST_CASE("aggregate-only columns keep exact cells at the pair's minima") {
    auto mm = mult_matrix(Sp11(), 41);
    for (std::size_t j = 0; j < mm.cols.size(); ++j) {
        if (mm.resolution[j] != Resolution::AggregateOnly)
            continue;
        const auto &own = mm.cols[j].minimal_ktype();
        std::size_t i = *mm.row_index(own);
        CHECK(mm.is_exact(i, j));
        CHECK(mm.at(i, j) == 1);
        auto p = own.parts;
        std::swap(p[0], p[1]);
        std::size_t k = *mm.row_index(IrrepLabel{p});
        CHECK(mm.is_exact(k, j));
        CHECK(mm.at(k, j) == 0);
    }
}

TEST_CASE("dimension identity examples") {
    auto r = dimension_identity_check(Sp11(), ksum({{L({1, 1}), 1}}), ksum({{L({1, 1}), 1}}));
    CHECK(r.passed());
    CHECK(r.values == std::vector<std::pair<std::string, long long>>{{"lhs", 2}, {"rhs", 2}});
    r = dimension_identity_check(Sp11(), ksum({{L({1, 0}), 1}}), ksum({{L({0, 1}), 1}}));
    CHECK(r.values == std::vector<std::pair<std::string, long long>>{{"lhs", 1}, {"rhs", 1}});
    r = dimension_identity_check(SL2R(), ksum({{L({0}), 1}}), ksum({{L({0}), 1}}));
    CHECK(r.values == std::vector<std::pair<std::string, long long>>{{"lhs", 1}, {"rhs", 1}});
}

TEST_CASE("boundary blocks") {
    auto so = boundary_block_dims(SO31(), ksum({{L({1}), 1}}), ksum({{L({1}), 1}}));
    CHECK(block_dim(so, "[P,{0}]") == 1);
    CHECK(block_dim(so, "[P,{-1,1}]") == 2);
    long long total = 0;
    for (const auto &b : so) {
        total += b.dim;
        if (b.block == "[P,{0}]")
            CHECK(b.boundary_case == BoundaryCase::FixedClass);
        if (b.block == "[P,{-1,1}]")
            CHECK(b.boundary_case == BoundaryCase::InequivalentPair);
    }
    CHECK(total == 3);

    auto sl = boundary_block_dims(SL2R(), ksum({{L({1}), 1}}), ksum({{L({1}), 1}}));
    CHECK(block_dim(sl, "[P,{1}]") == 1);
    CHECK(block_dim(sl, "[P,{0}]") == 0);
}

TEST_CASE("property: dimension identity against an independent count") {
    for (const auto *d : {&SL2R(), &SO31(), &Sp11()}) {
        RandomKSums gen(*d, 60, 7);
        for (int i = 0; i < 50; ++i) {
            auto v1 = gen.next();
            auto v2 = gen.next();
            auto r = dimension_identity_check(*d, v1, v2);
            REQUIRE(r.passed());
            // sum over sigma of products of restriction multiplicities
            oracle::Decomp r1, r2;
            for (const auto &[tau, c] : v1)
                for (const auto &[s, k] : oracle::restrict(*d, tau.parts))
                    r1[s] += c * k;
            for (const auto &[tau, c] : v2)
                for (const auto &[s, k] : oracle::restrict(*d, tau.parts))
                    r2[s] += c * k;
            long long want = 0;
            for (const auto &[s, k] : r1)
                if (r2.count(s))
                    want += k * r2[s];
            CHECK(r.values[0].second == want);
        }
    }
}

TEST_CASE("admissibility") {
    auto r = admissibility_check(Sp11(), ksum({{L({3, 2}), 1}}));
    CHECK(r.passed());
    CHECK(support_sigmas(SO31(), ksum({{L({0}), 1}})) == std::vector<MTypeLabel>{L({0})});
    CHECK(admissibility_check(SO31(), ksum({{L({0}), 1}})).passed());
    RandomKSums gen(SL2R(), 100, 3);
    for (int i = 0; i < 20; ++i) {
        auto v = gen.next();
        CHECK(admissibility_check(SL2R(), v).passed());
        for (const auto &s : support_sigmas(SL2R(), v))
            CHECK((s == L({0}) || s == L({1})));
    }
}

TEST_CASE("blattner consistency") {
    CHECK(blattner_consistency_check(SL2R(), 100).passed());
    CHECK(blattner_consistency_check(Sp11(), 100).passed());
    CHECK(blattner_consistency_check(SO31(), 100).passed());
}

TEST_CASE("ktheory summary") {
    auto so = ktheory_summary(SO31(), 16);
    CHECK(so.generators.size() == 4);
    CHECK(so.status == "invertible");
    auto sl = ktheory_summary(SL2R(), 9);
    CHECK(sl.generators.size() == 7);
    CHECK(sl.status == "invertible");
    auto sp = ktheory_summary(Sp11(), 8);
    CHECK(sp.generators == std::vector<std::string>{"PS(sigma={0},min=(0,0))"});
    CHECK(ktheory_summary(Sp11(), 20).status == "refused");
}

TEST_CASE("random K-sums are deterministic") {
    RandomKSums a(Sp11(), 60, kDefaultSeed), b(Sp11(), 60, kDefaultSeed);
    for (int i = 0; i < 20; ++i) {
        auto x = a.next();
        CHECK(x == b.next());
        CHECK(!x.empty());
        for (const auto &[tau, c] : x) {
            CHECK(vogan_norm(Sp11(), tau) <= 60);
            CHECK(c >= 1);
            CHECK(c <= 9); // a label may be drawn up to three times
        }
    }
}

TEST_CASE("verification suite") {
    for (const auto &[name, bound] : {std::pair{"SO31", 25}, {"Sp11", 41}, {"SL2R", 50}}) {
        auto reports = run_verification(builtin(name), bound, kDefaultSeed);
        CHECK(reports.size() == 6);
        for (const auto &r : reports)
            CHECK_MESSAGE(r.passed(), name << " " << r.name() << ": " << r.counterexample());
    }
}
