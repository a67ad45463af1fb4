#include "doctest.h"

#include "cyc/dgdiff.hpp"
#include "cyc/lift.hpp"

using namespace cyc;

namespace {

void check_all(const DGElem& X, const LeftSpl& S1, const LeftSpl& S2, const DGExt& E) {
    auto r = check_dg_differences(X, S1, S2, E);
    CHECK(r.sub_is_splitting);
    CHECK(r.diff_is_extension);
    CHECK(r.strict_map_chain);
    CHECK(r.self_diff_split);
    CHECK(r.ext_roof);
    CHECK(r.split_roof);
}

}  // namespace

TEST_CASE("dg differences from module data") {
    Rng rng(33);
    for (auto R : {Ring::get(2), Ring::get(2, 1, 2), Ring::get(3, 1, 2)}) {
        for (int t = 0; t < 8; ++t) {
            CAPTURE(R->name());
            CAPTURE(t);
            auto [M, C] = random_split_elementary(R, uniform(rng, 1, 2), rng);
            auto [X, S] = dg_from_module(M, C);
            REQUIRE(is_dg_elementary(X));
            REQUIRE(is_left_splitting(X, S));
            CHECK(is_strict_left(X, S));
            DGExt E = dg_ext_from_module(M, random_extension(M, rng));
            REQUIRE(is_dg_extension(X, E));
            auto [X2, S2] = dg_from_module(M, split_minus_ext(M, C, random_extension(M, rng)));
            REQUIRE(is_left_splitting(X, S2));
            check_all(X, S, S2, E);
        }
    }
}

TEST_CASE("dg differences on the lifted splitting") {
    Rng rng(5);
    for (auto R : {Ring::get(2, 1, 2), Ring::get(3, 1, 2)}) {
        for (int i = -1; i <= 1; ++i) {
            CAPTURE(R->name());
            CAPTURE(i);
            DGSplittings D = dg_splittings(lifted(one_term(R, i)));
            DGElem X{D.B, D.cCp.cx, D.cA.cx, D.b, D.a};
            LeftSpl S{D.cCl.cx, D.l, D.bl};
            REQUIRE(is_dg_elementary(X));
            REQUIRE(is_left_splitting(X, S));
            CHECK(is_strict_left(X, S));
            DGExt E = trivial_dg_extension(X);
            LeftSpl S2 = dg_sub(X, S, E);
            check_all(X, S, S2, E);
        }
    }
}
