#include "doctest.h"

#include "cyc/difference.hpp"

using namespace cyc;

TEST_CASE("difference functors on random module data") {
    Rng rng(21);
    for (auto R : {Ring::get(2), Ring::get(2, 1, 2), Ring::get(3, 1, 2)}) {
        for (int t = 0; t < 15; ++t) {
            auto [X, C] = random_split_elementary(R, uniform(rng, 1, 3), rng);
            REQUIRE(is_elementary(X));
            REQUIRE(is_splitting(X, C));
            ModExt E = random_extension(X, rng);
            REQUIRE(is_extension(X, E));
            ModSplit Cp = split_minus_ext(X, C, random_extension(X, rng));
            CHECK(is_splitting(X, Cp));
            ModExt D = split_minus_split(X, Cp, C);
            CHECK(is_extension(X, D));
            CHECK(is_split_extension(X, split_minus_split(X, C, C)));
            CHECK(check_split_iso(X, C, Cp));
            CHECK(check_ext_iso(X, C, E));
            CHECK(is_split_extension(X, trivial_extension(X)));
            if (R->k() == 1) CHECK(is_split_extension(X, D));
        }
    }
}
