#include "doctest.h"

#include "cyc/splitting.hpp"

using namespace cyc;

TEST_CASE("orbit cocycle examples") {
    auto F2 = Ring::get(2);
    Split01 S(F2, 2);
    Vec c = S.cocycle({1, 0}, {0, 1});
    // class of e1 (x) e2
    std::vector<std::pair<int, Vec>> xs{{0, {1, 0}}, {0, {0, 1}}};
    CHECK(c == S.T.coinv.coords(pure_tensor(S.T.E, xs).second));
    CHECK(S.cocycle({1, 1}, {0, 0}) == Vec(S.T.coinv.rank(), 0));
}

TEST_CASE("cocycle identities") {
    for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        auto rep = check_cocycle(Ring::get(p), n);
        CHECK(rep.normalized);
        CHECK(rep.symmetric);
        CHECK(rep.associative);
        CHECK(rep.boundary);
        CHECK(rep.kappa_free);
        CHECK(rep.group);
    }
}

TEST_CASE("C01 of F_p is cyclic of order p^2") {
    for (int p : {2, 3, 5}) {
        auto [order, cyclic] = c01_order_cyclic(Ring::get(p));
        CHECK(order == p * p);
        CHECK(cyclic);
    }
}

TEST_CASE("multiplication of the splitting") {
    auto rep = check_split_mul(Ring::get(2), 1, 0, 1);
    CHECK(rep.ok());
    CHECK(rep.cases == 64);
    CHECK(check_split_mul(Ring::get(3), 1, 200, 2).ok());
    CHECK(check_split_mul(Ring::get(2, 2), 1, 200, 3).ok());
    CHECK(check_split_mul(Ring::get(2), 2, 100, 4).ok());
}

TEST_CASE("regular endomorphisms reproduce W_2") {
    for (auto [p, d] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
        auto rep = check_regular_endomorphisms(Ring::get(p, d));
        CHECK(rep.count == p * p * (d == 2 ? p * p : 1));
        CHECK(rep.are_right_mults);
        CHECK(rep.add_table);
        CHECK(rep.mul_table);
        CHECK(rep.square_zero);
    }
}
