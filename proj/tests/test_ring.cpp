#include "doctest.h"

#include "cyc/ring.hpp"
#include "cyc/witt.hpp"

using namespace cyc;

TEST_CASE("default polynomials") {
    CHECK(default_poly(2, 2) == std::vector<int>{1, 1, 1});
    CHECK(default_poly(3, 2) == std::vector<int>{1, 0, 1});
    CHECK(default_poly(5, 2) == std::vector<int>{2, 0, 1});
    CHECK(default_poly(7, 1) == std::vector<int>{0, 1});
}

TEST_CASE("scalar examples") {
    auto F4 = Ring::get(2, 2);
    Scalar t = scalar(F4, {0, 1});
    CHECK(scalar_mul(t, t) == scalar(F4, {1, 1}));
    CHECK(frobenius(t) == scalar(F4, {1, 1}));

    auto Z9 = Ring::get(3, 1, 2);
    Scalar three = scalar(Z9, {3});
    CHECK(scalar_mul(three, three).v == 0);
    CHECK_THROWS_AS(scalar_inv(three), nonunit_error);
    CHECK_THROWS_AS(frobenius(three), unsupported_error);

    auto F3 = Ring::get(3);
    CHECK(scalar_inv(scalar(F3, {2})) == scalar(F3, {2}));
    CHECK_THROWS_AS(scalar_add(scalar(F3, {1}), scalar(F4, {1})), usage_error);

    auto F9 = Ring::get(3, 2);
    CHECK(frobenius(scalar(F9, {0, 1})) == scalar(F9, {0, 2}));

    auto F2 = Ring::get(2);
    for (Elt a = 0; a < 2; ++a) CHECK(F2->frob(a) == a);
}

TEST_CASE("ring axioms and units, brute force") {
    for (auto spec : {make_spec(2, 1, 2), make_spec(3, 1, 2), make_spec(2, 2, 2), make_spec(5, 2, 1), make_spec(3, 2, 1)}) {
        auto R = Ring::get(spec);
        const int n = R->size();
        CHECK(n == [&] { int q = 1; for (int i = 0; i < spec.d * spec.k; ++i) q *= spec.p; return q; }());
        for (int a = 0; a < n; ++a) {
            bool unit = false;
            for (int b = 0; b < n; ++b) {
                CHECK(R->mul(a, b) == R->mul(b, a));
                if (R->mul(a, b) == 1) unit = true;
                for (int c = 0; c < n; c += 3) CHECK(R->mul(a, R->add(b, c)) == R->add(R->mul(a, b), R->mul(a, c)));
            }
            CHECK(unit == R->is_unit(a));
            CHECK(unit == (R->to_residue(a) != 0));
            int e = R->val(a);
            if (e < spec.k) {
                Elt z = R->div_p(a, e);
                CHECK(R->mul(R->p_pow(e), z) == a);
                CHECK(R->is_unit(z));
            } else {
                CHECK(a == 0);
            }
            for (int s = 0; s <= spec.k; ++s) {
                Elt r = R->rem_p(a, s);
                CHECK(R->val(R->sub(a, r)) >= s);
            }
        }
    }
}

TEST_CASE("frobenius is a bijective homomorphism of order d") {
    for (auto [p, d] : {std::pair{2, 2}, {3, 2}, {5, 2}, {2, 3}}) {
        auto R = Ring::get(p, d);
        std::vector<int> seen(R->size(), 0);
        for (int a = 0; a < R->size(); ++a) {
            Elt x = a;
            for (int i = 0; i < d; ++i) x = R->frob(x);
            CHECK(x == a);
            CHECK(R->frob_inv(R->frob(a)) == a);
            seen[R->frob(a)]++;
            for (int b = 0; b < R->size(); b += 2) {
                CHECK(R->frob(R->add(a, b)) == R->add(R->frob(a), R->frob(b)));
                CHECK(R->frob(R->mul(a, b)) == R->mul(R->frob(a), R->frob(b)));
            }
        }
        for (int c : seen) CHECK(c == 1);
    }
}

TEST_CASE("carry cocycle") {
    auto F2 = Ring::get(2), F3 = Ring::get(3);
    CHECK(carry_cocycle(*F2, 1, 1) == 1);
    CHECK(carry_cocycle(*F3, 1, 1) == 2);
    CHECK(carry_cocycle(*F3, 1, 2) == 0);
    for (auto R : {Ring::get(3, 2), Ring::get(5), Ring::get(2, 2)})
        for (int x = 0; x < R->size(); ++x) {
            CHECK(carry_cocycle(*R, x, 0) == 0);
            for (int y = 0; y < R->size(); ++y) CHECK(carry_cocycle(*R, x, y) == carry_cocycle(*R, y, x));
        }
}

TEST_CASE("witt examples") {
    auto F2 = Ring::get(2), F3 = Ring::get(3);
    CHECK(witt_add({F2, 1, 0}, {F2, 1, 0}) == Witt2{F2, 0, 1});
    CHECK(witt_add({F3, 1, 0}, {F3, 2, 0}) == Witt2{F3, 0, 0});
    CHECK(witt_mul({F3, 2, 1}, {F3, 1, 2}) == Witt2{F3, 2, 2});
    CHECK(witt_ghost_iso({F2, 0, 1}) == 2);
    CHECK(witt_ghost_iso({F2, 1, 1}) == 3);
    CHECK_THROWS_AS(witt_ghost_iso({Ring::get(2, 2), 0, 1}), unsupported_error);
    for (auto R : {F2, F3, Ring::get(2, 2)})
        for (auto u : witt_elements(R)) {
            CHECK(witt_add(u, witt_neg(u)) == Witt2{R, 0, 0});
            CHECK(witt_mul(u, {R, 1, 0}) == u);
        }
}

TEST_CASE("p times one generates the kernel of the projection") {
    for (auto R : {Ring::get(2), Ring::get(3), Ring::get(5), Ring::get(2, 2)}) {
        Witt2 s{R, 0, 0};
        for (int i = 0; i < R->p(); ++i) s = witt_add(s, {R, 1, 0});
        CHECK(s.x0 == 0);
        CHECK(R->is_unit(s.x1));
    }
}
