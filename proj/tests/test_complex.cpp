#include "doctest.h"

#include "cyc/complex.hpp"
#include "cyc/random.hpp"

using namespace cyc;

namespace {

Mat m1(const RingPtr& R, int v) {
    Mat m(R, 1, 1);
    m(0, 0) = R->from_int(v);
    return m;
}

}  // namespace

TEST_CASE("cone of R[0]") {
    auto F2 = Ring::get(2);
    Cx E = one_term(F2, 0);
    Cx C = cone(E, E, identity_map(E));
    CHECK(C.rank(0) == 1);
    CHECK(C.rank(1) == 1);
    CHECK(C.diff(1) == Mat::identity(F2, 1));
    CHECK(is_acyclic(C));
    CHECK(homology(C).empty());
    // 0 -> E -> Cone -> E[1] -> 0
    CMap beta = cone_in(E, E), alpha = cone_out(E, E);
    CHECK(is_exact_seq(E, C, shift(E, 1), beta, alpha));
    CHECK(is_zero_map(E, shift(E, 1), compose(E, C, shift(E, 1), beta, alpha)));
    // Cone(R[i]) differential is +id for all i; only the connecting sign shows
    auto Z9 = Ring::get(3, 1, 2);
    for (int i = -2; i <= 2; ++i) {
        Cx Ei = one_term(Z9, i);
        Cx Ci = cone(Ei, Ei, identity_map(Ei));
        Elt s = Ci.diff(i + 1)(0, 0);
        CHECK(s == ((i % 2 == 0) ? 1 : Z9->neg(1)));
    }
}

TEST_CASE("homology profiles") {
    auto Z4 = Ring::get(2, 1, 2);
    Cx E = one_term(Z4, 0);
    CHECK(homology(E) == std::map<int, std::vector<int>>{{0, {2}}});
    Cx T = free_complex(Z4, 0, {1, 1}, {Mat(Z4, 1, 0), m1(Z4, 2)});
    CHECK(homology(T) == std::map<int, std::vector<int>>{{0, {1}}, {1, {1}}});
}

TEST_CASE("random complexes: acyclic cones, shift, basis invariance") {
    Rng rng(17);
    for (auto R : {Ring::get(2), Ring::get(3), Ring::get(2, 1, 2), Ring::get(3, 1, 2), Ring::get(2, 2, 2)}) {
        for (int t = 0; t < 20; ++t) {
            RandomCxOptions o;
            o.lo = uniform(rng, -2, 0);
            o.hi = o.lo + uniform(rng, 0, 3);
            Cx E = random_complex(R, o, rng);
            CHECK(is_valid(E));
            CHECK(is_acyclic(cone(E, E, identity_map(E))));
            auto h = homology(E);
            auto hs = homology(shift(E, 3));
            for (auto& [n, ex] : h) CHECK(hs[n + 3] == ex);
            CHECK(homology(shift(shift(E, 1), -1)) == h);
            std::map<int, Mat> P;
            for (int n = E.lo; n <= E.hi(); ++n) P[n] = random_invertible(R, E.rank(n), rng);
            CHECK(homology(change_basis(E, P)) == h);
            // f = 0: Cone(0) = E' + E[1]
            auto hz = homology(cone(E, E, CMap{}));
            for (int n = E.lo; n <= E.hi() + 1; ++n) {
                auto a = h.count(n) ? h[n] : std::vector<int>{};
                auto b = h.count(n - 1) ? h[n - 1] : std::vector<int>{};
                a.insert(a.end(), b.begin(), b.end());
                std::sort(a.begin(), a.end());
                CHECK((hz.count(n) ? hz[n] : std::vector<int>{}) == a);
            }
            // truncation
            for (int m = E.lo; m <= E.hi(); ++m) {
                auto hm = homology(truncate(E, m, m));
                CHECK(hm.size() <= 1);
                CHECK((hm.count(m) ? hm[m] : std::vector<int>{}) == (h.count(m) ? h[m] : std::vector<int>{}));
                auto hge = homology(truncate_ge(E, m));
                for (int n = E.lo; n <= E.hi(); ++n)
                    CHECK((hge.count(n) ? hge[n] : std::vector<int>{}) == (n >= m && h.count(n) ? h[n] : std::vector<int>{}));
            }
            CHECK(module_length(truncate_ge(E, E.lo), E.hi()) == module_length(E, E.hi()));
        }
    }
}

TEST_CASE("quasi-isomorphism via cones agrees with homology comparison") {
    Rng rng(23);
    auto F2 = Ring::get(2);
    int qis = 0;
    for (int t = 0; t < 50; ++t) {
        RandomCxOptions o;
        o.lo = 0;
        o.hi = 2;
        Cx S = random_complex(F2, o, rng), T = random_complex(F2, o, rng);
        // random chain map: solve for f_n degree by degree through the zero-map trick
        CMap f;
        // projections onto homology-free summands are hard to sample; use f = P-conjugated identity when ranks agree
        bool same = true;
        for (int n = 0; n <= 2; ++n) same = same && S.rank(n) == T.rank(n);
        if (!same) T = S;
        std::map<int, Mat> P;
        for (int n = 0; n <= 2; ++n) P[n] = random_invertible(F2, S.rank(n), rng);
        T = change_basis(S, P);
        for (int n = 0; n <= 2; ++n) f.f[n] = *inverse(P[n]);
        if (t % 2) {
            // kill a random degree: still a chain map only if we zero consistently, so use 0
            f = CMap{};
        }
        REQUIRE(is_chain_map(S, T, f));
        bool qi = is_quasi_iso(S, T, f);
        bool hom_iso = true;
        auto hS = homology(S);
        for (int n = 0; n <= 2; ++n) {
            Cx M = S;
            // induced map on homology: image of cycles modulo boundaries
            Span Z = cycles(S, n);
            Span img = span_sum(span_image(Z, f.at(n, S, T)), boundaries(T, n));
            if (img.length() != cycles(T, n).length()) hom_iso = false;
            Span K = preimage_in(Z, f.at(n, S, T), boundaries(T, n));
            if (K.length() != boundaries(S, n).length()) hom_iso = false;
        }
        CHECK(qi == hom_iso);
        qis += qi;
    }
    CHECK(qis > 0);
}

TEST_CASE("filtered truncation") {
    Rng rng(29);
    for (auto R : {Ring::get(2), Ring::get(3), Ring::get(2, 1, 2)}) {
        for (int t = 0; t < 25; ++t) {
            RandomCxOptions o;
            o.lo = -1;
            o.hi = 2;
            o.weighted = true;
            o.wlo = -2;
            o.whi = 1;
            Cx E = random_complex(R, o, rng);
            // weights preserved by d
            for (int n = E.lo + 1; n <= E.hi(); ++n)
                for (int j = -3; j <= 2; ++j) CHECK(span_leq(span_image(filt(E, n, j), E.diff(n)), filt(E, n - 1, j)));
            Cx plain = E;
            plain.wt.clear();
            for (int a = -1; a <= 2; ++a) {
                CHECK(homology(ftruncate_ge(plain, a)) == homology(truncate_ge(plain, a)));
                CHECK(homology(ftruncate_le(plain, a)) == homology(truncate_le(plain, a)));
                for (int n = E.lo; n <= E.hi(); ++n) {
                    CHECK(module_length(ftruncate_ge(plain, a), n) == module_length(truncate_ge(plain, a), n));
                    CHECK(module_length(ftruncate_le(plain, a), n) == module_length(truncate_le(plain, a), n));
                }
            }
            // gr^i tau^F_{>=n} = tau_{>=n-i} gr^i for the decreasing filtration, same for <= and [n,m]
            for (int a = -1; a <= 1; ++a)
                for (int i = -2; i <= 1; ++i) {
                    Cx l1 = graded(ftruncate_ge(E, a), i), r1 = truncate_ge(graded(E, i), a - i);
                    Cx l2 = graded(ftruncate_le(E, a), i), r2 = truncate_le(graded(E, i), a - i);
                    Cx l3 = graded(ftruncate(E, a, a + 1), i), r3 = truncate(graded(E, i), a - i, a + 1 - i);
                    for (int n = E.lo; n <= E.hi(); ++n) {
                        CHECK(module_length(l1, n) == module_length(r1, n));
                        CHECK(module_length(l2, n) == module_length(r2, n));
                        CHECK(module_length(l3, n) == module_length(r3, n));
                    }
                }
        }
    }
}

TEST_CASE("quasiexact sequences and compression") {
    Rng rng(31);
    auto Z4 = Ring::get(2, 1, 2);
    Cx K = cone(one_term(Z4, 0), one_term(Z4, 0), identity_map(one_term(Z4, 0)));
    Cx Z = zero_complex(Z4);
    CHECK(is_quasiexact(Z, K, K, CMap{}, identity_map(K)));
    for (int t = 0; t < 20; ++t) {
        RandomCxOptions o;
        o.lo = 0;
        o.hi = 2;
        Cx A = random_complex(Z4, o, rng), B = random_complex(Z4, o, rng);
        Cx S = direct_sum(B, A);
        CMap inc, pr;
        for (int n = 0; n <= 2; ++n) {
            Mat i(Z4, B.rank(n), S.rank(n)), p(Z4, S.rank(n), A.rank(n));
            for (int j = 0; j < B.rank(n); ++j) i(j, j) = 1;
            for (int j = 0; j < A.rank(n); ++j) p(B.rank(n) + j, j) = 1;
            inc.f[n] = i;
            pr.f[n] = p;
        }
        CHECK(is_exact_seq(B, S, A, inc, pr));
        CHECK(is_quasiexact(B, S, A, inc, pr));
        Cx tr = truncate(S, 1, 1);
        Compressed c = compress(tr);
        CHECK(is_valid(c.cx));
        CHECK(homology(c.cx) == homology(tr));
        for (int n = 0; n <= 2; ++n) CHECK(module_length(c.cx, n) == module_length(tr, n));
        CMap back = map_from(c, identity_map(S));
        CHECK(is_iso(c.cx, tr, back));
    }
}
