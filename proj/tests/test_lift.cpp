#include "doctest.h"

#include "cyc/cup.hpp"
#include "cyc/lift.hpp"
#include "cyc/random.hpp"

using namespace cyc;

namespace {

Cx random_lifted(const RingPtr& R, Rng& rng) {
    RandomCxOptions o;
    o.lo = uniform(rng, -1, 1);
    o.hi = o.lo + uniform(rng, 0, 1);
    o.max_rank = 2;
    return random_complex(R, o, rng);
}

}  // namespace

TEST_CASE("lifted sequences on lines") {
    for (auto R : {Ring::get(2, 1, 2), Ring::get(3, 1, 2)}) {
        for (int i = -1; i <= 1; ++i) {
            CAPTURE(R->name());
            CAPTURE(i);
            Lifted L = lifted(one_term(R, i));
            auto s = check_lift_sequences(L);
            CHECK(s.p2_exact);
            CHECK(s.q0_iso);
            CHECK(s.q1_zero);
            CHECK(s.left_seq);
            CHECK(s.right_seq);
            DGSplittings S = dg_splittings(L);
            auto l = check_left(S);
            CHECK(l.chain);
            CHECK(l.square);
            CHECK(l.quasiexact);
            CHECK(l.strict);
            CHECK(l.quasi_iso);
            auto r = check_right(S);
            CHECK(r.chain);
            CHECK(r.square);
            CHECK(r.quasiexact);
            CHECK(r.strict);
            CHECK(r.quasi_iso);
            CHECK(check_lr(S));
        }
    }
}

TEST_CASE("lifted objects on random complexes") {
    Rng rng(7);
    for (auto R : {Ring::get(2, 1, 2), Ring::get(3, 1, 2), Ring::get(2, 2, 2)}) {
        for (int rep = 0; rep < 6; ++rep) {
            Cx V = random_lifted(R, rng);
            CAPTURE(R->name());
            CAPTURE(rep);
            Lifted L = lifted(V);
            auto s = check_lift_sequences(L);
            CHECK(s.p2_exact);
            CHECK(s.q0_iso);
            CHECK(s.q1_zero);
            CHECK(s.left_seq);
            CHECK(s.right_seq);
            DGSplittings S = dg_splittings(L);
            auto l = check_left(S);
            CHECK(l.chain);
            CHECK(l.square);
            CHECK(l.quasiexact);
            CHECK(l.strict);
            CHECK(l.quasi_iso);
            auto r = check_right(S);
            CHECK(r.chain);
            CHECK(r.square);
            CHECK(r.quasiexact);
            CHECK(r.strict);
            CHECK(r.quasi_iso);
            CHECK(check_lr(S));
        }
    }
}

TEST_CASE("maps on C^l and C^r only see f mod p") {
    Rng rng(21);
    int differ = 0;
    for (auto R : {Ring::get(2, 1, 2), Ring::get(3, 1, 2)}) {
        const Elt p = static_cast<Elt>(R->p());
        for (int rep = 0; rep < 8; ++rep) {
            Cx V = random_lifted(R, rng);
            Lifted L = lifted(V);
            CMap f = random_homotopic(V, V, scalar_map(V, random_elt(*R, rng)), rng);
            CMap g = random_homotopic(V, V, scalar_map(V, random_elt(*R, rng)), rng);
            CMap f2 = map_add(V, V, f, map_scale(V, V, g, p));
            REQUIRE(is_chain_map(V, V, f2));
            CMap F = lifted_map(L, L, f), F2 = lifted_map(L, L, f2);
            CHECK(is_chain_map(L.Cl, L.Cl, F));
            CHECK(is_chain_map(L.Cr, L.Cr, F));
            CHECK(maps_equal(L.Cl, L.Cl, F, F2));
            CHECK(maps_equal(L.Cr, L.Cr, F, F2));
            differ += !maps_equal(L.C, L.C, F, F2);
        }
    }
    CHECK(differ > 0);
}

TEST_CASE("section on closed elements and mod p") {
    Rng rng(5);
    for (auto R : {Ring::get(2, 1, 2), Ring::get(3, 1, 2)}) {
        const Elt p = static_cast<Elt>(R->p());
        Section S = make_section(R);
        int seen = 0;
        for (int rep = 0; rep < 10; ++rep) {
            Cx V = random_lifted(R, rng);
            if (!V.rank(0)) continue;
            ++seen;
            Lifted L = lifted(V);
            Vec z = random_in(kernel(V.diff(0)), rng);
            CHECK(same_in_cl(L, 0, stilde(S, L, z), power_class(L, z)));
            Vec v = random_vec(R, V.rank(0), rng), w = random_vec(R, V.rank(0), rng);
            CHECK(same_in_cl(L, 0, stilde(S, L, v), stilde(S, L, vec_add(*R, v, vec_scale(*R, w, p)))));
        }
        CHECK(seen > 0);
    }
}

TEST_CASE("vanishing of the p-adic expansion") {
    Rng rng(8);
    for (auto R : {Ring::get(2, 1, 2), Ring::get(3, 1, 2), Ring::get(2, 2, 2)}) {
        const Elt p = static_cast<Elt>(R->p());
        Section S = make_section(R);
        Cx M = free_complex(R, 0, {2}, {Mat(R, 2, 0)});
        Lifted L = lifted(M);
        int nonzero = 0;
        for (int rep = 0; rep < 10; ++rep) {
            Vec v = random_vec(R, 2, rng), w = random_vec(R, 2, rng);
            Vec v2 = vec_add(*R, v, vec_scale(*R, w, p));
            Vec diff = vec_sub(*R, power_class(L, v2), power_class(L, v));
            Vec sum = vnsh_sum(L, v, w);
            CHECK(diff == sum);
            CHECK(L.Cl.Wat(0).contains(sum));
            nonzero += !L.C.Wat(0).contains(sum);
            CHECK(same_in_cl(L, 0, stilde(S, L, v), stilde(S, L, v2)));
        }
        CHECK(nonzero > 0);
    }
}

TEST_CASE("section is multiplicative on elements closed mod p") {
    Rng rng(11);
    for (auto R : {Ring::get(2, 1, 2), Ring::get(3, 1, 2)}) {
        const Elt p = static_cast<Elt>(R->p());
        Section S = make_section(R);
        int seen = 0, nonzero = 0;
        for (int rep = 0; rep < 14; ++rep) {
            RandomCxOptions o;
            o.lo = -1;
            o.hi = uniform(rng, 0, 1);
            o.max_rank = R->p() == 2 ? 2 : 1;
            Cx V = random_complex(R, o, rng);
            o.lo = uniform(rng, -1, 0);
            o.hi = o.lo + 1;
            o.max_rank = 1;
            Cx W = random_complex(R, o, rng);
            if (!V.rank(0) || !W.rank(0)) continue;
            ++seen;
            TensorCx T = tensor_complex(V, W);
            Lifted LV = lifted(V), LW = lifted(W), LT = lifted(T.cx);
            auto closed_mod_p = [&](const Cx& X) {
                if (!X.rank(-1)) return random_vec(R, X.rank(0), rng);
                return random_in(preimage(X.diff(0), scaled(full_span(R, X.rank(-1)), p)), rng);
            };
            Vec v = closed_mod_p(V), w = closed_mod_p(W);
            CupData D{LV.E.get(), LW.E.get(), LT.E.get(), &T};
            Vec prod = to_vec(R, cup(D, 0, LV.band.refs.at(0), stilde(S, LV, v), 0, LW.band.refs.at(0), stilde(S, LW, w)),
                              LT.band.refs.at(0));
            Vec svw = stilde(S, LT, tensor_elt(T, V, W, 0, v, 0, w));
            CHECK(same_in_cl(LT, 0, prod, svw));
            nonzero += !LT.Cl.Wat(0).contains(svw);
        }
        CHECK(seen > 2);
        CHECK(nonzero > 0);
    }
}

TEST_CASE("cup product satisfies the Leibniz rule") {
    Rng rng(3);
    for (auto R : {Ring::get(2), Ring::get(3), Ring::get(2, 1, 2), Ring::get(3, 1, 2), Ring::get(2, 2)}) {
        for (int rep = 0; rep < 3; ++rep) {
            RandomCxOptions o;
            o.lo = uniform(rng, -1, 0);
            o.hi = o.lo + 1;
            o.max_rank = 1;
            Cx V = random_complex(R, o, rng);
            o.lo = uniform(rng, -1, 0);
            o.hi = o.lo + uniform(rng, 0, 1);
            Cx W = random_complex(R, o, rng);
            const int p = R->p();
            EqCx E = tensor_power(V, p), F = tensor_power(W, p);
            TensorCx T = tensor_complex(V, W);
            EqCx G = tensor_power(T.cx, p);
            CupData D{&E, &F, &G, &T};
            for (int t = -2; t <= 2; ++t)
                for (int s = -2; s <= 2; ++s) {
                    TRefs rx = window_refs(E, t), ry = window_refs(F, s);
                    if (rx.empty() || ry.empty()) continue;
                    Vec x = random_vec(R, static_cast<int>(rx.size()), rng), y = random_vec(R, static_cast<int>(ry.size()), rng);
                    TRefs rx1 = window_refs(E, t - 1), ry1 = window_refs(F, s - 1), rz = window_refs(G, t + s),
                          rz1 = window_refs(G, t + s - 1);
                    Vec lhs = vec_mul(to_vec(R, cup(D, t, rx, x, s, ry, y), rz), tate_diff(G, t + s, rz, rz1));
                    Vec dx = vec_mul(x, tate_diff(E, t, rx, rx1)), dy = vec_mul(y, tate_diff(F, s, ry, ry1));
                    Vec r1 = to_vec(R, cup(D, t - 1, rx1, dx, s, ry, y), rz1);
                    Vec r2 = to_vec(R, cup(D, t, rx, x, s - 1, ry1, dy), rz1);
                    if (t % 2) r2 = vec_scale(*R, r2, R->neg(1));
                    CHECK(lhs == vec_add(*R, r1, r2));
                }
        }
    }
}
