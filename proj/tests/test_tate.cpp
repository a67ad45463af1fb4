#include "doctest.h"

#include "cyc/random.hpp"
#include "cyc/tate.hpp"
#include "cyc/trace.hpp"

using namespace cyc;

namespace {

Cx random_small(const RingPtr& R, Rng& rng, int amp = 3, int maxr = 2) {
    RandomCxOptions o;
    o.lo = uniform(rng, -1, 1);
    o.hi = o.lo + uniform(rng, 0, amp - 1);
    o.max_rank = maxr;
    return random_complex(R, o, rng);
}

bool sigma_ok(const EqCx& E) {
    const Cx& X = E.cx;
    for (int n = X.lo; n <= X.hi(); ++n) {
        Mat s = E.sigma.at(n), pw = Mat::identity(X.R, X.rank(n));
        for (int k = 0; k < E.p; ++k) pw = mul(pw, s);
        if (!(pw == Mat::identity(X.R, X.rank(n)))) return false;
        if (X.in_range(n - 1) && !(mul(s, X.diff(n)) == mul(X.diff(n), E.sigma.at(n - 1)))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("tensor power basics") {
    auto F2 = Ring::get(2);
    EqCx E = tensor_power(one_term(F2, 0), 2);
    CHECK(E.cx.rank(0) == 1);
    CHECK(E.sigma.at(0) == Mat::identity(F2, 1));
    CHECK(trace(E, 0).is_zero());
    auto F3 = Ring::get(3);
    EqCx E3 = tensor_power(one_term(F3, 1), 2);
    CHECK(E3.sigma.at(2)(0, 0) == F3->neg(1));
}

TEST_CASE("sigma sign law on lines") {
    for (auto R : {Ring::get(2), Ring::get(3), Ring::get(2, 1, 2), Ring::get(3, 1, 2)}) {
        for (int i = -2; i <= 3; ++i) {
            EqCx E = tensor_power(one_term(R, i), R->p());
            CHECK(E.sigma.at(R->p() * i)(0, 0) == sigma_on_line(R, i, R->p()));
        }
    }
}

TEST_CASE("sigma is an order p chain automorphism") {
    Rng rng(5);
    for (auto R : {Ring::get(2), Ring::get(3), Ring::get(2, 1, 2), Ring::get(3, 1, 2)})
        for (int t = 0; t < 12; ++t) {
            Cx V = random_small(R, rng);
            EqCx E = tensor_power(V, R->p());
            CHECK(is_valid(E.cx));
            CHECK(sigma_ok(E));
        }
}

TEST_CASE("tensor power of a map is a chain map and functorial") {
    Rng rng(6);
    auto R = Ring::get(3);
    for (int t = 0; t < 8; ++t) {
        Cx V = random_small(R, rng, 2, 2);
        Cx W = direct_sum(V, V);
        EqCx EV = tensor_power(V, 3), EW = tensor_power(W, 3);
        CMap inc;
        for (int n = V.lo; n <= V.hi(); ++n) inc.f[n] = hcat(Mat::identity(R, V.rank(n)), Mat(R, V.rank(n), V.rank(n)));
        CHECK(is_chain_map(V, W, inc));
        CMap F = tensor_power_map(EV, EW, V, W, inc);
        CHECK(is_chain_map(EV.cx, EW.cx, F));
        CHECK(is_injective(EV.cx, EW.cx, F));
        CHECK(maps_equal(EV.cx, EV.cx, tensor_power_map(EV, EV, V, V, identity_map(V)), identity_map(EV.cx)));
    }
}

TEST_CASE("Tate cohomology of degrees prime to p vanishes") {
    Rng rng(7);
    for (auto R : {Ring::get(2), Ring::get(3), Ring::get(2, 2)}) {
        for (int t = 0; t < 10; ++t) {
            Cx V = random_small(R, rng, 3, 2);
            EqCx E = tensor_power(V, R->p());
            for (int j = E.cx.lo; j <= E.cx.hi(); ++j) {
                auto [ev, od] = tate_module_lengths(E, j);
                if (j % R->p() != 0) {
                    CHECK(ev == 0);
                    CHECK(od == 0);
                }
            }
        }
    }
}

TEST_CASE("band truncation agrees with the window") {
    Rng rng(8);
    for (auto R : {Ring::get(2), Ring::get(3)}) {
        for (int t = 0; t < 6; ++t) {
            Cx V = random_small(R, rng, 2, 1);
            auto E = std::make_shared<const EqCx>(tensor_power(V, R->p()));
            for (int n = -1; n <= 1; ++n) {
                TateBand B = tate_trunc(E, n, n + 1);
                CHECK(is_valid(B.cx));
                Cx Wn = tate_window(*E, B.cx.lo - 3, B.cx.hi() + 3);
                Cx T = ftruncate(Wn, n, n + 1);
                for (int d = B.cx.lo; d <= B.cx.hi(); ++d) CHECK(homology_length(B.cx, d) == homology_length(T, d));
            }
        }
    }
}

TEST_CASE("pieces tau_[i,i] are Frobenius twists of V") {
    Rng rng(9);
    for (auto R : {Ring::get(2), Ring::get(3), Ring::get(2, 2)}) {
        for (int t = 0; t < 10; ++t) {
            Cx V = random_small(R, rng);
            auto E = std::make_shared<const EqCx>(tensor_power(V, R->p()));
            Cx Vt = frobenius_twist(V);
            for (int i = -1; i <= 2; ++i) {
                TateBand B = tate_trunc(E, i, i);
                Cx S = shift(Vt, i);
                for (int d = std::min(B.cx.lo, S.lo); d <= std::max(B.cx.hi(), S.hi()); ++d)
                    CHECK(module_length(B.cx, d) == S.rank(d));
                CMap phi = tate_phi(B, V);
                CHECK(is_chain_map(B.cx, S, phi));
                CHECK(is_iso(B.cx, S, phi));
            }
        }
    }
}

TEST_CASE("phi normalization for larger primes") {
    Rng rng(10);
    for (auto R : {Ring::get(5), Ring::get(7)}) {
        for (int t = 0; t < 10; ++t) {
            Cx V = random_small(R, rng, 2, 1);
            auto E = std::make_shared<const EqCx>(tensor_power(V, R->p()));
            for (int i = -2; i <= 2; ++i) {
                TateBand B = tate_trunc(E, i, i);
                Cx S = shift(frobenius_twist(V), i);
                CMap phi = tate_phi(B, V);
                CHECK(is_chain_map(B.cx, S, phi));
                CHECK(is_iso(B.cx, S, phi));
            }
        }
    }
}

TEST_CASE("cyclic extension of F_p") {
    for (int p : {2, 3, 5}) {
        auto R = Ring::get(p);
        CyclicExt X = cyclic_extension(one_term(R, 0));
        CHECK(module_length(X.C, 0) == 1);
        CHECK(module_length(X.C, 1) == 1);
        CHECK(is_exact_seq(X.B1, X.C, X.A, X.b, X.a));
        CHECK(is_quasiexact(X.B1, X.C, X.A, X.b, X.a));
    }
}

TEST_CASE("trace sequence of a free module is exact") {
    for (auto R : {Ring::get(2), Ring::get(3), Ring::get(2, 2)})
        for (int n = 0; n <= 3; ++n) {
            auto rep = check_trace_sequence(R, n);
            CHECK(rep.psi_injective);
            CHECK(rep.psi_into_kernel);
            CHECK(rep.psi_onto_kernel);
            CHECK(rep.psi_additive);
            CHECK(rep.psi_semilinear);
            CHECK(rep.exact_at_invariants);
            CHECK(rep.projection_onto);
        }
    TraceData T = trace_data(Ring::get(2), 1);
    CHECK(T.tr.is_zero());
}

TEST_CASE("cyclic extension on random complexes") {
    Rng rng(12);
    for (auto R : {Ring::get(2), Ring::get(3)}) {
        for (int t = 0; t < 15; ++t) {
            Cx V = random_small(R, rng);
            CyclicExt X = cyclic_extension(V);
            CHECK(is_valid(X.C));
            CHECK(is_quasiexact(X.B1, X.C, X.A, X.b, X.a));
            for (int d = X.C.lo; d <= X.C.hi(); ++d)
                if (d > V.hi() + 1) CHECK(module_length(X.C, d) == 0);
            RandomCxOptions o;
            o.lo = -1;
            o.hi = 1;
            o.max_rank = 2;
            o.acyclic = true;
            Cx Z = random_complex(R, o, rng);
            CHECK(is_acyclic(cyclic_extension(Z).C));
        }
    }
}

TEST_CASE("split sequences go to quasiexact sequences") {
    Rng rng(13);
    for (auto R : {Ring::get(2), Ring::get(3)}) {
        for (int t = 0; t < 8; ++t) {
            Cx V = random_small(R, rng, 2, 1), W = random_small(R, rng, 2, 1);
            Cx S = direct_sum(V, W);
            CMap inc, proj;
            for (int n = S.lo; n <= S.hi(); ++n) {
                inc.f[n] = hcat(Mat::identity(R, V.rank(n)), Mat(R, V.rank(n), W.rank(n)));
                proj.f[n] = vcat(Mat(R, V.rank(n), W.rank(n)), Mat::identity(R, W.rank(n)));
            }
            REQUIRE(is_chain_map(V, S, inc));
            REQUIRE(is_chain_map(S, W, proj));
            CyclicExt XV = cyclic_extension(V), XS = cyclic_extension(S), XW = cyclic_extension(W);
            CMap ci = cyclic_map(XV, XS, V, S, inc), cp = cyclic_map(XS, XW, S, W, proj);
            CHECK(is_chain_map(XV.C, XS.C, ci));
            CHECK(is_chain_map(XS.C, XW.C, cp));
            CHECK(is_quasiexact(XV.C, XS.C, XW.C, ci, cp));
        }
    }
}
