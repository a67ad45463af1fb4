#include "doctest.h"

#include <random>

#include "cyc/span.hpp"

using namespace cyc;

namespace {

Mat random_mat(const RingPtr& R, int r, int c, std::mt19937_64& rng) {
    Mat M(R, r, c);
    for (auto& x : M.a) x = static_cast<Elt>(rng() % R->size());
    return M;
}

// all elements of the row span, by enumeration
std::vector<Vec> enumerate_span(const Mat& G) {
    const Ring& R = *G.R;
    std::vector<Vec> out{Vec(G.c, 0)};
    for (int i = 0; i < G.r; ++i) {
        std::vector<Vec> next;
        for (const auto& v : out)
            for (int s = 0; s < R.size(); ++s) {
                Vec w = v;
                axpy(R, w.data(), G.row(i), static_cast<Elt>(s), G.c);
                next.push_back(w);
            }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        out = std::move(next);
    }
    return out;
}

long ipow(long b, int e) {
    long r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

TEST_CASE("howell form: canonical, correct size, membership") {
    std::mt19937_64 rng(7);
    for (auto R : {Ring::get(2, 1, 2), Ring::get(3, 1, 2), Ring::get(2, 2, 2), Ring::get(3)}) {
        for (int trial = 0; trial < 25; ++trial) {
            int r = 1 + rng() % 3, c = 1 + rng() % 3;
            Mat A = random_mat(R, r, c, rng);
            if (trial % 3 == 0)
                for (auto& x : A.a) x = R->mul(x, R->p_pow(1));
            Span H = howell(A);
            auto all = enumerate_span(A);
            CHECK(static_cast<long>(all.size()) == ipow(ipow(R->p(), R->d()), H.length()));
            for (const auto& v : all) CHECK(H.contains(v));
            // random combination of rows as a second generating set
            Mat B = mul(random_mat(R, r + 1, r, rng), A);
            B = vcat(B, A);
            CHECK(howell(B) == H);
            Vec z(c);
            for (auto& x : z) x = static_cast<Elt>(rng() % R->size());
            bool in = std::binary_search(all.begin(), all.end(), z);
            CHECK(H.contains(z) == in);
        }
    }
}

TEST_CASE("kernel, preimage, intersection and solve against enumeration") {
    std::mt19937_64 rng(11);
    for (auto R : {Ring::get(2, 1, 2), Ring::get(3, 1, 2), Ring::get(2)}) {
        for (int trial = 0; trial < 20; ++trial) {
            int r = 1 + rng() % 3, c = 1 + rng() % 3;
            Mat M = random_mat(R, r, c, rng);
            Span K = kernel(M);
            auto dom = enumerate_span(Mat::identity(R, r));
            long kcount = 0;
            for (const auto& x : dom) {
                bool z = vec_is_zero(vec_mul(x, M));
                kcount += z;
                CHECK(K.contains(x) == z);
            }
            CHECK(kcount == ipow(ipow(R->p(), R->d()), K.length()));

            Span S = howell(random_mat(R, 1, c, rng));
            Span P = preimage(M, S);
            for (const auto& x : dom) CHECK(P.contains(x) == S.contains(vec_mul(x, M)));

            Span A = howell(random_mat(R, 2, r, rng)), B = howell(random_mat(R, 2, r, rng));
            Span I = span_intersect(A, B);
            for (const auto& x : dom) CHECK(I.contains(x) == (A.contains(x) && B.contains(x)));

            Vec b(c);
            for (auto& x : b) x = static_cast<Elt>(rng() % R->size());
            auto sol = solve(M, b, S);
            bool exists = false;
            for (const auto& x : dom)
                if (S.contains(vec_sub(*R, vec_mul(x, M), b))) exists = true;
            CHECK(sol.has_value() == exists);
            if (sol) CHECK(S.contains(vec_sub(*R, vec_mul(*sol, M), b)));
        }
    }
}

TEST_CASE("smith form") {
    auto Z4 = Ring::get(2, 1, 2);
    Mat two(Z4, 1, 1);
    two(0, 0) = 2;
    Smith S = smith_form(two);
    CHECK(S.exps == std::vector<int>{1});
    CHECK(kernel(two).length() == 1);
    CHECK(span_image(full_span(Z4, 1), two).length() == 1);

    Smith I = smith_form(Mat::identity(Z4, 3));
    CHECK(I.exps == std::vector<int>{0, 0, 0});

    std::mt19937_64 rng(3);
    for (auto R : {Ring::get(2, 1, 2), Ring::get(3, 1, 2), Ring::get(2, 2, 2), Ring::get(3), Ring::get(2, 2)}) {
        for (int trial = 0; trial < 30; ++trial) {
            int r = 1 + rng() % 4, c = 1 + rng() % 4;
            Mat A = random_mat(R, r, c, rng);
            Smith F = smith_form(A);
            Mat D = mul(mul(F.P, A), F.Q);
            CHECK(D == F.D);
            CHECK(mul(F.Q, F.Qinv) == Mat::identity(R, c));
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) {
                    if (i == j && i < static_cast<int>(F.exps.size()))
                        CHECK(D(i, j) == R->p_pow(F.exps[i]));
                    else
                        CHECK(D(i, j) == 0);
                }
            if (R->k() == 1) CHECK(static_cast<int>(F.exps.size()) == field_rank(A));
        }
    }
}

TEST_CASE("subquotient bases") {
    std::mt19937_64 rng(5);
    for (auto R : {Ring::get(2, 1, 2), Ring::get(3, 1, 2), Ring::get(2)}) {
        for (int trial = 0; trial < 20; ++trial) {
            int n = 1 + rng() % 3;
            Span U = howell(random_mat(R, 1 + rng() % 3, n, rng));
            Span W = howell(mul(random_mat(R, 2, U.size(), rng), U.rows));
            SQBasis B = make_sqbasis(U, W);
            auto Uall = enumerate_span(U.rows);
            long wcount = ipow(ipow(R->p(), R->d()), W.length());
            CHECK(static_cast<long>(Uall.size()) == wcount * ipow(ipow(R->p(), R->d()), B.length()));
            for (int i = 0; i < B.rank(); ++i) {
                Vec c = B.coords(B.gens.row(i));
                for (int j = 0; j < B.rank(); ++j) CHECK(c[j] == (i == j ? 1 : 0));
                Vec t = vec_scale(*R, B.gens.row_vec(i), R->p_pow(B.exps[i]));
                CHECK(W.contains(t));
                if (B.exps[i] > 1 || R->k() == 1) CHECK(!W.contains(B.gens.row_vec(i)));
            }
            for (const auto& x : Uall) {
                Vec c = B.coords(x);
                CHECK(W.contains(vec_sub(*R, B.lift(c), x)));
            }
        }
    }
}
