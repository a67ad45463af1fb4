#pragma once

#include <optional>

#include "cyc/matrix.hpp"

namespace cyc {

// Submodule of R^n in Howell form: pivots normalized to p^e, entries above
// a pivot reduced mod p^e, closed under the annihilator rows.
struct Span {
    Mat rows;
    std::vector<int> pcol, pexp;

    int n() const { return rows.c; }
    int size() const { return rows.r; }
    int length() const;  // composition length, in units of the residue field
    // full reduction; result is a canonical coset representative
    void reduce(Elt* v) const;
    bool contains(const Elt* v) const;
    bool contains(const Vec& v) const { return contains(v.data()); }
    bool operator==(const Span& o) const { return rows == o.rows; }
};

Span howell(Mat A);
Span zero_span(const RingPtr& R, int n);
Span full_span(const RingPtr& R, int n);
Span span_sum(const Span& A, const Span& B);
Span span_intersect(const Span& A, const Span& B);
bool span_leq(const Span& A, const Span& B);
// image of the rows of S under M
Span span_image(const Span& S, const Mat& M);
Span span_image(const Mat& gens, const Mat& M);
// {x : x M = 0}
Span kernel(const Mat& M);
// {x in R^r : x M in S}
Span preimage(const Mat& M, const Span& S);
// {x in U : x M in S}
Span preimage_in(const Span& U, const Mat& M, const Span& S);
Span scaled(const Span& S, Elt s);
Span direct_sum(const Span& A, const Span& B);

// canonical x with x M - b in W, or nothing
std::optional<Vec> solve(const Mat& M, const Vec& b, const Span& W);

struct Smith {
    Mat D, P, Q, Qinv;  // P A Q = D
    std::vector<int> exps;  // valuation of each diagonal entry, length min(r,c)
};
Smith smith_form(const Mat& A);

// canonical presentation of U/W as a sum of cyclic modules R/p^{e_i}
struct SQBasis {
    RingPtr R;
    int n = 0;
    Span U, W;
    Mat gens;               // kept generators, one row each
    std::vector<int> exps;  // orders p^{e_i}, e_i >= 1
    Mat Qk;                 // Howell coordinates -> canonical coordinates
    Span red;               // Howell of [[G, I], [W, 0]]
    int g = 0;              // number of Howell generators of U

    int rank() const { return gens.r; }
    int length() const;
    bool in_U(const Elt* x) const;  // in U + W
    bool in_W(const Elt* x) const { return W.contains(x); }
    std::optional<Vec> try_coords(const Elt* x) const;
    Vec coords(const Elt* x) const;
    Vec coords(const Vec& x) const { return coords(x.data()); }
    Vec lift(const Vec& c) const;
};
SQBasis make_sqbasis(const Span& U, const Span& W);

}  // namespace cyc

namespace cyc {
// inverse of a square matrix, or nothing if singular
std::optional<Mat> inverse(const Mat& A);
}  // namespace cyc
