#include "cyc/trace.hpp"

#include <set>

namespace cyc {

TraceData trace_data(const RingPtr& R, int n) {
    TraceData T;
    T.R = R;
    T.n = n;
    T.p = R->p();
    T.E = tensor_power(one_term(R, 0, n), T.p);
    T.one_minus_sigma = one_minus_sigma(T.E, 0);
    T.tr = trace(T.E, 0);
    const int N = T.E.cx.rank(0);
    T.coinv = make_sqbasis(full_span(R, N), span_image(Mat::identity(R, N), T.one_minus_sigma));
    T.inv = kernel(T.one_minus_sigma);
    return T;
}

Vec pth_power(const TraceData& T, const Vec& v) {
    std::vector<std::pair<int, Vec>> xs(T.p, {0, v});
    return pure_tensor(T.E, xs).second;
}

Vec psi(const TraceData& T, const Vec& v) { return T.coinv.coords(pth_power(T, v)); }

Mat diagonal_projection(const TraceData& T) {
    const int N = T.E.cx.rank(0);
    Mat M(T.R, N, T.n);
    for (int g = 0; g < T.n; ++g) {
        std::vector<int> tup(T.p, g);
        M(T.E.pos.at(T.E.encode(tup)), g) = 1;
    }
    return M;
}

std::vector<Vec> all_vectors(const RingPtr& R, int n) {
    std::vector<Vec> out;
    const int q = R->size();
    long total = 1;
    for (int i = 0; i < n; ++i) total *= q;
    for (long c = 0; c < total; ++c) {
        Vec v(n);
        long x = c;
        for (int i = n - 1; i >= 0; --i) {
            v[i] = static_cast<Elt>(x % q);
            x /= q;
        }
        out.push_back(v);
    }
    return out;
}

TraceSeqReport check_trace_sequence(const RingPtr& R, int n) {
    TraceSeqReport rep;
    TraceData T = trace_data(R, n);
    const int N = T.E.cx.rank(0);
    const Ring& r = *R;
    auto vs = all_vectors(R, n);
    std::set<Vec> images;
    rep.psi_into_kernel = true;
    std::vector<Vec> ps;
    for (auto& v : vs) {
        Vec x = pth_power(T, v);
        ps.push_back(T.coinv.coords(x));
        images.insert(ps.back());
        if (!vec_is_zero(vec_mul(x, T.tr))) rep.psi_into_kernel = false;
    }
    rep.psi_injective = images.size() == vs.size();
    // the kernel of tr on coinvariants has the same order as V
    Span K = kernel(T.tr);
    int klen = K.length() - T.coinv.W.length();
    rep.psi_onto_kernel = rep.psi_injective && rep.psi_into_kernel && klen == n;
    rep.psi_additive = true;
    rep.psi_semilinear = true;
    const int q = R->size();
    auto index = [&](const Vec& v) {
        long c = 0;
        for (Elt e : v) c = c * q + e;
        return static_cast<size_t>(c);
    };
    auto coinv_add = [&](const Vec& a, const Vec& b) {
        return T.coinv.coords(vec_add(r, T.coinv.lift(a), T.coinv.lift(b)));
    };
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = 0; j < vs.size(); ++j) {
            Vec s = vec_add(r, vs[i], vs[j]);
            if (!(ps[index(s)] == coinv_add(ps[i], ps[j]))) rep.psi_additive = false;
        }
    for (size_t i = 0; i < vs.size(); ++i)
        for (Elt a = 0; a < static_cast<Elt>(q); ++a) {
            Vec av = vec_scale(r, vs[i], a);
            Elt ap = r.pow(a, T.p);
            Vec rhs = T.coinv.coords(vec_scale(r, T.coinv.lift(ps[i]), ap));
            if (!(ps[index(av)] == rhs)) rep.psi_semilinear = false;
        }
    Mat pi = diagonal_projection(T);
    Span im_tr = span_image(Mat::identity(R, N), T.tr);
    rep.exact_at_invariants = span_intersect(T.inv, kernel(pi)) == im_tr;
    rep.projection_onto = span_image(T.inv, pi) == full_span(R, n);
    return rep;
}

}  // namespace cyc
