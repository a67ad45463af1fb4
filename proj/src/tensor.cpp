#include "cyc/tensor.hpp"

#include <algorithm>

namespace cyc {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long EqCx::encode(const std::vector<int>& g) const {
    long c = 0;
    for (int x : g) c = c * vrank + x;
    return c;
}

std::vector<int> EqCx::decode(long code) const {
    std::vector<int> g(p);
    for (int k = p - 1; k >= 0; --k) {
        g[k] = static_cast<int>(code % vrank);
        code /= vrank;
    }
    return g;
}

int EqCx::degree_of(long code) const {
    int s = 0;
    for (int x : decode(code)) s += vbasis[x].first;
    return s;
}

EqCx tensor_power(const Cx& V, int p, const TensorOptions& opt) {
    if (!is_free(V)) throw usage_error("tensor power needs a free complex");
    const RingPtr& R = V.R;
    EqCx E;
    E.p = p;
    for (int n = V.lo; n <= V.hi(); ++n) {
        E.vstart[n] = E.vrank;
        for (int i = 0; i < V.rank(n); ++i) E.vbasis.push_back({n, i});
        E.vrank += V.rank(n);
    }
    long total = 1;
    for (int k = 0; k < p; ++k) {
        total *= std::max(E.vrank, 1);
        if (total > opt.max_rank) throw usage_error("tensor power rank exceeds the configured cap");
    }
    if (E.vrank == 0) {
        E.cx = zero_complex(R);
        return E;
    }
    for (long c = 0; c < total; ++c) E.codes[E.degree_of(c)].push_back(c);
    for (auto& [n, cs] : E.codes)
        for (size_t i = 0; i < cs.size(); ++i) E.pos[cs[i]] = static_cast<int>(i);
    const int lo = p * V.lo, hi = p * V.hi();
    auto rank = [&](int n) { return E.codes.count(n) ? static_cast<int>(E.codes[n].size()) : 0; };
    E.cx = free_complex(R, lo, hi, rank, [&](int n) {
        Mat m(R, rank(n), rank(n - 1));
        if (!E.codes.count(n)) return m;
        for (int row = 0; row < rank(n); ++row) {
            auto g = E.decode(E.codes[n][row]);
            int before = 0;
            for (int k = 0; k < p; ++k) {
                auto [dg, li] = E.vbasis[g[k]];
                Mat dv = V.diff(dg);
                Elt sign = (before % 2 == 0) ? 1 : R->neg(1);
                for (int c = 0; c < dv.c; ++c) {
                    Elt e = dv(li, c);
                    if (!e) continue;
                    auto h = g;
                    h[k] = E.global(dg - 1, c);
                    int col = E.pos.at(E.encode(h));
                    m(row, col) = R->add(m(row, col), R->mul(sign, e));
                }
                before += dg;
            }
        }
        return m;
    });
    for (int n = lo; n <= hi; ++n) {
        std::vector<int> w(rank(n), floor_div(-n, p));
        E.cx.wt.push_back(w);
        Mat s(R, rank(n), rank(n));
        for (int row = 0; row < rank(n); ++row) {
            auto g = E.decode(E.codes[n][row]);
            int last = E.vbasis[g[p - 1]].first, rest = 0;
            for (int k = 0; k < p - 1; ++k) rest += E.vbasis[g[k]].first;
            std::vector<int> h(p);
            h[0] = g[p - 1];
            for (int k = 0; k < p - 1; ++k) h[k + 1] = g[k];
            s(row, E.pos.at(E.encode(h))) = ((last * rest) % 2 == 0) ? 1 : R->neg(1);
        }
        E.sigma[n] = s;
    }
    return E;
}

Mat one_minus_sigma(const EqCx& E, int n) {
    const int r = E.cx.rank(n);
    if (!r) return Mat(E.cx.R, 0, 0);
    return sub(Mat::identity(E.cx.R, r), E.sigma.at(n));
}

Mat trace(const EqCx& E, int n) {
    const int r = E.cx.rank(n);
    if (!r) return Mat(E.cx.R, 0, 0);
    Mat t = Mat::identity(E.cx.R, r), pw = t;
    for (int k = 1; k < E.p; ++k) {
        pw = mul(pw, E.sigma.at(n));
        t = add(t, pw);
    }
    return t;
}

CMap tensor_power_map(const EqCx& S, const EqCx& T, const Cx& V, const Cx& V2, const CMap& f) {
    CMap out;
    const RingPtr& R = S.cx.R;
    const int p = S.p;
    for (const auto& [n, cs] : S.codes) {
        const int rt = T.cx.rank(n);
        Mat m(R, static_cast<int>(cs.size()), rt);
        if (rt) {
            for (size_t row = 0; row < cs.size(); ++row) {
                auto g = S.decode(cs[row]);
                // expand the product of f rows
                std::vector<std::pair<std::vector<int>, Elt>> acc{{{}, 1}};
                for (int k = 0; k < p; ++k) {
                    auto [dg, li] = S.vbasis[g[k]];
                    Mat fk = f.at(dg, V, V2);
                    std::vector<std::pair<std::vector<int>, Elt>> next;
                    for (auto& [pre, c] : acc)
                        for (int col = 0; col < fk.c; ++col) {
                            Elt e = fk(li, col);
                            if (!e) continue;
                            auto h = pre;
                            h.push_back(T.global(dg, col));
                            next.push_back({h, R->mul(c, e)});
                        }
                    acc = std::move(next);
                }
                for (auto& [h, c] : acc) {
                    int col = T.pos.at(T.encode(h));
                    m(static_cast<int>(row), col) = R->add(m(static_cast<int>(row), col), c);
                }
            }
        }
        out.f[n] = m;
    }
    return out;
}

std::pair<int, Vec> pure_tensor(const EqCx& E, const std::vector<std::pair<int, Vec>>& xs) {
    const RingPtr& R = E.cx.R;
    int deg = 0;
    for (auto& [d, v] : xs) deg += d;
    Vec out(E.cx.rank(deg), 0);
    std::vector<std::pair<std::vector<int>, Elt>> acc{{{}, 1}};
    for (auto& [d, v] : xs) {
        std::vector<std::pair<std::vector<int>, Elt>> next;
        for (auto& [pre, c] : acc)
            for (size_t i = 0; i < v.size(); ++i) {
                if (!v[i]) continue;
                auto h = pre;
                h.push_back(E.global(d, static_cast<int>(i)));
                next.push_back({h, R->mul(c, v[i])});
            }
        acc = std::move(next);
    }
    for (auto& [h, c] : acc) {
        int col = E.pos.at(E.encode(h));
        out[col] = R->add(out[col], c);
    }
    return {deg, out};
}

Elt sigma_on_line(const RingPtr& R, int i, int p) {
    return ((i * (p - 1)) % 2 == 0) ? 1 : R->neg(1);
}

}  // namespace cyc
