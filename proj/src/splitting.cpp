#include "cyc/splitting.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace cyc {

int kappa_lex_min(const std::vector<std::vector<int>>&) { return 0; }

Vec Split01::delta(const Vec& c) const {
    Vec t = vec_mul(T.coinv.lift(c), T.tr);
    for (auto& e : t) e = T.R->neg(e);
    return t;
}

Vec Split01::cadd(const Vec& a, const Vec& b) const {
    return T.coinv.coords(vec_add(*T.R, T.coinv.lift(a), T.coinv.lift(b)));
}

Vec Split01::cneg(const Vec& a) const { return T.coinv.coords(vec_scale(*T.R, T.coinv.lift(a), T.R->neg(1))); }

Vec Split01::cocycle(const Vec& v1, const Vec& v2, const KappaFn& kappa) const {
    const int p = T.p;
    const Ring& R = *T.R;
    Vec amb(T.E.cx.rank(0), 0);
    std::set<std::vector<int>> seen;
    std::vector<int> w(p, 0);
    const long total = 1L << p;
    for (long m = 0; m < total; ++m) {
        for (int i = 0; i < p; ++i) w[i] = (m >> (p - 1 - i)) & 1;
        if (m == 0 || m == total - 1 || seen.count(w)) continue;
        std::vector<std::vector<int>> orbit;
        auto r = w;
        for (int k = 0; k < p; ++k) {
            orbit.push_back(r);
            seen.insert(r);
            std::rotate(r.begin(), r.begin() + 1, r.end());
        }
        // rotation order starting from the smallest word
        auto mn = std::min_element(orbit.begin(), orbit.end()) - orbit.begin();
        std::rotate(orbit.begin(), orbit.begin() + mn, orbit.end());
        const auto& rep = orbit[kappa(orbit)];
        std::vector<std::pair<int, Vec>> xs;
        for (int b : rep) xs.push_back({0, b ? v2 : v1});
        Vec mono = pure_tensor(T.E, xs).second;
        for (size_t i = 0; i < amb.size(); ++i) amb[i] = R.add(amb[i], mono[i]);
    }
    return T.coinv.coords(amb);
}

El01 Split01::zero() const { return {Vec(T.coinv.rank(), 0), Vec(n(), 0)}; }

El01 Split01::add(const El01& x, const El01& y) const {
    Vec c = cadd(cadd(x.c, y.c), cocycle(x.v, y.v));
    return {c, vec_add(*T.R, x.v, y.v)};
}

El01 Split01::neg(const El01& x) const {
    Vec mv = vec_scale(*T.R, x.v, T.R->neg(1));
    // x + y = 0 forces y.c = -x.c - c(v, -v)
    return {cneg(cadd(x.c, cocycle(x.v, mv))), mv};
}

Vec Split01::c0(const El01& x) const { return vec_add(*T.R, delta(x.c), stilde(x.v)); }

std::vector<El01> Split01::elements() const {
    std::vector<El01> out;
    const Ring& R = *T.R;
    // coinvariant coordinates range over R / p^{e_i}
    std::vector<std::vector<Elt>> ranges;
    for (int e : T.coinv.exps) {
        std::vector<Elt> vals;
        for (Elt a = 0; a < static_cast<Elt>(R.size()); ++a)
            if (R.rem_p(a, e) == a) vals.push_back(a);
        ranges.push_back(vals);
    }
    std::vector<Vec> cs{Vec{}};
    for (auto& r : ranges) {
        std::vector<Vec> next;
        for (auto& c : cs)
            for (Elt a : r) {
                auto d = c;
                d.push_back(a);
                next.push_back(d);
            }
        cs = std::move(next);
    }
    for (auto& v : all_vectors(T.R, n()))
        for (auto& c : cs) out.push_back({c, v});
    std::sort(out.begin(), out.end());
    return out;
}

Vec kron(const Ring& R, const Vec& v, const Vec& w) {
    Vec out(v.size() * w.size());
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = 0; j < w.size(); ++j) out[i * w.size() + j] = R.mul(v[i], w[j]);
    return out;
}

Vec shuffle_product(const Split01& A, const Split01& B, const Split01& AB, const Vec& x, const Vec& y) {
    const Ring& R = *A.ring();
    const EqCx &EA = A.T.E, &EB = B.T.E, &EAB = AB.T.E;
    const int p = A.T.p, nb = B.n();
    Vec out(EAB.cx.rank(0), 0);
    std::vector<int> h(p);
    for (size_t i = 0; i < x.size(); ++i) {
        if (!x[i]) continue;
        auto g = EA.decode(EA.codes.at(0)[i]);
        for (size_t j = 0; j < y.size(); ++j) {
            if (!y[j]) continue;
            auto g2 = EB.decode(EB.codes.at(0)[j]);
            for (int k = 0; k < p; ++k) h[k] = g[k] * nb + g2[k];
            int pos = EAB.pos.at(EAB.encode(h));
            out[pos] = R.add(out[pos], R.mul(x[i], y[j]));
        }
    }
    return out;
}

Vec coinv_times_inv(const Split01& A, const Split01& B, const Split01& AB, const Vec& c, const Vec& i) {
    return AB.T.coinv.coords(shuffle_product(A, B, AB, A.T.coinv.lift(c), i));
}

Vec inv_times_coinv(const Split01& A, const Split01& B, const Split01& AB, const Vec& i, const Vec& c) {
    return AB.T.coinv.coords(shuffle_product(A, B, AB, i, B.T.coinv.lift(c)));
}

El01 split_mul(const Split01& A, const Split01& B, const Split01& AB, const El01& x, const El01& y) {
    Vec c = coinv_times_inv(A, B, AB, x.c, B.delta(y.c));
    c = AB.cadd(c, coinv_times_inv(A, B, AB, x.c, B.stilde(y.v)));
    c = AB.cadd(c, inv_times_coinv(A, B, AB, A.stilde(x.v), y.c));
    return {c, kron(*A.ring(), x.v, y.v)};
}

Witt2 to_witt(const Split01& S, const El01& x) { return {S.ring(), x.v[0], x.c[0]}; }

El01 from_witt(const Split01&, const Witt2& w) { return {Vec{w.x1}, Vec{w.x0}}; }

CocycleReport check_cocycle(const RingPtr& R, int n) {
    CocycleReport rep;
    Split01 S(R, n);
    const Ring& r = *R;
    auto vs = all_vectors(R, n);
    const Vec zero(n, 0);
    const Vec czero(S.T.coinv.rank(), 0);
    std::map<std::pair<size_t, size_t>, Vec> coc;
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = 0; j < vs.size(); ++j) coc[{i, j}] = S.cocycle(vs[i], vs[j]);
    auto index = [&](const Vec& v) { return static_cast<size_t>(std::find(vs.begin(), vs.end(), v) - vs.begin()); };
    KappaFn last = [](const std::vector<std::vector<int>>& o) { return static_cast<int>(o.size()) - 1; };
    KappaFn middle = [](const std::vector<std::vector<int>>& o) { return static_cast<int>(o.size()) / 2; };
    for (size_t i = 0; i < vs.size(); ++i) {
        if (!(S.cocycle(vs[i], zero) == czero) || !(S.cocycle(zero, vs[i]) == czero)) rep.normalized = false;
        for (size_t j = 0; j < vs.size(); ++j) {
            const Vec& c = coc[{i, j}];
            if (!(c == coc[{j, i}])) rep.symmetric = false;
            Vec lhs = S.delta(c);
            Vec rhs = vec_sub(r, vec_add(r, S.stilde(vs[i]), S.stilde(vs[j])), S.stilde(vec_add(r, vs[i], vs[j])));
            if (!(lhs == rhs)) rep.boundary = false;
            if (!(S.cocycle(vs[i], vs[j], last) == c) || !(S.cocycle(vs[i], vs[j], middle) == c)) rep.kappa_free = false;
            for (size_t k = 0; k < vs.size(); ++k) {
                Vec a = S.cadd(c, coc[{index(vec_add(r, vs[i], vs[j])), k}]);
                Vec b = S.cadd(coc[{i, index(vec_add(r, vs[j], vs[k]))}], coc[{j, k}]);
                if (!(a == b)) rep.associative = false;
            }
        }
    }
    // group axioms on C01(V)
    auto els = S.elements();
    if (els.size() <= 81) {
        for (auto& x : els) {
            if (!(S.add(x, S.zero()) == x)) rep.group = false;
            if (!(S.add(x, S.neg(x)) == S.zero())) rep.group = false;
            for (auto& y : els) {
                if (!(S.add(x, y) == S.add(y, x))) rep.group = false;
                // c0 is additive
                if (!(S.c0(S.add(x, y)) == vec_add(r, S.c0(x), S.c0(y)))) rep.group = false;
                for (auto& z : els)
                    if (!(S.add(S.add(x, y), z) == S.add(x, S.add(y, z)))) rep.group = false;
            }
        }
        // c1 additive
        for (auto& x : els)
            for (auto& y : els)
                if (!(S.add(S.c1(x.c), S.c1(y.c)) == S.c1(S.cadd(x.c, y.c)))) rep.group = false;
    }
    return rep;
}

std::pair<int, bool> c01_order_cyclic(const RingPtr& R) {
    Split01 S(R, 1);
    auto els = S.elements();
    const int order = static_cast<int>(els.size());
    bool cyclic = false;
    for (auto& g : els) {
        El01 x = g;
        int k = 1;
        while (!(x == S.zero())) {
            x = S.add(x, g);
            ++k;
        }
        if (k == order) cyclic = true;
    }
    return {order, cyclic};
}

MulReport check_split_mul(const RingPtr& R, int n, int samples, unsigned long long seed) {
    MulReport rep;
    Split01 S(R, n), S2(R, n * n), S3(R, n * n * n), S1(R, 1);
    const Ring& r = *R;
    std::mt19937_64 rng(seed);
    auto els = S.elements();
    auto pick = [&]() { return els[rng() % els.size()]; };
    auto mul = [&](const El01& x, const El01& y) { return split_mul(S, S, S2, x, y); };
    auto check = [&](const El01& x, const El01& y, const El01& z) {
        ++rep.cases;
        if (!(mul(S.add(x, y), z) == S2.add(mul(x, z), mul(y, z)))) rep.left_linear = false;
        if (!(mul(z, S.add(x, y)) == S2.add(mul(z, x), mul(z, y)))) rep.right_linear = false;
        if (!(split_mul(S2, S, S3, mul(x, y), z) == split_mul(S, S2, S3, x, mul(y, z)))) rep.associative = false;
        El01 one{Vec(S1.T.coinv.rank(), 0), Vec{1}};
        if (!(split_mul(S1, S, S, one, x) == x) || !(split_mul(S, S1, S, x, one) == x)) rep.unital = false;
        Vec a = coinv_times_inv(S, S, S2, x.c, S.delta(y.c));
        Vec b = inv_times_coinv(S, S, S2, S.delta(x.c), y.c);
        if (!(a == b)) rep.sym = false;
    };
    if (samples == 0) {
        for (auto& x : els)
            for (auto& y : els)
                for (auto& z : els) check(x, y, z);
    } else {
        for (int t = 0; t < samples; ++t) check(pick(), pick(), pick());
    }
    (void)r;
    return rep;
}

RegularReport check_regular_endomorphisms(const RingPtr& R) {
    RegularReport rep;
    Split01 S(R, 1);
    const Ring& r = *R;
    auto els = S.elements();
    const int N = static_cast<int>(els.size());
    std::map<El01, int> idx;
    for (int i = 0; i < N; ++i) idx[els[i]] = i;
    // additive generators (0, e) for an F_p-basis e of R
    std::vector<El01> gens;
    for (int i = 0; i < r.d(); ++i) {
        std::vector<int> e(r.d(), 0);
        e[i] = 1;
        gens.push_back({Vec{0}, Vec{r.from_coeffs(e)}});
    }
    const int m = r.p() * r.p();
    // coefficients of every element in the generators
    std::vector<std::vector<int>> coef(N);
    int combos = 1;
    for (size_t i = 0; i < gens.size(); ++i) combos *= m;
    int hit = 0;
    for (int cc = 0; cc < combos; ++cc) {
        std::vector<int> nv(gens.size());
        int x = cc;
        El01 s = S.zero();
        for (size_t i = 0; i < gens.size(); ++i) {
            nv[i] = x % m;
            x /= m;
            for (int t = 0; t < nv[i]; ++t) s = S.add(s, gens[i]);
        }
        int id = idx.at(s);
        if (coef[id].empty()) {
            coef[id] = nv;
            ++hit;
        }
    }
    if (hit != N) return rep;
    auto scalar_act = [&](Elt lam, const El01& x) {
        return El01{S.T.coinv.coords(vec_scale(r, S.T.coinv.lift(x.c), r.pow(lam, r.p()))), Vec{r.mul(lam, x.v[0])}};
    };
    // enumerate images of generators
    std::vector<std::vector<int>> found;  // endo as table of indices
    std::vector<int> choice(gens.size(), 0);
    long total = 1;
    for (size_t i = 0; i < gens.size(); ++i) total *= N;
    for (long code = 0; code < total; ++code) {
        long x = code;
        for (size_t i = 0; i < gens.size(); ++i) {
            choice[i] = static_cast<int>(x % N);
            x /= N;
        }
        std::vector<int> table(N);
        for (int e = 0; e < N; ++e) {
            El01 s = S.zero();
            for (size_t i = 0; i < gens.size(); ++i)
                for (int t = 0; t < coef[e][i]; ++t) s = S.add(s, els[choice[i]]);
            table[e] = idx.at(s);
        }
        // additivity
        bool ok = true;
        for (int a = 0; a < N && ok; ++a)
            for (int b = 0; b < N && ok; ++b)
                if (table[idx.at(S.add(els[a], els[b]))] != idx.at(S.add(els[table[a]], els[table[b]]))) ok = false;
        if (!ok) continue;
        // naturality in scalar endomorphisms of R
        for (int a = 0; a < N && ok; ++a)
            for (Elt lam = 0; lam < static_cast<Elt>(r.size()) && ok; ++lam)
                if (table[idx.at(scalar_act(lam, els[a]))] != idx.at(scalar_act(lam, els[table[a]]))) ok = false;
        if (!ok) continue;
        // regularity: some r with r' c1 = c1 r and c0 r' = r c0
        bool some = false;
        for (Elt rr = 0; rr < static_cast<Elt>(r.size()) && !some; ++rr) {
            bool good = true;
            for (int a = 0; a < N && good; ++a) {
                const El01& e = els[a];
                const El01& fe = els[table[a]];
                if (!(S.c0(fe) == vec_scale(r, S.c0(e), rr))) good = false;
                if (vec_is_zero(e.v)) {
                    El01 want = S.c1(S.T.coinv.coords(vec_scale(r, S.T.coinv.lift(e.c), rr)));
                    if (!(fe == want)) good = false;
                }
            }
            some = good;
        }
        if (some) found.push_back(table);
    }
    rep.count = static_cast<int>(found.size());
    // right multiplications
    Split01& S1 = S;
    std::set<std::vector<int>> rights;
    for (auto& y : els) {
        std::vector<int> table(N);
        for (int a = 0; a < N; ++a) table[a] = idx.at(split_mul(S1, S1, S1, els[a], y));
        rights.insert(table);
    }
    std::set<std::vector<int>> fs(found.begin(), found.end());
    rep.are_right_mults = fs == rights && rep.count == N;
    // evaluate endomorphisms at the unit to read off the element; compare tables with W_2
    const El01 one{Vec{0}, Vec{1}};
    const int u = idx.at(one);
    std::map<std::vector<int>, El01> val;
    for (auto& t : found) val[t] = els[t[u]];
    rep.add_table = rep.mul_table = rep.are_right_mults;
    if (rep.are_right_mults) {
        for (auto& f : found)
            for (auto& g : found) {
                std::vector<int> sum(N), comp(N);
                for (int a = 0; a < N; ++a) {
                    sum[a] = idx.at(S.add(els[f[a]], els[g[a]]));
                    comp[a] = g[f[a]];
                }
                if (!fs.count(sum) || !fs.count(comp)) {
                    rep.add_table = rep.mul_table = false;
                    continue;
                }
                Witt2 x = to_witt(S, val[f]), y = to_witt(S, val[g]);
                if (!(to_witt(S, val[sum]) == witt_add(x, y))) rep.add_table = false;
                if (!(to_witt(S, val[comp]) == witt_mul(x, y))) rep.mul_table = false;
            }
    }
    // kernel of the projection to R squares to zero
    rep.square_zero = true;
    for (auto& x : els)
        for (auto& y : els)
            if (vec_is_zero(x.v) && vec_is_zero(y.v) && !(split_mul(S, S, S, x, y) == S.zero())) rep.square_zero = false;
    return rep;
}

}  // namespace cyc
