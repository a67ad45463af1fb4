#include "cyc/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>

#include "cyc/cup.hpp"
#include "cyc/dgdiff.hpp"
#include "cyc/lift.hpp"
#include "cyc/splitting.hpp"
#include "cyc/tate.hpp"
#include "cyc/trace.hpp"
#include "cyc/witt.hpp"

namespace cyc {

namespace {

std::string key(const std::string& part, const RingPtr& R, int i) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s %s #%03d", part.c_str(), R->name().c_str(), i);
    return buf;
}

std::string key(const std::string& part, const RingPtr& R) { return part + " " + R->name(); }

struct Cases {
    std::vector<Case>& out;
    void add(std::string k, bool ok, json in = json::object(), std::string exp = "true", std::string act = "false") {
        Case c;
        c.key = std::move(k);
        c.ok = ok;
        if (!ok) {
            c.input = std::move(in);
            c.expected = std::move(exp);
            c.actual = std::move(act);
        }
        out.push_back(std::move(c));
    }
};

Rng rng_for(const SuiteOptions& opt, int id) {
    std::seed_seq s{static_cast<unsigned>(opt.seed), static_cast<unsigned>(opt.seed >> 32), static_cast<unsigned>(id)};
    return Rng(s);
}

int count(const SuiteOptions& opt, int def) { return opt.sizes > 0 ? opt.sizes : def; }

RingPtr named_ring(const std::string& name, int p, int d) {
    if (name == "z4") return Ring::get(2, 1, 2);
    if (name == "z9") return Ring::get(3, 1, 2);
    if (name == "gr4") return Ring::get(2, 2, 2);
    if (name == "fp") return Ring::get(p, 1, 1);
    if (name == "fq") return Ring::get(p, d > 1 ? d : 2, 1);
    throw usage_error("unknown ring '" + name + "'");
}

// k = 1 or k = 2 rings selected by the flags, else the defaults
std::vector<RingPtr> rings(const SuiteOptions& opt, const std::vector<RingPtr>& defaults, int k, const char* what) {
    if (opt.ring.empty() && opt.ps.empty() && opt.d == 0) return defaults;
    std::vector<RingPtr> out;
    std::vector<int> ps = opt.ps;
    if (ps.empty())
        for (auto& R : defaults)
            if (std::find(ps.begin(), ps.end(), R->p()) == ps.end()) ps.push_back(R->p());
    for (int p : ps)
        if (!is_prime(p)) throw usage_error("--p " + std::to_string(p) + " is not prime");
    if (opt.ring == "z4" || opt.ring == "z9" || opt.ring == "gr4") {
        out.push_back(named_ring(opt.ring, 0, 0));
    } else if (opt.ring.empty()) {
        for (int p : ps) out.push_back(Ring::get(p, opt.d ? opt.d : 1, k ? k : 1));
    } else {
        for (int p : ps) out.push_back(named_ring(opt.ring, p, opt.d));
    }
    for (auto& R : out)
        if (k && R->k() != k)
            throw usage_error(std::string(what) + " needs " + (k == 1 ? "a field (fp|fq)" : "a ring mod p^2 (z4|z9|gr4)"));
    return out;
}

Cx random_cx(const RingPtr& R, Rng& rng, int amp, int maxr, int lo0 = -1, int lo1 = 1) {
    RandomCxOptions o;
    o.lo = uniform(rng, lo0, lo1);
    o.hi = o.lo + uniform(rng, 0, amp - 1);
    o.max_rank = maxr;
    return random_complex(R, o, rng);
}

std::string str(int v) { return std::to_string(v); }

// ---------------------------------------------------------------- witt

void c01(const SuiteOptions& opt, Cases& cs) {
    std::vector<RingPtr> def{Ring::get(2), Ring::get(3), Ring::get(5)};
    for (auto& R : rings(opt, def, 1, "ghost isomorphism")) {
        if (R->d() != 1) throw usage_error("the ghost isomorphism needs d = 1");
        const int p = R->p(), q = p * p;
        auto els = witt_elements(R);
        std::set<int> img;
        for (auto& u : els) img.insert(witt_ghost_iso(u));
        cs.add(key("bijective", R), static_cast<int>(img.size()) == q && *img.rbegin() == q - 1, {{"p", p}}, str(q), str(img.size()));
        bool add = true, mul = true;
        for (auto& u : els)
            for (auto& v : els) {
                const int gu = witt_ghost_iso(u), gv = witt_ghost_iso(v);
                add = add && witt_ghost_iso(witt_add(u, v)) == (gu + gv) % q;
                mul = mul && witt_ghost_iso(witt_mul(u, v)) == (gu * gv) % q;
            }
        cs.add(key("additive", R), add, {{"p", p}});
        cs.add(key("multiplicative", R), mul, {{"p", p}});
        cs.add(key("unit", R), witt_ghost_iso({R, 1, 0}) == 1, {{"p", p}});
    }
}

void c02(const SuiteOptions& opt, Cases& cs) {
    std::vector<RingPtr> def{Ring::get(2), Ring::get(3), Ring::get(2, 2)};
    for (auto& R : rings(opt, def, 1, "Witt ring axioms")) {
        auto els = witt_elements(R);
        const Witt2 zero{R, 0, 0}, one{R, 1, 0};
        bool aa = true, ac = true, ma = true, mc = true, dist = true, unit = true;
        for (auto& x : els) {
            unit = unit && witt_add(x, zero) == x && witt_mul(x, one) == x && witt_add(x, witt_neg(x)) == zero;
            for (auto& y : els) {
                ac = ac && witt_add(x, y) == witt_add(y, x);
                mc = mc && witt_mul(x, y) == witt_mul(y, x);
                for (auto& z : els) {
                    aa = aa && witt_add(witt_add(x, y), z) == witt_add(x, witt_add(y, z));
                    ma = ma && witt_mul(witt_mul(x, y), z) == witt_mul(x, witt_mul(y, z));
                    dist = dist && witt_mul(x, witt_add(y, z)) == witt_add(witt_mul(x, y), witt_mul(x, z));
                }
            }
        }
        json in = ring_to_json(R);
        cs.add(key("add associative", R), aa, in);
        cs.add(key("add commutative", R), ac, in);
        cs.add(key("mul associative", R), ma, in);
        cs.add(key("mul commutative", R), mc, in);
        cs.add(key("distributive", R), dist, in);
        cs.add(key("zero one negation", R), unit, in);
    }
}

void c03(const SuiteOptions& opt, Cases& cs) {
    std::vector<RingPtr> def{Ring::get(2), Ring::get(3), Ring::get(2, 2)};
    for (auto& R : rings(opt, def, 1, "regular endomorphisms")) {
        auto rep = check_regular_endomorphisms(R);
        const int N = R->size() * R->size();
        json in = ring_to_json(R);
        cs.add(key("count", R), rep.count == N, in, str(N), str(rep.count));
        cs.add(key("right multiplications", R), rep.are_right_mults, in);
        cs.add(key("addition table", R), rep.add_table, in);
        cs.add(key("multiplication table", R), rep.mul_table, in);
        cs.add(key("square zero kernel", R), rep.square_zero, in);
    }
}

// ---------------------------------------------------------------- tate

void c04(const SuiteOptions& opt, Cases& cs) {
    std::vector<RingPtr> def{Ring::get(2), Ring::get(3), Ring::get(2, 2)};
    for (auto& R : rings(opt, def, 1, "trace sequence"))
        for (int n = 0; n <= 3; ++n) {
            auto r = check_trace_sequence(R, n);
            json in{{"ring", ring_to_json(R)}, {"n", n}};
            cs.add(key("trace sequence n=" + str(n), R), r.ok(), in);
        }
}

void c05(const SuiteOptions& opt, Cases& cs) {
    std::vector<RingPtr> def{Ring::get(2), Ring::get(3)};
    auto rs = rings(opt, def, 1, "Tate complexes");
    Rng rng = rng_for(opt, 5);
    const int N = count(opt, 50);
    for (int t = 0; t < N; ++t) {
        const RingPtr& R = rs[t % rs.size()];
        const int p = R->p();
        Cx V = random_cx(R, rng, 3, 2);
        auto E = std::make_shared<const EqCx>(tensor_power(V, p));
        json in = complex_to_json(V);
        bool acyc = true;
        for (int j = E->cx.lo; j <= E->cx.hi(); ++j)
            if (j % p != 0) {
                auto [ev, od] = tate_module_lengths(*E, j);
                acyc = acyc && ev == 0 && od == 0;
            }
        cs.add(key("a prime-to-p summands acyclic", R, t), acyc, in);
        Cx Vt = frobenius_twist(V);
        bool ranks = true, weights = true;
        for (int i = V.lo - 1; i <= V.hi() + 1; ++i) {
            TateBand B = tate_trunc(E, i, i);
            Cx S = shift(Vt, i);
            for (int d = std::min(B.cx.lo, S.lo); d <= std::max(B.cx.hi(), S.hi()); ++d)
                ranks = ranks && module_length(B.cx, d) == S.rank(d);
            CMap phi = tate_phi(B, V);
            ranks = ranks && is_chain_map(B.cx, S, phi) && is_quasi_iso(B.cx, S, phi);
            // gr^w is V_{-w} placed in degree i - w
            int total = 0;
            for (int w = -V.hi() - 2; w <= -V.lo + 2; ++w) {
                Cx G = graded(B.cx, w);
                for (int d = G.lo; d <= G.hi(); ++d) {
                    const int h = homology_length(G, d);
                    total += h;
                    if (h != (d == i - w ? V.rank(-w) : 0)) weights = false;
                }
            }
            int vt = 0;
            for (int d = V.lo; d <= V.hi(); ++d) vt += V.rank(d);
            weights = weights && total == vt;
        }
        cs.add(key("b pieces are twists of V", R, t), ranks, in);
        cs.add(key("c weights of the pieces", R, t), weights, in);
    }
}

void c06(const SuiteOptions& opt, Cases& cs) {
    std::vector<RingPtr> def{Ring::get(2), Ring::get(3)};
    auto rs = rings(opt, def, 1, "admissibility");
    Rng rng = rng_for(opt, 6);
    const int N = count(opt, 100);
    auto bound_and_seq = [&](const Cx& V, const CyclicExt& X, const std::string& k) {
        bool bound = true;
        for (int d = X.C.lo; d <= X.C.hi(); ++d)
            if (d > V.hi() + 1 && module_length(X.C, d)) bound = false;
        cs.add("c degree bound " + k, bound, complex_to_json(V));
        cs.add("d defining sequence quasiexact " + k, is_quasiexact(X.B1, X.C, X.A, X.b, X.a), complex_to_json(V));
    };
    for (int t = 0; t < N; ++t) {
        const RingPtr& R = rs[t % rs.size()];
        RandomCxOptions o;
        o.lo = uniform(rng, -1, 0);
        o.hi = o.lo + uniform(rng, 1, 2);
        o.max_rank = 2;
        o.acyclic = true;
        Cx Z = random_complex(R, o, rng);
        CyclicExt XZ = cyclic_extension(Z);
        cs.add(key("a acyclic to acyclic", R, t), is_acyclic(Z) && is_acyclic(XZ.C), complex_to_json(Z));
    }
    for (int t = 0; t < N; ++t) {
        const RingPtr& R = rs[t % rs.size()];
        Cx V = random_cx(R, rng, 2, 1), W = random_cx(R, rng, 2, 1);
        Cx S = direct_sum(V, W);
        CMap inc, proj;
        for (int n = S.lo; n <= S.hi(); ++n) {
            inc.f[n] = hcat(Mat::identity(R, V.rank(n)), Mat(R, V.rank(n), W.rank(n)));
            proj.f[n] = vcat(Mat(R, V.rank(n), W.rank(n)), Mat::identity(R, W.rank(n)));
        }
        CyclicExt XV = cyclic_extension(V), XS = cyclic_extension(S), XW = cyclic_extension(W);
        CMap ci = cyclic_map(XV, XS, V, S, inc), cp = cyclic_map(XS, XW, S, W, proj);
        bool ok = is_chain_map(XV.C, XS.C, ci) && is_chain_map(XS.C, XW.C, cp) && is_quasiexact(XV.C, XS.C, XW.C, ci, cp);
        cs.add(key("b split to quasiexact", R, t), ok, json{{"V", complex_to_json(V)}, {"W", complex_to_json(W)}});
        bound_and_seq(S, XS, key("sum", R, t));
        bound_and_seq(V, XV, key("summand", R, t));
    }
}

void c09(const SuiteOptions& opt, Cases& cs) {
    std::vector<RingPtr> def{Ring::get(2), Ring::get(3), Ring::get(2, 1, 2), Ring::get(3, 1, 2)};
    for (auto& R : rings(opt, def, 0, "sigma sign law")) {
        const int p = R->p();
        for (int i = -2; i <= 3; ++i) {
            EqCx E = tensor_power(one_term(R, i), p);
            const Elt want = (i * (p - 1)) % 2 ? R->neg(1) : Elt(1);
            const Mat& s = E.sigma.at(p * i);
            const bool ok = s.r == 1 && s(0, 0) == want;
            cs.add(key("sigma on line i=" + str(i), R), ok, {{"ring", ring_to_json(R)}, {"i", i}}, str(want), str(s.r ? s(0, 0) : -1));
        }
    }
}

// ---------------------------------------------------------------- extension

void c07(const SuiteOptions& opt, Cases& cs) {
    std::vector<std::pair<RingPtr, int>> spaces{{Ring::get(2), 1}, {Ring::get(2), 2}, {Ring::get(3), 1}};
    std::vector<RingPtr> def{Ring::get(2), Ring::get(3), Ring::get(5)};
    auto rs = rings(opt, def, 1, "cocycle suite");
    if (!(opt.ring.empty() && opt.ps.empty() && opt.d == 0)) {
        spaces.clear();
        for (auto& R : rs) spaces.push_back({R, 1});
    }
    for (auto& [R, n] : spaces) {
        auto r = check_cocycle(R, n);
        json in{{"ring", ring_to_json(R)}, {"n", n}};
        const std::string s = " n=" + str(n);
        cs.add(key("normalized" + s, R), r.normalized, in);
        cs.add(key("symmetric" + s, R), r.symmetric, in);
        cs.add(key("cocycle identity" + s, R), r.associative, in);
        cs.add(key("boundary of cocycle" + s, R), r.boundary, in);
        cs.add(key("kappa independent" + s, R), r.kappa_free, in);
        cs.add(key("abelian group" + s, R), r.group, in);
    }
    for (auto& R : rs) {
        if (R->d() != 1) continue;
        auto [order, cyclic] = c01_order_cyclic(R);
        const int p = R->p();
        cs.add(key("C01 cyclic of order p^2", R), order == p * p && cyclic, ring_to_json(R), "cyclic of order " + str(p * p),
               (cyclic ? "cyclic of order " : "noncyclic of order ") + str(order));
    }
}

void c08(const SuiteOptions& opt, Cases& cs) {
    std::vector<std::pair<RingPtr, int>> runs{{Ring::get(2), 0}, {Ring::get(3), 300}, {Ring::get(2, 2), 300}};
    if (!(opt.ring.empty() && opt.ps.empty() && opt.d == 0)) {
        runs.clear();
        for (auto& R : rings(opt, {}, 1, "multiplicativity")) runs.push_back({R, R->size() == 2 ? 0 : 300});
    }
    for (auto& [R, samples] : runs) {
        for (int n = 1; n <= (samples == 0 ? 2 : 1); ++n) {
            auto r = check_split_mul(R, n, samples ? count(opt, samples) : 0, opt.seed);
            json in{{"ring", ring_to_json(R)}, {"n", n}};
            const std::string s = " n=" + str(n);
            cs.add(key("left linear" + s, R), r.left_linear, in);
            cs.add(key("right linear" + s, R), r.right_linear, in);
            cs.add(key("associative" + s, R), r.associative, in);
            cs.add(key("unital" + s, R), r.unital, in);
            cs.add(key("sym identity" + s, R), r.sym, in);
        }
    }
}

void c14(const SuiteOptions& opt, Cases& cs) {
    std::vector<RingPtr> def{Ring::get(2), Ring::get(2, 1, 2), Ring::get(3, 1, 2)};
    auto rs = rings(opt, def, 0, "difference functors");
    Rng rng = rng_for(opt, 14);
    const int N = count(opt, 12);
    for (auto& R : rs)
        for (int t = 0; t < N; ++t) {
            auto [X, C] = random_split_elementary(R, uniform(rng, 1, 2), rng);
            ModExt E = random_extension(X, rng);
            ModSplit Cp = split_minus_ext(X, C, random_extension(X, rng));
            json in{{"ring", ring_to_json(R)}, {"case", t}};
            bool ok = is_splitting(X, split_minus_ext(X, C, E)) && is_extension(X, split_minus_split(X, Cp, C)) &&
                      check_split_iso(X, C, Cp) && check_ext_iso(X, C, E) && is_split_extension(X, split_minus_split(X, C, C));
            cs.add(key("a module sum and difference", R, t), ok, in);
            auto [DX, S1] = dg_from_module(X, C);
            auto [DX2, S2] = dg_from_module(X, Cp);
            DGExt DE = dg_ext_from_module(X, E);
            auto r = check_dg_differences(DX, S1, S2, DE);
            cs.add(key("b dg difference maps", R, t), r.all(), in);
        }
    for (auto& R : rs) {
        if (R->k() != 2) continue;
        for (int i = -1; i <= 1; ++i) {
            DGSplittings D = dg_splittings(lifted(one_term(R, i)));
            DGElem X{D.B, D.cCp.cx, D.cA.cx, D.b, D.a};
            LeftSpl S{D.cCl.cx, D.l, D.bl};
            DGExt E = trivial_dg_extension(X);
            auto r = check_dg_differences(X, S, dg_sub(X, S, E), E);
            cs.add(key("c dg difference on C^l of line " + str(i), R), r.all() && is_strict_left(X, S),
                   complex_to_json(one_term(R, i)));
        }
    }
}

// ---------------------------------------------------------------- dg

struct Corpus {
    std::vector<std::pair<Cx, Lifted>> items;
};

Corpus lifted_corpus(const SuiteOptions& opt) {
    std::vector<RingPtr> def{Ring::get(2, 1, 2), Ring::get(3, 1, 2)};
    auto rs = rings(opt, def, 2, "lifted complexes");
    Rng rng = rng_for(opt, 10);
    const int N = count(opt, 50);
    Corpus c;
    for (int t = 0; t < N; ++t) {
        const RingPtr& R = rs[t % rs.size()];
        Cx V = random_cx(R, rng, 2, 2);
        c.items.push_back({V, lifted(V)});
    }
    return c;
}

void c10(const SuiteOptions& opt, Cases& cs) {
    Corpus c = lifted_corpus(opt);
    for (size_t t = 0; t < c.items.size(); ++t) {
        auto& [V, L] = c.items[t];
        auto r = check_lift_sequences(L);
        cs.add(key("mod p^2 sequence exact", V.R, static_cast<int>(t)), r.p2_exact, complex_to_json(V));
    }
}

void c11(const SuiteOptions& opt, Cases& cs) {
    Corpus c = lifted_corpus(opt);
    for (size_t t = 0; t < c.items.size(); ++t) {
        auto& [V, L] = c.items[t];
        auto r = check_lift_sequences(L);
        cs.add(key("q0 iso", V.R, static_cast<int>(t)), r.q0_iso, complex_to_json(V));
        cs.add(key("q1 zero", V.R, static_cast<int>(t)), r.q1_zero, complex_to_json(V));
    }
}

void c12(const SuiteOptions& opt, Cases& cs) {
    Corpus c = lifted_corpus(opt);
    for (size_t t = 0; t < c.items.size(); ++t) {
        auto& [V, L] = c.items[t];
        const int i = static_cast<int>(t);
        json in = complex_to_json(V);
        auto s = check_lift_sequences(L);
        cs.add(key("sequences of C^l and C^r exact", V.R, i), s.left_seq && s.right_seq, in);
        DGSplittings S = dg_splittings(L);
        auto l = check_left(S), r = check_right(S);
        cs.add(key("left chain maps", V.R, i), l.chain && l.square, in);
        cs.add(key("left quasiexact", V.R, i), l.quasiexact, in);
        cs.add(key("left strict", V.R, i), l.strict, in);
        cs.add(key("left a.l quasi-iso", V.R, i), l.quasi_iso, in);
        cs.add(key("right chain maps", V.R, i), r.chain && r.square, in);
        cs.add(key("right quasiexact", V.R, i), r.quasiexact, in);
        cs.add(key("right strict", V.R, i), r.strict, in);
        cs.add(key("right r.b quasi-iso", V.R, i), r.quasi_iso, in);
        cs.add(key("cone of l against C^r", V.R, i), check_lr(S), in);
    }
}

void c13(const SuiteOptions& opt, Cases& cs) {
    const bool custom = !(opt.ring.empty() && opt.ps.empty() && opt.d == 0);
    auto rs = rings(opt, {Ring::get(2, 1, 2), Ring::get(3, 1, 2)}, 2, "factorization through V/p");
    Rng rng = rng_for(opt, 13);
    int differ = 0, pairs = 0;
    auto pair_case = [&](const Cx& V, const std::string& k) {
        const RingPtr& R = V.R;
        const Elt p = static_cast<Elt>(R->p());
        Lifted L = lifted(V);
        CMap f = random_homotopic(V, V, scalar_map(V, random_elt(*R, rng)), rng);
        CMap g = random_homotopic(V, V, scalar_map(V, random_elt(*R, rng)), rng);
        CMap f2 = map_add(V, V, f, map_scale(V, V, g, p));
        CMap F = lifted_map(L, L, f), F2 = lifted_map(L, L, f2);
        bool ok = is_chain_map(V, V, f2) && is_chain_map(L.Cl, L.Cl, F) && is_chain_map(L.Cr, L.Cr, F) &&
                  maps_equal(L.Cl, L.Cl, F, F2) && maps_equal(L.Cr, L.Cr, F, F2) && maps_equal(L.Cl, L.Cl, F, F);
        differ += !maps_equal(L.C, L.C, F, F2);
        ++pairs;
        cs.add(k, ok, complex_to_json(V));
    };
    // (Z/4)^2 in degree 0
    {
        RingPtr R = custom ? rs[0] : Ring::get(2, 1, 2);
        Cx V = free_complex(R, 0, {2}, {Mat(R, 2, 0)});
        for (int t = 0; t < 5; ++t) pair_case(V, key("a f and f+pg on rank 2 module", R, t));
    }
    {
        RingPtr R = custom ? rs[rs.size() - 1] : Ring::get(3, 1, 2);
        const int N = count(opt, 25);
        for (int t = 0; t < N; ++t) pair_case(random_cx(R, rng, 2, 2), key("b f and f+pg on random complexes", R, t));
    }
    cs.add("c some pair differs on C", differ > 0, {{"pairs", pairs}}, "> 0", "0");
    const int M = count(opt, 8);
    for (auto& R : rs) {
        const Elt p = static_cast<Elt>(R->p());
        Section S = make_section(R);
        Cx M2 = free_complex(R, 0, {2}, {Mat(R, 2, 0)});
        Lifted L = lifted(M2);
        for (int t = 0; t < M; ++t) {
            Vec v = random_vec(R, 2, rng), w = random_vec(R, 2, rng);
            Vec v2 = vec_add(*R, v, vec_scale(*R, w, p));
            Vec diff = vec_sub(*R, power_class(L, v2), power_class(L, v));
            Vec sum = vnsh_sum(L, v, w);
            bool ok = diff == sum && L.Cl.Wat(0).contains(sum) && same_in_cl(L, 0, stilde(S, L, v), stilde(S, L, v2));
            cs.add(key("d section ignores p-multiples, expansion oracle", R, t), ok, json{{"v", v}, {"w", w}});
        }
        int done = 0;
        for (int t = 0; done < M && t < 8 * M; ++t) {
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
            cs.add(key("e section multiplicative", R, done), same_in_cl(LT, 0, prod, svw),
                   json{{"V", complex_to_json(V)}, {"W", complex_to_json(W)}, {"v", v}, {"w", w}});
            ++done;
        }
    }
}

using Runner = void (*)(const SuiteOptions&, Cases&);

const std::vector<std::pair<const char*, Runner>>& table() {
    static const std::vector<std::pair<const char*, Runner>> t{
        {"W2(F_p) is Z/p^2 via the ghost map", c01},
        {"Witt ring axioms", c02},
        {"regular endomorphisms reproduce W2", c03},
        {"trace sequence exact for n <= 3", c04},
        {"Tate complexes: prime-to-p acyclicity, [i,i] pieces, weights", c05},
        {"cyclic power: acyclic and split inputs, degree bound, defining sequence", c06},
        {"cocycle identities, group law, C01(F_p) cyclic of order p^2", c07},
        {"multiplication of splittings", c08},
        {"sigma sign law on lines", c09},
        {"mod p^2 sequence exact", c10},
        {"q0 iso and q1 zero", c11},
        {"strict DG splittings C^l and C^r", c12},
        {"maps on C^l, C^r depend on f mod p; section identities", c13},
        {"difference functors, module and DG level", c14},
    };
    return t;
}

}  // namespace

int CriterionResult::failures() const {
    return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const Case& c) { return !c.ok; }));
}

std::string criterion_title(int id) {
    if (id < 1 || id > static_cast<int>(table().size())) throw usage_error("no criterion " + std::to_string(id));
    return table()[id - 1].first;
}

CriterionResult run_criterion(int id, const SuiteOptions& opt) {
    CriterionResult r;
    r.id = id;
    r.title = criterion_title(id);
    auto t0 = std::chrono::steady_clock::now();
    Cases cs{r.cases};
    table()[id - 1].second(opt, cs);
    std::stable_sort(r.cases.begin(), r.cases.end(), [](const Case& a, const Case& b) { return a.key < b.key; });
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> n{"witt", "tate", "extension", "dg"};
    return n;
}

std::vector<int> suite_criteria(const std::string& suite) {
    if (suite == "witt") return {1, 2, 3};
    if (suite == "tate") return {4, 5, 6, 9};
    if (suite == "extension") return {7, 8, 14};
    if (suite == "dg") return {10, 11, 12, 13};
    throw usage_error("unknown suite '" + suite + "'");
}

json report_json(const std::vector<SuiteResult>& rs, const SuiteOptions& opt, bool timing) {
    json out{{"seed", opt.seed}, {"suites", json::array()}};
    int total = 0, failed = 0;
    for (const auto& s : rs) {
        json js{{"suite", s.suite}, {"criteria", json::array()}};
        int cases = 0, fails = 0;
        double secs = 0;
        for (const auto& c : s.criteria) {
            json jc{{"id", c.id}, {"title", c.title}, {"cases", c.cases.size()}, {"failures", json::array()}};
            for (const auto& k : c.cases)
                if (!k.ok) jc["failures"].push_back({{"case", k.key}, {"input", k.input}, {"expected", k.expected}, {"actual", k.actual}});
            jc["pass"] = c.ok();
            if (timing) jc["wall_time_s"] = c.seconds;
            cases += static_cast<int>(c.cases.size());
            fails += c.failures();
            secs += c.seconds;
            js["criteria"].push_back(jc);
        }
        js["cases"] = cases;
        js["failed"] = fails;
        if (timing) js["wall_time_s"] = secs;
        total += cases;
        failed += fails;
        out["suites"].push_back(js);
    }
    out["cases"] = total;
    out["failed"] = failed;
    return out;
}

std::string report_md(const std::vector<SuiteResult>& rs, const SuiteOptions& opt, bool timing) {
    std::ostringstream os;
    os << "# verification report\n\nseed: " << opt.seed << "\n";
    for (const auto& s : rs) {
        os << "\n## " << s.suite << "\n\n| # | check | cases | failed |" << (timing ? " time (s) |" : "") << "\n|---|---|---|---|"
           << (timing ? "---|" : "") << "\n";
        for (const auto& c : s.criteria) {
            os << "| " << c.id << " | " << c.title << " | " << c.cases.size() << " | " << c.failures() << " |";
            if (timing) {
                char buf[32];
                std::snprintf(buf, sizeof buf, " %.2f |", c.seconds);
                os << buf;
            }
            os << "\n";
        }
        for (const auto& c : s.criteria)
            for (const auto& k : c.cases)
                if (!k.ok) os << "\n- FAIL " << c.id << " `" << k.key << "`: expected " << k.expected << ", got " << k.actual;
        os << "\n";
    }
    return os.str();
}

}  // namespace cyc
