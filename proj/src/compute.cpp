#include "cyc/compute.hpp"

#include <algorithm>
#include <sstream>

#include "cyc/splitting.hpp"
#include "cyc/tate.hpp"
#include "cyc/witt.hpp"

namespace cyc {

json compute_tate(const json& in) {
    Cx V = complex_from_json(in);
    const int p = V.R->p();
    int lo = p * V.lo - 2, hi = p * V.hi() + 2;
    if (in.contains("window")) {
        const json& w = in["window"];
        if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() || !w[1].is_number_integer() || w[0] > w[1])
            throw schema_error("/window", "expected [lo, hi] with lo <= hi");
        lo = w[0];
        hi = w[1];
    }
    EqCx E = tensor_power(V, p);
    Cx T = tate_window(E, lo, hi);
    json h = json::object();
    // the two edge degrees of a window are not meaningful
    for (const auto& [n, ex] : homology(T))
        if (n > lo && n < hi) h[std::to_string(n)] = ex;
    return {{"kind", "tate"}, {"p", p}, {"window", {lo, hi}}, {"complex", complex_to_json(T)}, {"homology", h}};
}

json compute_cyclic(const json& in) {
    Cx V = complex_from_json(in);
    if (V.R->k() != 1) throw schema_error("/ring/k", "the cyclic power needs k = 1");
    CyclicExt X = cyclic_extension(V);
    return {{"kind", "cyclic"},
            {"p", V.R->p()},
            {"complex", sq_complex_to_json(X.C)},
            {"homology", homology_to_json(X.C)},
            {"quasiexact", is_quasiexact(X.B1, X.C, X.A, X.b, X.a)}};
}

json compute_splitting(const json& in) {
    Cx V = complex_from_json(in);
    const RingPtr& R = V.R;
    if (R->k() != 1) throw schema_error("/ring/k", "splittings need k = 1");
    for (int n = V.lo; n <= V.hi(); ++n)
        if (n != 0 && V.rank(n)) throw schema_error("/terms/" + std::to_string(n), "only a module in degree 0 is allowed");
    const int n = V.rank(0);
    Split01 S(R, n);
    auto els = S.elements();
    if (els.size() > 1024) throw schema_error("/terms/0", "splitting too large for tables");
    std::sort(els.begin(), els.end());
    auto index = [&](const El01& x) { return static_cast<int>(std::lower_bound(els.begin(), els.end(), x) - els.begin()); };
    json jel = json::array(), add = json::array();
    for (auto& x : els) jel.push_back({{"c", x.c}, {"v", x.v}});
    for (auto& x : els) {
        json row = json::array();
        for (auto& y : els) row.push_back(index(S.add(x, y)));
        add.push_back(row);
    }
    json out{{"kind", "splitting"}, {"ring", ring_to_json(R)}, {"rank", n}, {"order", els.size()}, {"elements", jel}, {"add", add}};
    if (n == 1) {
        json mul = json::array(), witt = json::array();
        for (auto& x : els) {
            json row = json::array();
            for (auto& y : els) row.push_back(index(split_mul(S, S, S, x, y)));
            mul.push_back(row);
            Witt2 w = to_witt(S, x);
            witt.push_back({R->coeffs(w.x0), R->coeffs(w.x1)});
        }
        out["mul"] = mul;
        out["witt"] = witt;
    }
    return out;
}

std::string demo_witt(int p, int d) {
    if ((p != 2 && p != 3 && p != 5) || (d != 1 && d != 2)) throw usage_error("demo-witt supports p in {2,3,5} and d in {1,2}");
    RingPtr R = Ring::get(p, d);
    auto els = witt_elements(R);
    auto name = [&](const Witt2& w) {
        std::ostringstream os;
        auto f = [&](Elt a) {
            auto c = R->coeffs(a);
            std::string s;
            for (size_t i = 0; i < c.size(); ++i) s += (i ? "." : "") + std::to_string(c[i]);
            return s;
        };
        os << "(" << f(w.x0) << "," << f(w.x1) << ")";
        return os.str();
    };
    auto idx = [&](const Witt2& w) {
        for (size_t i = 0; i < els.size(); ++i)
            if (els[i] == w) return static_cast<int>(i);
        return -1;
    };
    std::ostringstream os;
    os << "W2(F_" << R->size() << "), " << els.size() << " elements\n";
    for (size_t i = 0; i < els.size(); ++i) {
        os << "  " << i << " = " << name(els[i]);
        if (d == 1) os << "  -> " << witt_ghost_iso(els[i]) << " mod " << p * p;
        os << "\n";
    }
    for (int op = 0; op < 2; ++op) {
        os << "\n" << (op ? "*" : "+") << "\n";
        for (auto& x : els) {
            for (size_t j = 0; j < els.size(); ++j) os << (j ? " " : "  ") << idx(op ? witt_mul(x, els[j]) : witt_add(x, els[j]));
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace cyc
