#include "cyc/io.hpp"

namespace cyc {

namespace {

int get_int(const json& j, const std::string& at) {
    if (!j.is_number_integer()) throw schema_error(at, "expected an integer");
    return j.get<int>();
}

int parse_deg(const std::string& key, const std::string& at) {
    try {
        size_t pos = 0;
        int n = std::stoi(key, &pos);
        if (pos == key.size()) return n;
    } catch (const std::exception&) {
    }
    throw schema_error(at, "degree keys must be integers");
}

}  // namespace

json ring_to_json(const RingPtr& R) {
    const RingSpec& s = R->spec();
    return {{"p", s.p}, {"d", s.d}, {"k", s.k}, {"poly", s.poly}};
}

RingPtr ring_from_json(const json& j, const std::string& at) {
    if (!j.is_object()) throw schema_error(at, "ring must be an object");
    if (!j.contains("p")) throw schema_error(at + "/p", "missing");
    RingSpec s;
    s.p = get_int(j["p"], at + "/p");
    if (!is_prime(s.p)) throw schema_error(at + "/p", "p must be prime");
    s.d = j.contains("d") ? get_int(j["d"], at + "/d") : 1;
    s.k = j.contains("k") ? get_int(j["k"], at + "/k") : 1;
    if (s.d < 1 || s.d > 4) throw schema_error(at + "/d", "d must be in 1..4");
    if (s.k != 1 && s.k != 2) throw schema_error(at + "/k", "k must be 1 or 2");
    if (j.contains("poly")) {
        const json& P = j["poly"];
        if (!P.is_array() || static_cast<int>(P.size()) != s.d + 1) throw schema_error(at + "/poly", "poly must have d+1 coefficients");
        for (size_t i = 0; i < P.size(); ++i) s.poly.push_back(get_int(P[i], at + "/poly/" + std::to_string(i)));
    } else {
        s.poly = default_poly(s.p, s.d);
    }
    try {
        return Ring::get(s);
    } catch (const std::exception& e) {
        throw schema_error(at, e.what());
    }
}

json scalar_to_json(const Ring& R, Elt a) { return R.coeffs(a); }

Elt scalar_from_json(const Ring& R, const json& j, const std::string& at) {
    if (j.is_number_integer()) {
        if (R.d() != 1) throw schema_error(at, "scalars over an extension need d coordinates");
        return R.from_int(j.get<long>());
    }
    if (!j.is_array() || static_cast<int>(j.size()) != R.d()) throw schema_error(at, "scalar must be an array of d integers");
    std::vector<int> c;
    for (size_t i = 0; i < j.size(); ++i) {
        long v = get_int(j[i], at + "/" + std::to_string(i));
        long q = R.q();
        c.push_back(static_cast<int>(((v % q) + q) % q));
    }
    return R.from_coeffs(c);
}

Cx complex_from_json(const json& j) {
    if (!j.is_object()) throw schema_error("", "complex must be an object");
    if (!j.contains("ring")) throw schema_error("/ring", "missing");
    RingPtr R = ring_from_json(j["ring"]);
    if (!j.contains("terms") || !j["terms"].is_object()) throw schema_error("/terms", "missing or not an object");
    std::map<int, int> rk;
    for (auto& [key, v] : j["terms"].items()) {
        const std::string at = "/terms/" + key;
        int n = parse_deg(key, at), r = get_int(v, at);
        if (r < 0) throw schema_error(at, "rank must be nonnegative");
        if (r > 0) rk[n] = r;
    }
    if (rk.empty()) return zero_complex(R);
    const int lo = rk.begin()->first, hi = rk.rbegin()->first;
    auto rank = [&](int n) { return rk.count(n) ? rk[n] : 0; };
    std::map<int, Mat> dm;
    if (j.contains("diff")) {
        if (!j["diff"].is_object()) throw schema_error("/diff", "not an object");
        for (auto& [key, M] : j["diff"].items()) {
            const std::string at = "/diff/" + key;
            const int n = parse_deg(key, at), rows = rank(n - 1), cols = rank(n);
            if (!M.is_array() || static_cast<int>(M.size()) != rows)
                throw schema_error(at, "expected " + std::to_string(rows) + " rows (rank of degree " + std::to_string(n - 1) + ")");
            Mat d(R, cols, rows);
            for (int r = 0; r < rows; ++r) {
                const json& row = M[r];
                if (!row.is_array() || static_cast<int>(row.size()) != cols)
                    throw schema_error(at + "/" + std::to_string(r), "expected " + std::to_string(cols) + " entries");
                for (int c = 0; c < cols; ++c) d(c, r) = scalar_from_json(*R, row[c], at + "/" + std::to_string(r) + "/" + std::to_string(c));
            }
            if (rows && cols) dm[n] = d;
        }
    }
    std::vector<int> ranks;
    std::vector<Mat> diffs;
    for (int n = lo; n <= hi; ++n) {
        ranks.push_back(rank(n));
        diffs.push_back(dm.count(n) ? dm[n] : Mat(R, rank(n), rank(n - 1)));
    }
    Cx E = free_complex(R, lo, ranks, diffs);
    if (j.contains("weights")) {
        if (!j["weights"].is_object()) throw schema_error("/weights", "not an object");
        E.wt.assign(ranks.size(), {});
        for (int n = lo; n <= hi; ++n) E.wt[n - lo].assign(rank(n), 0);
        for (auto& [key, w] : j["weights"].items()) {
            const std::string at = "/weights/" + key;
            const int n = parse_deg(key, at);
            if (!w.is_array() || static_cast<int>(w.size()) != rank(n)) throw schema_error(at, "one weight per basis vector");
            for (int i = 0; i < rank(n); ++i) E.wt[n - lo][i] = get_int(w[i], at + "/" + std::to_string(i));
        }
    }
    if (!is_valid(E)) throw schema_error("/diff", "d o d is not zero");
    return E;
}

json complex_to_json(const Cx& E) {
    const Ring& R = *E.R;
    json out{{"ring", ring_to_json(E.R)}, {"terms", json::object()}, {"diff", json::object()}};
    for (int n = E.lo; n <= E.hi(); ++n) {
        if (!E.rank(n)) continue;
        out["terms"][std::to_string(n)] = E.rank(n);
        if (E.has_weights()) out["weights"][std::to_string(n)] = E.weights(n);
        if (!E.rank(n - 1)) continue;
        Mat d = E.diff(n);
        json M = json::array();
        for (int r = 0; r < d.c; ++r) {
            json row = json::array();
            for (int c = 0; c < d.r; ++c) row.push_back(scalar_to_json(R, d(c, r)));
            M.push_back(row);
        }
        out["diff"][std::to_string(n)] = M;
    }
    return out;
}

json sq_complex_to_json(const Cx& E) {
    Compressed C = compress(E);
    json out = complex_to_json(C.cx);
    for (const auto& [n, b] : C.basis)
        if (b.rank()) out["orders"][std::to_string(n)] = b.exps;
    return out;
}

json homology_to_json(const Cx& E) {
    json out = json::object();
    for (const auto& [n, ex] : homology(E)) out[std::to_string(n)] = ex;
    return out;
}

}  // namespace cyc
