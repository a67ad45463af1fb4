#include "cyc/ring.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace cyc {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int i = 2; i * i <= n; ++i)
        if (n % i == 0) return false;
    return true;
}

namespace {

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// polynomial over F_p with no root and (for degree <= 3) that is enough;
// for degree 4+ we do a full trial division by all monic polys of degree <= d/2
bool irreducible(const std::vector<int>& f, int p) {
    int d = static_cast<int>(f.size()) - 1;
    if (d <= 1) return true;
    for (int e = 1; e <= d / 2; ++e) {
        int cnt = ipow(p, e);
        for (int code = 0; code < cnt; ++code) {
            std::vector<int> g(e + 1);
            int c = code;
            for (int i = 0; i < e; ++i) {
                g[i] = c % p;
                c /= p;
            }
            g[e] = 1;
            std::vector<int> r = f;
            for (int i = d; i >= e; --i) {
                int lead = r[i] % p;
                if (!lead) continue;
                for (int j = 0; j <= e; ++j) r[i - e + j] = ((r[i - e + j] - lead * g[j]) % p + p) % p;
            }
            bool zero = true;
            for (int i = 0; i < e; ++i)
                if (r[i] % p) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<int> default_poly(int p, int d) {
    if (d < 1) throw usage_error("degree must be >= 1");
    if (d == 1) return {0, 1};
    int cnt = ipow(p, d);
    for (int code = 0; code < cnt; ++code) {
        std::vector<int> f(d + 1);
        int c = code;
        for (int i = 0; i < d; ++i) {
            f[i] = c % p;
            c /= p;
        }
        f[d] = 1;
        if (irreducible(f, p)) return f;
    }
    throw usage_error("no irreducible polynomial");
}

RingSpec make_spec(int p, int d, int k) {
    RingSpec s;
    s.p = p;
    s.d = d;
    s.k = k;
    s.poly = default_poly(p, d);
    return s;
}

Ring::Ring(const RingSpec& spec) : spec_(spec) {
    const int p = spec.p, d = spec.d, k = spec.k;
    if (!is_prime(p)) throw usage_error("p must be prime");
    if (d < 1) throw usage_error("d must be >= 1");
    if (k != 1 && k != 2) throw usage_error("k must be 1 or 2");
    if (static_cast<int>(spec.poly.size()) != d + 1 || spec.poly[d] != 1)
        throw usage_error("poly must be monic of degree d");
    for (int c : spec.poly)
        if (c < 0 || c >= p) throw usage_error("poly coefficients must lie in [0,p)");
    if (!irreducible(spec.poly, p)) throw usage_error("poly is not irreducible mod p");
    q_ = ipow(p, k);
    long n = 1;
    for (int i = 0; i < d; ++i) {
        n *= q_;
        if (n > 1024) throw usage_error("ring too large (limit 1024 elements)");
    }
    n_ = static_cast<int>(n);

    std::vector<std::vector<int>> cf(n_);
    for (int a = 0; a < n_; ++a) {
        cf[a].resize(d);
        int c = a;
        for (int i = 0; i < d; ++i) {
            cf[a][i] = c % q_;
            c /= q_;
        }
    }
    auto pack = [&](const std::vector<int>& c) {
        int r = 0;
        for (int i = d - 1; i >= 0; --i) r = r * q_ + ((c[i] % q_) + q_) % q_;
        return static_cast<Elt>(r);
    };

    add_.resize(n * n);
    mul_.resize(n * n);
    neg_.resize(n);
    val_.resize(n);
    inv_.assign(n, 0);
    std::vector<int> tmp(d), prod(2 * d - 1);
    for (int a = 0; a < n_; ++a) {
        for (int i = 0; i < d; ++i) tmp[i] = q_ - cf[a][i];
        neg_[a] = pack(tmp);
        int v = k;
        for (int i = 0; i < d; ++i) {
            int c = cf[a][i];
            if (!c) continue;
            int e = 0;
            while (c % p == 0) {
                c /= p;
                ++e;
            }
            v = std::min(v, e);
        }
        val_[a] = static_cast<std::uint8_t>(v);
        for (int b = 0; b < n_; ++b) {
            for (int i = 0; i < d; ++i) tmp[i] = cf[a][i] + cf[b][i];
            add_[a * n_ + b] = pack(tmp);
            std::fill(prod.begin(), prod.end(), 0);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + cf[a][i] * cf[b][j]) % q_;
            for (int i = 2 * d - 2; i >= d; --i) {
                int lead = prod[i];
                if (!lead) continue;
                for (int j = 0; j <= d; ++j) prod[i - d + j] = ((prod[i - d + j] - lead * spec.poly[j]) % q_ + q_) % q_;
            }
            for (int i = 0; i < d; ++i) tmp[i] = prod[i];
            mul_[a * n_ + b] = pack(tmp);
        }
    }
    for (int a = 0; a < n_; ++a) {
        if (val_[a] != 0) continue;
        for (int b = 0; b < n_; ++b)
            if (mul_[a * n_ + b] == 1) {
                inv_[a] = static_cast<Elt>(b);
                break;
            }
    }
    ppow_.resize(k + 1);
    int pp = 1;
    for (int e = 0; e <= k; ++e) {
        ppow_[e] = static_cast<Elt>(pp % q_);
        pp *= p;
    }
}

std::shared_ptr<const Ring> Ring::get(const RingSpec& spec) {
    static std::mutex mu;
    static std::map<std::vector<int>, std::shared_ptr<const Ring>> cache;
    std::vector<int> key{spec.p, spec.d, spec.k};
    key.insert(key.end(), spec.poly.begin(), spec.poly.end());
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto r = std::make_shared<const Ring>(spec);
    cache.emplace(key, r);
    return r;
}

std::string Ring::name() const {
    std::ostringstream os;
    if (spec_.d == 1) {
        if (spec_.k == 1)
            os << "F_" << spec_.p;
        else
            os << "Z/" << q_;
    } else {
        os << (spec_.k == 1 ? "F_" : "GR(") << (spec_.k == 1 ? std::to_string(ipow(spec_.p, spec_.d)) : std::to_string(q_) + "," + std::to_string(spec_.d) + ")");
    }
    return os.str();
}

Elt Ring::inv(Elt a) const {
    if (val_[a] != 0) throw nonunit_error("element is not a unit");
    return inv_[a];
}

Elt Ring::pow(Elt a, long e) const {
    Elt r = 1, b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Elt Ring::from_int(long v) const {
    long m = ((v % q_) + q_) % q_;
    return static_cast<Elt>(m);
}

Elt Ring::from_coeffs(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) > spec_.d) throw usage_error("too many coefficients");
    int r = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) r = r * q_ + ((c[i] % q_) + q_) % q_;
    return static_cast<Elt>(r);
}

std::vector<int> Ring::coeffs(Elt a) const {
    std::vector<int> c(spec_.d);
    int x = a;
    for (int i = 0; i < spec_.d; ++i) {
        c[i] = x % q_;
        x /= q_;
    }
    return c;
}

Elt Ring::div_p(Elt a, int e) const {
    if (e == 0) return a;
    if (val_[a] < e) throw nonunit_error("div_p: not divisible");
    int pe = ppow_[e] ? ppow_[e] : q_;
    int r = 0, x = a, m = 1;
    for (int i = 0; i < spec_.d; ++i) {
        r += (x % q_) / pe * m;
        x /= q_;
        m *= q_;
    }
    return static_cast<Elt>(r);
}

Elt Ring::rem_p(Elt a, int e) const {
    if (e >= spec_.k) return a;
    int pe = ipow(spec_.p, e);
    int r = 0, x = a, m = 1;
    for (int i = 0; i < spec_.d; ++i) {
        r += (x % q_) % pe * m;
        x /= q_;
        m *= q_;
    }
    return static_cast<Elt>(r);
}

Elt Ring::frob(Elt a) const {
    if (spec_.k != 1) throw unsupported_error("Frobenius only defined on residue fields");
    return pow(a, spec_.p);
}

Elt Ring::frob_inv(Elt a) const {
    if (spec_.k != 1) throw unsupported_error("Frobenius only defined on residue fields");
    return pow(a, static_cast<long>(n_ / spec_.p));
}

std::shared_ptr<const Ring> Ring::residue() const {
    RingSpec s = spec_;
    s.k = 1;
    return get(s);
}

Elt Ring::to_residue(Elt a) const {
    if (spec_.k == 1) return a;
    auto c = coeffs(a);
    int r = 0;
    for (int i = spec_.d - 1; i >= 0; --i) r = r * spec_.p + c[i] % spec_.p;
    return static_cast<Elt>(r);
}

Elt Ring::lift_residue(Elt a) const {
    if (spec_.k == 1) return a;
    int r = 0, x = a, m = 1;
    for (int i = 0; i < spec_.d; ++i) {
        r += (x % spec_.p) * m;
        x /= spec_.p;
        m *= q_;
    }
    return static_cast<Elt>(r);
}

Scalar scalar(const RingPtr& R, const std::vector<int>& coeffs) { return {R, R->from_coeffs(coeffs)}; }

static void same_ring(const Scalar& a, const Scalar& b) {
    if (a.ring != b.ring) throw usage_error("scalars from different rings");
}

Scalar scalar_add(const Scalar& a, const Scalar& b) {
    same_ring(a, b);
    return {a.ring, a.ring->add(a.v, b.v)};
}
Scalar scalar_sub(const Scalar& a, const Scalar& b) {
    same_ring(a, b);
    return {a.ring, a.ring->sub(a.v, b.v)};
}
Scalar scalar_mul(const Scalar& a, const Scalar& b) {
    same_ring(a, b);
    return {a.ring, a.ring->mul(a.v, b.v)};
}
Scalar scalar_neg(const Scalar& a) { return {a.ring, a.ring->neg(a.v)}; }
Scalar scalar_inv(const Scalar& a) { return {a.ring, a.ring->inv(a.v)}; }
Scalar frobenius(const Scalar& a) { return {a.ring, a.ring->frob(a.v)}; }

std::string to_string(const Scalar& a) {
    auto c = a.ring->coeffs(a.v);
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << "]";
    return os.str();
}

}  // namespace cyc
