#include "falc/cyclotomic.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace falc {

namespace {

// ---- integer polynomial helpers (coefficient vectors, lowest degree first) ----

void int_trim(std::vector<mpz_class>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic divisor.
std::vector<mpz_class> int_div_exact(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    int_trim(num);
    if (num.size() < den.size()) {
        if (!num.empty()) throw std::logic_error("cyclotomic: inexact polynomial division");
        return {};
    }
    std::vector<mpz_class> q(num.size() - den.size() + 1);
    for (std::size_t k = num.size(); k-- >= den.size();) {
        mpz_class f = num[k];
        q[k - den.size() + 1] = f;
        if (f != 0)
            for (std::size_t i = 0; i < den.size(); ++i) num[k - den.size() + 1 + i] -= f * den[i];
        if (k == 0) break;
    }
    int_trim(num);
    if (!num.empty()) throw std::logic_error("cyclotomic: inexact polynomial division");
    return q;
}

std::vector<long> divisors_of(long n) {
    std::vector<long> d;
    for (long i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i) d.push_back(n / i);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

// Memoized integer coefficients of the cyclotomic polynomials.
const std::vector<mpz_class>& phi_poly_int(long N) {
    static std::mutex mu;
    static std::map<long, std::vector<mpz_class>> memo;
    std::scoped_lock lock(mu);
    auto it = memo.find(N);
    if (it != memo.end()) return it->second;
    for (long d : divisors_of(N)) {
        if (memo.count(d)) continue;
        if (d == 1) {
            memo[1] = {mpz_class(-1), mpz_class(1)};  // x - 1
            continue;
        }
        std::vector<mpz_class> num(d + 1);
        num[0] = -1;
        num[d] = 1;
        for (long e : divisors_of(d))
            if (e != d) num = int_div_exact(std::move(num), memo.at(e));
        memo[d] = std::move(num);
    }
    return memo.at(N);
}

// Immutable per-modulus data: Phi_N and the table of reduced powers
// zeta^j mod Phi_N for 0 <= j < N.  All entries are integers because
// Phi_N is monic with integer coefficients.
struct CycloContext {
    long N = 1;
    long phi = 1;
    std::vector<mpz_class> phi_poly;              // size phi + 1
    std::vector<std::vector<mpz_class>> power;    // N rows of size phi
};

std::shared_ptr<const CycloContext> acquire_context(long N) {
    static std::mutex mu;
    static std::map<long, std::weak_ptr<const CycloContext>> cache;
    {
        std::scoped_lock lock(mu);
        auto it = cache.find(N);
        if (it != cache.end())
            if (auto sp = it->second.lock()) return sp;
    }
    auto ctx = std::make_shared<CycloContext>();
    ctx->N = N;
    ctx->phi_poly = phi_poly_int(N);
    ctx->phi = static_cast<long>(ctx->phi_poly.size()) - 1;
    ctx->power.resize(N);
    const long D = ctx->phi;
    for (long j = 0; j < N; ++j) {
        auto& row = ctx->power[j];
        row.assign(D, 0);
        if (j < D) {
            row[j] = 1;
            continue;
        }
        const auto& prev = ctx->power[j - 1];
        // multiply by zeta, then cancel the degree-D term against Phi_N
        mpz_class lead = prev[D - 1];
        row[0] = -lead * ctx->phi_poly[0];
        for (long i = 1; i < D; ++i) row[i] = prev[i - 1] - lead * ctx->phi_poly[i];
    }
    std::scoped_lock lock(mu);
    cache[N] = ctx;
    return ctx;
}

void check_modulus(long N) {
    if (N < 1) throw std::invalid_argument("cyclotomic: modulus must be >= 1");
}

// Writes x as X / s with X integral and s the least common denominator.
std::pair<std::vector<mpz_class>, mpz_class> clear_denominators(const std::vector<Rational>& v) {
    mpz_class s(1);
    for (const auto& r : v) mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), r.denominator().get_mpz_t());
    std::vector<mpz_class> X(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) X[i] = v[i].numerator() * (s / v[i].denominator());
    return {std::move(X), std::move(s)};
}

mpz_class content_of(const std::vector<mpz_class>& v, const mpz_class& seed = 0) {
    mpz_class g = seed;
    for (const auto& z : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Integer product of coordinate vectors reduced into the power basis.
std::vector<mpz_class> mul_reduce(const CycloContext& ctx, const std::vector<mpz_class>& a,
                                  const std::vector<mpz_class>& b) {
    const long D = ctx.phi;
    std::vector<mpz_class> prod(2 * D - 1 > 0 ? 2 * D - 1 : 1);
    for (long i = 0; i < D; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < D; ++j)
            if (b[j] != 0) prod[i + j] += a[i] * b[j];
    }
    std::vector<mpz_class> out(prod.begin(), prod.begin() + std::min<long>(D, prod.size()));
    out.resize(D);
    for (std::size_t j = D; j < prod.size(); ++j) {
        if (prod[j] == 0) continue;
        const auto& row = ctx.power[static_cast<long>(j) % ctx.N];
        for (long i = 0; i < D; ++i)
            if (row[i] != 0) out[i] += prod[j] * row[i];
    }
    return out;
}

}  // namespace

Polynomial cyclotomic_polynomial(long N) {
    check_modulus(N);
    const auto& p = phi_poly_int(N);
    std::vector<Rational> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = Rational(p[i]);
    return Polynomial(std::move(c));
}

CycloElement CycloElement::zero(long N) {
    check_modulus(N);
    auto ctx = acquire_context(N);
    return CycloElement(N, std::vector<Rational>(ctx->phi, Rational(0)));
}

CycloElement CycloElement::one(long N) { return from_rational(N, Rational(1)); }

CycloElement CycloElement::from_rational(long N, const Rational& r) {
    auto x = zero(N);
    x.v_[0] = r;
    return x;
}

CycloElement CycloElement::root_of_unity(long N, long k) {
    check_modulus(N);
    auto ctx = acquire_context(N);
    k %= N;
    if (k < 0) k += N;
    std::vector<Rational> v(ctx->phi);
    const auto& row = ctx->power[k];
    for (long i = 0; i < ctx->phi; ++i) v[i] = Rational(row[i]);
    return CycloElement(N, std::move(v));
}

CycloElement CycloElement::from_coords(long N, std::vector<Rational> coords) {
    check_modulus(N);
    auto ctx = acquire_context(N);
    if (static_cast<long>(coords.size()) != ctx->phi)
        throw std::invalid_argument("CycloElement: coordinate vector must have length phi(N)");
    return CycloElement(N, std::move(coords));
}

bool CycloElement::is_zero() const {
    for (const auto& r : v_)
        if (!r.is_zero()) return false;
    return true;
}

bool CycloElement::is_rational() const {
    for (std::size_t i = 1; i < v_.size(); ++i)
        if (!v_[i].is_zero()) return false;
    return true;
}

Rational CycloElement::as_rational() const {
    if (!is_rational()) throw std::domain_error("CycloElement: value is not rational");
    return v_[0];
}

CycloElement CycloElement::operator-() const {
    auto v = v_;
    for (auto& r : v) r = -r;
    return CycloElement(modulus_, std::move(v));
}

static void require_same_modulus(const CycloElement& a, const CycloElement& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("CycloElement: operands have different moduli");
}

CycloElement operator+(const CycloElement& a, const CycloElement& b) {
    require_same_modulus(a, b);
    auto v = a.v_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.v_[i];
    return CycloElement(a.modulus_, std::move(v));
}

CycloElement operator-(const CycloElement& a, const CycloElement& b) {
    require_same_modulus(a, b);
    auto v = a.v_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.v_[i];
    return CycloElement(a.modulus_, std::move(v));
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
    require_same_modulus(a, b);
    auto ctx = acquire_context(a.modulus_);
    auto [A, sa] = clear_denominators(a.v_);
    auto [B, sb] = clear_denominators(b.v_);
    auto prod = mul_reduce(*ctx, A, B);
    const Rational scale(mpz_class(1), sa * sb);
    std::vector<Rational> v(ctx->phi);
    for (long i = 0; i < ctx->phi; ++i) v[i] = Rational(prod[i]) * scale;
    return CycloElement(a.modulus_, std::move(v));
}

CycloElement CycloElement::scaled(const Rational& s) const {
    auto v = v_;
    for (auto& r : v) r *= s;
    return CycloElement(modulus_, std::move(v));
}

CycloElement CycloElement::inverse() const {
    if (is_zero()) throw std::domain_error("CycloElement: division by zero");
    // extended Euclid between the representative and Phi_N; the gcd is a
    // nonzero constant because Phi_N is irreducible over Q
    Polynomial r0 = cyclotomic_polynomial(modulus_);
    Polynomial r1{std::vector<Rational>(v_)};
    Polynomial s0 = Polynomial::zero();
    Polynomial s1 = Polynomial::one();
    while (!r1.is_zero()) {
        auto [q, r2] = Polynomial::divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        Polynomial s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw std::logic_error("CycloElement: gcd with Phi_N is not constant");
    Polynomial inv = s0.scaled(Rational(1) / r0.coeff(0));
    auto ctx = acquire_context(modulus_);
    std::vector<Rational> v(ctx->phi, Rational(0));
    for (long i = 0; i <= inv.degree(); ++i) v[i] = inv.coeff(i);
    return CycloElement(modulus_, std::move(v));
}

CycloElement galois_apply(long a, const CycloElement& x) {
    const long N = x.modulus();
    long ar = a % N;
    if (ar < 0) ar += N;
    if (N > 1 && std::gcd(ar, N) != 1)
        throw std::invalid_argument("galois_apply: exponent must be coprime to the modulus");
    auto ctx = acquire_context(N);
    std::vector<Rational> out(ctx->phi, Rational(0));
    for (long i = 0; i < ctx->phi; ++i) {
        if (x.coords()[i].is_zero()) continue;
        const auto& row = ctx->power[(i * ar) % N];
        for (long j = 0; j < ctx->phi; ++j)
            if (row[j] != 0) out[j] += x.coords()[i] * Rational(row[j]);
    }
    return CycloElement::from_coords(N, std::move(out));
}

CycloElement embed_at_level(const CycloElement& x, long L) {
    const long N = x.modulus();
    if (L % N != 0) throw std::invalid_argument("embed_at_level: target level must be a multiple of the modulus");
    auto ctx = acquire_context(L);
    const long step = L / N;
    std::vector<Rational> out(ctx->phi, Rational(0));
    for (long i = 0; i < static_cast<long>(x.coords().size()); ++i) {
        if (x.coords()[i].is_zero()) continue;
        const auto& row = ctx->power[(i * step) % L];
        for (long j = 0; j < ctx->phi; ++j)
            if (row[j] != 0) out[j] += x.coords()[i] * Rational(row[j]);
    }
    return CycloElement::from_coords(L, std::move(out));
}

Polynomial minimal_polynomial(const CycloElement& x) {
    auto ctx = acquire_context(x.modulus());
    const long D = ctx->phi;

    // Powers are kept integer-scaled: x^k = P_k / s_k.
    auto [X, sX] = clear_denominators(x.coords());
    std::vector<mpz_class> scales;  // s_k per power
    scales.emplace_back(1);
    std::vector<mpz_class> P(D);
    P[0] = 1;

    // Row-echelon basis of the span of the scaled powers, with integer
    // combination vectors expressing each stored row in terms of P_0..P_k.
    struct Row {
        long pivot;
        std::vector<mpz_class> r;
        std::vector<mpz_class> combo;
    };
    std::vector<Row> rows;  // sorted by pivot column

    for (long k = 0;; ++k) {
        std::vector<mpz_class> r = P;
        std::vector<mpz_class> combo(k + 1);
        combo[k] = 1;

        for (const Row& row : rows) {
            if (r[row.pivot] == 0) continue;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), r[row.pivot].get_mpz_t(), row.r[row.pivot].get_mpz_t());
            mpz_class m1 = row.r[row.pivot] / g;
            mpz_class m2 = r[row.pivot] / g;
            for (long i = 0; i < D; ++i) r[i] = m1 * r[i] - m2 * row.r[i];
            for (long j = 0; j <= k; ++j) {
                mpz_class prev = j < static_cast<long>(row.combo.size()) ? row.combo[j] : mpz_class(0);
                combo[j] = m1 * combo[j] - m2 * prev;
            }
        }

        long pivot = -1;
        for (long i = 0; i < D; ++i)
            if (r[i] != 0) {
                pivot = i;
                break;
            }

        if (pivot < 0) {
            // dependence: sum_j combo[j] * P_j = 0, so the monic minimal
            // polynomial has coefficients combo[j]*s_j / (combo[k]*s_k)
            std::vector<Rational> c(k + 1);
            mpz_class lead = combo[k] * scales[k];
            for (long j = 0; j <= k; ++j) c[j] = Rational(combo[j] * scales[j], lead);
            return Polynomial(std::move(c));
        }

        mpz_class g = content_of(r);
        g = content_of(combo, g);
        if (g > 1) {
            for (auto& z : r) z /= g;
            for (auto& z : combo) z /= g;
        }
        Row fresh{pivot, std::move(r), std::move(combo)};
        auto pos = std::lower_bound(rows.begin(), rows.end(), fresh.pivot,
                                    [](const Row& a, long p) { return a.pivot < p; });
        rows.insert(pos, std::move(fresh));

        if (k + 1 > D) throw std::logic_error("minimal_polynomial: no dependence within phi(N) powers");

        // next power
        P = mul_reduce(*ctx, P, X);
        mpz_class s = scales.back() * sX;
        mpz_class cg = content_of(P, s);
        if (cg > 1) {
            for (auto& z : P) z /= cg;
            s /= cg;
        }
        scales.push_back(std::move(s));
    }
}

UnitSubgroup stabilizer(const CycloElement& x) {
    const long N = x.modulus();
    auto ctx = acquire_context(N);
    auto [X, sX] = clear_denominators(x.coords());
    (void)sX;  // scaling does not affect the stabilizer
    UnitSubgroup g;
    g.modulus = N;
    g.members.clear();
    std::vector<mpz_class> img(ctx->phi);
    for (long a : units_modulo(N)) {
        for (auto& z : img) z = 0;
        for (long i = 0; i < ctx->phi; ++i) {
            if (X[i] == 0) continue;
            const auto& row = ctx->power[(i * a) % N];
            for (long j = 0; j < ctx->phi; ++j)
                if (row[j] != 0) img[j] += X[i] * row[j];
        }
        if (img == X) g.members.push_back(a);
    }
    return g;
}

}  // namespace falc
