#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pillai/errors.hpp"
#include "pillai/poly.hpp"
#include "pillai/rational.hpp"

namespace pillai {

struct IrreducibleFactor {
    Poly factor;   // monic, irreducible over the rationals
    int exponent;  // >= 1
};

// unit * prod(factor^exponent) reassembles the input exactly.
struct Factorization {
    BigRat unit;
    std::vector<IrreducibleFactor> factors;
};

namespace detail {

// ---------------------------------------------------------------------------
// F_p[x] layer: small prime, coefficients in [0, p). Used by Berlekamp and to
// seed the Hensel lift.
// ---------------------------------------------------------------------------

using ModVec = std::vector<std::int64_t>;

inline std::int64_t mod_pos(std::int64_t a, std::int64_t p) {
    a %= p;
    return a < 0 ? a + p : a;
}

inline std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

inline std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = mod_pos(a, p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    return mod_pos(t, p);
}

inline void mv_trim(ModVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int mv_deg(const ModVec& a) { return static_cast<int>(a.size()) - 1; }

inline ModVec mv_mul(const ModVec& a, const ModVec& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    ModVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + static_cast<__int128>(a[i]) * b[j]) % p;
        }
    }
    mv_trim(r);
    return r;
}

inline ModVec mv_sub(const ModVec& a, const ModVec& b, std::int64_t p) {
    ModVec r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = mod_pos(r[i] - b[i], p);
    mv_trim(r);
    return r;
}

inline ModVec mv_scale(const ModVec& a, std::int64_t s, std::int64_t p) {
    ModVec r = a;
    for (auto& c : r) c = mod_mul(c, mod_pos(s, p), p);
    mv_trim(r);
    return r;
}

inline ModVec mv_monic(const ModVec& a, std::int64_t p) {
    return mv_scale(a, mod_inv(a.back(), p), p);
}

// remainder of a mod b (b nonzero)
inline ModVec mv_rem(ModVec a, const ModVec& b, std::int64_t p) {
    std::int64_t inv = mod_inv(b.back(), p);
    while (mv_deg(a) >= mv_deg(b)) {
        std::int64_t f = mod_mul(a.back(), inv, p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = mod_pos(a[shift + i] - mod_mul(f, b[i], p), p);
        }
        mv_trim(a);
    }
    return a;
}

inline ModVec mv_quot(ModVec a, const ModVec& b, std::int64_t p) {
    std::int64_t inv = mod_inv(b.back(), p);
    ModVec q;
    if (mv_deg(a) >= mv_deg(b)) q.assign(a.size() - b.size() + 1, 0);
    while (mv_deg(a) >= mv_deg(b)) {
        std::int64_t f = mod_mul(a.back(), inv, p);
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = mod_pos(a[shift + i] - mod_mul(f, b[i], p), p);
        }
        mv_trim(a);
    }
    return q;
}

inline ModVec mv_gcd(ModVec a, ModVec b, std::int64_t p) {
    while (!b.empty()) {
        ModVec r = mv_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = mv_monic(a, p);
    return a;
}

inline ModVec mv_derivative(const ModVec& a, std::int64_t p) {
    ModVec r;
    for (std::size_t i = 1; i < a.size(); ++i) {
        r.push_back(mod_mul(static_cast<std::int64_t>(i % static_cast<std::size_t>(p)), a[i], p));
    }
    mv_trim(r);
    return r;
}

// Inverse of a modulo m in F_p[x]; a and m coprime.
inline ModVec mv_modular_inverse(const ModVec& a, const ModVec& m, std::int64_t p) {
    ModVec r0 = m, r1 = mv_rem(a, m, p);
    ModVec s0 = {}, s1 = {1};
    while (!r1.empty()) {
        ModVec q = mv_quot(r0, r1, p);
        ModVec r2 = mv_sub(r0, mv_mul(q, r1, p), p);
        ModVec s2 = mv_sub(s0, mv_mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant
    return mv_rem(mv_scale(s0, mod_inv(r0[0], p), p), m, p);
}

inline ModVec mv_x_pow(BigInt e, const ModVec& u, std::int64_t p) {
    ModVec acc = {1};
    ModVec sq = mv_rem(ModVec{0, 1}, u, p);
    while (e > 0) {
        if ((e & 1) != 0) acc = mv_rem(mv_mul(acc, sq, p), u, p);
        e >>= 1;
        if (e > 0) sq = mv_rem(mv_mul(sq, sq, p), u, p);
    }
    return acc;
}

inline bool mv_less(const ModVec& a, const ModVec& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

// Berlekamp factorization of a monic squarefree u over F_p.
inline std::vector<ModVec> berlekamp(const ModVec& u, std::int64_t p) {
    const int n = mv_deg(u);
    if (n <= 1) return {u};

    // Rows of the Frobenius matrix: x^(p*i) mod u.
    ModVec xp = mv_x_pow(BigInt(p), u, p);
    std::vector<ModVec> rows(static_cast<std::size_t>(n));
    rows[0] = {1};
    for (int i = 1; i < n; ++i) {
        rows[static_cast<std::size_t>(i)] = mv_rem(mv_mul(rows[static_cast<std::size_t>(i - 1)], xp, p), u, p);
    }

    // Null space of (Q^T - I): vectors v with v^p == v (mod u).
    std::vector<std::vector<std::int64_t>> a(
        static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        const ModVec& row = rows[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            std::int64_t q = j < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(j)] : 0;
            a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = mod_pos(q - (i == j ? 1 : 0), p);
        }
    }

    std::vector<int> pivot_row_of_col(static_cast<std::size_t>(n), -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int sel = -1;
        for (int row = rank; row < n; ++row) {
            if (a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
                sel = row;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(a[static_cast<std::size_t>(sel)], a[static_cast<std::size_t>(rank)]);
        std::int64_t inv = mod_inv(a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)], p);
        for (auto& v : a[static_cast<std::size_t>(rank)]) v = mod_mul(v, inv, p);
        for (int row = 0; row < n; ++row) {
            if (row == rank) continue;
            std::int64_t f = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int k = 0; k < n; ++k) {
                a[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] = mod_pos(
                    a[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] -
                        mod_mul(f, a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(k)], p),
                    p);
            }
        }
        pivot_row_of_col[static_cast<std::size_t>(col)] = rank;
        ++rank;
    }

    std::vector<ModVec> basis;
    for (int fc = 0; fc < n; ++fc) {
        if (pivot_row_of_col[static_cast<std::size_t>(fc)] >= 0) continue;
        ModVec v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(fc)] = 1;
        for (int pc = 0; pc < n; ++pc) {
            int pr = pivot_row_of_col[static_cast<std::size_t>(pc)];
            if (pr < 0) continue;
            v[static_cast<std::size_t>(pc)] =
                mod_pos(-a[static_cast<std::size_t>(pr)][static_cast<std::size_t>(fc)], p);
        }
        mv_trim(v);
        basis.push_back(std::move(v));
    }

    const std::size_t factor_count = basis.size();
    std::vector<ModVec> factors = {u};
    if (factor_count == 1) return factors;

    for (const ModVec& v : basis) {
        if (factors.size() == factor_count) break;
        if (mv_deg(v) < 1) continue;
        std::vector<ModVec> next;
        for (const ModVec& w : factors) {
            if (factors.size() + next.size() > factor_count + factors.size()) {
            }
            if (mv_deg(w) == 1) {
                next.push_back(w);
                continue;
            }
            ModVec rem = w;
            for (std::int64_t c = 0; c < p && mv_deg(rem) > 0; ++c) {
                ModVec shifted = v;
                if (shifted.empty()) shifted.push_back(0);
                shifted[0] = mod_pos(shifted[0] - c, p);
                mv_trim(shifted);
                ModVec d = shifted.empty() ? ModVec{} : mv_gcd(rem, shifted, p);
                if (!d.empty() && mv_deg(d) > 0 && mv_deg(d) < mv_deg(rem)) {
                    next.push_back(d);
                    rem = mv_quot(rem, d, p);
                }
            }
            if (mv_deg(rem) > 0) next.push_back(rem);
        }
        factors = std::move(next);
    }
    std::sort(factors.begin(), factors.end(), mv_less);
    return factors;
}

// ---------------------------------------------------------------------------
// Z/(p^k)[x] layer for the Hensel lift: coefficients as BigInt in [0, m).
// ---------------------------------------------------------------------------

using BigVec = std::vector<BigInt>;

inline void bv_trim(BigVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline BigVec bv_mul(const BigVec& a, const BigVec& b, const BigInt& m) {
    if (a.empty() || b.empty()) return {};
    BigVec r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    for (auto& c : r) c %= m;
    bv_trim(r);
    return r;
}

inline BigInt bv_sym(BigInt c, const BigInt& m) {
    c %= m;
    if (c < 0) c += m;
    if (c * 2 > m) c -= m;
    return c;
}

// Multifactor linear Hensel lifting. P has integer coefficients, is primitive
// with positive leading coefficient, and P/lc(P) mod p factors into the given
// monic coprime factors. Lifts them to monic factors mod p^K >= target with
// P == lc(P) * prod(factors) (mod p^K).
struct HenselLift {
    BigInt modulus;
    std::vector<BigVec> factors;
};

inline HenselLift hensel_lift(const Poly& P, std::int64_t p, const std::vector<ModVec>& mod_factors,
                              const BigInt& target) {
    const int n = P.degree().value();
    const std::size_t r = mod_factors.size();

    // Partial-fraction basis mod p: sum sigma_i * prod_{j != i} f_j == 1.
    ModVec whole = {1};
    for (const auto& f : mod_factors) whole = mv_mul(whole, f, p);
    std::vector<ModVec> sigma(r);
    for (std::size_t i = 0; i < r; ++i) {
        ModVec cofactor = mv_quot(whole, mod_factors[i], p);
        sigma[i] = mv_modular_inverse(cofactor, mod_factors[i], p);
    }

    BigInt lc(numerator(P.leading()));
    std::int64_t lc_inv = mod_inv(mod_pos(static_cast<std::int64_t>(lc % p), p), p);

    std::vector<BigVec> lifted(r);
    for (std::size_t i = 0; i < r; ++i) {
        lifted[i].assign(mod_factors[i].begin(), mod_factors[i].end());
    }

    BigVec p_int(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) p_int[static_cast<std::size_t>(i)] = numerator(P.coeff(i));

    BigInt m(p);
    while (m < target) {
        BigInt next_m = m * p;
        BigVec prod = {BigInt(1)};
        for (const auto& f : lifted) prod = bv_mul(prod, f, next_m);

        // error/m mod p, one coefficient at a time
        ModVec d(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 0; i <= n; ++i) {
            BigInt e = p_int[static_cast<std::size_t>(i)] -
                       lc * (i < static_cast<int>(prod.size()) ? prod[static_cast<std::size_t>(i)] : BigInt(0));
            e %= next_m;
            if (e < 0) e += next_m;
            d[static_cast<std::size_t>(i)] = static_cast<std::int64_t>((e / m) % p);
        }
        mv_trim(d);

        if (!d.empty()) {
            ModVec dl = mv_scale(d, lc_inv, p);
            for (std::size_t i = 0; i < r; ++i) {
                ModVec delta = mv_rem(mv_mul(dl, sigma[i], p), mod_factors[i], p);
                if (lifted[i].size() < delta.size()) lifted[i].resize(delta.size(), BigInt(0));
                for (std::size_t j = 0; j < delta.size(); ++j) {
                    lifted[i][j] = (lifted[i][j] + m * delta[j]) % next_m;
                }
            }
        }
        m = next_m;
    }
    return HenselLift{m, std::move(lifted)};
}

inline const std::array<int, 25> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

inline bool is_prime_int(std::int64_t v) {
    if (v < 2) return false;
    for (std::int64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) return false;
    }
    return true;
}

inline std::int64_t next_prime(std::int64_t after) {
    std::int64_t v = after + 1;
    while (!is_prime_int(v)) ++v;
    return v;
}

inline ModVec reduce_mod_p(const Poly& f, std::int64_t p) {
    ModVec r;
    const int d = f.degree().value();
    r.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        r.push_back(mod_pos(static_cast<std::int64_t>(numerator(f.coeff(i)) % p), p));
    }
    mv_trim(r);
    return r;
}

// Smallest prime not dividing lc(P) for which P stays squarefree mod p
// (equivalently: not dividing the resultant of P and P').
inline std::int64_t choose_prime(const Poly& P) {
    const BigInt lc = numerator(P.leading());
    std::size_t idx = 0;
    std::int64_t p = kSmallPrimes[0];
    while (true) {
        if (lc % p != 0) {
            ModVec pb = reduce_mod_p(P, p);
            if (mv_deg(pb) == P.degree().value()) {
                ModVec der = mv_derivative(pb, p);
                if (!der.empty() && mv_deg(mv_gcd(pb, der, p)) == 0) return p;
            }
        }
        ++idx;
        p = idx < kSmallPrimes.size() ? kSmallPrimes[idx] : next_prime(p);
    }
}

inline BigInt mignotte_target(const Poly& P) {
    const int n = P.degree().value();
    BigInt norm_sq(0);
    for (int i = 0; i <= n; ++i) {
        BigInt c = numerator(P.coeff(i));
        norm_sq += c * c;
    }
    BigInt norm = sqrt(norm_sq) + 1;
    return (BigInt(1) << static_cast<unsigned>(n + 2)) * norm;
}

// Zassenhaus: factor a primitive squarefree integer polynomial with positive
// leading coefficient into primitive integer irreducibles.
inline std::vector<Poly> factor_squarefree_primitive(const Poly& P) {
    if (P.degree().value() <= 1) return {P};

    const std::int64_t p = choose_prime(P);
    ModVec pbar = mv_monic(reduce_mod_p(P, p), p);
    std::vector<ModVec> mod_factors = berlekamp(pbar, p);
    if (mod_factors.size() == 1) return {P};

    HenselLift lift = hensel_lift(P, p, mod_factors, mignotte_target(P));
    const BigInt& m = lift.modulus;

    std::vector<BigVec> pool = std::move(lift.factors);
    std::vector<Poly> out;
    Poly rest = P;

    std::size_t s = 1;
    while (2 * s <= pool.size()) {
        std::vector<std::size_t> combo(s);
        for (std::size_t i = 0; i < s; ++i) combo[i] = i;
        bool accepted = false;
        while (true) {
            BigVec prod = {BigInt(1)};
            for (std::size_t idx : combo) prod = bv_mul(prod, pool[idx], m);
            BigInt lc_rest = numerator(rest.leading());
            std::vector<BigRat> cand(prod.size());
            for (std::size_t i = 0; i < prod.size(); ++i) {
                cand[i] = BigRat(bv_sym(lc_rest * prod[i], m));
            }
            Poly candidate = Poly::from_coeffs(std::move(cand));
            if (!candidate.is_zero()) {
                Poly h = integer_primitive(candidate).primitive;
                DivRem dr = divrem(rest, h);
                if (dr.remainder.is_zero()) {
                    out.push_back(h);
                    rest = dr.quotient;
                    std::vector<BigVec> keep;
                    for (std::size_t i = 0; i < pool.size(); ++i) {
                        if (std::find(combo.begin(), combo.end(), i) == combo.end()) {
                            keep.push_back(std::move(pool[i]));
                        }
                    }
                    pool = std::move(keep);
                    accepted = true;
                    break;
                }
            }
            // next combination of size s
            std::size_t k = s;
            while (k > 0 && combo[k - 1] == pool.size() - s + (k - 1)) --k;
            if (k == 0) break;
            ++combo[k - 1];
            for (std::size_t i = k; i < s; ++i) combo[i] = combo[i - 1] + 1;
        }
        if (!accepted) ++s;
    }
    if (!rest.is_constant()) {
        out.push_back(integer_primitive(rest).primitive);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Kronecker interpolation fallback (practical for degree <= 8).
// ---------------------------------------------------------------------------

inline std::vector<BigInt> divisors_of(const BigInt& v) {
    BigInt a = abs(v);
    if (a > BigInt("1000000000000000000")) {
        throw DomainError("kronecker_too_hard", "interpolation value too large for the fallback factorizer");
    }
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            small.push_back(d);
            if (d * d != a) large.push_back(a / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline std::optional<Poly> kronecker_try_degree(const Poly& P, int d) {
    // Collect d+1 evaluation points with nonzero values; a zero value hands
    // us a linear factor outright.
    std::vector<BigInt> xs;
    std::vector<BigInt> vals;
    for (long long k = 0; static_cast<int>(xs.size()) < d + 1; ++k) {
        long long pt = (k % 2 == 0) ? k / 2 : -(k / 2 + 1);
        BigRat v = P(BigRat(pt));
        if (v == 0) {
            return Poly::from_coeffs({BigRat(-pt), BigRat(1)});
        }
        xs.emplace_back(pt);
        vals.push_back(numerator(v));
    }

    // Lagrange basis for the chosen points.
    std::vector<Poly> basis(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        Poly num(BigRat(1));
        BigRat den(1);
        for (int i = 0; i <= d; ++i) {
            if (i == j) continue;
            num *= Poly::from_coeffs({BigRat(-xs[static_cast<std::size_t>(i)]), BigRat(1)});
            den *= BigRat(xs[static_cast<std::size_t>(j)] - xs[static_cast<std::size_t>(i)]);
        }
        basis[static_cast<std::size_t>(j)] = (BigRat(1) / den) * num;
    }

    std::vector<std::vector<BigInt>> choices(static_cast<std::size_t>(d) + 1);
    double combos = 1;
    for (int j = 0; j <= d; ++j) {
        std::vector<BigInt> divs = divisors_of(vals[static_cast<std::size_t>(j)]);
        std::vector<BigInt> c;
        for (const BigInt& dv : divs) {
            c.push_back(dv);
            if (j > 0) c.push_back(-dv);  // sign of the first value is normalized
        }
        combos *= static_cast<double>(c.size());
        if (combos > 5e6) {
            throw DomainError("kronecker_too_hard", "divisor combination count too large for the fallback factorizer");
        }
        choices[static_cast<std::size_t>(j)] = std::move(c);
    }

    std::vector<std::size_t> pick(static_cast<std::size_t>(d) + 1, 0);
    while (true) {
        Poly h;
        for (int j = 0; j <= d; ++j) {
            h += BigRat(choices[static_cast<std::size_t>(j)][pick[static_cast<std::size_t>(j)]]) *
                 basis[static_cast<std::size_t>(j)];
        }
        if (h.degree() == Degree(d)) {
            bool integral = true;
            for (const auto& c : h.coeffs()) {
                if (!is_integer(c)) {
                    integral = false;
                    break;
                }
            }
            if (integral && divrem(P, h).remainder.is_zero()) {
                return h.leading() < 0 ? -h : h;
            }
        }
        std::size_t j = 0;
        while (j < pick.size() && ++pick[j] == choices[j].size()) {
            pick[j] = 0;
            ++j;
        }
        if (j == pick.size()) break;
    }
    return std::nullopt;
}

inline std::vector<Poly> kronecker_squarefree_primitive(const Poly& P) {
    const int n = P.degree().value();
    if (n <= 1) return {P};
    for (int d = 1; d <= n / 2; ++d) {
        std::optional<Poly> h = kronecker_try_degree(P, d);
        if (h) {
            Poly a = integer_primitive(*h).primitive;
            Poly b = integer_primitive(div_exact(P, a)).primitive;
            std::vector<Poly> out = kronecker_squarefree_primitive(a);
            std::vector<Poly> rest = kronecker_squarefree_primitive(b);
            out.insert(out.end(), rest.begin(), rest.end());
            return out;
        }
    }
    return {P};
}

template <typename Engine>
inline Factorization factor_with(const Poly& f, Engine&& engine) {
    if (f.is_zero()) {
        throw DomainError("zero_polynomial", "factorization of the zero polynomial");
    }
    Factorization out;
    out.unit = f.leading();
    if (f.is_constant()) return out;
    for (const SquarefreeFactor& part : squarefree_decomposition(f)) {
        Poly prim = integer_primitive(part.factor).primitive;
        for (const Poly& irr : engine(prim)) {
            out.factors.push_back({monic(irr), part.multiplicity});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const IrreducibleFactor& a, const IrreducibleFactor& b) { return poly_less(a.factor, b.factor); });
    return out;
}

}  // namespace detail

// Complete factorization over the rationals into monic irreducibles,
// canonically ordered by (degree, coefficient list).
inline Factorization factor(const Poly& f) {
    return detail::factor_with(f, detail::factor_squarefree_primitive);
}

// Interpolation-based factorization; exponential, intended as an independent
// cross-check for degree <= 8.
inline Factorization factor_kronecker(const Poly& f) {
    return detail::factor_with(f, detail::kronecker_squarefree_primitive);
}

inline bool is_irreducible(const Poly& f) {
    if (f.is_constant()) {
        throw DomainError("constant_polynomial", "irreducibility is only defined for nonconstant polynomials");
    }
    Factorization fac = factor(f);
    return fac.factors.size() == 1 && fac.factors[0].exponent == 1;
}

// All monic divisors of f over the rationals, canonically sorted. The count
// is prod(exponent_i + 1) over the factorization of f.
inline std::vector<Poly> monic_divisors(const Poly& f) {
    if (f.is_zero()) {
        throw DomainError("zero_polynomial", "divisors of the zero polynomial");
    }
    Factorization fac = factor(f);
    std::vector<Poly> out = {Poly(BigRat(1))};
    for (const IrreducibleFactor& part : fac.factors) {
        std::vector<Poly> next;
        next.reserve(out.size() * static_cast<std::size_t>(part.exponent + 1));
        Poly power(BigRat(1));
        for (int e = 0; e <= part.exponent; ++e) {
            for (const Poly& d : out) next.push_back(d * power);
            if (e < part.exponent) power *= part.factor;
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

}  // namespace pillai
