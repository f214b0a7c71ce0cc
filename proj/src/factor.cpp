#include "dplct/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "dplct/errors.hpp"

namespace dplct {
namespace {

// ---------------------------------------------------------------------------
// Integer polynomials: vector<Int>, ascending, trimmed.

using ZPoly = std::vector<Int>;

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

Int zcontent(const ZPoly& f) {
    Int g(0);
    for (const auto& c : f) g = gcd_int(g, c);
    return g;
}

// Exact division test in Z[x]; quotient returned when g | f with g monic or
// when division stays integral.
bool zdivide_exact(const ZPoly& f, const ZPoly& g, ZPoly& q_out) {
    if (g.empty()) throw math_error("division by zero");
    ZPoly r = f, q(f.size(), Int(0));
    while (zdeg(r) >= zdeg(g)) {
        Int lead_r = r.back();
        Int lead_g = g.back();
        if (lead_r % lead_g != 0) return false;
        Int c = lead_r / lead_g;
        int k = zdeg(r) - zdeg(g);
        q[static_cast<std::size_t>(k)] = c;
        for (std::size_t i = 0; i < g.size(); ++i) r[static_cast<std::size_t>(k) + i] -= c * g[i];
        ztrim(r);
        if (r.empty()) break;
    }
    if (!r.empty()) return false;
    ztrim(q);
    q_out = q;
    return true;
}

QPoly to_qpoly(const ZPoly& f) {
    std::vector<Rational> c;
    c.reserve(f.size());
    for (const auto& x : f) c.emplace_back(x);
    return QPoly(std::move(c));
}

// Clear denominators and content: returns primitive Z-poly with positive lead.
ZPoly primitive_from_q(const QPoly& f) {
    Int den(1);
    for (int i = 0; i <= f.degree(); ++i) den = lcm_int(den, f[i].den());
    ZPoly z;
    z.reserve(static_cast<std::size_t>(f.degree()) + 1);
    for (int i = 0; i <= f.degree(); ++i) {
        Rational c = f[i] * Rational(den);
        z.push_back(c.num());
    }
    Int cont = zcontent(z);
    if (cont != 0)
        for (auto& c : z) c /= cont;
    if (!z.empty() && z.back() < 0)
        for (auto& c : z) c = -c;
    return z;
}

// ---------------------------------------------------------------------------
// Arithmetic mod a small prime p (fits in int64).

using PPoly = std::vector<std::int64_t>;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pmod_reduce(const ZPoly& f, std::int64_t p) {
    PPoly g(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        Int r = f[i] % p;
        if (r < 0) r += p;
        g[i] = r.get_si();
    }
    ptrim(g);
    return g;
}

std::int64_t pinv(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (r != 1) throw math_error("not invertible mod p");
    return ((t % p) + p) % p;
}

PPoly pmul(const PPoly& a, const PPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    ptrim(c);
    return c;
}

PPoly psub(PPoly a, const PPoly& b, std::int64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
    ptrim(a);
    return a;
}

PPoly pscale(PPoly a, std::int64_t s, std::int64_t p) {
    for (auto& c : a) c = mulmod(c, s, p);
    ptrim(a);
    return a;
}

// remainder of a by b (b nonzero)
PPoly prem(PPoly a, const PPoly& b, std::int64_t p) {
    std::int64_t li = pinv(b.back(), p);
    while (static_cast<int>(a.size()) >= static_cast<int>(b.size()) && !a.empty()) {
        std::int64_t c = mulmod(a.back(), li, p);
        std::size_t k = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[k + i] = ((a[k + i] - mulmod(c, b[i], p)) % p + p) % p;
        ptrim(a);
    }
    return a;
}

PPoly pgcd(PPoly a, PPoly b, std::int64_t p) {
    while (!b.empty()) {
        PPoly r = prem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = pscale(a, pinv(a.back(), p), p);
    return a;
}

PPoly pderiv(const PPoly& f, std::int64_t p) {
    if (f.size() <= 1) return {};
    PPoly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = mulmod(f[i], static_cast<std::int64_t>(i % static_cast<std::size_t>(p)), p);
    ptrim(d);
    return d;
}

// x^e mod (f, p) by square and multiply
PPoly ppowx(std::int64_t e, const PPoly& f, std::int64_t p) {
    PPoly result{1};
    PPoly base{0, 1};
    base = prem(base, f, p);
    while (e > 0) {
        if (e & 1) result = prem(pmul(result, base, p), f, p);
        base = prem(pmul(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

// Berlekamp: f monic squarefree mod p. Returns monic irreducible factors.
std::vector<PPoly> berlekamp(const PPoly& f, std::int64_t p) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) return {f};
    // rows of Q: x^{ip} mod f
    PPoly xp = ppowx(p, f, p);
    std::vector<PPoly> rows(static_cast<std::size_t>(n));
    rows[0] = {1};
    for (int i = 1; i < n; ++i) rows[static_cast<std::size_t>(i)] = prem(pmul(rows[static_cast<std::size_t>(i - 1)], xp, p), f, p);
    // kernel of (Q - I)^T: columns indexed by row index i
    std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        const PPoly& r = rows[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            std::int64_t v = (j < static_cast<int>(r.size())) ? r[static_cast<std::size_t>(j)] : 0;
            if (i == j) v = ((v - 1) % p + p) % p;
            m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;  // transpose
        }
    }
    // nullspace basis by Gaussian elimination
    std::vector<int> pivot_col_of_row(static_cast<std::size_t>(n), -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(rank)]);
        std::int64_t li = pinv(m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)], p);
        for (int c = 0; c < n; ++c) m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)] = mulmod(m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)], li, p);
        for (int r = 0; r < n; ++r) {
            if (r == rank) continue;
            std::int64_t s = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (s == 0) continue;
            for (int c = 0; c < n; ++c)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = ((m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] - mulmod(s, m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)], p)) % p + p) % p;
        }
        pivot_col_of_row[static_cast<std::size_t>(rank)] = col;
        ++rank;
    }
    std::vector<PPoly> basis;
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int r = 0; r < rank; ++r) is_pivot[static_cast<std::size_t>(pivot_col_of_row[static_cast<std::size_t>(r)])] = true;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[static_cast<std::size_t>(col)]) continue;
        PPoly v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(col)] = 1;
        for (int r = 0; r < rank; ++r) {
            int pc = pivot_col_of_row[static_cast<std::size_t>(r)];
            std::int64_t val = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            v[static_cast<std::size_t>(pc)] = ((-val) % p + p) % p;
        }
        ptrim(v);
        basis.push_back(v);
    }
    const std::size_t factor_count = basis.size();
    std::vector<PPoly> factors{f};
    if (factor_count <= 1) return factors;
    for (const auto& v : basis) {
        if (factors.size() >= factor_count) break;
        if (v.size() <= 1) continue;  // constant vector splits nothing
        for (std::int64_t c = 0; c < p && factors.size() < factor_count; ++c) {
            std::vector<PPoly> next;
            for (auto& u : factors) {
                if (static_cast<int>(u.size()) - 1 <= 1) { next.push_back(u); continue; }
                PPoly vc = v;
                if (vc.empty()) vc = {0};
                vc[0] = ((vc[0] - c) % p + p) % p;
                ptrim(vc);
                PPoly g = vc.empty() ? PPoly{} : pgcd(u, vc, p);
                if (g.size() > 1 && g.size() < u.size()) {
                    PPoly q = u;
                    // u / g
                    PPoly quot;
                    {
                        PPoly r = u;
                        std::int64_t li = pinv(g.back(), p);
                        quot.assign(u.size(), 0);
                        while (r.size() >= g.size() && !r.empty()) {
                            std::int64_t cc = mulmod(r.back(), li, p);
                            std::size_t k = r.size() - g.size();
                            quot[k] = cc;
                            for (std::size_t i = 0; i < g.size(); ++i)
                                r[k + i] = ((r[k + i] - mulmod(cc, g[i], p)) % p + p) % p;
                            ptrim(r);
                        }
                        ptrim(quot);
                    }
                    next.push_back(g);
                    next.push_back(quot);
                } else {
                    next.push_back(u);
                }
            }
            factors = std::move(next);
        }
    }
    for (auto& u : factors) u = pscale(u, pinv(u.back(), p), p);
    std::sort(factors.begin(), factors.end());
    return factors;
}

// ---------------------------------------------------------------------------
// Hensel lifting (monic, quadratic, factor tree), coefficients mod M.

ZPoly zmod(const ZPoly& f, const Int& M) {
    ZPoly g = f;
    for (auto& c : g) {
        c %= M;
        if (c < 0) c += M;
    }
    ztrim(g);
    return g;
}

ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const Int& M) { return zmod(zmul(a, b), M); }

ZPoly zsub_mod(ZPoly a, const ZPoly& b, const Int& M) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return zmod(a, M);
}

ZPoly zadd_mod(ZPoly a, const ZPoly& b, const Int& M) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return zmod(a, M);
}

// divmod by monic divisor, mod M
std::pair<ZPoly, ZPoly> zdivmod_monic_mod(const ZPoly& a, const ZPoly& b, const Int& M) {
    ZPoly r = zmod(a, M), q;
    if (b.empty() || b.back() != 1) throw math_error("divisor must be monic");
    q.assign(a.size(), Int(0));
    while (zdeg(r) >= zdeg(b)) {
        Int c = r.back();
        int k = zdeg(r) - zdeg(b);
        q[static_cast<std::size_t>(k)] = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
            r[static_cast<std::size_t>(k) + i] -= c * b[i];
        }
        r = zmod(r, M);
    }
    ztrim(q);
    return {zmod(q, M), r};
}

struct HenselPair {
    ZPoly g, h, s, t;  // f = g h, s g + t h = 1 (mod current modulus)
};

// One quadratic step: modulus m -> m2 (m2 divides m^2).
HenselPair hensel_step(const ZPoly& f, const HenselPair& in, const Int& m2) {
    ZPoly e = zsub_mod(f, zmul(in.g, in.h), m2);
    auto [q, r] = zdivmod_monic_mod(zmul_mod(in.s, e, m2), in.h, m2);
    ZPoly g2 = zadd_mod(zadd_mod(in.g, zmul_mod(in.t, e, m2), m2), zmul_mod(q, in.g, m2), m2);
    ZPoly h2 = zadd_mod(in.h, r, m2);
    ZPoly one{Int(1)};
    ZPoly b = zsub_mod(zadd_mod(zmul_mod(in.s, g2, m2), zmul_mod(in.t, h2, m2), m2), one, m2);
    auto [c, d] = zdivmod_monic_mod(zmul_mod(in.s, b, m2), h2, m2);
    ZPoly s2 = zsub_mod(in.s, d, m2);
    ZPoly t2 = zsub_mod(zsub_mod(in.t, zmul_mod(in.t, b, m2), m2), zmul_mod(c, g2, m2), m2);
    return {g2, h2, s2, t2};
}

ZPoly from_ppoly(const PPoly& f) {
    ZPoly g(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) g[i] = Int(static_cast<long>(f[i]));
    return g;
}

// Lift the factorization f = prod(parts) from mod p to mod M (a power of p).
void hensel_tree(const ZPoly& f, const std::vector<PPoly>& parts, std::int64_t p, const Int& M,
                 std::vector<ZPoly>& out) {
    if (parts.size() == 1) {
        out.push_back(zmod(f, M));
        return;
    }
    std::size_t half = parts.size() / 2;
    PPoly G{1}, H{1};
    for (std::size_t i = 0; i < half; ++i) G = pmul(G, parts[i], p);
    for (std::size_t i = half; i < parts.size(); ++i) H = pmul(H, parts[i], p);
    // Bezout mod p by extended Euclid
    PPoly r0 = G, r1 = H, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        // q = r0 / r1
        PPoly q, r = r0;
        std::int64_t li = pinv(r1.back(), p);
        q.assign(r0.size() + 1, 0);
        while (r.size() >= r1.size() && !r.empty()) {
            std::int64_t c = mulmod(r.back(), li, p);
            std::size_t k = r.size() - r1.size();
            q[k] = c;
            for (std::size_t i = 0; i < r1.size(); ++i)
                r[k + i] = ((r[k + i] - mulmod(c, r1[i], p)) % p + p) % p;
            ptrim(r);
        }
        ptrim(q);
        PPoly s2 = psub(s0, pmul(q, s1, p), p);
        PPoly t2 = psub(t0, pmul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw math_error("hensel tree: factors not coprime");
    std::int64_t li = pinv(r0[0], p);
    s0 = pscale(s0, li, p);
    t0 = pscale(t0, li, p);

    HenselPair hp{from_ppoly(G), from_ppoly(H), from_ppoly(s0), from_ppoly(t0)};
    Int m(p);
    while (m < M) {
        Int m2 = m * m;
        if (m2 > M) m2 = M;  // cap: all identities hold mod any divisor-range cap
        hp = hensel_step(f, hp, m2);
        m = m2;
    }
    std::vector<PPoly> left(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<PPoly> right(parts.begin() + static_cast<std::ptrdiff_t>(half), parts.end());
    hensel_tree(hp.g, left, p, M, out);
    hensel_tree(hp.h, right, p, M, out);
}

// ---------------------------------------------------------------------------
// Zassenhaus on a primitive squarefree Z-poly with positive lead.

Int sqrt_ceil(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r < n) r += 1;
    return r;
}

std::vector<ZPoly> factor_squarefree_z(ZPoly f) {
    std::vector<ZPoly> out;
    if (zdeg(f) <= 0) return out;
    if (zdeg(f) == 1) {
        out.push_back(f);
        return out;
    }
    // monicize by substitution: F(x) = lc^{n-1} f(x/lc) is monic over Z
    Int lc = f.back();
    ZPoly F(f.size());
    {
        const int n = zdeg(f);
        F[static_cast<std::size_t>(n)] = 1;
        Int pw(1);  // lc^{n-1-i}
        for (int i = n - 1; i >= 0; --i) {
            F[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)] * pw;
            pw *= lc;
        }
    }

    // choose a prime: F squarefree mod p, fewest modular factors among candidates
    static const std::int64_t primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                                          47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101};
    std::int64_t best_p = 0;
    std::vector<PPoly> best_factors;
    int tried = 0;
    for (std::int64_t p : primes) {
        if (F.back() % p == 0) continue;
        PPoly fp = pmod_reduce(F, p);
        if (static_cast<int>(fp.size()) - 1 != zdeg(F)) continue;
        PPoly d = pderiv(fp, p);
        if (d.empty()) continue;
        PPoly g = pgcd(fp, d, p);
        if (g.size() != 1) continue;
        PPoly fmonic = pscale(fp, pinv(fp.back(), p), p);
        auto facs = berlekamp(fmonic, p);
        if (best_p == 0 || facs.size() < best_factors.size()) {
            best_p = p;
            best_factors = facs;
        }
        if (++tried >= 4 || best_factors.size() == 1) break;
    }
    if (best_p == 0) throw math_error("no suitable prime found for factorization");
    if (best_factors.size() == 1) {
        out.push_back(f);  // irreducible (after monic substitution it stays irreducible)
        return out;
    }

    // coefficient bound for monic factors of F: 2^n * ||F||_2
    Int norm2(0);
    for (const auto& c : F) norm2 += c * c;
    Int bound = sqrt_ceil(norm2);
    for (int i = 0; i < zdeg(F); ++i) bound *= 2;
    Int M(best_p);
    while (M < 2 * bound + 1) M *= best_p;

    std::vector<ZPoly> lifted;
    hensel_tree(zmod(F, M), best_factors, best_p, M, lifted);

    // recombination
    auto symmetric = [&](ZPoly g) {
        Int half = M / 2;
        for (auto& c : g)
            if (c > half) c -= M;
        ztrim(g);
        return g;
    };
    std::vector<bool> used(lifted.size(), false);
    ZPoly remaining = F;  // monic
    std::size_t remaining_parts = lifted.size();
    for (std::size_t card = 1; card <= lifted.size() && remaining_parts > 0; ++card) {
        if (card > remaining_parts) break;
        // enumerate index subsets of size card over unused indices
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < lifted.size(); ++i)
            if (!used[i]) idx.push_back(i);
        if (idx.size() < card) continue;
        std::vector<std::size_t> comb(card);
        for (std::size_t i = 0; i < card; ++i) comb[i] = i;
        bool advanced = true;
        while (advanced) {
            // candidate = product of chosen lifted factors mod M, symmetric lift
            if (2 * card <= idx.size() || card == idx.size()) {
                ZPoly cand{Int(1)};
                for (std::size_t i = 0; i < card; ++i) cand = zmul_mod(cand, lifted[idx[comb[i]]], M);
                cand = symmetric(cand);
                ZPoly q;
                if (!cand.empty() && zdivide_exact(remaining, cand, q)) {
                    out.push_back(cand);
                    for (std::size_t i = 0; i < card; ++i) used[idx[comb[i]]] = true;
                    remaining = q;
                    remaining_parts -= card;
                    // restart this cardinality with updated unused set
                    idx.clear();
                    for (std::size_t i = 0; i < lifted.size(); ++i)
                        if (!used[i]) idx.push_back(i);
                    if (idx.size() < card) break;
                    for (std::size_t i = 0; i < card; ++i) comb[i] = i;
                    continue;
                }
            }
            // next combination
            advanced = false;
            for (std::size_t i = card; i-- > 0;) {
                if (comb[i] + (card - i) < idx.size()) {
                    ++comb[i];
                    for (std::size_t j = i + 1; j < card; ++j) comb[j] = comb[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
        }
    }
    if (zdeg(remaining) > 0) out.push_back(remaining);

    // undo the monicizing substitution: g(x) -> primitive part of g(lc x)
    if (lc != 1) {
        for (auto& g : out) {
            Int pw(1);
            for (std::size_t i = 0; i < g.size(); ++i) {
                g[i] *= pw;
                pw *= lc;
            }
            Int cont = zcontent(g);
            if (cont != 0)
                for (auto& c : g) c /= cont;
            if (!g.empty() && g.back() < 0)
                for (auto& c : g) c = -c;
        }
    }
    return out;
}

// Rational roots of a primitive squarefree Z-poly via small divisors; the
// modular factorization catches everything, this is only a fast path.
std::vector<Rational> small_rational_roots(const ZPoly& f) {
    std::vector<Rational> roots;
    if (zdeg(f) < 1) return roots;
    auto small_divisors = [](const Int& n) {
        std::vector<long> ds;
        Int a = abs(n);
        for (long d = 1; d <= 64; ++d)
            if (a % d == 0) ds.push_back(d);
        return ds;
    };
    if (f[0] == 0) return roots;  // handled by caller (x factor)
    for (long pnum : small_divisors(f[0])) {
        for (long qden : small_divisors(f.back())) {
            for (int sign = 1; sign >= -1; sign -= 2) {
                Rational cand(pnum * sign, qden);
                Rational acc(0);
                for (std::size_t i = f.size(); i-- > 0;) acc = acc * cand + Rational(f[i]);
                if (acc.is_zero()) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

bool qpoly_less(const QPoly& a, const QPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

}  // namespace

QFactorization factor_rational_poly(const QPoly& f) {
    if (f.is_zero()) throw math_error("factorization of zero polynomial");
    QFactorization result;
    result.unit = f.lead();
    if (f.degree() == 0) return result;

    std::map<int, std::vector<QPoly>> by_mult;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        ZPoly z = primitive_from_q(part);
        // strip x^k
        int xord = 0;
        while (!z.empty() && z[0] == 0) {
            z.erase(z.begin());
            ++xord;
        }
        if (xord > 0)
            by_mult[mult].push_back(QPoly(std::vector<Rational>{Rational(0), Rational(1)}));
        // rational-root fast path
        for (const Rational& r : small_rational_roots(z)) {
            QPoly lin(std::vector<Rational>{-r, Rational(1)});
            QPoly q = to_qpoly(z);
            auto [quot, rem] = divmod(q, lin);
            if (rem.is_zero()) {
                by_mult[mult].push_back(lin);
                z = primitive_from_q(quot);
            }
        }
        for (const ZPoly& g : factor_squarefree_z(z)) {
            by_mult[mult].push_back(monic(to_qpoly(g)));
        }
    }
    for (auto& [mult, polys] : by_mult) {
        std::sort(polys.begin(), polys.end(), qpoly_less);
        for (auto& p : polys) result.factors.emplace_back(p, mult);
    }
    std::stable_sort(result.factors.begin(), result.factors.end(),
                     [](const auto& a, const auto& b) { return qpoly_less(a.first, b.first); });
    return result;
}

bool is_irreducible(const QPoly& f) {
    if (f.degree() < 1) return false;
    auto fac = factor_rational_poly(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

BinaryFactorization factor_binary_form(const BinaryForm& f) {
    if (f.is_zero()) throw math_error("factorization of zero form");
    BinaryFactorization out;
    int t_ord = f.t_order();
    if (t_ord >= 1) {
        // the form t
        out.factors.emplace_back(BinaryForm(1, {Rational(0), Rational(1)}), t_ord);
    }
    UPoly<Rational> u = f.dehomogenized();
    QFactorization qf = factor_rational_poly(u);
    out.unit = qf.unit;
    for (const auto& [p, m] : qf.factors) {
        out.factors.emplace_back(BinaryForm::homogenized(p, p.degree()), m);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace dplct
