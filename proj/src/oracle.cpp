#include "newt/oracle.hpp"

#include "newt/diagram.hpp"
#include "newt/errors.hpp"
#include "newt/polyops.hpp"

namespace newt {

namespace {

// f(x + c y, y)
BPoly shear(const BPoly& f, const Rat& c) {
    BPoly x_plus_cy = BPoly::var_x() + BPoly::var_y() * c;
    std::vector<BPoly> pow_cache{BPoly(Rat(1))};
    auto xpow = [&](long long a) -> const BPoly& {
        while (static_cast<long long>(pow_cache.size()) <= a)
            pow_cache.push_back(pow_cache.back() * x_plus_cy);
        return pow_cache[a];
    };
    BPoly out;
    for (auto& [m, co] : f.terms()) out = out + xpow(m.a) * BPoly::monomial(0, m.b, co);
    return out;
}

long long x_order_of(const UPoly& u) {
    if (u.is_zero()) throw common_factor();
    for (long long i = 0; i <= u.degree(); ++i)
        if (u.coeff(i) != 0) return i;
    return 0;
}

// --- modular x-order of the y-resultant ----------------------------------
// Evaluation/interpolation over a large prime field. The caller compares
// several shears computed over distinct primes; degenerate reductions bail
// out with -1 and the exact path takes over.

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((__uint128_t)a * b % p); }
u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    for (a %= p; e; e >>= 1, a = mulmod(a, a, p))
        if (e & 1) r = mulmod(r, a, p);
    return r;
}
u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

u64 rat_mod(const Rat& r, u64 p) {
    u64 num = mpz_fdiv_ui(r.get_num().get_mpz_t(), p);
    u64 den = mpz_fdiv_ui(r.get_den().get_mpz_t(), p);
    if (den == 0) return p; // sentinel: bad prime
    return mulmod(num, invmod(den, p), p);
}

// coefficients of y^i of f(x + c y, y) as dense rows of x-coefficients mod p
std::vector<std::vector<u64>> sheared_rows_mod(const BPoly& f, u64 c, u64 p, bool& ok) {
    const long long dx = f.deg_x(), dtot = f.deg_x() + f.deg_y();
    std::vector<std::vector<u64>> rows(dtot + 1, std::vector<u64>(dx + 1, 0));
    // binomials and powers of c up to deg_x
    std::vector<std::vector<u64>> binom(dx + 1, std::vector<u64>(dx + 1, 0));
    for (long long i = 0; i <= dx; ++i) {
        binom[i][0] = 1;
        for (long long j = 1; j <= i; ++j)
            binom[i][j] = (binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0)) % p;
    }
    std::vector<u64> cpow(dx + 1, 1);
    for (long long i = 1; i <= dx; ++i) cpow[i] = mulmod(cpow[i - 1], c % p, p);
    for (auto& [m, co] : f.terms()) {
        u64 v = rat_mod(co, p);
        if (v == p) {
            ok = false;
            return rows;
        }
        for (long long j = 0; j <= m.a; ++j) {
            u64 t = mulmod(v, mulmod(binom[m.a][j], cpow[m.a - j], p), p);
            auto& cell = rows[m.b + (m.a - j)][j];
            cell = (cell + t) % p;
        }
    }
    while (rows.size() > 1) {
        bool zero = true;
        for (u64 x : rows.back()) zero = zero && x == 0;
        if (!zero) break;
        rows.pop_back();
    }
    return rows;
}

u64 eval_row(const std::vector<u64>& row, u64 x, u64 p) {
    u64 acc = 0;
    for (std::size_t i = row.size(); i-- > 0;) acc = (mulmod(acc, x, p) + row[i]) % p;
    return acc;
}

long long det_sylvester_mod(std::vector<std::vector<u64>>& m, u64 p) {
    const std::size_t n = m.size();
    u64 det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return -1; // zero determinant
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = p - det;
            if (det == p) det = 0;
        }
        det = mulmod(det, m[col][col], p);
        u64 inv = invmod(m[col][col], p);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            u64 factor = mulmod(m[r][col], inv, p);
            for (std::size_t c2 = col; c2 < n; ++c2) {
                u64 sub = mulmod(factor, m[col][c2], p);
                m[r][c2] = (m[r][c2] + p - sub) % p;
            }
        }
    }
    return static_cast<long long>(det);
}

// x-order of Res_y(f(x+cy,y), g(x+cy,y)) mod p; -1 when unusable.
long long resultant_x_order_mod(const BPoly& f, const BPoly& g, u64 c, u64 p) {
    bool ok = true;
    auto fr = sheared_rows_mod(f, c, p, ok);
    auto gr = sheared_rows_mod(g, c, p, ok);
    if (!ok) return -1;
    const long long df = static_cast<long long>(fr.size()) - 1;
    const long long dg = static_cast<long long>(gr.size()) - 1;
    if (df <= 0 || dg <= 0) return -1;
    const long long dfx = static_cast<long long>(fr[0].size()) - 1;
    const long long dgx = static_cast<long long>(gr[0].size()) - 1;
    const long long bound = df * (dgx + dg) + dg * (dfx + df);
    std::vector<u64> xs, ys;
    long long pt = 0, misses = 0;
    while (static_cast<long long>(xs.size()) <= bound) {
        u64 xv = static_cast<u64>(((pt % static_cast<long long>(p)) + p) % p);
        pt = (pt > 0) ? -pt : -pt + 1;
        u64 lf = eval_row(fr.back(), xv, p), lg = eval_row(gr.back(), xv, p);
        if (lf == 0 || lg == 0) {
            if (++misses > bound + 64) return -1;
            continue;
        }
        std::vector<u64> fc(df + 1), gc(dg + 1);
        for (long long i = 0; i <= df; ++i) fc[i] = eval_row(fr[i], xv, p);
        for (long long i = 0; i <= dg; ++i) gc[i] = eval_row(gr[i], xv, p);
        const long long sz = df + dg;
        std::vector<std::vector<u64>> mat(sz, std::vector<u64>(sz, 0));
        for (long long r = 0; r < dg; ++r)
            for (long long j = 0; j <= df; ++j) mat[r][r + (df - j)] = fc[j];
        for (long long r = 0; r < df; ++r)
            for (long long j = 0; j <= dg; ++j) mat[dg + r][r + (dg - j)] = gc[j];
        long long d = det_sylvester_mod(mat, p);
        xs.push_back(xv);
        ys.push_back(d < 0 ? 0 : static_cast<u64>(d));
    }
    // Newton divided differences over F_p; evaluation points are the small
    // integers 0, 1, -1, 2, ... so the needed inverses come from a table.
    const std::size_t n = xs.size();
    std::vector<u64> small_inv(2 * n + 3);
    for (std::size_t v = 1; v < small_inv.size(); ++v) small_inv[v] = invmod(v % p, p);
    std::vector<long long> xi(n); // signed value of each point
    for (std::size_t i = 0; i < n; ++i)
        xi[i] = (xs[i] > p / 2) ? static_cast<long long>(xs[i]) - static_cast<long long>(p)
                                : static_cast<long long>(xs[i]);
    std::vector<u64> dd = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            u64 num = (dd[i] + p - dd[i - 1]) % p;
            long long diff = xi[i] - xi[i - j];
            u64 inv = diff > 0 ? small_inv[diff] : p - small_inv[-diff];
            dd[i] = mulmod(num, inv, p);
        }
    std::vector<u64> coef(n, 0);
    std::vector<u64> acc; // polynomial, low degree first
    for (std::size_t i = n; i-- > 0;) {
        // acc = acc*(X - xs[i]) + dd[i]
        std::vector<u64> nxt(acc.size() + 1, 0);
        for (std::size_t j = 0; j < acc.size(); ++j) {
            nxt[j + 1] = (nxt[j + 1] + acc[j]) % p;
            nxt[j] = (nxt[j] + p - mulmod(acc[j], xs[i], p)) % p;
        }
        if (nxt.empty()) nxt.resize(1, 0);
        nxt[0] = (nxt[0] + dd[i]) % p;
        acc = std::move(nxt);
    }
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (acc[i] != 0) return static_cast<long long>(i);
    return -1; // resultant vanished mod p
}

} // namespace

long long intersection_mult(const BPoly& f, const BPoly& g, RandomSource& rnd) {
    if (f.is_zero() || g.is_zero()) throw zero_polynomial();
    if (f.eval(Rat(0), Rat(0)) != 0 || g.eval(Rat(0), Rat(0)) != 0) throw not_vanishing();
    if (f.x_content() >= 1 && g.x_content() >= 1) throw common_factor();
    if (f.y_content() >= 1 && g.y_content() >= 1) throw common_factor();
    static const u64 primes[3] = {9223372036854775783ULL, 4611686018427387847ULL,
                                  2305843009213693951ULL};
    // A nonzero modular resultant certifies that f and g share no factor of
    // positive y-degree, so the exact gcd runs only on inconclusive draws.
    bool coprime_certified = false;
    long long result = -1;
    for (int trial = 0; trial < 3; ++trial) {
        long long cv = rnd.uniform(1, 1000003);
        long long v = resultant_x_order_mod(f, g, static_cast<u64>(cv), primes[trial]);
        if (v >= 0) {
            coprime_certified = true;
        } else {
            if (!coprime_certified && !gcd(f, g).is_constant()) throw common_factor();
            coprime_certified = true;
            Rat c(static_cast<long>(cv));
            BPoly fs = shear(f, c), gs = shear(g, c);
            if (fs.deg_y() == 0 || gs.deg_y() == 0) {
                --trial;
                continue;
            }
            v = x_order_of(resultant_y(fs, gs)); // exact fallback
        }
        if (result < 0) {
            result = v;
        } else if (result != v) {
            throw cross_check_error("shear-dependent intersection multiplicity");
        }
    }
    return result;
}

long long e_oracle(const IdealGens& I, RandomSource& rnd) {
    if (I.content_a() != 0 || I.content_b() != 0 || !gcd_many(I.gens()).is_constant() ||
        I.any_unit_generator())
        throw not_finite_codim();
    const auto& gens = I.gens();
    long long best = -1;
    int done = 0, guard = 0;
    while (done < 5 && guard < 100) {
        ++guard;
        BPoly g1, g2;
        for (auto& f : gens) {
            g1 = g1 + f * rnd.nonzero_coeff();
            g2 = g2 + f * rnd.nonzero_coeff();
        }
        if (g1.is_zero() || g2.is_zero()) continue;
        long long v;
        try {
            v = intersection_mult(g1, g2, rnd);
        } catch (const common_factor&) {
            continue; // degenerate draw
        }
        best = best < 0 ? v : std::min(best, v);
        ++done;
    }
    if (done == 0) throw cross_check_error("no generic pair found for the colength oracle");
    return best;
}

long long mult_oracle(const IdealGens& I, RandomSource& rnd) {
    long long best = -1;
    auto fg = I.full_gens();
    for (int t = 0; t < 5; ++t) {
        BPoly g;
        for (auto& f : fg) g = g + f * rnd.nonzero_coeff();
        if (g.is_zero()) {
            --t;
            continue;
        }
        long long v = g.order();
        best = best < 0 ? v : std::min(best, v);
    }
    return best;
}

MonomialClosure monomial_closure(const IdealGens& I) {
    for (auto& g : I.gens())
        if (g.term_count() != 1) throw not_monomial();
    MonomialClosure out;
    out.k = I.content_a();
    out.l = I.content_b();
    NewtonDiagram d = diagram(I);
    for (auto& S : faces(d)) {
        out.factors.emplace_back(S.p, S.q, S.delta - 1);
        out.e += S.N * (S.delta - 1);
    }
    return out;
}

} // namespace newt
