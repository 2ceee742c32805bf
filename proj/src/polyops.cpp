#include "newt/polyops.hpp"

#include <algorithm>
#include <map>

#include "newt/errors.hpp"

namespace newt {

// ---------------------------------------------------------------------------
// Univariate arithmetic over Q
// ---------------------------------------------------------------------------

std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw error("univariate division by zero");
    std::vector<Rat> rem = a.coeffs();
    long long db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<Rat> quot(a.degree() - db + 1, Rat(0));
    for (long long i = a.degree(); i >= db; --i) {
        if (static_cast<std::size_t>(i) >= rem.size() || rem[i] == 0) continue;
        Rat q = rem[i] / b.lead();
        quot[i - db] = q;
        for (long long j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
    }
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
    UPoly u = a, v = b;
    while (!v.is_zero()) {
        auto [q, r] = upoly_divmod(u, v);
        u = v;
        v = r;
    }
    if (u.is_zero()) return u;
    std::vector<Rat> c = u.coeffs();
    Rat lead = c.back();
    for (auto& x : c) x /= lead;
    return UPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Bivariate gcd: recursive view f = sum a_i(x) y^i, primitive PRS in y.
// ---------------------------------------------------------------------------

namespace {

// Coefficients in Q[x] indexed by y-degree.
std::vector<UPoly> to_yrec(const BPoly& f) {
    std::vector<UPoly> out;
    std::vector<std::vector<Rat>> rows;
    for (auto& [m, c] : f.terms()) {
        if (static_cast<long long>(rows.size()) <= m.b) rows.resize(m.b + 1);
        auto& row = rows[m.b];
        if (static_cast<long long>(row.size()) <= m.a) row.resize(m.a + 1, Rat(0));
        row[m.a] = c;
    }
    out.reserve(rows.size());
    for (auto& r : rows) out.emplace_back(std::move(r));
    return out;
}

BPoly from_yrec(const std::vector<UPoly>& rows) {
    BPoly f;
    for (std::size_t b = 0; b < rows.size(); ++b)
        for (long long a = 0; a <= rows[b].degree(); ++a) f.add_term(a, b, rows[b].coeff(a));
    return f;
}

long long ydeg(const std::vector<UPoly>& rows) {
    long long d = static_cast<long long>(rows.size()) - 1;
    while (d >= 0 && rows[d].is_zero()) --d;
    return d;
}

UPoly content_y(const std::vector<UPoly>& rows) {
    UPoly c;
    for (auto& r : rows) c = upoly_gcd(c, r);
    return c;
}

std::vector<UPoly> divide_rows(const std::vector<UPoly>& rows, const UPoly& c) {
    std::vector<UPoly> out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto [q, r] = upoly_divmod(rows[i], c);
        if (!r.is_zero()) throw error("inexact content division");
        out[i] = q;
    }
    return out;
}

std::vector<UPoly> mul_row(const std::vector<UPoly>& rows, const UPoly& c) {
    std::vector<UPoly> out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) out[i] = rows[i] * c;
    return out;
}

// Pseudo-remainder of u by v in (Q[x])[y].
std::vector<UPoly> prem_y(std::vector<UPoly> u, const std::vector<UPoly>& v) {
    long long dv = ydeg(v);
    const UPoly& lv = v[dv];
    for (;;) {
        long long du = ydeg(u);
        if (du < dv) break;
        // u <- lv*u - lu*y^(du-dv)*v
        const UPoly lu = u[du];
        std::vector<UPoly> nu = mul_row(u, lv);
        for (long long i = 0; i <= dv; ++i) nu[du - dv + i] = nu[du - dv + i] + (-(lu * v[i]));
        nu[du] = UPoly();
        while (static_cast<long long>(nu.size()) > 0 && nu.back().is_zero()) nu.pop_back();
        u = std::move(nu);
        if (u.empty()) break;
    }
    return u;
}

BPoly gcd_content_free(const BPoly& f, const BPoly& g) {
    // Both inputs have no monomial content here.
    auto rf = to_yrec(f), rg = to_yrec(g);
    UPoly cf = content_y(rf), cg = content_y(rg);
    UPoly cont = upoly_gcd(cf, cg);
    std::vector<UPoly> pf = divide_rows(rf, cf), pg = divide_rows(rg, cg);
    if (ydeg(pf) < ydeg(pg)) std::swap(pf, pg);
    while (ydeg(pg) >= 0) {
        if (ydeg(pg) == 0) {
            // Primitive of y-degree 0 is a unit.
            pf = {UPoly::constant(Rat(1))};
            break;
        }
        auto r = prem_y(pf, pg);
        if (ydeg(r) >= 0) {
            UPoly cr = content_y(r);
            r = divide_rows(r, cr);
        }
        pf = std::move(pg);
        pg = std::move(r);
    }
    // gcd = cont(x) * primitive gcd in y
    std::vector<UPoly> prod = mul_row(pf, cont);
    return from_yrec(prod);
}

} // namespace

BPoly gcd(const BPoly& f, const BPoly& g) {
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();
    long long ax = std::min(f.x_content(), g.x_content());
    long long ay = std::min(f.y_content(), g.y_content());
    BPoly fc = f.unshift(f.x_content(), f.y_content());
    BPoly gc = g.unshift(g.x_content(), g.y_content());
    BPoly core = gcd_content_free(fc, gc);
    return core.shift(ax, ay).normalized();
}

BPoly gcd_many(const std::vector<BPoly>& fs) {
    BPoly acc;
    for (auto& f : fs) {
        acc = gcd(acc, f);
        if (!acc.is_zero() && acc.is_constant()) break;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Squarefree decomposition (Yun, characteristic 0)
// ---------------------------------------------------------------------------

namespace {

// Yun on a polynomial whose repeated factors are all visible to `diff`.
template <class Poly, class GcdFn, class DivFn, class DiffFn, class ConstFn>
void yun(const Poly& f, GcdFn gcdf, DivFn divf, DiffFn diff, ConstFn is_const,
         std::vector<std::pair<Poly, long long>>& out) {
    Poly df = diff(f);
    Poly g = gcdf(f, df);
    Poly b = divf(f, g);
    Poly c = divf(df, g);
    long long i = 1;
    while (!is_const(b)) {
        Poly d = c + (-diff(b));
        Poly a = gcdf(b, d);
        if (!is_const(a)) out.emplace_back(a, i);
        b = divf(b, a);
        c = divf(d, a);
        ++i;
    }
}

} // namespace

std::vector<std::pair<BPoly, long long>> squarefree_decompose(const BPoly& f) {
    if (f.is_zero()) throw zero_polynomial();
    std::map<long long, BPoly> by_mult;
    auto push = [&](const BPoly& fac, long long m) {
        auto it = by_mult.find(m);
        if (it == by_mult.end())
            by_mult.emplace(m, fac);
        else
            it->second = it->second * fac;
    };
    long long cx = f.x_content(), cy = f.y_content();
    if (cx > 0) push(BPoly::var_x(), cx);
    if (cy > 0) push(BPoly::var_y(), cy);
    BPoly core = f.unshift(cx, cy);
    if (!core.is_constant()) {
        auto rows = to_yrec(core);
        UPoly cont = content_y(rows);
        BPoly pp = from_yrec(divide_rows(rows, cont));
        if (cont.degree() >= 1) {
            // Pure-x part, univariate Yun.
            std::vector<std::pair<UPoly, long long>> uf;
            yun<UPoly>(
                cont, upoly_gcd,
                [](const UPoly& a, const UPoly& b) {
                    auto [q, r] = upoly_divmod(a, b);
                    if (!r.is_zero()) throw error("inexact division in yun");
                    return q;
                },
                [](const UPoly& a) {
                    std::vector<Rat> d;
                    for (long long i = 1; i <= a.degree(); ++i)
                        d.push_back(a.coeff(i) * Rat(static_cast<long>(i)));
                    return UPoly(std::move(d));
                },
                [](const UPoly& a) { return a.is_constant(); }, uf);
            for (auto& [u, m] : uf) {
                BPoly bx;
                for (long long i = 0; i <= u.degree(); ++i) bx.add_term(i, 0, u.coeff(i));
                push(bx.normalized(), m);
            }
        }
        if (!pp.is_constant()) {
            std::vector<std::pair<BPoly, long long>> bf;
            yun<BPoly>(
                pp, [](const BPoly& a, const BPoly& b) { return gcd(a, b); },
                [](const BPoly& a, const BPoly& b) { return a.divide_exact(b); },
                [](const BPoly& a) { return a.derivative_y(); },
                [](const BPoly& a) { return a.is_constant(); }, bf);
            for (auto& [p, m] : bf) push(p.normalized(), m);
        }
    }
    std::vector<std::pair<BPoly, long long>> out;
    for (auto& [m, p] : by_mult) out.emplace_back(p.normalized(), m);
    return out;
}

// ---------------------------------------------------------------------------
// Resultant via evaluation / interpolation
// ---------------------------------------------------------------------------

namespace {

Rat det_q(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

Rat sylvester_det(const std::vector<Rat>& fc, const std::vector<Rat>& gc) {
    // fc, gc: coefficients by ascending degree, leading entries nonzero.
    const long long m = static_cast<long long>(fc.size()) - 1;
    const long long n = static_cast<long long>(gc.size()) - 1;
    const long long sz = m + n;
    std::vector<std::vector<Rat>> mat(sz, std::vector<Rat>(sz, Rat(0)));
    for (long long r = 0; r < n; ++r)
        for (long long j = 0; j <= m; ++j) mat[r][r + (m - j)] = fc[j];
    for (long long r = 0; r < m; ++r)
        for (long long j = 0; j <= n; ++j) mat[n + r][r + (n - j)] = gc[j];
    return det_q(mat);
}

std::vector<UPoly> coeffs_in_x(const BPoly& f) {
    // Coefficients of y^i as elements of Q[x].
    return to_yrec(f);
}

} // namespace

UPoly resultant_y(const BPoly& f, const BPoly& g) {
    if (f.is_zero() || g.is_zero()) return UPoly();
    const long long df = f.deg_y(), dg = g.deg_y();
    if (df == 0 && dg == 0) throw both_constant_in_y();
    auto power_in_x = [](const BPoly& p, long long e) {
        UPoly base;
        {
            std::vector<Rat> c;
            for (auto& [m, co] : p.terms()) {
                if (static_cast<long long>(c.size()) <= m.a) c.resize(m.a + 1, Rat(0));
                c[m.a] = co;
            }
            base = UPoly(std::move(c));
        }
        UPoly r = UPoly::constant(Rat(1));
        for (long long i = 0; i < e; ++i) r = r * base;
        return r;
    };
    if (df == 0) return power_in_x(f, dg);
    if (dg == 0) return power_in_x(g, df);

    auto fr = coeffs_in_x(f), gr = coeffs_in_x(g);
    const UPoly& lf = fr.back();
    const UPoly& lg = gr.back();
    const long long bound = df * g.deg_x() + dg * f.deg_x();
    std::vector<Rat> xs, ys;
    long long c = 0;
    while (static_cast<long long>(xs.size()) <= bound) {
        Rat xv(static_cast<long>(c));
        c = (c > 0) ? -c : -c + 1;
        if (lf.eval(xv) == 0 || lg.eval(xv) == 0) continue;
        std::vector<Rat> fc(df + 1), gc(dg + 1);
        for (long long i = 0; i <= df; ++i) fc[i] = (i < static_cast<long long>(fr.size())) ? fr[i].eval(xv) : Rat(0);
        for (long long i = 0; i <= dg; ++i) gc[i] = (i < static_cast<long long>(gr.size())) ? gr[i].eval(xv) : Rat(0);
        xs.push_back(xv);
        ys.push_back(sylvester_det(fc, gc));
    }
    // Newton-form interpolation.
    const std::size_t n = xs.size();
    std::vector<Rat> dd = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    UPoly acc;
    for (std::size_t i = n; i-- > 0;) {
        // acc = acc*(X - xs[i]) + dd[i]
        std::vector<Rat> shifted(acc.coeffs().size() + 1, Rat(0));
        for (std::size_t j = 0; j < acc.coeffs().size(); ++j) {
            shifted[j + 1] += acc.coeffs()[j];
            shifted[j] -= acc.coeffs()[j] * xs[i];
        }
        if (shifted.empty()) shifted.resize(1, Rat(0));
        shifted[0] += dd[i];
        acc = UPoly(std::move(shifted));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Rational roots
// ---------------------------------------------------------------------------

namespace {

void factor_into(Int n, std::map<Int, long long>& out);

Int pollard_rho(const Int& n) {
    // Brent's variant; n odd composite, not a prime power of small primes.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x9e3779b97f4a7c15ULL);
    for (;;) {
        Int y = rng.get_z_range(n - 3) + 2;
        Int c = rng.get_z_range(n - 1) + 1;
        Int m = 128, g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int rk = r - k;
                Int lim = m < rk ? m : rk;
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                Int d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
    }
}

void factor_into(Int n, std::map<Int, long long>& out) {
    if (n < 0) n = -n;
    if (n <= 1) return;
    for (long sp : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), sp)) {
            ++out[Int(sp)];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), sp);
        }
    }
    long p = 17;
    while (n > 1 && p <= (1L << 20) && Int(p) * Int(p) <= n) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[Int(p)];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
        p += 2;
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::vector<Int> divisors_of(const Int& n) {
    std::map<Int, long long> fac;
    factor_into(n, fac);
    std::vector<Int> divs{1};
    for (auto& [p, e] : fac) {
        std::vector<Int> next;
        Int pk = 1;
        for (long long i = 0; i <= e; ++i) {
            for (auto& d : divs) next.push_back(d * pk);
            pk *= p;
        }
        divs = std::move(next);
    }
    return divs;
}

} // namespace

RationalRoots rational_roots(const UPoly& u) {
    if (u.is_zero()) throw zero_polynomial();
    RationalRoots out;
    std::vector<Rat> c = u.coeffs();
    long long zero_mult = 0;
    while (!c.empty() && c.front() == 0) {
        c.erase(c.begin());
        ++zero_mult;
    }
    UPoly cur(std::move(c));
    if (zero_mult > 0) out.roots.emplace_back(Rat(0), zero_mult);
    if (cur.is_constant()) {
        out.residual = cur;
        std::sort(out.roots.begin(), out.roots.end(),
                  [](auto& a, auto& b) { return a.first < b.first; });
        return out;
    }
    // Primitive integer form for candidate enumeration.
    Int den_lcm = 1;
    for (auto& x : cur.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Int> ic;
    for (auto& x : cur.coeffs()) ic.push_back(Int(x.get_num() * (den_lcm / x.get_den())));
    Int a0 = ic.front(), an = ic.back();
    std::vector<Rat> candidates;
    for (const Int& p : divisors_of(a0))
        for (const Int& q : divisors_of(an)) {
            Rat r = make_rat(p, q);
            candidates.push_back(r);
            candidates.push_back(-r);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const Rat& r : candidates) {
        long long mult = 0;
        while (!cur.is_constant() && cur.eval(r) == 0) {
            cur = cur.deflate(r);
            ++mult;
        }
        if (mult > 0) out.roots.emplace_back(r, mult);
        if (cur.is_constant()) break;
    }
    out.residual = cur;
    std::sort(out.roots.begin(), out.roots.end(), [](auto& a, auto& b) { return a.first < b.first; });
    return out;
}

} // namespace newt
