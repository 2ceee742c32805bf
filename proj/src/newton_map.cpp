#include "newt/newton_map.hpp"

#include <numeric>

#include "newt/errors.hpp"

namespace newt {

std::string NewtonMap::to_string() const {
    std::string out = "(" + std::to_string(p) + "," + std::to_string(q) + ",";
    out += generic ? "GENERIC" : rat_to_string(mu);
    return out + ")";
}

namespace {

std::pair<long long, long long> canonical_pq_prime(long long p, long long q) {
    if (q == 1) return {1, p - 1};
    // p' = p^{-1} mod q in [1, q-1], then q' = (p p' - 1)/q < p.
    long long pp = 0;
    {
        long long t = 0, newt_ = 1, r = q, newr = p % q;
        while (newr != 0) {
            long long quot = r / newr;
            long long tmp = t - quot * newt_;
            t = newt_;
            newt_ = tmp;
            tmp = r - quot * newr;
            r = newr;
            newr = tmp;
        }
        pp = ((t % q) + q) % q;
    }
    long long qp = (p * pp - 1) / q;
    return {pp, qp};
}

Rat rat_pow(const Rat& r, long long e) {
    if (e == 0) return Rat(1);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), r.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), r.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return make_rat(num, den);
}

} // namespace

NewtonMap make_map(long long p, long long q, const Rat& mu) {
    if (p < 1 || q < 1 || std::gcd(p, q) != 1) throw not_coprime(p, q);
    if (mu == 0) throw zero_mu();
    NewtonMap m;
    m.p = p;
    m.q = q;
    auto [pp, qp] = canonical_pq_prime(p, q);
    m.p_prime = pp;
    m.q_prime = qp;
    m.mu = mu;
    return m;
}

NewtonMap make_generic_map(long long p, long long q) {
    if (p < 1 || q < 1 || std::gcd(p, q) != 1) throw not_coprime(p, q);
    NewtonMap m;
    m.p = p;
    m.q = q;
    auto [pp, qp] = canonical_pq_prime(p, q);
    m.p_prime = pp;
    m.q_prime = qp;
    m.generic = true;
    return m;
}

int compare_maps(const NewtonMap& a, const NewtonMap& b) {
    // p/q descending.
    __int128 lhs = static_cast<__int128>(a.p) * b.q;
    __int128 rhs = static_cast<__int128>(b.p) * a.q;
    if (lhs != rhs) return lhs > rhs ? -1 : 1;
    if (a.generic != b.generic) return a.generic ? 1 : -1;
    if (!a.generic) {
        if (a.mu != b.mu) return a.mu < b.mu ? -1 : 1;
    }
    return 0;
}

int compare_map_seq(const std::vector<NewtonMap>& a, const std::vector<NewtonMap>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        int c = compare_maps(a[i], b[i]);
        if (c) return c;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

std::pair<long long, BPoly> apply_map_poly(const BPoly& f, const NewtonMap& m) {
    if (f.is_zero()) throw zero_polynomial();
    if (m.generic) throw error("apply_map_poly needs a concrete mu");
    const Rat mu_pp = rat_pow(m.mu, m.p_prime);
    BPoly out;
    for (auto& [mono, c] : f.terms()) {
        const Rat scale = c * rat_pow(m.mu, m.q_prime * mono.a);
        const long long xe = m.p * mono.a + m.q * mono.b;
        // (y + mu^{p'})^beta
        Rat pw(1);
        std::vector<Rat> binom(mono.b + 1);
        for (long long j = mono.b; j >= 0; --j) {
            mpz_class bc;
            mpz_bin_uiui(bc.get_mpz_t(), static_cast<unsigned long>(mono.b),
                         static_cast<unsigned long>(j));
            binom[j] = Rat(bc) * pw;
            pw *= mu_pp;
        }
        for (long long j = 0; j <= mono.b; ++j) out.add_term(xe, j, scale * binom[j]);
    }
    long long k = out.x_content();
    return {k, out.unshift(k, 0)};
}

long long generic_x_order(const BPoly& f, long long p, long long q) {
    if (f.is_zero()) throw zero_polynomial();
    long long best = -1;
    for (auto& [m, c] : f.terms()) {
        long long v = p * m.a + q * m.b;
        if (best < 0 || v < best) best = v;
    }
    return best;
}

IdealGens transform_ideal(const IdealGens& I, const NewtonMap& m) {
    std::vector<BPoly> out;
    for (auto& g : I.full_gens()) {
        auto [k, t] = apply_map_poly(g, m);
        out.push_back(t.shift(k, 0));
    }
    return IdealGens(std::move(out));
}

std::pair<long long, IdealGens> apply_map_ideal(const IdealGens& I, const NewtonMap& m) {
    IdealGens t = transform_ideal(I, m);
    long long n0 = t.content_a();
    std::vector<BPoly> gens;
    for (auto& g : t.gens()) gens.push_back(g.shift(0, t.content_b()));
    return {n0, IdealGens(std::move(gens))};
}

} // namespace newt
