#include "c2f/wp.hpp"

#include <map>

namespace c2f {

WpClass WpClass::operator+(const WpClass& o) const {
    std::map<int, gfelem> m;
    for (auto& [e, c] : principal) m[e] ^= c;
    for (auto& [e, c] : o.principal) m[e] ^= c;
    WpClass r;
    r.const_bit = const_bit ^ o.const_bit;
    for (auto it = m.rbegin(); it != m.rend(); ++it)
        if (it->second) r.principal.emplace_back(it->first, it->second);
    return r;
}

namespace {

struct Reduction {
    std::vector<std::pair<int, gfelem>> principal; // canonical, exponents descending
    gfelem c0 = 0;
    FieldElem tail;                                 // valuation >= 1, or zero
    std::map<int, gfelem> witness;                  // y with c + wp(y) = principal + c0 + tail
};

Reduction reduce(const FieldElem& c) {
    const Field& f = c.field();
    const Gf2m& K = f->coeffs;
    Reduction r;
    r.tail = FieldElem::zero(f);
    if (c.is_zero()) return r;

    if (f->kind == FieldKind::Finite) {
        r.c0 = *c.as_scalar();
        return r;
    }

    std::map<int, gfelem> princ;
    FieldElem rest = c;
    int v = c.valuation();
    if (v < 0) {
        Expansion ex = valuation_expand(c, -v);
        Poly pnum;
        pnum.c.assign(size_t(-v), 0);
        for (int i = 0; i < -v; ++i) {
            gfelem coef = ex.coeffs[size_t(i)];
            if (coef) princ[v + i] = coef;
            pnum.c[size_t(i)] = coef;
        }
        pnum.trim();
        FieldElem P(f, std::move(pnum), Poly::monomial(1, unsigned(-v)));
        rest = c + P;
    }
    if (!rest.is_zero()) {
        if (rest.valuation() < 0) throw std::logic_error("wp reduce: principal extraction failed");
        r.c0 = K.mul(rest.num().at(0), K.inv(rest.den().at(0)));
        r.tail = rest + FieldElem::scalar(f, r.c0);
    }

    // Remove even-exponent terms alpha*t^(-2m) by adding wp(sqrt(alpha)*t^(-m)).
    while (true) {
        auto it = princ.begin();
        while (it != princ.end() && (it->first % 2 != 0 || it->second == 0)) ++it;
        if (it == princ.end()) break;
        int e = it->first;
        gfelem alpha = it->second;
        princ.erase(it);
        int m = -e / 2;
        gfelem s = K.sqrt(alpha);
        princ[-m] ^= s;
        if (princ[-m] == 0) princ.erase(-m);
        r.witness[-m] ^= s;
    }
    for (auto itr = princ.rbegin(); itr != princ.rend(); ++itr)
        if (itr->second) r.principal.emplace_back(itr->first, itr->second);
    return r;
}

// Dense GF(2) solver; rows packed into 64-bit words, last column is the RHS.
struct Gf2Solve {
    size_t cols;
    std::vector<std::vector<std::uint64_t>> rows;

    explicit Gf2Solve(size_t cols_) : cols(cols_) {}

    void add_row(const std::vector<std::uint64_t>& bits) { rows.push_back(bits); }

    static bool get(const std::vector<std::uint64_t>& r, size_t i) {
        return (r[i / 64] >> (i % 64)) & 1;
    }
    static void set(std::vector<std::uint64_t>& r, size_t i) { r[i / 64] |= std::uint64_t(1) << (i % 64); }

    // Returns a solution with free variables zero, or nullopt if inconsistent.
    std::optional<std::vector<bool>> solve() {
        size_t nr = rows.size();
        std::vector<size_t> pivot_col;
        size_t rank = 0;
        for (size_t col = 0; col < cols && rank < nr; ++col) {
            size_t sel = nr;
            for (size_t i = rank; i < nr; ++i)
                if (get(rows[i], col)) { sel = i; break; }
            if (sel == nr) continue;
            std::swap(rows[rank], rows[sel]);
            for (size_t i = 0; i < nr; ++i) {
                if (i != rank && get(rows[i], col))
                    for (size_t w = 0; w < rows[i].size(); ++w) rows[i][w] ^= rows[rank][w];
            }
            pivot_col.push_back(col);
            ++rank;
        }
        for (size_t i = rank; i < nr; ++i)
            if (get(rows[i], cols)) return std::nullopt;
        std::vector<bool> x(cols, false);
        for (size_t i = 0; i < rank; ++i)
            if (get(rows[i], cols)) x[pivot_col[i]] = true;
        return x;
    }
};

} // namespace

std::optional<FieldElem> wp_preimage_rational_tail(const FieldElem& tail) {
    const Field& f = tail.field();
    const Gf2m& K = f->coeffs;
    if (tail.is_zero()) return FieldElem::zero(f);
    if (tail.valuation() < 1)
        throw std::invalid_argument("wp_preimage_rational_tail: valuation >= 1 required");
    // x = u/w with q = w^2; then u^2 + u*w + p = 0 over GF(2^k)[t].
    auto w_opt = poly_sqrt(K, tail.den());
    if (!w_opt) return std::nullopt;
    const Poly& p = tail.num();
    Poly w = *w_opt;
    int B = std::max(w.deg(), (p.deg() + 1) / 2);
    unsigned k = K.k();
    size_t nvars = size_t(B + 1) * k;
    int Emax = std::max({2 * B, B + w.deg(), p.deg()});
    size_t words = (nvars + 1 + 63) / 64;

    Gf2Solve sys(nvars);
    for (int e = 0; e <= Emax; ++e) {
        // k GF(2) equations: bits of (u^2)_e + (u*w)_e + p_e = 0.
        std::vector<std::vector<std::uint64_t>> eq(k, std::vector<std::uint64_t>(words, 0));
        auto add_linear = [&](int var_i, gfelem mult, bool squared) {
            // contribution of u_{var_i} (or its square) scaled by mult
            for (unsigned bit = 0; bit < k; ++bit) {
                gfelem basis = gfelem(1) << bit;
                gfelem img = squared ? K.sqr(basis) : basis;
                img = K.mul(img, mult);
                for (unsigned ob = 0; ob < k; ++ob)
                    if ((img >> ob) & 1)
                        Gf2Solve::set(eq[ob], size_t(var_i) * k + bit);
            }
        };
        if (e % 2 == 0 && e / 2 <= B) add_linear(e / 2, 1, true);
        for (int i = std::max(0, e - w.deg()); i <= std::min(B, e); ++i) {
            gfelem wc = w.at(e - i);
            if (wc) add_linear(i, wc, false);
        }
        gfelem pe = p.at(e);
        for (unsigned ob = 0; ob < k; ++ob) {
            if ((pe >> ob) & 1) Gf2Solve::set(eq[ob], nvars);
            sys.add_row(eq[ob]);
        }
    }
    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    Poly u;
    u.c.assign(size_t(B + 1), 0);
    for (int i = 0; i <= B; ++i)
        for (unsigned bit = 0; bit < k; ++bit)
            if ((*sol)[size_t(i) * k + bit]) u.c[size_t(i)] |= gfelem(1) << bit;
    u.trim();
    FieldElem x(f, std::move(u), std::move(w));
    if (x.frobenius() + x != tail)
        throw std::logic_error("wp_preimage_rational_tail: solver produced a non-solution");
    return x;
}

WpClass wp_class(const FieldElem& c) {
    const Field& f = c.field();
    const Gf2m& K = f->coeffs;
    Reduction r = reduce(c);
    if (f->kind == FieldKind::RatFunc && !r.tail.is_zero()) {
        if (!wp_preimage_rational_tail(r.tail))
            throw std::domain_error(
                "wp_class: class of a GF(2^k)(t) element not determined by local data at t=0 "
                "(global wp-classes are out of scope)");
    }
    WpClass w;
    w.principal = std::move(r.principal);
    w.const_bit = K.trace(r.c0);
    return w;
}

FieldElem WpSolution::as_rational(const Field& f) const {
    Poly num;
    num.c.assign(coeffs.begin(), coeffs.end());
    num.trim();
    if (start >= 0) {
        Poly shifted;
        shifted.c.assign(size_t(start), 0);
        shifted.c.insert(shifted.c.end(), num.c.begin(), num.c.end());
        shifted.trim();
        return FieldElem(f, std::move(shifted), Poly::one());
    }
    return FieldElem(f, std::move(num), Poly::monomial(1, unsigned(-start)));
}

std::optional<WpSolution> wp_solve(const FieldElem& c, int precision) {
    const Field& f = c.field();
    if (f->kind != FieldKind::Local)
        throw std::domain_error("wp_solve: defined over GF(2^k)((t)) only");
    if (precision < 1) throw std::invalid_argument("wp_solve: precision >= 1 required");
    const Gf2m& K = f->coeffs;
    Reduction r = reduce(c);
    if (!r.principal.empty()) return std::nullopt;
    gfelem y0;
    if (!K.wp_solve(r.c0, y0)) return std::nullopt;

    // wp(x) = tail with v(tail) >= 1: x = sum tail^(2^i), computed on
    // truncated coefficient vectors; stabilises once 2^i >= precision.
    std::vector<gfelem> series(size_t(precision), 0);
    if (!r.tail.is_zero()) {
        Expansion ex = valuation_expand(r.tail, precision);
        std::vector<gfelem> tser(size_t(precision), 0);
        for (size_t i = 0; i < ex.coeffs.size(); ++i) {
            int e = ex.valuation + int(i);
            if (e >= 0 && e < precision) tser[size_t(e)] = ex.coeffs[i];
        }
        series = tser;
        while (true) {
            std::vector<gfelem> next(size_t(precision), 0);
            for (int i = 0; 2 * i < precision; ++i)
                if (series[size_t(i)]) next[size_t(2 * i)] = K.sqr(series[size_t(i)]);
            for (int i = 0; i < precision; ++i) next[size_t(i)] ^= tser[size_t(i)];
            if (next == series) break;
            series = std::move(next);
        }
    }
    series[0] ^= y0;

    int start = 0;
    for (auto& [e, coef] : r.witness) start = std::min(start, e);
    WpSolution sol;
    sol.start = start;
    sol.precision = precision;
    sol.coeffs.assign(size_t(precision - start), 0);
    for (auto& [e, coef] : r.witness) sol.coeffs[size_t(e - start)] ^= coef;
    for (int i = 0; i < precision; ++i) sol.coeffs[size_t(i - start)] ^= series[size_t(i)];
    while (!sol.coeffs.empty() && sol.coeffs.back() == 0) sol.coeffs.pop_back();

    FieldElem xr = sol.as_rational(f);
    sol.exact = (xr.frobenius() + xr == c);
    return sol;
}

gfelem nontrivial_const_rep(const Gf2m& K) { return K.least_trace_one(); }

} // namespace c2f
