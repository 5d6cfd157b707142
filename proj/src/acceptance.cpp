#include "c2f/acceptance.hpp"
#include "c2f/random_forms.hpp"
#include "c2f/serialize.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>

namespace c2f {

namespace {

using Clock = std::chrono::steady_clock;

double secs_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

QAlg default_division_algebra(const Field& f) {
    FieldElem a = FieldElem::scalar(f, f->coeffs.least_trace_one());
    return make_quaternion_algebra(f, a, FieldElem::t(f));
}

struct Runner {
    AcceptanceOptions opts;
    Field f;
    QAlg A;
    QuatBase base;
    EngineOptions eng;
    std::vector<CriterionResult> out;

    void add(int idx, const std::string& name, bool pass, const std::string& details, double secs) {
        out.push_back(CriterionResult{idx, name, pass, details, secs});
    }

    // 1. u-invariant table with verified witnesses and higher-dimension samples.
    void criterion1() {
        auto t0 = Clock::now();
        bool pass = true;
        std::ostringstream d;
        UTable t = u_table(f, A, eng);
        const std::vector<std::pair<std::string, int>> expected = {
            {"u_plus_F", 2},  {"u_d_plus_F", 2}, {"u_minus_F", 0}, {"u_tilde_F", 4},
            {"u_minus_Q", 1}, {"u_d_plus_Q", 1}, {"u_plus_Q", 2},  {"u_tilde_Q", 3},
            {"u_Q", 3},
        };
        for (auto& [key, val] : expected) {
            int got = t.value_of(key);
            if (got != val) {
                pass = false;
                d << key << ": expected " << val << ", got " << got << "; ";
            }
        }
        for (auto& e : t.entries) {
            if (e.value > 0 && !e.witness_verified) {
                pass = false;
                d << e.key << ": witness not verified anisotropic; ";
            }
        }
        for (auto& [key, val] : expected) {
            int iso = u_table_sample_higher(f, A, key, opts.samples, opts.seed + 1, eng);
            if (iso != opts.samples) {
                pass = false;
                d << key << ": only " << iso << "/" << opts.samples
                  << " higher-dimensional samples isotropic; ";
            }
        }
        double secs = secs_since(t0);
        if (secs >= 60.0) {
            pass = false;
            d << "runtime " << secs << "s >= 60s; ";
        }
        if (pass) d << "table exact, witnesses verified, " << opts.samples << " samples/row isotropic";
        add(1, "u-invariant table over GF(2^k)((t))", pass, d.str(), secs);
    }

    // 2. The explicit trivial-Arf anisotropic 3-dimensional form.
    void criterion2() {
        auto t0 = Clock::now();
        bool pass = true;
        std::ostringstream d;
        Quaternion qi = Quaternion::basis(A, 1), qj = Quaternion::basis(A, 2),
                   qk = Quaternion::basis(A, 3);
        FieldElem ab = A->a / A->b;
        QuadFormQ rho = QuadFormQ::diagonal(base, {qi + qk, qi + qj * ab, qi + qj * ab + qk});
        ArfValue arf = arf_diagonal(rho);
        if (!arf.cls.trivial()) {
            pass = false;
            d << "Arf not trivial; ";
        }
        IsotropyVerdict v = iso_Q_nonsingular(rho, eng);
        if (v.status != IsoStatus::Anisotropic) {
            pass = false;
            d << "verdict not anisotropic; ";
        }
        if (v.cert.tag != Certificate::Tag::ArfRule) {
            pass = false;
            d << "certificate not Arf-backed; ";
        }
        if (search_zero_quad_q(rho, 4)) {
            pass = false;
            d << "search found a witness against anisotropy; ";
        }
        double secs = secs_since(t0);
        if (secs >= 10.0) {
            pass = false;
            d << "runtime " << secs << "s >= 10s; ";
        }
        if (pass) d << "trivial Arf, anisotropic via the 3-dim trivial-Arf rule, no witness at bound 4";
        add(2, "trivial-Arf 3-dimensional anisotropic form", pass, d.str(), secs);
    }

    // 3. Division/symbol vs search consistency on the shipped corpus.
    void criterion3() {
        auto t0 = Clock::now();
        bool pass = true;
        std::ostringstream d;
        SymbolCorpus corpus = make_symbol_corpus(f, 200, opts.seed + 3, 6);
        int splits = 0, divisions = 0;
        for (auto& e : corpus.pairs) {
            QAlg Q = make_quaternion_algebra(f, e.a, e.b);
            QuadFormF nf = norm_form(Q);
            auto w = search_zero_f(nf, 6);
            if (e.symbol == 0) {
                ++splits;
                if (!w) {
                    pass = false;
                    d << "split pair without a zero at bound 6: a=" << to_text(e.a)
                      << " b=" << to_text(e.b) << "; ";
                } else {
                    Witness wit;
                    wit.fcoords = *w;
                    if (!verify_witness(nf, wit)) {
                        pass = false;
                        d << "search witness fails exact verification; ";
                    }
                }
            } else {
                ++divisions;
                if (w) {
                    pass = false;
                    d << "division pair with a norm-form zero: a=" << to_text(e.a)
                      << " b=" << to_text(e.b) << "; ";
                }
            }
        }
        if (pass)
            d << splits << " split pairs all witnessed, " << divisions
              << " division pairs witness-free (corpus rejected "
              << corpus.rejected_unconfirmed_splits << " unconfirmed splits)";
        add(3, "division/symbol vs search-oracle consistency", pass, d.str(), secs_since(t0));
    }

    // 4. Arf properties on seeded random diagonal nonsingular forms.
    void criterion4() {
        auto t0 = Clock::now();
        bool pass = true;
        std::ostringstream d;
        FormGen gen(f, opts.seed + 4);
        int count = 500;
        for (int s = 0; s < count && pass; ++s) {
            size_t dim = 1 + gen.rng()() % 3;
            QuadFormQ rho = gen.nonsingular_diagonal(A, dim);
            ArfValue arf = arf_diagonal(rho);
            FieldElem lambda = gen.nonzero_elem();
            if (arf_diagonal(quad_scale(rho, lambda)) != arf) {
                pass = false;
                d << "scaling invariance failed at sample " << s << "; ";
                break;
            }
            QuadFormQ rho2 = gen.nonsingular_diagonal(A, 1 + gen.rng()() % 2);
            ArfValue arf2 = arf_diagonal(rho2);
            ArfValue sum = arf_diagonal(quad_sum(rho, rho2));
            if (sum.cls != arf.cls + arf2.cls) {
                pass = false;
                d << "orthogonal-sum additivity failed at sample " << s << "; ";
                break;
            }
            if (arf_gram(rho) != arf) {
                pass = false;
                d << "gram/diagonal disagreement at sample " << s << "; ";
                break;
            }
            QuadFormQ lifted = gen.gram_lift(rho);
            QuadFormQ rediag = diagonalize_gram(lifted);
            if (arf_diagonal(rediag) != arf || rediag.dim() != rho.dim() ||
                rediag.type() != rho.type()) {
                pass = false;
                d << "diagonalize_gram did not preserve Arf/dim/type at sample " << s << "; ";
                break;
            }
        }
        double secs = secs_since(t0);
        if (secs >= 120.0) {
            pass = false;
            d << "runtime " << secs << "s >= 120s; ";
        }
        if (pass) d << count << " samples: scaling, additivity, gram=diagonal, diagonalisation all exact";
        add(4, "Arf invariant properties", pass, d.str(), secs);
    }

    // 5. Every 1-dimensional nonsingular form has nontrivial Arf.
    void criterion5() {
        auto t0 = Clock::now();
        bool pass = true;
        std::ostringstream d;
        FormGen gen(f, opts.seed + 5);
        for (int s = 0; s < 200; ++s) {
            QuadFormQ rho = gen.nonsingular_diagonal(A, 1);
            if (arf_diagonal(rho).cls.trivial()) {
                pass = false;
                d << "trivial Arf at sample " << s << ": " << to_text(rho) << "; ";
                break;
            }
        }
        if (pass) d << "200 one-dimensional nonsingular forms, all nontrivial";
        add(5, "one-dimensional forms have nontrivial Arf", pass, d.str(), secs_since(t0));
    }

    // 6. Forms with anisotropic polar form never represent symmetric elements.
    void criterion6() {
        auto t0 = Clock::now();
        bool pass = true;
        std::ostringstream d;
        FormGen gen(f, opts.seed + 6);
        int violations = 0;
        for (int s = 0; s < 50; ++s) {
            QuadFormQ rho = gen.nonsingular_diagonal(A, 1);
            HermForm polar = polar_form(rho);
            if (iso_hermitian(polar, eng).status != IsoStatus::Anisotropic) {
                pass = false;
                d << "polar form unexpectedly not anisotropic at sample " << s << "; ";
                break;
            }
            for (int e = 0; e < 1000; ++e) {
                std::array<Quaternion, 1> x{gen.nonzero_quat(A)};
                Quaternion val = rho.value_at(x);
                if (trd(val).is_zero()) ++violations;
            }
        }
        if (violations != 0) {
            pass = false;
            d << violations << " symmetric values represented; ";
        }
        if (pass) d << "50 forms x 1000 evaluations, zero symmetric values";
        add(6, "anisotropic polar forms represent no symmetric elements", pass, d.str(),
            secs_since(t0));
    }

    // 7. Directness and the u+(Q) = 2 ceiling on explicit hermitian forms.
    void criterion7() {
        auto t0 = Clock::now();
        bool pass = true;
        std::ostringstream d;
        Quaternion qj = Quaternion::basis(A, 2);
        HermForm hj = HermForm::over_quat(base, {qj});
        if (!directness(hj, eng).direct) {
            pass = false;
            d << "<j>^h not direct; ";
        }
        HermForm h1j = HermForm::over_quat(base, {Quaternion::one(A), qj});
        if (iso_hermitian(h1j, eng).status != IsoStatus::Anisotropic) {
            pass = false;
            d << "<1,j>^h not anisotropic; ";
        }
        HermForm h11j = HermForm::over_quat(base, {Quaternion::one(A), Quaternion::one(A), qj});
        IsotropyVerdict v = iso_hermitian(h11j, eng);
        if (v.status != IsoStatus::Isotropic) {
            pass = false;
            d << "<1,1,j>^h not isotropic; ";
        }
        if (pass) d << "<j>^h direct, <1,j>^h anisotropic, <1,1,j>^h isotropic";
        add(7, "directness and the hermitian u-invariant ceiling", pass, d.str(), secs_since(t0));
    }

    // 8. Trace-form identity.
    void criterion8() {
        auto t0 = Clock::now();
        bool pass = true;
        std::ostringstream d;
        HermForm h1 = HermForm::over_quat(base, {Quaternion::one(A)});
        if (!(trace_form_F(h1) == norm_form(A))) {
            pass = false;
            d << "trace_form_F(<1>^h) != norm form blockwise; ";
        }
        FormGen gen(f, opts.seed + 8);
        for (int s = 0; s < 200 && pass; ++s) {
            FieldElem c = gen.nonzero_elem();
            HermForm hc = HermForm::over_quat(base, {Quaternion::scalar(A, c)});
            QuadFormF tf = trace_form_F(hc);
            Quaternion x = gen.quat(A, 2);
            FieldElem expect = c * nrd(x);
            FieldElem got = tf.value_at(trace_form_coords(x, c));
            if (expect != got) {
                pass = false;
                d << "pointwise mismatch at sample " << s << "; ";
            }
        }
        if (pass) d << "blockwise equality and 200 exact pointwise agreements";
        add(8, "trace form equals the scaled norm form", pass, d.str(), secs_since(t0));
    }

    // 9. Structural identities on every emitted table.
    void criterion9() {
        auto t0 = Clock::now();
        bool pass = true;
        std::ostringstream d;
        UTable t1 = u_table(f, A, eng);
        if (!u_table_identities_hold(t1)) {
            pass = false;
            d << "identities fail over k=" << f->k() << "; ";
        }
        Field f2 = make_local(2);
        QAlg A2 = default_division_algebra(f2);
        UTable t2 = u_table(f2, A2, eng);
        if (!u_table_identities_hold(t2)) {
            pass = false;
            d << "identities fail over k=2; ";
        }
        for (auto& [key, val] : {std::pair<std::string, int>{"u_plus_Q", 2},
                                 {"u_tilde_Q", 3},
                                 {"u_Q", 3},
                                 {"u_tilde_F", 4}}) {
            if (t2.value_of(key) != val) {
                pass = false;
                d << "k=2 table " << key << " != " << val << "; ";
            }
        }
        if (pass) d << "u+ = u_d+ + u-, u <= u+ + u_d+ hold for both rows over k=1 and k=2";
        add(9, "u-table structural identities", pass, d.str(), secs_since(t0));
    }

    // 10. Engine/oracle non-contradiction fuzz.
    void criterion10() {
        auto t0 = Clock::now();
        int seconds = opts.fuzz_seconds;
        if (seconds < 0) {
            const char* env = std::getenv("C2F_FUZZ_SECONDS");
            seconds = env ? std::atoi(env) : 600;
        }
        bool pass = true;
        std::ostringstream d;
        FormGen gen(f, opts.seed + 10);
        long instances = 0, verify_failures = 0, contradictions = 0, undecided = 0;
        while (secs_since(t0) < double(seconds)) {
            ++instances;
            int pick = int(gen.rng()() % 4);
            auto handle = [&](IsotropyVerdict v, auto&& form) {
                if (v.status == IsoStatus::Isotropic && v.witness && v.witness->exact()) {
                    if (!verify_witness(form, *v.witness)) ++verify_failures;
                } else if (v.status == IsoStatus::Anisotropic) {
                    if constexpr (std::is_same_v<std::decay_t<decltype(form)>, QuadFormF>) {
                        if (search_zero_f(form, 3)) ++contradictions;
                    } else if constexpr (std::is_same_v<std::decay_t<decltype(form)>, QuadFormQ>) {
                        if (search_zero_quad_q(form, 3)) ++contradictions;
                    } else {
                        if (form.is_bilinear()) {
                            if (search_zero_bilinear(form, 3)) ++contradictions;
                        } else if (search_zero_herm(form, 3))
                            ++contradictions;
                    }
                } else if (v.status == IsoStatus::Undecided)
                    ++undecided;
            };
            if (pick == 0) {
                size_t nb = gen.rng()() % 3, nd = gen.rng()() % 3;
                if (nb + nd == 0) nb = 1;
                QuadFormF rho = gen.f_blocks(nb, 3);
                rho.diag = gen.f_diag(nd, 3);
                if (rho.dim() > 5) continue;
                handle(iso_F(rho, eng), rho);
            } else if (pick == 1) {
                size_t dim = 1 + gen.rng()() % 4;
                size_t ns = gen.rng()() % (dim + 1);
                std::vector<Quaternion> ents;
                for (size_t i = 0; i < dim; ++i)
                    ents.push_back(i < ns ? gen.nonsingular_entry(A) : gen.sym_not_alt_entry(A));
                QuadFormQ rho = QuadFormQ::diagonal(base, std::move(ents));
                handle(iso_quad_q(rho, eng), rho);
            } else if (pick == 2) {
                size_t dim = 1 + gen.rng()() % 3;
                QuadFormQ diag = (gen.rng()() & 1) ? gen.nonsingular_diagonal(A, dim)
                                                   : gen.totally_singular_diagonal(A, dim);
                QuadFormQ rho = gen.gram_lift(diag);
                handle(iso_quad_q(rho, eng), rho);
            } else {
                size_t dim = 1 + gen.rng()() % 3;
                std::vector<Quaternion> ents;
                for (size_t i = 0; i < dim; ++i) {
                    if (gen.rng()() & 1)
                        ents.push_back(Quaternion::scalar(A, gen.nonzero_elem()));
                    else
                        ents.push_back(gen.sym_not_alt_entry(A));
                }
                HermForm phi = HermForm::over_quat(base, std::move(ents));
                handle(iso_hermitian(phi, eng), phi);
            }
        }
        if (verify_failures || contradictions) pass = false;
        d << instances << " instances in " << seconds << "s: " << verify_failures
          << " verification failures, " << contradictions << " search-vs-anisotropy contradictions, "
          << undecided << " undecided";
        add(10, "engine/oracle non-contradiction fuzz", pass, d.str(), secs_since(t0));
    }
};

} // namespace

SymbolCorpus make_symbol_corpus(const Field& f, size_t count, std::uint64_t seed, int bound) {
    SymbolCorpus corpus;
    FormGen gen(f, seed);
    while (corpus.pairs.size() < count) {
        FieldElem a = gen.elem(4, 4);
        FieldElem b = gen.nonzero_elem(4, 4);
        int s = hilbert_symbol(a, b);
        if (s == 0) {
            QAlg Q = make_quaternion_algebra(f, a, b);
            if (!search_zero_f(norm_form(Q), bound)) {
                ++corpus.rejected_unconfirmed_splits;
                continue;
            }
        }
        corpus.pairs.push_back(SymbolCorpusEntry{std::move(a), std::move(b), s});
    }
    return corpus;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
    Field f = make_local(opts.k);
    Runner r;
    r.opts = opts;
    r.f = f;
    r.A = default_division_algebra(f);
    r.base = canonical_base(r.A);
    r.criterion1();
    r.criterion2();
    r.criterion3();
    r.criterion4();
    r.criterion5();
    r.criterion6();
    r.criterion7();
    r.criterion8();
    r.criterion9();
    r.criterion10();
    return r.out;
}

} // namespace c2f
