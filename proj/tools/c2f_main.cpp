#include <CLI11.hpp>

#include "c2f/acceptance.hpp"
#include "c2f/serialize.hpp"

#include <iostream>

using namespace c2f;

namespace {

struct CommonOpts {
    std::string field_spec = "local:1";
    std::string quat_spec;
    std::string invol_spec;
    int precision = 0; // 0: descriptor default
    int search_bound = 6;
    std::string format = "text";
    std::uint64_t seed = 20260810;
};

void attach_common(CLI::App* cmd, CommonOpts& o, bool needs_field = true) {
    if (needs_field)
        cmd->add_option("--field", o.field_spec, "field descriptor: local:k, ratfunc:k or gf:k");
    cmd->add_option("--quat", o.quat_spec, "quaternion algebra: a=<elem>,b=<elem>");
    cmd->add_option("--invol", o.invol_spec, "involution: u=<quaternion literal>");
    cmd->add_option("--precision", o.precision, "precision for wp-derived data");
    cmd->add_option("--search-bound", o.search_bound, "bounded-search budget");
    cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--seed", o.seed, "seed for sampled checks");
}

Field make_field(const CommonOpts& o) {
    auto colon = o.field_spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("--field expects kind:k (e.g. local:1)");
    std::string kind = o.field_spec.substr(0, colon);
    unsigned k = unsigned(std::stoul(o.field_spec.substr(colon + 1)));
    int prec = o.precision > 0 ? o.precision : 64;
    if (kind == "local") return make_local(k, Gf2m::default_modulus(k), prec);
    if (kind == "ratfunc") return make_ratfunc(k);
    if (kind == "gf") return make_finite(k);
    throw std::invalid_argument("--field kind must be local, ratfunc or gf");
}

std::optional<QAlg> make_algebra(const Field& f, const CommonOpts& o) {
    if (o.quat_spec.empty()) return std::nullopt;
    auto apos = o.quat_spec.find("a=");
    auto bpos = o.quat_spec.find(",b=");
    if (apos != 0 || bpos == std::string::npos)
        throw std::invalid_argument("--quat expects a=<elem>,b=<elem>");
    FieldElem a = parse_element(f, o.quat_spec.substr(2, bpos - 2));
    FieldElem b = parse_element(f, o.quat_spec.substr(bpos + 3));
    return make_quaternion_algebra(f, a, b);
}

QAlg default_algebra(const Field& f) {
    FieldElem a = FieldElem::scalar(f, f->coeffs.least_trace_one());
    return make_quaternion_algebra(f, a, FieldElem::t(f));
}

ParseContext make_context(const CommonOpts& o) {
    ParseContext ctx;
    ctx.field = make_field(o);
    ctx.algebra = make_algebra(ctx.field, o);
    if (!o.invol_spec.empty()) {
        if (!ctx.algebra) throw std::invalid_argument("--invol requires --quat");
        std::string spec = o.invol_spec;
        if (spec.rfind("u=", 0) == 0) spec = spec.substr(2);
        ctx.invol = make_involution(*ctx.algebra, parse_quaternion(*ctx.algebra, spec));
    }
    return ctx;
}

EngineOptions engine_opts(const CommonOpts& o) {
    EngineOptions e;
    e.search_bound = o.search_bound;
    if (o.precision > 0) e.precision = o.precision;
    return e;
}

void emit(const CommonOpts& o, const json& j, const std::string& text) {
    if (o.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

std::string verdict_text(const IsotropyVerdict& v) {
    std::ostringstream os;
    os << (v.status == IsoStatus::Isotropic    ? "isotropic"
           : v.status == IsoStatus::Anisotropic ? "anisotropic"
                                                : "undecided");
    os << "  [" << to_json(v.cert)["tag"].get<std::string>();
    if (!v.cert.theorem.empty()) os << ": " << v.cert.theorem;
    os << "]";
    if (v.witness) {
        os << "\n  witness:";
        if (v.witness->is_quat())
            for (auto& q : v.witness->qcoords) os << " " << to_text(q);
        else
            for (auto& x : v.witness->fcoords) os << " " << to_text(x);
        if (!v.witness->exact()) os << "  (mod t^" << v.witness->precision << ")";
    }
    return os.str();
}

int exit_code_for(const IsotropyVerdict& v) {
    return v.status == IsoStatus::Undecided ? 3 : 0;
}

std::string wpclass_text(const WpClass& w) {
    if (w.trivial()) return "trivial";
    std::ostringstream os;
    os << "principal[";
    bool first = true;
    for (auto& [e, c] : w.principal) {
        if (!first) os << ", ";
        first = false;
        os << "t^" << e << ":" << c;
    }
    os << "] bit=" << w.const_bit;
    return os.str();
}

int run_eval(const CommonOpts& o, const std::string& input) {
    ParseContext ctx = make_context(o);
    ParsedObject obj = parse_object(ctx, input);
    if (std::holds_alternative<FieldElem>(obj)) {
        const FieldElem& e = std::get<FieldElem>(obj);
        emit(o, json{{"schema", 1}, {"element", to_text(e)}, {"field", field_to_json(ctx.field)}},
             to_text(e));
        return 0;
    }
    if (std::holds_alternative<Quaternion>(obj)) {
        const Quaternion& q = std::get<Quaternion>(obj);
        emit(o,
             json{{"schema", 1},
                  {"quaternion", to_text(q)},
                  {"trd", to_text(trd(q))},
                  {"nrd", to_text(nrd(q))}},
             to_text(q) + "\n  Trd = " + to_text(trd(q)) + "\n  Nrd = " + to_text(nrd(q)));
        return 0;
    }
    ParsedForm form = std::visit(
        [](auto&& x) -> ParsedForm {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, FieldElem> || std::is_same_v<T, Quaternion>)
                throw std::logic_error("unreachable");
            else
                return x;
        },
        std::move(obj));
    emit(o, form_to_json(form), form_to_text(form));
    return 0;
}

int run_arf(const CommonOpts& o, const std::string& input) {
    ParseContext ctx = make_context(o);
    ParsedForm form = parse_form(ctx, input);
    ArfValue v;
    if (std::holds_alternative<QuadFormQ>(form))
        v = arf_of(std::get<QuadFormQ>(form));
    else if (std::holds_alternative<QuadFormF>(form))
        v = arf_F(std::get<QuadFormF>(form));
    else
        throw std::invalid_argument("arf: expected a quadratic form (quad/gram/fquad)");
    emit(o, json{{"schema", 1}, {"arf", to_json(v)}},
         "Arf = " + wpclass_text(v.cls) + (v.cls.trivial() ? "" : " (nontrivial)"));
    return 0;
}

int run_isotropy(const CommonOpts& o, const std::string& input) {
    ParseContext ctx = make_context(o);
    ParsedForm form = parse_form(ctx, input);
    EngineOptions eng = engine_opts(o);
    IsotropyVerdict v;
    if (std::holds_alternative<QuadFormQ>(form))
        v = iso_quad_q(std::get<QuadFormQ>(form), eng);
    else if (std::holds_alternative<QuadFormF>(form))
        v = iso_F(std::get<QuadFormF>(form), eng);
    else
        v = iso_hermitian(std::get<HermForm>(form), eng);
    emit(o, verdict_to_json(v), verdict_text(v));
    return exit_code_for(v);
}

int run_diagonalize(const CommonOpts& o, const std::string& input) {
    ParseContext ctx = make_context(o);
    ParsedForm form = parse_form(ctx, input);
    if (!std::holds_alternative<QuadFormQ>(form))
        throw std::invalid_argument("diagonalize: expected a quad/gram form over (Q,theta)");
    QuadFormQ d = diagonalize_gram(std::get<QuadFormQ>(form));
    auto [n, m] = d.type();
    emit(o,
         json{{"schema", 1}, {"form", form_to_json(ParsedForm(d))}, {"type", json::array({n, m})}},
         to_text(d) + "\n  type (" + std::to_string(n) + "," + std::to_string(m) + ")");
    return 0;
}

int run_division(const CommonOpts& o) {
    Field f = make_field(o);
    auto alg = make_algebra(f, o);
    QAlg A = alg ? *alg : default_algebra(f);
    DivisionCheck dc = is_division(A, o.search_bound);
    json j{{"schema", 1},
           {"a", to_text(A->a)},
           {"b", to_text(A->b)},
           {"status", dc.status == DivisionStatus::Division ? "division"
                      : dc.status == DivisionStatus::Split  ? "split"
                                                            : "undecided"}};
    std::ostringstream text;
    text << (dc.status == DivisionStatus::Division ? "division"
             : dc.status == DivisionStatus::Split  ? "split"
                                                   : "undecided");
    if (dc.symbol) {
        j["certificate"] = {{"tag", "SymbolRule"}, {"bit", *dc.symbol}};
        text << "  [SymbolRule: residue symbol = " << *dc.symbol << "]";
    } else if (dc.status == DivisionStatus::Split) {
        j["certificate"] = {{"tag", "SearchWitness"}, {"bound", dc.search_bound}};
        text << "  [SearchWitness]";
    } else if (dc.status == DivisionStatus::Undecided) {
        j["certificate"] = {{"tag", "SearchExhausted"}, {"bound", dc.search_bound}};
        text << "  [SearchExhausted: bound " << dc.search_bound << "]";
    }
    if (dc.norm_zero) {
        json w = json::array();
        std::ostringstream wt;
        for (auto& x : *dc.norm_zero) {
            w.push_back(to_text(x));
            wt << " " << to_text(x);
        }
        j["norm_zero"] = w;
        text << "\n  norm-form zero:" << wt.str();
    }
    emit(o, j, text.str());
    return dc.status == DivisionStatus::Undecided ? 3 : 0;
}

int run_symbol(const CommonOpts& o) {
    Field f = make_field(o);
    auto alg = make_algebra(f, o);
    QAlg A = alg ? *alg : default_algebra(f);
    int s = hilbert_symbol(A->a, A->b);
    emit(o, json{{"schema", 1}, {"a", to_text(A->a)}, {"b", to_text(A->b)}, {"symbol", s}},
         "(" + to_text(A->a) + ", " + to_text(A->b) + "] = " + std::to_string(s));
    return 0;
}

int run_utable(const CommonOpts& o, int samples) {
    Field f = make_field(o);
    auto alg = make_algebra(f, o);
    QAlg A = alg ? *alg : default_algebra(f);
    EngineOptions eng = engine_opts(o);
    UTable t = u_table(f, A, eng);
    json j = utable_to_json(t);
    j["identities_hold"] = u_table_identities_hold(t);
    std::ostringstream text;
    for (auto& e : t.entries) {
        text << e.display << " = " << e.value;
        if (!e.witness_text.empty())
            text << "   witness " << e.witness_text << (e.witness_verified ? " (verified)" : " (UNVERIFIED)");
        text << "\n";
    }
    if (samples > 0) {
        json sj = json::object();
        for (auto& e : t.entries) {
            int iso = u_table_sample_higher(f, A, e.key, samples, o.seed, eng);
            sj[e.key] = {{"isotropic", iso}, {"total", samples}};
            text << e.display << ": " << iso << "/" << samples
                 << " forms one dimension higher isotropic\n";
        }
        j["higher_dimension_samples"] = sj;
    }
    text << "identities: " << (u_table_identities_hold(t) ? "hold" : "VIOLATED");
    emit(o, j, text.str());
    return 0;
}

int run_verify_paper(const CommonOpts& o, int samples, int fuzz_seconds) {
    AcceptanceOptions a;
    a.seed = o.seed;
    a.samples = samples;
    a.fuzz_seconds = fuzz_seconds;
    auto colon = o.field_spec.find(':');
    if (colon != std::string::npos && o.field_spec.substr(0, colon) == "local")
        a.k = unsigned(std::stoul(o.field_spec.substr(colon + 1)));
    auto results = run_acceptance(a);
    bool all = true;
    json arr = json::array();
    for (auto& r : results) {
        all = all && r.pass;
        std::ostringstream line;
        line << (r.pass ? "PASS" : "FAIL") << "  " << r.index << ". " << r.name << "  ("
             << r.seconds << "s)  " << r.details;
        if (o.format != "json") std::cout << line.str() << "\n";
        arr.push_back(json{{"index", r.index},
                           {"name", r.name},
                           {"pass", r.pass},
                           {"seconds", r.seconds},
                           {"details", r.details}});
    }
    if (o.format == "json")
        std::cout << json{{"schema", 1}, {"criteria", arr}, {"all_pass", all}}.dump(2) << "\n";
    else
        std::cout << (all ? "all criteria passed" : "SOME CRITERIA FAILED") << "\n";
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact hermitian/quadratic form theory over characteristic-2 fields "
                 "and quaternion algebras"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string input;
    int samples = 0;
    int fuzz_seconds = -1;

    CLI::App* eval = app.add_subcommand("eval", "parse and canonicalise an element/quaternion/form");
    attach_common(eval, o);
    eval->add_option("input", input, "expression")->required();

    CLI::App* arf = app.add_subcommand("arf", "Arf invariant of a nonsingular quadratic form");
    attach_common(arf, o);
    arf->add_option("input", input, "quad[...]/gram[...]/fquad[...] literal")->required();

    CLI::App* iso = app.add_subcommand("isotropy", "decide isotropy with a certificate");
    attach_common(iso, o);
    iso->add_option("input", input, "form literal")->required();

    CLI::App* diag = app.add_subcommand("diagonalize", "diagonalise a Gram form");
    attach_common(diag, o);
    diag->add_option("input", input, "gram[...] literal")->required();

    CLI::App* div = app.add_subcommand("division", "decide whether [a,b) is division");
    attach_common(div, o);

    CLI::App* sym = app.add_subcommand("symbol", "char-2 residue symbol of (a, b]");
    attach_common(sym, o);

    CLI::App* ut = app.add_subcommand("utable", "u-invariant table for the field and algebra");
    attach_common(ut, o);
    ut->add_option("--samples", samples, "verify N random forms one dimension higher per row");

    CLI::App* vp = app.add_subcommand("verify-paper", "run the acceptance suite");
    attach_common(vp, o);
    vp->add_option("--samples", samples, "higher-dimension samples per table row")->default_val(50);
    vp->add_option("--fuzz-seconds", fuzz_seconds, "fuzz duration (criterion 10)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) return run_eval(o, input);
        if (arf->parsed()) return run_arf(o, input);
        if (iso->parsed()) return run_isotropy(o, input);
        if (diag->parsed()) return run_diagonalize(o, input);
        if (div->parsed()) return run_division(o);
        if (sym->parsed()) return run_symbol(o);
        if (ut->parsed()) return run_utable(o, samples);
        if (vp->parsed()) return run_verify_paper(o, samples == 0 ? 50 : samples, fuzz_seconds);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
