#include "c2f/serialize.hpp"

#include <sstream>

namespace c2f {

namespace {

std::string coeff_text(const Gf2m& K, gfelem c) {
    if (K.k() == 1) return c ? "1" : "0";
    std::string bits;
    bool started = false;
    for (int b = int(K.k()) - 1; b >= 0; --b) {
        bool on = (c >> b) & 1;
        if (on) started = true;
        if (started) bits += on ? '1' : '0';
    }
    if (bits.empty()) bits = "0";
    return "0b" + bits;
}

std::string poly_text(const Gf2m& K, const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        bool unit = (p.c[i] == 1);
        if (i == 0) {
            os << coeff_text(K, p.c[i]);
        } else {
            if (!unit) os << coeff_text(K, p.c[i]) << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

bool is_monomial(const Poly& p) {
    size_t nz = 0;
    for (auto c : p.c)
        if (c) ++nz;
    return nz == 1;
}

} // namespace

std::string to_text(const FieldElem& x) {
    const Gf2m& K = x.field()->coeffs;
    std::string num = poly_text(K, x.num());
    if (x.den() == Poly::one()) return num;
    std::string den = poly_text(K, x.den());
    std::string lhs = is_monomial(x.num()) ? num : "(" + num + ")";
    std::string rhs = is_monomial(x.den()) && x.den().deg() <= 1 ? den : "(" + den + ")";
    return lhs + "/" + rhs;
}

std::string to_text(const Quaternion& x) {
    std::ostringstream os;
    os << "q{" << to_text(x[0]) << "; " << to_text(x[1]) << "; " << to_text(x[2]) << "; "
       << to_text(x[3]) << "}";
    return os.str();
}

std::string to_text(const HermForm& phi) {
    std::ostringstream os;
    os << "herm[";
    bool first = true;
    if (phi.is_bilinear()) {
        for (auto& e : phi.f_entries()) {
            if (!first) os << "; ";
            first = false;
            os << to_text(e);
        }
    } else {
        for (auto& e : phi.q_entries()) {
            if (!first) os << "; ";
            first = false;
            os << to_text(e);
        }
    }
    os << "]";
    return os.str();
}

std::string to_text(const QuadFormQ& rho) {
    std::ostringstream os;
    if (rho.is_diagonal()) {
        os << "quad[";
        bool first = true;
        for (auto& e : rho.diag()) {
            if (!first) os << "; ";
            first = false;
            os << to_text(e);
        }
        os << "]";
        return os.str();
    }
    os << "gram[[";
    for (size_t i = 0; i < rho.dim(); ++i) {
        if (i) os << "; ";
        for (size_t j = 0; j < rho.dim(); ++j) {
            if (j) os << ", ";
            os << to_text(rho.gram_at(i, j));
        }
    }
    os << "]]";
    return os.str();
}

std::string to_text(const QuadFormF& rho) {
    std::ostringstream os;
    os << "fquad[";
    bool first = true;
    for (auto& [b, c] : rho.blocks) {
        if (!first) os << ";";
        first = false;
        os << "[" << to_text(b) << ", " << to_text(c) << "]";
    }
    if (!rho.diag.empty()) {
        os << " | ";
        first = true;
        for (auto& d : rho.diag) {
            if (!first) os << "; ";
            first = false;
            os << to_text(d);
        }
    }
    os << "]";
    return os.str();
}

std::string form_to_text(const ParsedForm& f) {
    return std::visit([](auto&& x) { return to_text(x); }, f);
}

json field_to_json(const Field& f) {
    const char* kind = f->kind == FieldKind::Finite    ? "gf"
                       : f->kind == FieldKind::RatFunc ? "ratfunc"
                                                       : "local";
    json j{{"kind", kind}, {"k", f->k()}, {"modulus", f->coeffs.modulus()}};
    if (f->kind == FieldKind::Local) j["default_precision"] = f->default_precision;
    return j;
}

Field field_from_json(const json& j) {
    std::string kind = j.at("kind");
    unsigned k = j.at("k");
    std::uint64_t modulus = j.at("modulus");
    if (kind == "gf") return make_finite(k, modulus);
    if (kind == "ratfunc") return make_ratfunc(k, modulus);
    if (kind == "local")
        return make_local(k, modulus, j.value("default_precision", 64));
    throw std::invalid_argument("field_from_json: unknown kind " + kind);
}

json to_json(const WpClass& w) {
    json principal = json::array();
    for (auto& [e, c] : w.principal) principal.push_back(json::array({e, c}));
    return json{{"principal", principal}, {"bit", w.const_bit}};
}

json to_json(const ArfValue& v) {
    json j = to_json(v.cls);
    j["source_dim"] = v.source_dim;
    if (v.transport) j["transport_unit"] = to_text(*v.transport);
    return j;
}

json to_json(const Certificate& c) {
    const char* tag = nullptr;
    switch (c.tag) {
        case Certificate::Tag::DimBound: tag = "DimBound"; break;
        case Certificate::Tag::ArfRule: tag = "ArfRule"; break;
        case Certificate::Tag::SymbolRule: tag = "SymbolRule"; break;
        case Certificate::Tag::F2Rank: tag = "F2Rank"; break;
        case Certificate::Tag::NormFormRule: tag = "NormFormRule"; break;
        case Certificate::Tag::DirectSum: tag = "DirectSum"; break;
        case Certificate::Tag::SearchWitness: tag = "SearchWitness"; break;
        case Certificate::Tag::SearchExhausted: tag = "SearchExhausted"; break;
    }
    json j{{"tag", tag}};
    if (!c.theorem.empty()) j["theorem"] = c.theorem;
    if (!c.note.empty()) j["note"] = c.note;
    if (c.arf) j["arf"] = to_json(*c.arf);
    if (c.bit) j["bit"] = *c.bit;
    if (!c.kernel.empty()) {
        json k = json::array();
        for (auto& x : c.kernel) k.push_back(to_text(x));
        j["kernel"] = k;
    }
    if (c.tag == Certificate::Tag::SearchExhausted || c.tag == Certificate::Tag::SearchWitness)
        j["bound"] = c.bound;
    if (!c.parts.empty()) {
        json parts = json::array();
        for (auto& p : c.parts) parts.push_back(to_json(p));
        j["parts"] = parts;
    }
    return j;
}

json verdict_to_json(const IsotropyVerdict& v) {
    const char* status = v.status == IsoStatus::Isotropic    ? "isotropic"
                         : v.status == IsoStatus::Anisotropic ? "anisotropic"
                                                              : "undecided";
    json j{{"schema", 1}, {"status", status}, {"certificate", to_json(v.cert)}};
    j["theorem"] = v.cert.theorem;
    if (v.witness) {
        json w = json::array();
        if (v.witness->is_quat())
            for (auto& q : v.witness->qcoords) w.push_back(to_text(q));
        else
            for (auto& x : v.witness->fcoords) w.push_back(to_text(x));
        j["witness"] = w;
        if (!v.witness->exact()) j["witness_precision"] = v.witness->precision;
    }
    return j;
}

json utable_to_json(const UTable& t) {
    json entries = json::array();
    for (auto& e : t.entries) {
        json je{{"key", e.key},
                {"display", e.display},
                {"value", e.value},
                {"witness_verified", e.witness_verified}};
        if (!e.witness_text.empty()) je["witness"] = e.witness_text;
        entries.push_back(je);
    }
    return json{{"schema", 1},
                {"field", field_to_json(t.field)},
                {"algebra", {{"a", to_text(t.algebra->a)}, {"b", to_text(t.algebra->b)}}},
                {"entries", entries}};
}

namespace {

json quat_base_json(const QuatBase& b) {
    return json{{"a", to_text(b.alg->a)},
                {"b", to_text(b.alg->b)},
                {"involution_u", to_text(b.invol.u)}};
}

QuatBase quat_base_from_json(const Field& f, const json& j) {
    FieldElem a = parse_element(f, j.at("a").get<std::string>());
    FieldElem b = parse_element(f, j.at("b").get<std::string>());
    QAlg A = make_quaternion_algebra(f, a, b);
    Quaternion u = parse_quaternion(A, j.at("involution_u").get<std::string>());
    return QuatBase{A, make_involution(A, u)};
}

} // namespace

json form_to_json(const ParsedForm& f) {
    json j{{"schema", 1}};
    if (std::holds_alternative<HermForm>(f)) {
        const HermForm& h = std::get<HermForm>(f);
        j["field"] = field_to_json(h.field());
        json ents = json::array();
        if (h.is_bilinear()) {
            j["kind"] = "bilinear";
            for (auto& e : h.f_entries()) ents.push_back(to_text(e));
        } else {
            j["kind"] = "herm";
            j["base"] = quat_base_json(h.base());
            for (auto& e : h.q_entries()) ents.push_back(to_text(e));
        }
        j["entries"] = ents;
        return j;
    }
    if (std::holds_alternative<QuadFormQ>(f)) {
        const QuadFormQ& q = std::get<QuadFormQ>(f);
        j["field"] = field_to_json(q.base().alg->field);
        j["base"] = quat_base_json(q.base());
        json ents = json::array();
        if (q.is_diagonal()) {
            j["kind"] = "quad";
            for (auto& e : q.diag()) ents.push_back(to_text(e));
            auto [n, m] = q.type();
            j["type"] = json::array({n, m});
        } else {
            j["kind"] = "gram";
            j["n"] = q.dim();
            for (auto& e : q.gram_entries()) ents.push_back(to_text(e));
        }
        j["entries"] = ents;
        return j;
    }
    const QuadFormF& q = std::get<QuadFormF>(f);
    j["kind"] = "fquad";
    j["field"] = field_to_json(q.field);
    json blocks = json::array();
    for (auto& [b, c] : q.blocks) blocks.push_back(json::array({to_text(b), to_text(c)}));
    j["blocks"] = blocks;
    json diag = json::array();
    for (auto& d : q.diag) diag.push_back(to_text(d));
    j["diag"] = diag;
    return j;
}

ParsedForm form_from_json(const json& j) {
    if (j.value("schema", 0) != 1) throw std::invalid_argument("form_from_json: unknown schema");
    Field f = field_from_json(j.at("field"));
    std::string kind = j.at("kind");
    if (kind == "bilinear") {
        std::vector<FieldElem> ents;
        for (auto& s : j.at("entries")) ents.push_back(parse_element(f, s.get<std::string>()));
        return HermForm::bilinear(f, std::move(ents), true);
    }
    if (kind == "herm") {
        QuatBase base = quat_base_from_json(f, j.at("base"));
        std::vector<Quaternion> ents;
        for (auto& s : j.at("entries"))
            ents.push_back(parse_quaternion(base.alg, s.get<std::string>()));
        return HermForm::over_quat(std::move(base), std::move(ents), true);
    }
    if (kind == "quad" || kind == "gram") {
        QuatBase base = quat_base_from_json(f, j.at("base"));
        std::vector<Quaternion> ents;
        for (auto& s : j.at("entries"))
            ents.push_back(parse_quaternion(base.alg, s.get<std::string>()));
        if (kind == "quad") return QuadFormQ::diagonal(std::move(base), std::move(ents));
        size_t n = j.at("n");
        return QuadFormQ::gram(std::move(base), std::move(ents), n);
    }
    if (kind == "fquad") {
        std::vector<std::pair<FieldElem, FieldElem>> blocks;
        for (auto& b : j.at("blocks"))
            blocks.emplace_back(parse_element(f, b.at(0).get<std::string>()),
                                parse_element(f, b.at(1).get<std::string>()));
        std::vector<FieldElem> diag;
        for (auto& d : j.at("diag")) diag.push_back(parse_element(f, d.get<std::string>()));
        return make_quadform_f(f, std::move(blocks), std::move(diag));
    }
    throw std::invalid_argument("form_from_json: unknown kind " + kind);
}

} // namespace c2f
