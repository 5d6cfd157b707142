#include "c2f/parser.hpp"

namespace c2f {

namespace {

class Scanner {
public:
    Scanner(const ParseContext& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

    FieldElem parse_element_top() {
        FieldElem e = parse_expr();
        expect_end();
        return e;
    }

    Quaternion parse_quaternion_top() {
        Quaternion q = parse_quaternion();
        expect_end();
        return q;
    }

    ParsedForm parse_form_top() {
        ParsedForm f = parse_form();
        expect_end();
        return f;
    }

    ParsedObject parse_object_top() {
        skip_ws();
        if (lookahead_word("herm") || lookahead_word("quad") || lookahead_word("fquad") ||
            lookahead_word("gram")) {
            ParsedForm f = parse_form();
            expect_end();
            return std::visit([](auto&& x) -> ParsedObject { return x; }, std::move(f));
        }
        if (lookahead_word("q") && peek_at(1) == '{') {
            Quaternion q = parse_quaternion();
            expect_end();
            return q;
        }
        FieldElem e = parse_expr();
        expect_end();
        return e;
    }

    ParsedForm parse_form() {
        skip_ws();
        if (consume_word("herm")) return parse_herm();
        if (consume_word("quad")) return parse_quad();
        if (consume_word("fquad")) return parse_fquad();
        if (consume_word("gram")) return parse_gram();
        fail("form literal", "'herm', 'quad', 'fquad' or 'gram'");
    }

private:
    const ParseContext& ctx_;
    std::string_view text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what, std::string expected) {
        size_t line = 1, col = 1;
        for (size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else
                ++col;
        }
        throw ParseError("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
                             " while reading " + what + " (expected " + expected + ")",
                         line, col, std::move(expected));
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\n' || text_[pos_] == '\r'))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    char peek_at(size_t ahead) {
        skip_ws();
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const std::string& what) {
        if (!consume(c)) fail(what, std::string("'") + c + "'");
    }

    bool lookahead_word(std::string_view w) {
        skip_ws();
        if (text_.substr(pos_, w.size()) != w) return false;
        // must not be a longer identifier
        size_t after = pos_ + w.size();
        if (after < text_.size() && (isalnum(static_cast<unsigned char>(text_[after])) &&
                                     !(w == "q" && text_[after] == '{')))
            return isalpha(static_cast<unsigned char>(text_[after])) ? false : true;
        return true;
    }

    bool consume_word(std::string_view w) {
        skip_ws();
        if (text_.substr(pos_, w.size()) != w) return false;
        size_t after = pos_ + w.size();
        if (after < text_.size() && isalpha(static_cast<unsigned char>(text_[after]))) return false;
        pos_ = after;
        return true;
    }

    void expect_end() {
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input", "end of input");
    }

    const QAlg& need_algebra() {
        if (!ctx_.algebra)
            fail("quaternion syntax", "an algebra context (--quat a=...,b=...)");
        return *ctx_.algebra;
    }

    Involution involution() {
        if (ctx_.invol) return *ctx_.invol;
        return canonical_involution_desc(need_algebra());
    }

    // ---- elements ----

    FieldElem parse_expr() {
        FieldElem acc = parse_term();
        while (true) {
            skip_ws();
            if (consume('+'))
                acc = acc + parse_term();
            else
                return acc;
        }
    }

    FieldElem parse_term() {
        FieldElem acc = parse_factor();
        while (true) {
            skip_ws();
            if (consume('*'))
                acc = acc * parse_factor();
            else if (consume('/')) {
                FieldElem d = parse_factor();
                if (d.is_zero()) fail("division", "a nonzero divisor");
                acc = acc / d;
            } else
                return acc;
        }
    }

    FieldElem parse_factor() {
        FieldElem base = parse_atom();
        skip_ws();
        if (consume('^')) {
            unsigned e = parse_uint();
            FieldElem acc = FieldElem::one(ctx_.field);
            for (unsigned i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    unsigned parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("exponent", "a decimal integer");
        unsigned v = 0;
        while (pos_ < text_.size() && isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + unsigned(text_[pos_] - '0');
            ++pos_;
            if (v > 4096) fail("exponent", "an exponent <= 4096");
        }
        return v;
    }

    FieldElem parse_atom() {
        skip_ws();
        if (consume('(')) {
            FieldElem e = parse_expr();
            expect(')', "parenthesised expression");
            return e;
        }
        if (pos_ < text_.size() && text_[pos_] == 't') {
            ++pos_;
            if (ctx_.field->kind == FieldKind::Finite)
                fail("element", "no 't' over GF(2^k) (finite field descriptor)");
            return FieldElem::t(ctx_.field);
        }
        if (text_.substr(pos_, 2) == "0b") {
            pos_ += 2;
            if (pos_ >= text_.size() || (text_[pos_] != '0' && text_[pos_] != '1'))
                fail("coefficient literal", "binary digits after 0b");
            gfelem v = 0;
            size_t bits = 0;
            while (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1')) {
                v = (v << 1) | gfelem(text_[pos_] - '0');
                ++pos_;
                ++bits;
            }
            if (bits > ctx_.field->k())
                fail("coefficient literal", "at most k bits in the power basis");
            return FieldElem::scalar(ctx_.field, v);
        }
        if (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1')) {
            gfelem v = gfelem(text_[pos_] - '0');
            ++pos_;
            if (pos_ < text_.size() && isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("coefficient", "0, 1 or a 0b... bit-vector literal");
            return FieldElem::scalar(ctx_.field, v);
        }
        fail("element atom", "'t', '(', 0, 1, or 0b...");
    }

    // ---- quaternions ----

    Quaternion parse_quaternion() {
        skip_ws();
        if (!consume_word("q")) fail("quaternion", "'q{'");
        expect('{', "quaternion literal");
        std::array<FieldElem, 4> c{FieldElem::zero(ctx_.field), FieldElem::zero(ctx_.field),
                                   FieldElem::zero(ctx_.field), FieldElem::zero(ctx_.field)};
        for (int i = 0; i < 4; ++i) {
            c[size_t(i)] = parse_expr();
            if (i < 3) expect(';', "quaternion coordinate separator");
        }
        expect('}', "quaternion literal");
        return Quaternion(need_algebra(), std::move(c));
    }

    Quaternion parse_qentry() {
        skip_ws();
        if (lookahead_word("q") && peek_at(1) == '{') return parse_quaternion();
        FieldElem s = parse_expr();
        return Quaternion::scalar(need_algebra(), std::move(s));
    }

    // ---- forms ----

    ParsedForm parse_herm() {
        expect('[', "hermitian form literal");
        if (ctx_.algebra) {
            std::vector<Quaternion> ents;
            ents.push_back(parse_qentry());
            while (consume(';')) ents.push_back(parse_qentry());
            expect(']', "hermitian form literal");
            return HermForm::over_quat(QuatBase{*ctx_.algebra, involution()}, std::move(ents));
        }
        std::vector<FieldElem> ents;
        ents.push_back(parse_expr());
        while (consume(';')) ents.push_back(parse_expr());
        expect(']', "bilinear form literal");
        return HermForm::bilinear(ctx_.field, std::move(ents));
    }

    ParsedForm parse_quad() {
        expect('[', "quadratic form literal");
        std::vector<Quaternion> ents;
        ents.push_back(parse_qentry());
        while (consume(';')) ents.push_back(parse_qentry());
        expect(']', "quadratic form literal");
        return QuadFormQ::diagonal(QuatBase{need_algebra(), involution()}, std::move(ents));
    }

    ParsedForm parse_fquad() {
        expect('[', "F-form literal");
        std::vector<std::pair<FieldElem, FieldElem>> blocks;
        std::vector<FieldElem> diag;
        if (peek() == '[') {
            while (true) {
                expect('[', "block");
                FieldElem b = parse_expr();
                expect(',', "block");
                FieldElem c = parse_expr();
                expect(']', "block");
                blocks.emplace_back(std::move(b), std::move(c));
                if (!consume(';')) break;
            }
        }
        if (consume('|')) {
            diag.push_back(parse_expr());
            while (consume(';')) diag.push_back(parse_expr());
        }
        expect(']', "F-form literal");
        return make_quadform_f(ctx_.field, std::move(blocks), std::move(diag));
    }

    ParsedForm parse_gram() {
        expect('[', "gram literal");
        expect('[', "gram literal");
        std::vector<std::vector<Quaternion>> rows;
        rows.emplace_back();
        rows.back().push_back(parse_qentry());
        while (true) {
            if (consume(',')) {
                rows.back().push_back(parse_qentry());
            } else if (consume(';')) {
                rows.emplace_back();
                rows.back().push_back(parse_qentry());
            } else
                break;
        }
        expect(']', "gram literal");
        expect(']', "gram literal");
        size_t n = rows.size();
        for (auto& r : rows)
            if (r.size() != n) fail("gram matrix", "a square matrix (rows of equal length)");
        std::vector<Quaternion> flat;
        for (auto& r : rows)
            for (auto& q : r) flat.push_back(std::move(q));
        return QuadFormQ::gram(QuatBase{need_algebra(), involution()}, std::move(flat), n);
    }
};

} // namespace

FieldElem parse_element(const Field& f, std::string_view text) {
    ParseContext ctx{f, std::nullopt, std::nullopt};
    return Scanner(ctx, text).parse_element_top();
}

Quaternion parse_quaternion(const QAlg& A, std::string_view text) {
    ParseContext ctx{A->field, A, std::nullopt};
    return Scanner(ctx, text).parse_quaternion_top();
}

ParsedForm parse_form(const ParseContext& ctx, std::string_view text) {
    return Scanner(ctx, text).parse_form_top();
}

ParsedObject parse_object(const ParseContext& ctx, std::string_view text) {
    return Scanner(ctx, text).parse_object_top();
}

} // namespace c2f
