#pragma once

#include "c2f/forms.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace c2f {

/// Positioned parse failure: line/column plus the expected-token set.
struct ParseError : std::runtime_error {
    size_t line, col;
    std::string expected;
    ParseError(const std::string& msg, size_t line_, size_t col_, std::string expected_)
        : std::runtime_error(msg), line(line_), col(col_), expected(std::move(expected_)) {}
};

struct ParseContext {
    Field field;
    std::optional<QAlg> algebra;
    std::optional<Involution> invol; // defaults to the canonical involution
};

using ParsedForm = std::variant<HermForm, QuadFormQ, QuadFormF>;
using ParsedObject = std::variant<FieldElem, Quaternion, HermForm, QuadFormQ, QuadFormF>;

/// Element syntax: polynomial expressions in t with + * / ( ) ^ and GF(2^k)
/// coefficients as 0b... bit-vector literals in the power basis (0 and 1
/// also allowed). Example: (1+t)/t, 0b11 + 0b10*t^3.
FieldElem parse_element(const Field& f, std::string_view text);

/// Quaternion literal q{x0; x1; x2; x3}.
Quaternion parse_quaternion(const QAlg& A, std::string_view text);

/// Form literals: herm[e1; ...], quad[q{...}; ...],
/// fquad[[b1,c1];[b2,c2] | d1; d2] (pure diagonal: fquad[| d1; d2]),
/// gram[[m11, m12; 0, m22]].
ParsedForm parse_form(const ParseContext& ctx, std::string_view text);

/// Any of the above, dispatched on the leading token.
ParsedObject parse_object(const ParseContext& ctx, std::string_view text);

} // namespace c2f
