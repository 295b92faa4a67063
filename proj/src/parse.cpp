#include "kummer/report.hpp"

#include <cctype>

namespace kummer {

ParseError::ParseError(const std::string& message, std::size_t byte_offset)
    : std::runtime_error(message + " at byte " + std::to_string(byte_offset)),
      offset_(byte_offset) {}

namespace {

constexpr std::uint64_t kMaxExponent = 1u << 20;
constexpr std::size_t kMaxDegree = 1u << 17;

class Parser {
public:
    Parser(const std::string& text, FieldPtr field) : text_(text), field_(std::move(field)) {}

    Polynomial run() {
        Polynomial e = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    std::uint64_t uint_literal(bool reduce_mod_p) {
        skip_ws();
        if (pos_ >= text_.size() || !isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected an unsigned integer", pos_);
        std::uint64_t v = 0;
        const std::uint64_t p = field_->p();
        while (pos_ < text_.size() && isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (reduce_mod_p)
                v %= p;
            else if (v > kMaxExponent)
                throw ParseError("exponent overflow", pos_);
            ++pos_;
        }
        return v;
    }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (peek_is('+')) {
                ++pos_;
                acc = acc + term();
            } else if (peek_is('-')) {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (peek_is('*')) {
            ++pos_;
            acc = acc * factor();
            check_degree(acc);
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (peek_is('^')) {
            ++pos_;
            const std::size_t at = pos_;
            const std::uint64_t e = uint_literal(false);
            if (!b.is_zero() && b.degree() * e > kMaxDegree)
                throw ParseError("exponent overflow", at);
            b = poly_pow(b, e);
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == 'x') {
            ++pos_;
            return Polynomial::x(field_);
        }
        if (c == '(') {
            ++pos_;
            Polynomial e = expr();
            expect(')');
            return e;
        }
        if (isdigit(static_cast<unsigned char>(c)))
            return Polynomial::constant(field_->from_int(
                static_cast<std::int64_t>(uint_literal(true))));
        throw ParseError("unexpected character", pos_);
    }

    void check_degree(const Polynomial& f) {
        if (!f.is_zero() && f.degree() > kMaxDegree)
            throw ParseError("polynomial degree too large", pos_);
    }

    const std::string& text_;
    FieldPtr field_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& text, const FieldPtr& field) {
    return Parser(text, field).run();
}

}  // namespace kummer
