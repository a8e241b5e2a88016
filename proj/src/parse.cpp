#include "petit/parse.hpp"

#include <cctype>
#include <sstream>

namespace petit {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw parse_error(std::string("expected '") + c + "'", pos);
    }
    std::uint64_t integer() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw parse_error("expected an integer", pos);
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
            if (v > (1ull << 40)) throw parse_error("integer too large", pos);
            ++pos;
        }
        return v;
    }
};

struct PolyParser {
    const SkewRingCtx& R;
    Lexer lex;

    PolyParser(const SkewRingCtx& r, const std::string& text) : R(r), lex{text} {}

    SkewPoly parse() {
        SkewPoly v = expr();
        if (!lex.eof()) throw parse_error("trailing input", lex.pos);
        return v;
    }

    SkewPoly expr() {
        SkewPoly v = lex.accept('-') ? sp_neg(R, term()) : term();
        for (;;) {
            if (lex.accept('+'))
                v = sp_add(R, v, term());
            else if (lex.accept('-'))
                v = sp_sub(R, v, term());
            else
                return v;
        }
    }

    SkewPoly term() {
        SkewPoly v = factor();
        for (;;) {
            if (lex.accept('*'))
                v = skew_mul(R, v, factor());
            else if (lex.accept('/')) {
                SkewPoly d = factor();
                if (d.is_zero()) throw parse_error("division by zero", lex.pos);
                if (*d.deg() != 0) throw parse_error("cannot divide by a t-polynomial", lex.pos);
                v = skew_mul(R, v, sp_const(R.F(), R.F().inv(d.coeff(0))));
            } else
                return v;
        }
    }

    SkewPoly factor() {
        SkewPoly base = atom();
        if (lex.accept('^')) {
            std::uint64_t e = lex.integer();
            return skew_pow(R, base, e);
        }
        return base;
    }

    SkewPoly atom() {
        const auto& F = R.F();
        char c = lex.peek();
        if (c == '(') {
            lex.expect('(');
            SkewPoly v = expr();
            lex.expect(')');
            return v;
        }
        if (c == 't') {
            ++lex.pos;
            return sp_t(F);
        }
        if (c == 'g') {
            ++lex.pos;
            if (F.h < 2) throw parse_error("g needs an extension field", lex.pos);
            return sp_const(F, F.gen());
        }
        if (c == 'y') {
            ++lex.pos;
            if (F.kind == FieldKind::Finite) throw parse_error("y needs a polynomial ring", lex.pos);
            return sp_const(F, F.y());
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return sp_const(F, F.from_int(static_cast<std::int64_t>(lex.integer())));
        throw parse_error("unexpected character", lex.pos);
    }
};

std::string ff_to_string(const FieldCtx& F, ff_t packed) {
    if (packed == 0) return "0";
    std::ostringstream os;
    bool first = true;
    ff_t rest = packed;
    for (std::uint32_t u = 0; u < F.h; ++u) {
        std::uint32_t digit = rest % F.p;
        rest /= F.p;
        if (!digit) continue;
        if (!first) os << "+";
        if (u == 0)
            os << digit;
        else {
            if (digit != 1) os << digit << "*";
            os << "g";
            if (u > 1) os << "^" << u;
        }
        first = false;
    }
    return os.str();
}

bool composite(const std::string& s) {
    return s.find('+') != std::string::npos || s.find('-') != std::string::npos ||
           s.find('/') != std::string::npos;
}

std::string ypoly_to_string(const FieldCtx& F, const std::vector<ff_t>& c) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (!c[i]) continue;
        if (!first) os << " + ";
        std::string cs = ff_to_string(F, c[i]);
        if (i == 0) {
            os << (composite(cs) && !first ? "(" + cs + ")" : cs);
        } else {
            if (cs != "1") os << (composite(cs) ? "(" + cs + ")" : cs) << "*";
            os << "y";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace

FieldPtr parse_field_spec(const std::string& spec) {
    Lexer lex{spec};
    std::string head;
    while (!lex.eof() && std::isalpha(static_cast<unsigned char>(lex.peek()))) head += spec[lex.pos++];
    lex.expect('(');
    std::uint64_t p = lex.integer();
    lex.expect(',');
    std::uint64_t h = lex.integer();
    lex.expect(')');
    if (!lex.eof()) throw parse_error("trailing input", lex.pos);
    if (head == "Fq") return FieldCtx::make_finite(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(h));
    if (head == "Poly") return FieldCtx::make_poly(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(h));
    if (head == "Rat") return FieldCtx::make_rational(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(h));
    throw parse_error("unknown field kind '" + head + "'", 0);
}

std::string field_spec_string(const FieldCtx& F) {
    std::string head = F.kind == FieldKind::Finite ? "Fq" : F.kind == FieldKind::Poly ? "Poly" : "Rat";
    return head + "(" + std::to_string(F.p) + "," + std::to_string(F.h) + ")";
}

EndoDesc parse_endo_spec(const FieldCtx& F, const std::string& spec) {
    Lexer lex{spec};
    std::string head;
    while (!lex.eof() && std::isalpha(static_cast<unsigned char>(lex.peek()))) head += spec[lex.pos++];
    EndoDesc e;
    if (head == "id") {
        e = EndoDesc::identity();
    } else if (head == "frob") {
        lex.expect('(');
        e = EndoDesc::frobenius(static_cast<std::uint32_t>(lex.integer()));
        lex.expect(')');
    } else if (head == "ysq") {
        e = EndoDesc::ysquare();
    } else if (head == "yscale") {
        lex.expect('(');
        std::size_t start = lex.pos;
        int depth = 1;
        while (lex.pos < spec.size() && depth > 0) {
            if (spec[lex.pos] == '(') ++depth;
            if (spec[lex.pos] == ')') --depth;
            if (depth > 0) ++lex.pos;
        }
        if (depth != 0) throw parse_error("unbalanced parentheses", lex.pos);
        e = EndoDesc::yscale(parse_elem(F, spec.substr(start, lex.pos - start)));
        ++lex.pos;
    } else {
        throw parse_error("unknown endomorphism '" + head + "'", 0);
    }
    if (!lex.eof()) throw parse_error("trailing input", lex.pos);
    validate_endo(F, e);
    return e;
}

std::string endo_spec_string(const FieldCtx& F, const EndoDesc& e) {
    switch (e.kind) {
        case EndoDesc::Kind::Identity:
            return "id";
        case EndoDesc::Kind::FrobeniusPower:
            return "frob(" + std::to_string(e.r) + ")";
        case EndoDesc::Kind::YSquare:
            return "ysq";
        case EndoDesc::Kind::YScale:
            return "yscale(" + elem_to_string(F, e.scale) + ")";
    }
    return "";
}

DerivDesc parse_deriv_spec(const FieldCtx& F, const std::string& spec) {
    Lexer lex{spec};
    std::string head;
    while (!lex.eof() && std::isalpha(static_cast<unsigned char>(lex.peek()))) head += spec[lex.pos++];
    DerivDesc d;
    if (head == "zero") {
        d = DerivDesc::zero();
    } else if (head == "ddy") {
        d = DerivDesc::ddy();
    } else if (head == "inner") {
        lex.expect('(');
        std::size_t start = lex.pos;
        int depth = 1;
        while (lex.pos < spec.size() && depth > 0) {
            if (spec[lex.pos] == '(') ++depth;
            if (spec[lex.pos] == ')') --depth;
            if (depth > 0) ++lex.pos;
        }
        if (depth != 0) throw parse_error("unbalanced parentheses", lex.pos);
        d = DerivDesc::inner(parse_elem(F, spec.substr(start, lex.pos - start)));
        ++lex.pos;
    } else {
        throw parse_error("unknown derivation '" + head + "'", 0);
    }
    if (!lex.eof()) throw parse_error("trailing input", lex.pos);
    return d;
}

std::string deriv_spec_string(const FieldCtx& F, const DerivDesc& d) {
    switch (d.kind) {
        case DerivDesc::Kind::Zero:
            return "zero";
        case DerivDesc::Kind::DDY:
            return "ddy";
        case DerivDesc::Kind::InnerSigma:
            return "inner(" + elem_to_string(F, d.u) + ")";
    }
    return "";
}

SkewPoly parse_poly(const SkewRingCtx& R, const std::string& text) {
    return PolyParser(R, text).parse();
}

Elem parse_elem(const FieldCtx& F, const std::string& text) {
    // elements never involve t, so the commutation rule is irrelevant here
    SkewRingCtx R(F.shared_from_this(), EndoDesc::identity(), DerivDesc::zero());
    SkewPoly v = parse_poly(R, text);
    if (!v.is_zero() && *v.deg() > 0) throw parse_error("t is not allowed in an element", 0);
    return v.is_zero() ? F.zero() : v.coeff(0);
}

std::string elem_to_string(const FieldCtx& F, const Elem& x) {
    if (F.is_zero(x)) return "0";
    std::string num = ypoly_to_string(F, x.num);
    if (x.den == std::vector<ff_t>{1u}) return num;
    std::string den = ypoly_to_string(F, x.den);
    std::string lhs = composite(num) || num.find('*') != std::string::npos ? "(" + num + ")" : num;
    std::string rhs = composite(den) || den.find('*') != std::string::npos ? "(" + den + ")" : den;
    return lhs + "/" + rhs;
}

std::string poly_to_string(const FieldCtx& F, const SkewPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.c.size(); i-- > 0;) {
        if (F.is_zero(f.c[i])) continue;
        if (!first) os << " + ";
        std::string cs = elem_to_string(F, f.c[i]);
        if (i == 0) {
            os << (composite(cs) && !first ? "(" + cs + ")" : cs);
        } else {
            if (cs != "1")
                os << (composite(cs) || cs.find('*') != std::string::npos ? "(" + cs + ")" : cs)
                   << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::string modulus_string(const FieldCtx& F) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = F.modulus.size(); i-- > 0;) {
        if (!F.modulus[i]) continue;
        if (!first) os << " + ";
        if (i == 0)
            os << F.modulus[i];
        else {
            if (F.modulus[i] != 1) os << F.modulus[i] << "*";
            os << "g";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace petit
