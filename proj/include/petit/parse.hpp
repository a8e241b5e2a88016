#ifndef PETIT_PARSE_HPP
#define PETIT_PARSE_HPP

#include <string>

#include "petit/skew.hpp"

namespace petit {

struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

/// `Fq(p,h)`, `Poly(p,h)` or `Rat(p,h)`.
FieldPtr parse_field_spec(const std::string& spec);
std::string field_spec_string(const FieldCtx& F);

/// `frob(r)`, `ysq`, `yscale(<elem>)` or `id`.
EndoDesc parse_endo_spec(const FieldCtx& F, const std::string& spec);
std::string endo_spec_string(const FieldCtx& F, const EndoDesc& e);

/// `zero`, `ddy` or `inner(<elem>)`.
DerivDesc parse_deriv_spec(const FieldCtx& F, const std::string& spec);
std::string deriv_spec_string(const FieldCtx& F, const DerivDesc& d);

/// Expression grammar over +, -, *, /, ^, parentheses, integers and the
/// atoms g (adjoined root), y and t; products involving t follow the skew
/// commutation rule, so any well-formed expression denotes a unique left
/// polynomial.
SkewPoly parse_poly(const SkewRingCtx& R, const std::string& text);
/// Same grammar restricted to degree 0 in t.
Elem parse_elem(const FieldCtx& F, const std::string& text);

std::string elem_to_string(const FieldCtx& F, const Elem& x);
std::string poly_to_string(const FieldCtx& F, const SkewPoly& f);
/// The defining polynomial of the adjoined root, printed in g.
std::string modulus_string(const FieldCtx& F);

}  // namespace petit

#endif
