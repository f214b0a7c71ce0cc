#ifndef DPLCT_PARSE_HPP
#define DPLCT_PARSE_HPP

#include <array>
#include <map>
#include <string>

#include "dplct/binary_form.hpp"
#include "dplct/bivar.hpp"
#include "dplct/ternary.hpp"

namespace dplct {

// Variables in fixed order x, y, z, w, s, t.
inline constexpr const char* kVariables = "xyzwst";

/// Parse result: exponent vector over (x,y,z,w,s,t) -> coefficient.
struct MultiPoly {
    std::map<std::array<int, 6>, Rational> terms;

    bool uses_only(const std::string& vars) const;
    bool is_homogeneous(int* degree_out = nullptr) const;
};

/// Grammar: sums of products of rational literals (`p` or `p/q`), variables,
/// `^` powers and parenthesized subexpressions; `*` optional.
MultiPoly parse_poly(const std::string& text);

/// Conversions; throw parse_error when the wrong variables appear or the
/// required homogeneity fails.
BinaryForm to_binary_form(const MultiPoly& p);              // in (s,t), homogeneous
BinaryForm to_binary_form_of_degree(const MultiPoly& p, int degree);  // zero allowed
TernaryForm to_ternary_form(const MultiPoly& p);            // in (x,y,z), homogeneous
Bivar<Rational> to_bivariate(const MultiPoly& p);           // in (x,y)

BinaryForm parse_binary_form(const std::string& text);
TernaryForm parse_ternary_form(const std::string& text);
Bivar<Rational> parse_bivariate(const std::string& text);
QPoly parse_univariate(const std::string& text);            // any single variable

}  // namespace dplct

#endif
