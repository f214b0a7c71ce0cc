#ifndef DPLCT_FACTOR_HPP
#define DPLCT_FACTOR_HPP

#include <utility>
#include <vector>

#include "dplct/binary_form.hpp"
#include "dplct/upoly.hpp"

namespace dplct {

struct QFactorization {
    Rational unit;                              // leading unit; f = unit * prod p_i^{m_i}
    std::vector<std::pair<QPoly, int>> factors; // monic irreducible, sorted canonically
};

/// Irreducible factorization over Q. Deterministic: squarefree split, rational
/// root extraction, then a modular lifting factorization per squarefree part.
QFactorization factor_rational_poly(const QPoly& f);

bool is_irreducible(const QPoly& f);

/// Irreducible factorization of a nonzero binary form; the t-part (root at
/// (1:0)) appears as the degree-1 form t.
struct BinaryFactorization {
    Rational unit;
    std::vector<std::pair<BinaryForm, int>> factors;
};
BinaryFactorization factor_binary_form(const BinaryForm& f);

}  // namespace dplct

#endif
