#ifndef DPLCT_DETECTORS_HPP
#define DPLCT_DETECTORS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dplct/surface.hpp"

namespace dplct {

/// One of the 27 lines of a 6-point blow-up model. Equations are plane curves
/// over the model's coefficient field (values are polynomials in the
/// extension generator; degree 0 means rational).
struct LineOnCubic {
    enum class Kind { Exceptional, Join, Conic };
    Kind kind = Kind::Exceptional;
    int i = 0, j = 0;  // Exceptional(i) / Join(i,j), i<j / Conic(i)
    // Join: coefficients (a,b,c) of a x + b y + c z;
    // Conic: coefficients (A,B,C,D,E,F) of A x^2 + B xy + C y^2 + D xz + E yz + F z^2.
    std::vector<QPoly> equation;
};

struct EckardtWitness {
    enum class Type { ThreeJoins, ExcJoinConic };
    Type type = Type::ThreeJoins;
    // ThreeJoins: the perfect matching {(a1,a2),(b1,b2),(c1,c2)} and the common
    // plane point; ExcJoinConic: the pair (i,j) for {E_i, Join(i,j), Conic(j)},
    // located at the blown-up point i along the join direction.
    std::array<std::array<int, 2>, 3> matching{};
    int i = 0, j = 0;
    std::vector<QPoly> location;  // (x, y) for ThreeJoins
};

std::vector<LineOnCubic> lines_on_cubic(const ValidatedSurface& v);
std::vector<EckardtWitness> eckardt_points(const ValidatedSurface& v);

/// One Galois class of hyperflexes of a smooth plane quartic. The class
/// consists of deg(modulus) points; coordinates and tangent are polynomials in
/// the generator of Q[a]/(modulus).
struct HyperflexClass {
    QPoly modulus;
    std::array<QPoly, 3> point;
    std::array<QPoly, 3> tangent;
    int class_size = 0;
};

struct FlexScan {
    std::vector<HyperflexClass> hyperflexes;
    int hyperflex_count = 0;      // sum of class sizes
    int weighted_flex_total = 0;  // simple flexes + 2 * hyperflexes; 24 for a smooth quartic
    std::vector<std::string> notes;
};

/// Flex-scheme triangularization and contact tests. Requires a smooth quartic
/// (validated upstream or here).
FlexScan hyperflexes(const TernaryForm& branch);

struct CuspReport {
    std::vector<CuspEntry> entries;
};

/// Cuspidal members of |-K| for a validated degree-1 surface: one entry per
/// irreducible factor of gcd(a,b), with the a == 0 convention ord_a = infinity.
CuspReport cusp_report(const ValidatedSurface& v);

}  // namespace dplct

#endif
