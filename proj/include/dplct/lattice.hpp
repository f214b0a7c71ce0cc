#ifndef DPLCT_LATTICE_HPP
#define DPLCT_LATTICE_HPP

#include <vector>

#include "dplct/errors.hpp"

namespace dplct {

/// Class d*L - sum m_i E_i in Z^{1,n}, intersection form diag(+1,-1,...,-1).
/// Stored as the integer vector (d; m_1, ..., m_n).
struct DivisorClass {
    int n = 0;
    std::vector<long> coords;  // size n+1

    long d() const { return coords[0]; }
    long m(int i) const { return coords[static_cast<std::size_t>(i)]; }  // 1-based

    static DivisorClass from_coords(std::vector<long> c) {
        DivisorClass D;
        D.n = static_cast<int>(c.size()) - 1;
        D.coords = std::move(c);
        return D;
    }
    static DivisorClass line_class(int n) {
        DivisorClass D;
        D.n = n;
        D.coords.assign(static_cast<std::size_t>(n) + 1, 0);
        D.coords[0] = 1;
        return D;
    }
    /// Exceptional class E_i (which is 0*L - (-1)*E_i, so m_i = -1).
    static DivisorClass exceptional(int n, int i) {
        DivisorClass D;
        D.n = n;
        D.coords.assign(static_cast<std::size_t>(n) + 1, 0);
        D.coords[static_cast<std::size_t>(i)] = -1;
        return D;
    }
    static DivisorClass canonical(int n) {
        DivisorClass D;
        D.n = n;
        D.coords.assign(static_cast<std::size_t>(n) + 1, -1);
        D.coords[0] = -3;
        return D;
    }

    friend DivisorClass operator+(const DivisorClass& A, const DivisorClass& B) {
        if (A.n != B.n) throw math_error("divisor classes live in different lattices");
        DivisorClass C = A;
        for (std::size_t i = 0; i < C.coords.size(); ++i) C.coords[i] += B.coords[i];
        return C;
    }
    friend DivisorClass operator-(const DivisorClass& A, const DivisorClass& B) {
        if (A.n != B.n) throw math_error("divisor classes live in different lattices");
        DivisorClass C = A;
        for (std::size_t i = 0; i < C.coords.size(); ++i) C.coords[i] -= B.coords[i];
        return C;
    }
    DivisorClass negated() const {
        DivisorClass C = *this;
        for (auto& x : C.coords) x = -x;
        return C;
    }

    friend bool operator==(const DivisorClass& A, const DivisorClass& B) {
        return A.n == B.n && A.coords == B.coords;
    }
    friend bool operator<(const DivisorClass& A, const DivisorClass& B) {
        return A.coords < B.coords;
    }
};

struct Lattice {
    int n = 0;  // 0..8
    explicit Lattice(int points) : n(points) {
        if (n < 0 || n > 8) throw validation_error("lattice rank out of range (n must be 0..8)");
    }
    int degree() const { return 9 - n; }
};

long intersect(const DivisorClass& a, const DivisorClass& b);

/// All classes with D^2 = -1 and D.K = -1 (the lines).
std::vector<DivisorClass> minus_one_classes(const Lattice& lat);

/// All classes with D^2 = -2 and D.K = 0, both signs included.
std::vector<DivisorClass> minus_two_classes(const Lattice& lat);

/// One representative per {D, -D} pair, first nonzero coordinate positive.
std::vector<DivisorClass> normalize_up_to_sign(const std::vector<DivisorClass>& classes);

}  // namespace dplct

#endif
