#include "dplct/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace dplct {
namespace {

long isqrt_floor(long v) {
    if (v < 0) return -1;
    long r = static_cast<long>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Enumerate integer vectors (m_1..m_n) with sum = s1 and sum of squares = s2.
void enumerate_m(int slots, long s1, long s2, std::vector<long>& acc,
                 std::vector<std::vector<long>>& out) {
    if (slots == 0) {
        if (s1 == 0 && s2 == 0) out.push_back(acc);
        return;
    }
    if (s2 < 0) return;
    if (s1 * s1 > static_cast<long>(slots) * s2) return;  // Cauchy-Schwarz prune
    long bound = isqrt_floor(s2);
    for (long m = -bound; m <= bound; ++m) {
        acc.push_back(m);
        enumerate_m(slots - 1, s1 - m, s2 - m * m, acc, out);
        acc.pop_back();
    }
}

// All D = (d; m) with sum m_i = 3d - k_dot and d^2 - sum m_i^2 = self.
std::vector<DivisorClass> enumerate_classes(int n, long self, long k_dot) {
    std::vector<DivisorClass> out;
    const long dbound = 3L * (n + 2);  // crude safe bound
    for (long d = -dbound; d <= dbound; ++d) {
        long s1 = 3 * d - k_dot;
        long s2 = d * d - self;
        if (s2 < 0) continue;
        std::vector<long> acc;
        std::vector<std::vector<long>> ms;
        enumerate_m(n, s1, s2, acc, ms);
        for (auto& m : ms) {
            std::vector<long> coords;
            coords.reserve(static_cast<std::size_t>(n) + 1);
            coords.push_back(d);
            for (long x : m) coords.push_back(x);
            out.push_back(DivisorClass::from_coords(std::move(coords)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

long intersect(const DivisorClass& a, const DivisorClass& b) {
    if (a.n != b.n) throw math_error("intersection of classes from different lattices");
    long v = a.coords[0] * b.coords[0];
    for (std::size_t i = 1; i < a.coords.size(); ++i) v -= a.coords[i] * b.coords[i];
    return v;
}

std::vector<DivisorClass> minus_one_classes(const Lattice& lat) {
    // D.K = -1 with K = (-3; -1..-1) reads sum m_i = 3d - 1
    return enumerate_classes(lat.n, -1, 1);
}

std::vector<DivisorClass> minus_two_classes(const Lattice& lat) {
    return enumerate_classes(lat.n, -2, 0);
}

std::vector<DivisorClass> normalize_up_to_sign(const std::vector<DivisorClass>& classes) {
    std::vector<DivisorClass> out;
    for (const auto& D : classes) {
        DivisorClass pos = D;
        for (long c : D.coords) {
            if (c > 0) break;
            if (c < 0) {
                pos = D.negated();
                break;
            }
        }
        if (std::find(out.begin(), out.end(), pos) == out.end()) out.push_back(pos);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dplct
