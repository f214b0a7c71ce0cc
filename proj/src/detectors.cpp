#include "dplct/detectors.hpp"

#include <algorithm>

#include "dplct/factor.hpp"
#include "dplct/linalg.hpp"

namespace dplct {
namespace {

// Thrown when a shadow collision or weight mismatch shows the projection
// direction is degenerate; the caller retries with new coordinates.
struct RetryCoords {};

template <class K>
std::array<K, 3> cross3(const std::array<K, 3>& a, const std::array<K, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class K>
bool proportional3(const std::array<K, 3>& a, const std::array<K, 3>& b) {
    auto c = cross3(a, b);
    bool z0 = field_traits<K>::is_zero(c[0]);
    bool z1 = field_traits<K>::is_zero(c[1]);
    bool z2 = field_traits<K>::is_zero(c[2]);
    return z0 && z1 && z2;
}

std::vector<std::array<std::array<int, 2>, 3>> perfect_matchings6() {
    std::vector<std::array<std::array<int, 2>, 3>> out;
    std::array<bool, 7> used{};
    std::array<std::array<int, 2>, 3> acc{};
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == 3) {
            out.push_back(acc);
            return;
        }
        int first = 1;
        while (used[static_cast<std::size_t>(first)]) ++first;
        used[static_cast<std::size_t>(first)] = true;
        for (int second = first + 1; second <= 6; ++second) {
            if (used[static_cast<std::size_t>(second)]) continue;
            used[static_cast<std::size_t>(second)] = true;
            acc[static_cast<std::size_t>(depth)] = {first, second};
            self(self, depth + 1);
            used[static_cast<std::size_t>(second)] = false;
        }
        used[static_cast<std::size_t>(first)] = false;
    };
    rec(rec, 0);
    return out;  // 15 matchings, deterministic order
}

// Plane machinery over a field K ---------------------------------------------

template <class K>
struct PlaneModel {
    std::vector<std::pair<K, K>> pts;  // affine blow-up points
    K zero, one;

    std::array<K, 3> homog(int i) const {  // 1-based
        return {pts[static_cast<std::size_t>(i - 1)].first, pts[static_cast<std::size_t>(i - 1)].second, one};
    }

    std::array<K, 3> join_line(int i, int j) const { return cross3(homog(i), homog(j)); }

    // unique conic through the five points other than P_i:
    // coefficients (A,B,C,D,E,F) of A x^2 + B xy + C y^2 + D xz + E yz + F z^2
    std::array<K, 6> conic_avoiding(int i) const {
        std::vector<std::vector<K>> rows;
        for (int k = 1; k <= 6; ++k) {
            if (k == i) continue;
            const K& x = pts[static_cast<std::size_t>(k - 1)].first;
            const K& y = pts[static_cast<std::size_t>(k - 1)].second;
            rows.push_back({x * x, x * y, y * y, x, y, one});
        }
        auto basis = kernel_basis(rows, zero);
        if (basis.size() != 1) throw math_error("conic through five points is not unique");
        std::array<K, 6> c{};
        for (int t = 0; t < 6; ++t) c[static_cast<std::size_t>(t)] = basis[0][static_cast<std::size_t>(t)];
        return c;
    }

    // gradient of the conic at a point, as a projective line (tangent line)
    std::array<K, 3> conic_tangent_at(const std::array<K, 6>& c, int i) const {
        const K& x = pts[static_cast<std::size_t>(i - 1)].first;
        const K& y = pts[static_cast<std::size_t>(i - 1)].second;
        K two = field_traits<K>::from_int(one, 2);
        return {two * c[0] * x + c[1] * y + c[3], c[1] * x + two * c[2] * y + c[4],
                c[3] * x + c[4] * y + two * c[5]};
    }
};

struct WitnessCombinatorics {
    int type;  // 0 = ThreeJoins, 1 = ExcJoinConic
    std::array<std::array<int, 2>, 3> matching;
    int i, j;
    bool operator==(const WitnessCombinatorics&) const = default;
    bool operator<(const WitnessCombinatorics& o) const {
        return std::tie(type, matching, i, j) < std::tie(o.type, o.matching, o.i, o.j);
    }
};

template <class K>
std::vector<std::pair<WitnessCombinatorics, std::array<K, 3>>> eckardt_scan(const PlaneModel<K>& pm) {
    std::vector<std::pair<WitnessCombinatorics, std::array<K, 3>>> out;
    // T1: three joins over a perfect matching, concurrent at a common point
    for (const auto& m : perfect_matchings6()) {
        auto l1 = pm.join_line(m[0][0], m[0][1]);
        auto l2 = pm.join_line(m[1][0], m[1][1]);
        auto l3 = pm.join_line(m[2][0], m[2][1]);
        std::vector<std::vector<K>> det3{{l1[0], l1[1], l1[2]},
                                         {l2[0], l2[1], l2[2]},
                                         {l3[0], l3[1], l3[2]}};
        if (!field_traits<K>::is_zero(det_guarded(std::move(det3), pm.zero))) continue;
        std::array<K, 3> loc = cross3(l1, l2);
        bool on_blown_point = false;
        for (int i = 1; i <= 6; ++i)
            if (proportional3(loc, pm.homog(i))) on_blown_point = true;
        if (on_blown_point) continue;  // would contradict general position
        out.push_back({WitnessCombinatorics{0, m, 0, 0}, loc});
    }
    // T2: {E_i, Join(i,j), Conic(j)}; witness iff Conic(j) is tangent at P_i to
    // the line P_i P_j
    for (int i = 1; i <= 6; ++i) {
        for (int j = 1; j <= 6; ++j) {
            if (i == j) continue;
            auto conic = pm.conic_avoiding(j);
            auto tangent = pm.conic_tangent_at(conic, i);
            auto join = pm.join_line(i, j);
            if (!proportional3(tangent, join)) continue;
            out.push_back({WitnessCombinatorics{1, {}, i, j}, pm.homog(i)});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<std::pair<Rational, Rational>> rational_points(const SurfaceModel& model) {
    std::vector<std::pair<Rational, Rational>> pts;
    for (const auto& p : model.points) {
        pts.emplace_back(p.x.is_zero() ? Rational(0) : p.x[0], p.y.is_zero() ? Rational(0) : p.y[0]);
    }
    return pts;
}

void require_six_point_blowup(const ValidatedSurface& v) {
    if (v.model.variant != SurfaceModel::Variant::BlowupPlane || v.model.points.size() != 6)
        throw validation_error("operation requires a validated 6-point blow-up model");
}

}  // namespace

std::vector<LineOnCubic> lines_on_cubic(const ValidatedSurface& v) {
    require_six_point_blowup(v);
    std::vector<LineOnCubic> out;
    auto as_qpoly = [](const Rational& r) { return QPoly(r); };
    if (!v.model.extension) {
        PlaneModel<Rational> pm{rational_points(v.model), Rational(0), Rational(1)};
        for (int i = 1; i <= 6; ++i) out.push_back({LineOnCubic::Kind::Exceptional, i, 0, {}});
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j) {
                auto l = pm.join_line(i, j);
                out.push_back({LineOnCubic::Kind::Join, i, j,
                               {as_qpoly(l[0]), as_qpoly(l[1]), as_qpoly(l[2])}});
            }
        for (int i = 1; i <= 6; ++i) {
            auto c = pm.conic_avoiding(i);
            std::vector<QPoly> eq;
            for (const auto& x : c) eq.push_back(as_qpoly(x));
            out.push_back({LineOnCubic::Kind::Conic, i, 0, std::move(eq)});
        }
        return out;
    }
    // Extension coordinates: equations must agree as polynomials in the
    // generator across every irreducible branch of the modulus, otherwise the
    // model is ambiguous.
    std::optional<std::vector<LineOnCubic>> result;
    bool ambiguous = false;
    for_each_split(*v.model.extension, [&](const std::shared_ptr<const QPoly>& m) {
        PlaneModel<ExtScalar> pm;
        for (const auto& p : v.model.points)
            pm.pts.emplace_back(ExtScalar(m, p.x), ExtScalar(m, p.y));
        pm.zero = ExtScalar::from_rational(m, Rational(0));
        pm.one = ExtScalar::from_rational(m, Rational(1));
        std::vector<LineOnCubic> lines;
        for (int i = 1; i <= 6; ++i) lines.push_back({LineOnCubic::Kind::Exceptional, i, 0, {}});
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j) {
                auto l = pm.join_line(i, j);
                lines.push_back({LineOnCubic::Kind::Join, i, j, {l[0].value(), l[1].value(), l[2].value()}});
            }
        for (int i = 1; i <= 6; ++i) {
            auto c = pm.conic_avoiding(i);
            std::vector<QPoly> eq;
            for (const auto& x : c) eq.push_back(x.value());
            lines.push_back({LineOnCubic::Kind::Conic, i, 0, std::move(eq)});
        }
        if (!result) {
            result = std::move(lines);
        } else {
            for (std::size_t k = 0; k < result->size(); ++k)
                if ((*result)[k].equation != lines[k].equation) ambiguous = true;
        }
    });
    if (ambiguous)
        throw validation_error("line equations differ between specializations of the extension");
    return *result;
}

std::vector<EckardtWitness> eckardt_points(const ValidatedSurface& v) {
    require_six_point_blowup(v);
    std::vector<EckardtWitness> out;
    auto convert = [](const WitnessCombinatorics& wc, std::vector<QPoly> loc) {
        EckardtWitness w;
        w.type = wc.type == 0 ? EckardtWitness::Type::ThreeJoins : EckardtWitness::Type::ExcJoinConic;
        w.matching = wc.matching;
        w.i = wc.i;
        w.j = wc.j;
        w.location = std::move(loc);
        return w;
    };
    if (!v.model.extension) {
        PlaneModel<Rational> pm{rational_points(v.model), Rational(0), Rational(1)};
        for (const auto& [wc, loc] : eckardt_scan(pm))
            out.push_back(convert(wc, {QPoly(loc[0]), QPoly(loc[1]), QPoly(loc[2])}));
        return out;
    }
    std::optional<std::vector<WitnessCombinatorics>> combo;
    std::optional<std::vector<EckardtWitness>> result;
    bool ambiguous = false;
    for_each_split(*v.model.extension, [&](const std::shared_ptr<const QPoly>& m) {
        PlaneModel<ExtScalar> pm;
        for (const auto& p : v.model.points)
            pm.pts.emplace_back(ExtScalar(m, p.x), ExtScalar(m, p.y));
        pm.zero = ExtScalar::from_rational(m, Rational(0));
        pm.one = ExtScalar::from_rational(m, Rational(1));
        auto scan = eckardt_scan(pm);
        std::vector<WitnessCombinatorics> wcs;
        std::vector<EckardtWitness> ws;
        for (const auto& [wc, loc] : scan) {
            wcs.push_back(wc);
            ws.push_back(convert(wc, {loc[0].value(), loc[1].value(), loc[2].value()}));
        }
        if (!combo) {
            combo = std::move(wcs);
            result = std::move(ws);
        } else if (*combo != wcs) {
            ambiguous = true;
        }
    });
    if (ambiguous)
        throw validation_error("Eckardt configuration differs between specializations of the extension");
    return *result;
}

// ---------------------------------------------------------------------------
// Hyperflexes.

namespace {

std::array<ExtScalar, 3> apply_matrix(const std::array<std::array<Rational, 3>, 3>& m,
                                      const std::array<ExtScalar, 3>& v) {
    std::array<ExtScalar, 3> out;
    for (int i = 0; i < 3; ++i) {
        ExtScalar acc = field_traits<ExtScalar>::zero(v[0]);
        for (int j = 0; j < 3; ++j)
            acc = acc + field_traits<ExtScalar>::from_rational(v[0], m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                            v[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

std::array<std::array<Rational, 3>, 3> transpose(const std::array<std::array<Rational, 3>, 3>& m) {
    std::array<std::array<Rational, 3>, 3> t{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return t;
}

// canonical scaling: first invertible coordinate becomes 1
void normalize_triple(std::array<ExtScalar, 3>& v) {
    for (auto& x : v) {
        if (!field_traits<ExtScalar>::is_zero(x)) {
            ExtScalar inv = x.inv();
            for (auto& y : v) y = y * inv;
            return;
        }
    }
}

// restriction of g to the line u * P + v * Pp, as a polynomial in v
UPoly<ExtScalar> restrict_to_line(const TernaryForm& g, const std::array<ExtScalar, 3>& P,
                                  const std::array<ExtScalar, 3>& Pp) {
    const ExtScalar& ctx = P[0];
    UPoly<ExtScalar> X(std::vector<ExtScalar>{P[0], Pp[0]});
    UPoly<ExtScalar> Y(std::vector<ExtScalar>{P[1], Pp[1]});
    UPoly<ExtScalar> Z(std::vector<ExtScalar>{P[2], Pp[2]});
    UPoly<ExtScalar> acc;
    for (const auto& [key, coef] : g.terms()) {
        UPoly<ExtScalar> t(field_traits<ExtScalar>::from_rational(ctx, coef));
        for (int i = 0; i < key[0]; ++i) t = t * X;
        for (int j = 0; j < key[1]; ++j) t = t * Y;
        for (int k = 0; k < key[2]; ++k) t = t * Z;
        acc = acc + t;
    }
    return acc;
}

}  // namespace

FlexScan hyperflexes(const TernaryForm& branch) {
    if (branch.degree() != 4 || branch.is_zero())
        throw validation_error("hyperflex scan requires a quartic");
    std::vector<std::string> notes;
    check_quartic_smooth(branch, notes);  // non-smooth input is an error

    for (int attempt = 0; attempt < 8; ++attempt) {
        auto M = seeded_coordinate_change(attempt);
        TernaryForm g = attempt == 0 ? branch : branch.linear_change(M);
        TernaryForm H = g.hessian();
        if (g.coeff(0, 0, 4).is_zero() || H.coeff(0, 0, 6).is_zero()) continue;
        BinaryForm R = resultant_z(g, H);
        if (R.is_zero() || R.t_order() >= 1) continue;  // needs all shadows affine

        TernaryForm gx = g.partial(0), gy = g.partial(1), gz = g.partial(2);
        auto Minv_t = transpose(invert_3x3(M));

        try {
            FlexScan scan;
            scan.notes = notes;
            if (attempt > 0)
                scan.notes.push_back("flex scheme computed after deterministic coordinate change #" +
                                     std::to_string(attempt));
            int weighted = 0;
            std::vector<HyperflexClass> classes;

            for (const auto& [part, mult] : squarefree_decomposition(R.dehomogenized())) {
                if (mult > 2) throw RetryCoords{};  // shadows collided
                for_each_split(part, [&](const std::shared_ptr<const QPoly>& mod) {
                    ExtScalar alpha = ExtScalar::generator(mod);
                    ExtScalar one = ExtScalar::from_rational(mod, Rational(1));
                    UPoly<ExtScalar> fz = g.specialize_xy(alpha, one);
                    UPoly<ExtScalar> hz = H.specialize_xy(alpha, one);
                    UPoly<ExtScalar> h = gcd_poly(fz, hz);
                    if (h.degree() != 1) throw RetryCoords{};
                    ExtScalar z0 = -(h[0] * h[1].inv());
                    std::array<ExtScalar, 3> P{alpha, one, z0};
                    std::array<ExtScalar, 3> T{gx.eval(P[0], P[1], P[2]), gy.eval(P[0], P[1], P[2]),
                                               gz.eval(P[0], P[1], P[2])};
                    int k = -1;
                    for (int t = 0; t < 3 && k < 0; ++t)
                        if (!field_traits<ExtScalar>::is_zero(T[static_cast<std::size_t>(t)])) k = t;
                    if (k < 0) throw math_error("vanishing gradient on a smooth quartic");
                    ExtScalar tk_inv = T[static_cast<std::size_t>(k)].inv();
                    std::array<ExtScalar, 3> Pp{};
                    bool found = false;
                    for (int u = 0; u < 3 && !found; ++u) {
                        if (u == k) continue;
                        std::array<ExtScalar, 3> B{field_traits<ExtScalar>::zero(one),
                                                   field_traits<ExtScalar>::zero(one),
                                                   field_traits<ExtScalar>::zero(one)};
                        B[static_cast<std::size_t>(u)] = one;
                        B[static_cast<std::size_t>(k)] = -(T[static_cast<std::size_t>(u)] * tk_inv);
                        if (!proportional3(P, B)) {
                            Pp = B;
                            found = true;
                        }
                    }
                    if (!found) throw math_error("tangent line parametrization failed");

                    UPoly<ExtScalar> c = restrict_to_line(g, P, Pp);
                    // contact conditions: c0 (incidence) and c1 (tangency) vanish
                    // identically; c2 vanishes because P lies on the Hessian
                    auto coeff_at = [&](int idx) {
                        return idx <= c.degree() ? c[idx] : field_traits<ExtScalar>::zero(one);
                    };
                    if (!field_traits<ExtScalar>::is_zero(coeff_at(0)) ||
                        !field_traits<ExtScalar>::is_zero(coeff_at(1)) ||
                        !field_traits<ExtScalar>::is_zero(coeff_at(2)))
                        throw math_error("flex contact bookkeeping failed");
                    bool hyper = field_traits<ExtScalar>::is_zero(coeff_at(3));
                    if (hyper && field_traits<ExtScalar>::is_zero(coeff_at(4)))
                        throw math_error("line contained in a smooth quartic");
                    int weight = hyper ? 2 : 1;
                    if (weight != mult) throw RetryCoords{};
                    std::optional<HyperflexClass> hc;
                    if (hyper) {
                        std::array<ExtScalar, 3> point = apply_matrix(M, P);
                        std::array<ExtScalar, 3> tangent = apply_matrix(Minv_t, T);
                        normalize_triple(point);
                        normalize_triple(tangent);
                        hc.emplace();
                        hc->modulus = *mod;
                        for (int t = 0; t < 3; ++t) {
                            hc->point[static_cast<std::size_t>(t)] = point[static_cast<std::size_t>(t)].value();
                            hc->tangent[static_cast<std::size_t>(t)] = tangent[static_cast<std::size_t>(t)].value();
                        }
                        hc->class_size = mod->degree();
                    }
                    // commit point: a ZeroDivisorSplit must not escape past an
                    // accumulation, or the retried halves would double-count
                    weighted += weight * mod->degree();
                    if (hc) classes.push_back(std::move(*hc));
                });
            }
            if (weighted != 24) throw math_error("weighted flex count must be 24");
            std::sort(classes.begin(), classes.end(), [](const HyperflexClass& a, const HyperflexClass& b) {
                auto key = [](const HyperflexClass& h) {
                    std::vector<Rational> k;
                    for (int i = 0; i <= h.modulus.degree(); ++i) k.push_back(h.modulus[i]);
                    for (const auto& p : h.point)
                        for (int i = 0; i <= p.degree(); ++i) k.push_back(p[i]);
                    return k;
                };
                return key(a) < key(b);
            });
            scan.hyperflexes = std::move(classes);
            for (const auto& hc : scan.hyperflexes) scan.hyperflex_count += hc.class_size;
            scan.weighted_flex_total = weighted;
            return scan;
        } catch (const RetryCoords&) {
            continue;
        }
    }
    throw budget_error("degenerate coordinates persist");
}

CuspReport cusp_report(const ValidatedSurface& v) {
    if (v.model.variant != SurfaceModel::Variant::WeierstrassDP1)
        throw validation_error("cusp report requires a degree-1 Weierstrass model");
    return CuspReport{weierstrass_cusp_entries(v.model.wa, v.model.wb)};
}

}  // namespace dplct
