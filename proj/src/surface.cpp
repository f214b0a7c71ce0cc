#include "dplct/surface.hpp"

#include <algorithm>
#include <cstdint>

#include "dplct/factor.hpp"
#include "dplct/linalg.hpp"

namespace dplct {

SurfaceModel SurfaceModel::blowup(std::vector<BlowupPoint> pts, std::optional<QPoly> ext) {
    SurfaceModel m;
    m.variant = Variant::BlowupPlane;
    m.points = std::move(pts);
    m.extension = std::move(ext);
    return m;
}

SurfaceModel SurfaceModel::double_cover(TernaryForm quartic) {
    SurfaceModel m;
    m.variant = Variant::DoubleCoverQuartic;
    m.branch = std::move(quartic);
    return m;
}

SurfaceModel SurfaceModel::weierstrass(BinaryForm a, BinaryForm b) {
    SurfaceModel m;
    m.variant = Variant::WeierstrassDP1;
    m.wa = std::move(a);
    m.wb = std::move(b);
    return m;
}

std::string surface_type_name(SurfaceType t) {
    switch (t) {
        case SurfaceType::P2: return "P2";
        case SurfaceType::P1xP1: return "P1xP1";
        case SurfaceType::F1: return "F1";
        case SurfaceType::BlowupGeneral: return "BlowupGeneral";
        case SurfaceType::DP2: return "DP2";
        case SurfaceType::DP1Smooth: return "DP1Smooth";
        case SurfaceType::DP1DuVal: return "DP1DuVal";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Resultants and interpolation.

Rational resultant_univariate(const QPoly& f, const QPoly& g) {
    if (f.is_zero() || g.is_zero()) throw math_error("resultant of zero polynomial");
    const int m = f.degree(), n = g.degree();
    if (m == 0) {
        Rational acc(1);
        for (int i = 0; i < n; ++i) acc *= f[0];
        return acc;
    }
    if (n == 0) {
        Rational acc(1);
        for (int i = 0; i < m; ++i) acc *= g[0];
        return acc;
    }
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Rational>> mat(size, std::vector<Rational>(size, Rational(0)));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j)
            mat[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] = f[m - j];
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j)
            mat[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + j)] = g[n - j];
    return det_rational(std::move(mat));
}

namespace {

QPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& pts) {
    QPoly acc;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        QPoly basis(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            basis = basis * QPoly(std::vector<Rational>{-pts[j].first, Rational(1)});
            denom *= pts[i].first - pts[j].first;
        }
        acc = acc + basis.scaled(pts[i].second / denom);
    }
    return acc;
}

Rational sample_x(int k) {
    // 0, 1, -1, 2, -2, ...
    if (k == 0) return Rational(0);
    int half = (k + 1) / 2;
    return Rational(k % 2 == 1 ? half : -half);
}

}  // namespace

BinaryForm resultant_z(const TernaryForm& F, const TernaryForm& G) {
    const int p = F.degree(), q = G.degree();
    if (F.coeff(0, 0, p).is_zero() || G.coeff(0, 0, q).is_zero())
        throw math_error("resultant_z requires full z-degree with constant leading coefficient");
    const int D = p * q;
    std::vector<std::pair<Rational, Rational>> pts;
    for (int k = 0; k <= D; ++k) {
        Rational x0 = sample_x(k);
        QPoly fz = F.specialize_xy(x0, Rational(1));
        QPoly gz = G.specialize_xy(x0, Rational(1));
        pts.emplace_back(x0, resultant_univariate(fz, gz));
    }
    QPoly P = lagrange_interpolate(pts);
    return BinaryForm::homogenized(P, D);
}

// ---------------------------------------------------------------------------
// Deterministic coordinate changes.

std::array<std::array<Rational, 3>, 3> seeded_coordinate_change(int attempt) {
    std::array<std::array<Rational, 3>, 3> m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rational(i == j ? 1 : 0);
    if (attempt == 0) return m;
    // compose elementary shears driven by a fixed linear congruential stream
    std::uint64_t state = 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(attempt + 1);
    auto next = [&state]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<int>((state >> 33) % 3);
    };
    for (int step = 0; step < 4; ++step) {
        int i = next(), j = next();
        if (i == j) j = (j + 1) % 3;
        long c = 1 + next();
        // row_i += c * row_j
        for (int k = 0; k < 3; ++k)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +=
                Rational(c) * m[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    }
    return m;
}

std::array<std::array<Rational, 3>, 3> invert_3x3(const std::array<std::array<Rational, 3>, 3>& m) {
    auto det2 = [&](int r0, int r1, int c0, int c1) {
        return m[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c0)] * m[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)] -
               m[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c1)] * m[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c0)];
    };
    Rational det = m[0][0] * det2(1, 2, 1, 2) - m[0][1] * det2(1, 2, 0, 2) + m[0][2] * det2(1, 2, 0, 1);
    if (det.is_zero()) throw math_error("singular coordinate change");
    std::array<std::array<Rational, 3>, 3> inv{};
    int idx[3][2] = {{1, 2}, {0, 2}, {0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational c = det2(idx[j][0], idx[j][1], idx[i][0], idx[i][1]);
            if ((i + j) % 2 == 1) c = -c;
            inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c / det;
        }
    return inv;
}

// ---------------------------------------------------------------------------
// Quartic smoothness.

namespace {

bool good_quartic_coords(const TernaryForm& f) {
    return !f.coeff(0, 0, 4).is_zero() && !f.coeff(1, 0, 3).is_zero() && !f.coeff(0, 1, 3).is_zero();
}

// Do the three partials share a root over the shadow (x0:y0)?
bool partials_share_root_at(const TernaryForm& fx, const TernaryForm& fy, const TernaryForm& fz,
                            const BinaryForm& shadow_factor) {
    if (shadow_factor.degree() == 1 && shadow_factor.t_order() == 1) {
        // root (1:0)
        QPoly px = fx.specialize_xy(Rational(1), Rational(0));
        QPoly py = fy.specialize_xy(Rational(1), Rational(0));
        QPoly pz = fz.specialize_xy(Rational(1), Rational(0));
        return gcd_poly(gcd_poly(px, py), pz).degree() >= 1;
    }
    QPoly mod = shadow_factor.dehomogenized();
    auto mptr = ExtScalar::make_modulus(mod);
    ExtScalar x0 = ExtScalar::generator(mptr);
    ExtScalar y0 = ExtScalar::from_rational(mptr, Rational(1));
    UPoly<ExtScalar> px = fx.specialize_xy(x0, y0);
    UPoly<ExtScalar> py = fy.specialize_xy(x0, y0);
    UPoly<ExtScalar> pz = fz.specialize_xy(x0, y0);
    return gcd_poly(gcd_poly(px, py), pz).degree() >= 1;
}

}  // namespace

void check_quartic_smooth(const TernaryForm& f, std::vector<std::string>& notes) {
    if (f.degree() != 4 || f.is_zero()) throw validation_error("branch must be a nonzero quartic");
    for (int attempt = 0; attempt < 8; ++attempt) {
        TernaryForm g = attempt == 0 ? f : f.linear_change(seeded_coordinate_change(attempt));
        if (!good_quartic_coords(g)) continue;
        if (attempt > 0)
            notes.push_back("smoothness checked after deterministic coordinate change #" +
                            std::to_string(attempt));
        TernaryForm gx = g.partial(0), gy = g.partial(1), gz = g.partial(2);
        BinaryForm r1 = resultant_z(gx, gy);
        BinaryForm r2 = resultant_z(gx, gz);
        if (r1.is_zero() || r2.is_zero()) throw validation_error("branch curve singular");
        BinaryForm common = gcd_binary(r1, r2);
        if (common.degree() >= 1) {
            for (const auto& [factor, mult] : factor_binary_form(common).factors) {
                if (partials_share_root_at(gx, gy, gz, factor))
                    throw validation_error("branch curve singular");
            }
        }
        return;  // smooth
    }
    throw budget_error("degenerate coordinates persist");
}

// ---------------------------------------------------------------------------
// Weierstrass classification.

std::vector<CuspEntry> weierstrass_cusp_entries(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero() && b.is_zero()) throw validation_error("a and b cannot both vanish");
    BinaryForm common = a.is_zero() ? b : (b.is_zero() ? a : gcd_binary(a, b));
    std::vector<CuspEntry> out;
    if (common.degree() == 0) return out;
    for (const auto& [p, mult] : factor_binary_form(common).factors) {
        CuspEntry e;
        e.factor = p;
        e.ord_a = a.is_zero() ? -1 : order_of_factor(a, p);
        e.ord_b = b.is_zero() ? -1 : order_of_factor(b, p);
        const bool a_high = e.ord_a == -1 || e.ord_a >= 2;
        const bool b_high = e.ord_b == -1 || e.ord_b >= 2;
        if (e.ord_b == 1) {
            e.site = CuspSite::SmoothPoint;  // Kodaira II fiber
        } else if (e.ord_a == 1 && b_high) {
            e.site = CuspSite::A1;  // Kodaira III
        } else if (a_high && e.ord_b == 2) {
            e.site = CuspSite::A2;  // Kodaira IV
        } else {
            throw validation_error("singularity outside A1/A2 scope");
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<Singularity> weierstrass_nodal_singularities(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm disc = a.pow(3).scaled(Rational(4)) + b.pow(2).scaled(Rational(27));
    if (disc.is_zero()) throw validation_error("discriminant vanishes identically");
    std::vector<Singularity> out;
    for (const auto& [p, mult] : factor_binary_form(disc).factors) {
        if (mult < 2) continue;
        bool divides_a = a.is_zero() || order_of_factor(a, p) >= 1;
        bool divides_b = b.is_zero() || order_of_factor(b, p) >= 1;
        if (divides_a && divides_b) continue;  // additive fiber, classified by the cusp table
        if (mult == 2) {
            out.push_back(Singularity{DuValType::A1, p});
        } else if (mult == 3) {
            out.push_back(Singularity{DuValType::A2, p});
        } else {
            throw validation_error("singularity outside A1/A2 scope");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Blow-up validation.

namespace {

template <class K>
void validate_points_over(const std::vector<std::pair<K, K>>& pts, const K& ctx) {
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (field_traits<K>::is_zero(pts[i].first - pts[j].first) &&
                field_traits<K>::is_zero(pts[i].second - pts[j].second))
                throw validation_error("blow-up points must be pairwise distinct");
        }
    K one = field_traits<K>::one(ctx);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                std::vector<std::vector<K>> m{{pts[i].first, pts[i].second, one},
                                              {pts[j].first, pts[j].second, one},
                                              {pts[k].first, pts[k].second, one}};
                if (field_traits<K>::is_zero(det_guarded(std::move(m), ctx)))
                    throw validation_error("not del Pezzo: general position violated (collinear triple)");
            }
    if (n == 6) {
        std::vector<std::vector<K>> m;
        for (const auto& [x, y] : pts)
            m.push_back({x * x, x * y, y * y, x, y, one});
        if (field_traits<K>::is_zero(det_guarded(std::move(m), ctx)))
            throw validation_error("not del Pezzo: general position violated (six points on a conic)");
    }
}

void validate_blowup(const SurfaceModel& model) {
    const std::size_t n = model.points.size();
    if (n < 1 || n > 6) throw validation_error("blow-up point count must be between 1 and 6");
    if (!model.extension) {
        std::vector<std::pair<Rational, Rational>> pts;
        for (const auto& p : model.points) {
            if (p.x.degree() > 0 || p.y.degree() > 0)
                throw validation_error("point coordinates use a generator but no extension was given");
            Rational x = p.x.is_zero() ? Rational(0) : p.x[0];
            Rational y = p.y.is_zero() ? Rational(0) : p.y[0];
            pts.emplace_back(x, y);
        }
        validate_points_over(pts, Rational(0));
        return;
    }
    const QPoly& q = *model.extension;
    if (q.degree() < 1) throw validation_error("extension modulus must have degree >= 1");
    if (gcd_poly(q, q.derivative()).degree() != 0)
        throw validation_error("extension modulus must be squarefree");
    for (const auto& p : model.points)
        if (p.x.degree() >= q.degree() || p.y.degree() >= q.degree())
            throw validation_error("point coordinates must be reduced modulo the extension");
    int accepted = 0, rejected = 0;
    std::string reason;
    for_each_split(q, [&](const std::shared_ptr<const QPoly>& m) {
        std::vector<std::pair<ExtScalar, ExtScalar>> pts;
        for (const auto& p : model.points)
            pts.emplace_back(ExtScalar(m, p.x), ExtScalar(m, p.y));
        try {
            validate_points_over(pts, ExtScalar::from_rational(m, Rational(0)));
            ++accepted;
        } catch (const validation_error& e) {
            ++rejected;
            if (reason.empty()) reason = e.what();
        }
    });
    if (rejected > 0 && accepted > 0)
        throw validation_error("general position holds only in some specializations of the extension");
    if (rejected > 0) throw validation_error(reason);
}

}  // namespace

ValidatedSurface validate(const SurfaceModel& model) {
    ValidatedSurface v;
    v.model = model;
    switch (model.variant) {
        case SurfaceModel::Variant::Plane:
            v.degree = 9;
            v.type = SurfaceType::P2;
            return v;
        case SurfaceModel::Variant::QuadricProduct:
            v.degree = 8;
            v.type = SurfaceType::P1xP1;
            return v;
        case SurfaceModel::Variant::BlowupPlane: {
            validate_blowup(model);
            v.degree = 9 - static_cast<int>(model.points.size());
            v.type = model.points.size() == 1 ? SurfaceType::F1 : SurfaceType::BlowupGeneral;
            return v;
        }
        case SurfaceModel::Variant::DoubleCoverQuartic: {
            check_quartic_smooth(model.branch, v.notes);
            v.degree = 2;
            v.type = SurfaceType::DP2;
            return v;
        }
        case SurfaceModel::Variant::WeierstrassDP1: {
            if (!model.wa.is_zero() && model.wa.degree() != 4)
                throw validation_error("a must be homogeneous of degree 4 (or zero)");
            if (!model.wb.is_zero() && model.wb.degree() != 6)
                throw validation_error("b must be homogeneous of degree 6 (or zero)");
            if (model.wa.is_zero() && model.wb.is_zero())
                throw validation_error("a and b cannot both vanish");
            BinaryForm disc = model.wa.pow(3).scaled(Rational(4)) + model.wb.pow(2).scaled(Rational(27));
            if (disc.is_zero()) throw validation_error("discriminant vanishes identically");
            auto cusps = weierstrass_cusp_entries(model.wa, model.wb);
            auto nodal = weierstrass_nodal_singularities(model.wa, model.wb);
            for (const auto& e : cusps) {
                if (e.site == CuspSite::A1) v.singularities.push_back({DuValType::A1, e.factor});
                if (e.site == CuspSite::A2) v.singularities.push_back({DuValType::A2, e.factor});
            }
            for (auto& s : nodal) v.singularities.push_back(std::move(s));
            std::sort(v.singularities.begin(), v.singularities.end(),
                      [](const Singularity& a, const Singularity& b) { return a.location < b.location; });
            v.degree = 1;
            v.type = v.singularities.empty() ? SurfaceType::DP1Smooth : SurfaceType::DP1DuVal;
            return v;
        }
    }
    throw math_error("unknown surface variant");
}

int degree(const ValidatedSurface& v) { return v.degree; }

}  // namespace dplct
