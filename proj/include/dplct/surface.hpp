#ifndef DPLCT_SURFACE_HPP
#define DPLCT_SURFACE_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dplct/binary_form.hpp"
#include "dplct/ext_scalar.hpp"
#include "dplct/ternary.hpp"

namespace dplct {

/// Plane point with coordinates in Q or in the model's shared extension;
/// rational coordinates are degree-0 polynomials in the generator.
struct BlowupPoint {
    QPoly x, y;
};

struct SurfaceModel {
    enum class Variant { Plane, QuadricProduct, BlowupPlane, DoubleCoverQuartic, WeierstrassDP1 };

    Variant variant = Variant::Plane;

    // BlowupPlane
    std::vector<BlowupPoint> points;
    std::optional<QPoly> extension;  // monic squarefree; absent means Q

    // DoubleCoverQuartic
    TernaryForm branch{0};

    // WeierstrassDP1: w^2 = z^3 + a(s,t) z + b(s,t), a of degree 4 (or zero),
    // b of degree 6 (or zero), not both zero
    BinaryForm wa = BinaryForm::zero_of_degree(4);
    BinaryForm wb = BinaryForm::zero_of_degree(6);

    static SurfaceModel plane() { return SurfaceModel{}; }
    static SurfaceModel quadric_product() {
        SurfaceModel m;
        m.variant = Variant::QuadricProduct;
        return m;
    }
    static SurfaceModel blowup(std::vector<BlowupPoint> pts, std::optional<QPoly> ext = std::nullopt);
    static SurfaceModel double_cover(TernaryForm quartic);
    static SurfaceModel weierstrass(BinaryForm a, BinaryForm b);
};

enum class SurfaceType { P2, P1xP1, F1, BlowupGeneral, DP2, DP1Smooth, DP1DuVal };

std::string surface_type_name(SurfaceType t);

enum class DuValType { A1, A2 };

struct Singularity {
    DuValType type;
    BinaryForm location;  // irreducible factor of the fiber coordinate
};

struct ValidatedSurface {
    SurfaceModel model;
    int degree = 9;
    SurfaceType type = SurfaceType::P2;
    std::vector<Singularity> singularities;  // nonempty only for DP1DuVal
    std::vector<std::string> notes;          // e.g. recorded coordinate changes
};

/// Checks the geometric preconditions and computes degree, type and (for
/// degree 1) the Du Val singularity data. Throws validation_error on
/// rejection.
ValidatedSurface validate(const SurfaceModel& model);

int degree(const ValidatedSurface& v);

// Shared with the detectors module ------------------------------------------

/// Resultant of F and G with respect to z, computed by specialization and
/// interpolation. Both forms must have a nonzero constant coefficient at
/// their full z-power (checked), so the result is a binary form in (x,y) of
/// degree deg(F) * deg(G).
BinaryForm resultant_z(const TernaryForm& F, const TernaryForm& G);

Rational resultant_univariate(const QPoly& f, const QPoly& g);

/// Deterministic unimodular coordinate changes used by the degenerate-
/// coordinate retries; attempt 0 is the identity.
std::array<std::array<Rational, 3>, 3> seeded_coordinate_change(int attempt);
std::array<std::array<Rational, 3>, 3> invert_3x3(const std::array<std::array<Rational, 3>, 3>& m);

/// Smoothness test for a plane quartic; returns the retry count used and
/// appends notes. Throws validation_error when singular.
void check_quartic_smooth(const TernaryForm& f, std::vector<std::string>& notes);

/// Kodaira-style site of a cuspidal fiber in the Weierstrass model.
enum class CuspSite { SmoothPoint, A1, A2 };

struct CuspEntry {
    BinaryForm factor;  // irreducible
    int ord_a = 0;      // -1 means infinity (a identically zero)
    int ord_b = 0;      // -1 means infinity (b identically zero)
    CuspSite site = CuspSite::SmoothPoint;
};

/// Classification of the additive fibers; also drives validate() for the
/// degree-1 model. Rejects patterns outside the A1/A2 scope.
std::vector<CuspEntry> weierstrass_cusp_entries(const BinaryForm& a, const BinaryForm& b);

/// A1/A2 singularities coming from multiple nodal fibers (multiplicity 2 or 3
/// roots of the discriminant away from the additive locus).
std::vector<Singularity> weierstrass_nodal_singularities(const BinaryForm& a, const BinaryForm& b);

}  // namespace dplct

#endif
