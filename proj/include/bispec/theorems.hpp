#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bispec/ansatz.hpp"
#include "bispec/operators.hpp"

namespace bispec {

/// One affine reference: coeff * entry(deg, row, col).
struct AffineRef {
    GR coeff;
    int deg, row, col;
};

/// entry(deg, row, col) == sum of the referenced entries.
struct EntryConstraint {
    int deg, row, col;
    std::vector<AffineRef> rhs;
};

/// Closed-form description of an eigenvalue algebra: every coefficient entry
/// below `threshold` either is free or satisfies one affine constraint;
/// degrees >= threshold are entirely free. Encoded as data so the
/// transcription stays auditable.
struct GammaSpec {
    std::string id;
    int n = 0;
    Var var = Var::x;
    int threshold = 0;
    std::vector<EntryConstraint> constraints;
};

struct Membership {
    bool ok = false;
    std::vector<std::tuple<int, int, int>> violations; ///< (deg, row, col)
};

/// Checks every constraint (entries beyond deg(p) count as zero).
Membership gamma_membership(const GammaSpec& spec, const MatPoly& p);

/// Degree-d truncation of the algebra: solutions of the constraints at
/// degrees <= d. Dimension equals the free-parameter count through degree d.
AlgebraSlice gamma_slice(const GammaSpec& spec, int d);

/// Elements of the algebra with degree <= d: all constraints imposed, entries
/// above d pinned to zero. A strict subspace of gamma_slice below threshold.
AlgebraSlice gamma_member_slice(const GammaSpec& spec, int d);

/// Bundled bispectral triple with its closed-form algebra description.
struct ExampleEntry {
    std::string id;
    int n = 0;
    FactorBasisPtr basis;
    WaveFunction psi;
    LeftOperator l;
    RightOperator b;
    MatPoly f;     ///< right eigenvalue of L psi = psi F
    MatPoly theta; ///< left eigenvalue of psi B = theta psi
    GammaSpec gamma;
    Side gamma_side = Side::Right; ///< which slice the closed form describes
};

const std::vector<ExampleEntry>& catalog();
const ExampleEntry& example(const std::string& id);

/// Optional literal-transcription variant toggles for the gamma encodings.
GammaSpec gamma_spec_ex2_free_entry(); ///< degree-4 (3,2) entry left free

struct TheoremReport {
    std::string id;
    int degree = 0;
    std::vector<int> solver_dims; ///< per degree 0..d
    std::vector<int> gamma_dims;
    std::vector<int> mismatch_degrees;
    bool equal = false;
    bool fallback_run = false;
    std::vector<int> fallback_gamma_dims;
    std::vector<int> fallback_mismatch_degrees;
    bool fallback_equal = false;
    StabilizeReport stabilization;
};

/// Compares the stabilized solver slice against the closed form at every
/// degree 0..d (canonical-basis equality). For ex2, a mismatch confined to
/// degrees >= 4 triggers the free-(3,2)-entry variant and reports both.
TheoremReport validate_theorem(const std::string& id, int d);

} // namespace bispec
