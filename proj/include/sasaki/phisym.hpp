#pragma once

#include <cstdint>

#include "sasaki/families.hpp"

namespace sasaki {

/// g = h (+) m with h = R xi and m = ker eta.
struct ReductiveDecomposition {
  Subspace h;
  Subspace m;

  static ReductiveDecomposition standard(const ContactMetricStructure& s,
                                         const Tolerance& tol = {});

  /// Component of v in m along the direct sum.
  Vector project_m(const Vector& v) const;
};

/// U: m x m -> m with 2<U(X,Y),Z> = <[Z,X]_m, Y> + <[Z,Y]_m, X> for Z in m.
Vector u_operator(const MetricLieAlgebra& m, const ReductiveDecomposition& split,
                  const Vector& x, const Vector& y, const Tolerance& tol = {});

/// Conditions for the invariant distribution of n to be parallel:
/// [g, h+n] in h+n, U(m, n) in n, and [h, n] in n.
VerificationReport check_parallel_lemma(const MetricLieAlgebra& m,
                                        const ReductiveDecomposition& split, const Subspace& n,
                                        const Tolerance& tol = {});

/// Homogeneous-space connection on m: -1/2 [X,Y]_m + U(X,Y).
Vector reductive_connection(const MetricLieAlgebra& m, const ReductiveDecomposition& split,
                            const Vector& x, const Vector& y, const Tolerance& tol = {});

struct ProductSplitResult {
  double lambda = 0.0;
  double mu = 0.0;
  VerificationReport report;
};

/// For A1/A2/B1/B2: the base splits as a metric product of the planes
/// span{e1,e2} and span{e3,e4}; lambda and mu are their constant sectional
/// curvatures, compared against the closed forms per family.
ProductSplitResult verify_product_split(const FamilySpec& spec, const Tolerance& tol = {});

/// Data of the solvable ideal model for A3/A4/B3/B4, in coordinates of the
/// ideal basis E1..E4 (columns of e).
struct SolvableModelData {
  Matrix e;            // 5x4, ideal basis in algebra coordinates
  LieAlgebra ideal;    // 4-dim bracket table in E-coordinates
  Matrix gbar;         // transported metric on the ideal
  Matrix j;            // transported complex structure on the ideal
  Vector a0;           // E-coordinates
  Vector ja0;          // E-coordinates
  Subspace a1;         // E-coordinates, span{E3, E4}
  Subspace a2;         // E-coordinates, span{J A0}
  double lambda = 0.0;
  Matrix s0;           // skew derivation, E-coordinates
  double ideal_residual = 0.0;
};

SolvableModelData build_solvable_model(const FamilySpec& spec, const Tolerance& tol = {});

/// The displayed bracket relations of the solvable model: [A0,X] = lambda X + S0 X,
/// [A0,JA0] = 2 lambda JA0, [X,Y] = 2 lambda gbar(JX,Y) JA0, [X,JA0] = 0,
/// plus skewness of S0 and S0(JA0) = 0.
VerificationReport verify_heintze_relations(const SolvableModelData& data,
                                            const Tolerance& tol = {});

struct ModelFit {
  double alpha = 0.0;
  double relative_residual = 0.0;
  double variant_sign = -1.0;  // sign of the 2g(X,JY)JZ model term that fit
};

/// One-parameter least-squares fit of a 4-index tensor (orthonormal frame)
/// against the constant-holomorphic-sectional-curvature model with complex
/// structure j. Both sign variants are attempted; ModelMismatch when neither
/// reaches the relative tolerance.
ModelFit fit_constant_holomorphic_model(const CurvatureTensor& tensor, const Matrix& j,
                                        const Tolerance& tol = {});

struct SpaceFormFit {
  double alpha = 0.0;
  ONeillVariant variant = ONeillVariant::standard;
  VerificationReport report;
};

/// Fits the base curvature of A3/A4/B3/B4 against the constant-holomorphic-
/// sectional-curvature model tensor (both sign variants of the 2g(X,JY)JZ
/// term attempted) and checks K(X, JX) is constant over random samples.
SpaceFormFit verify_space_form_base(const FamilySpec& spec, std::uint64_t seed = 0,
                                    const Tolerance& tol = {});

}  // namespace sasaki
