#pragma once

// Stratification of a symmetric cone over a subcone.
//
// Let V_1 be a unital subalgebra of V_2 whose trace forms satisfy
// (x|y)_2 = (r_2/r_1) (x|y)_1 on V_1, and let X be the bounded convex set
// { u in the orthocomplement of V_1 : e + u in cone_2 }.  The map
//
//   iota(t, u) = (r_1/r_2) P_2(eta(t)^{1/2}) (e + u)
//
// is a diffeomorphism from cone_1 x X onto cone_2, where eta embeds V_1 into
// V_2 and P_2 is the quadratic representation.  Along it,
//
//   tr_2(iota(t, u)) = tr_1(t),
//   det_2(iota(t, u)) = (r_1/r_2)^{r_2} det_2(eta(t)) det_2(e + u),
//
// so the prefactor drops out of the determinant identity exactly when the
// ranks agree.  Three concrete chart geometries are provided:
//
//   EqualRankLorentz   R x R^{n-p-1} as the leading coordinates of
//                      R x R^{n-1}.  X is the open unit ball B^p with
//                      u(v) = (0, .., 0, -v) (the chart absorbs the symmetry
//                      v -> -v), iota(x, v) = (x, -det_1(x)^{1/2} v), and the
//                      chart Jacobian is det_1(x)^{p/2}.
//
//   DiagonalProduct    V embedded diagonally in V^p.  The parameter vector v
//                      holds p-1 blocks v_k in V subject to e + v_k and
//                      e - (v_1 + .. + v_{p-1}) in the cone of V,
//                      iota(t, v) = (P(t^{1/2})(e + v_1), .., P(t^{1/2})(e - |v|)) / p,
//                      with chart Jacobian det_1(t)^{(p-1) n/r} / p^{(p-1) n}.
//
//   ScalarLine         R e inside a second algebra.  For a componentwise
//                      product of p copies of R the chart is the simplex-type
//                      one, iota(t, v) = (t(1+v_1), .., t(1-|v|)) / p, the
//                      p = dim case of DiagonalProduct, with Jacobian
//                      t^{p-1} / p^{p-1}.  For a simple algebra the chart is
//                      polar, iota(t, v) = (t/r_2)(e + B v) with B an
//                      orthonormal coordinate basis of the orthocomplement of
//                      e, and the Jacobian is |e| t^{n_2 - 1} / r_2^{n_2}.
//
// All determinants, traces and cones refer to the jordan module; measures are
// the ones induced by the trace inner products.

#include "jordan/algebra.hpp"

#include <Eigen/Dense>

namespace cones {

enum class EmbeddingKind { EqualRankLorentz, DiagonalProduct, ScalarLine };

// A point of cone_1 x X in chart coordinates: t lies in the inner cone (inner
// algebra coordinates) and v parameterizes the stratification fiber.
struct StratCoords {
  Eigen::VectorXd t;
  Eigen::VectorXd v;
};

class ConeEmbedding {
 public:
  // Leading n-p coordinates of the rank-two algebra R x R^{n-1}; requires
  // n - p >= 2 and p >= 1 so both algebras keep rank two.
  static ConeEmbedding equal_rank_lorentz(int n, int p);

  // base embedded diagonally into the direct sum of p >= 1 copies of itself.
  static ConeEmbedding diagonal_product(const jordan::Algebra& base, int p);

  // R e inside outer; outer must be a componentwise product (simplex-type
  // chart) or simple (polar chart).
  static ConeEmbedding scalar_line(const jordan::Algebra& outer);

  // Embed a direct sum by repeating its i-th factor copies[i] times.  The
  // trace forms satisfy (x|y)_2 = mu (x|y)_1 for a single scalar mu only when
  // every factor is repeated the same number of times, so uneven replication
  // (V + W into V + V + W, say) is rejected.  Accepted input is returned in
  // the diagonal layout.
  static ConeEmbedding factor_replication(const jordan::Algebra& inner,
                                          const std::vector<int>& copies);

  EmbeddingKind kind() const { return kind_; }
  const jordan::Algebra& inner() const { return inner_; }
  const jordan::Algebra& outer() const { return outer_; }

  // Length of the chart parameter vector v.
  int strat_dim() const;

  // eta(t): outer coordinates of an inner element.
  Eigen::VectorXd embed(const Eigen::VectorXd& t) const;

  // u(v): outer coordinates of the fiber parameter, the element of the
  // orthocomplement of V_1 with iota(t, v) = (r_1/r_2) P_2(eta(t)^{1/2}) (e + u(v)).
  Eigen::VectorXd lift(const Eigen::VectorXd& v) const;

  // Fiber parameter of an element of the orthocomplement; inverse of lift.
  Eigen::VectorXd unlift(const Eigen::VectorXd& u) const;

 private:
  ConeEmbedding(EmbeddingKind kind, jordan::Algebra inner, jordan::Algebra outer);
  void validate_subalgebra() const;

  EmbeddingKind kind_;
  jordan::Algebra inner_;
  jordan::Algebra outer_;
  Eigen::MatrixXd polar_basis_;  // ScalarLine over a simple algebra only
};

// True iff e + u(v) lies in the outer cone: the open unit ball for the
// Lorentz chart, 1 + v_k > 0 and 1 - |v| > 0 for the simplex-type chart, and
// the corresponding cone conditions blockwise for DiagonalProduct.
bool in_strat_space(const ConeEmbedding& emb, const Eigen::VectorXd& v);

// Throws std::domain_error unless t is in the inner cone and v in the fiber.
Eigen::VectorXd strat_forward(const ConeEmbedding& emb, const StratCoords& c);

// Throws std::domain_error unless x is in the outer cone.
StratCoords strat_inverse(const ConeEmbedding& emb, const Eigen::VectorXd& x);

// Determinant of the chart differential at (t, v), with respect to plain
// coordinate volume on both sides (the trace-form volumes rescale source and
// target equally, so the value is the same in that convention).
double strat_jacobian(const ConeEmbedding& emb, const StratCoords& c);

// The two sides of the determinant and trace identities along the chart.
// The trace sides agree for every chart; the determinant sides agree for
// equal-rank charts and differ by (r_1/r_2)^{r_2} in general.
struct StratIdentities {
  double det_lhs;    // det_2(iota(t, v))
  double det_rhs;    // det_2(eta(t)) det_2(e + u(v))
  double trace_lhs;  // tr_2(iota(t, v))
  double trace_rhs;  // tr_1(t)
};
StratIdentities strat_identities_check(const ConeEmbedding& emb, const StratCoords& c);

// Fiber volume for the weight det_2(e + u)^{lambda - n_2/r_2}:
//   V_X(lambda) = int_X det_2(e + u)^{lambda - n_2/r_2} du
// over the trace-form Lebesgue measure of the orthocomplement, evaluated by
// ball quadrature.  For equal-rank embeddings it satisfies
// gamma_cone(outer, lambda) = V_X(lambda) gamma_cone(inner, lambda).
// pre: EqualRankLorentz kind, lambda > (n_2 - 2)/2.
double volume_strat_space(const ConeEmbedding& emb, double lambda);

// Compensating rotation of a cone-preserving map g at the base point t:
//   k = P((g t)^{-1/2}) g P(t^{1/2})
// on the inner algebra.  k fixes the identity and is orthogonal; it measures
// how g twists the fiber while moving the base point.  Throws
// std::domain_error unless t and g t lie in the inner cone.
Eigen::MatrixXd k_compensator(const ConeEmbedding& emb, const Eigen::MatrixXd& g,
                              const Eigen::VectorXd& t);

}  // namespace cones
