#pragma once

// Euclidean Jordan algebra arithmetic for the three families the library
// works with, plus their finite direct sums:
//
//   - rank-1 products: R^p with the componentwise product,
//   - Lorentz algebras: R x R^{n-1} with (x,u)(y,v) = (xy + <u,v>, xv + yu),
//     whose cone is the forward light cone,
//   - real symmetric k x k matrices with x o y = (xy + yx)/2.
//
// Elements are plain coordinate vectors; every routine takes the Algebra that
// describes the coordinates.  Symmetric matrices are packed by upper triangle
// with off-diagonal entries scaled by sqrt(2), so the trace form tr(xy) is the
// Euclidean dot product of coordinates for every family except Lorentz, where
// it is twice the dot product.
//
// All geometry is floating point.  Where an identity has rational structure
// constants (rank-1 and Lorentz unit-vector products are small integers, hence
// exact in doubles) callers may rely on exact equality; everything else is
// checked against tolerances by the callers.

#include <Eigen/Dense>

#include "polyalg/rational.hpp"

#include <vector>

namespace jordan {

enum class Kind { Rank1Product, Lorentz, SymMatrices, DirectSum };

// One simple block of a direct sum.  Rank-1 products are kept as a single
// factor of rank p: every formula stated per factor (Gamma integrals, Pierce
// dimension d = 0) remains correct with that convention.
struct Factor {
  Kind kind;
  int dim;       // coordinate length of the block
  int rank;      // Jordan rank of the block
  int sym_size;  // matrix side length for SymMatrices, otherwise 0

  // Common dimension d of the off-diagonal Pierce spaces V_ij.
  int peirce_dim() const;
};

class Algebra {
 public:
  static Algebra rank1_product(int p);
  static Algebra lorentz(int n);  // n >= 2; simple for n >= 3
  static Algebra sym_matrices(int k);
  static Algebra direct_sum(const std::vector<Algebra>& parts);

  int dim() const { return n_; }
  int rank() const { return r_; }
  polyalg::Rational m() const { return polyalg::rat(n_, r_); }

  Kind kind() const {
    return factors_.size() == 1 ? factors_[0].kind : Kind::DirectSum;
  }
  const std::vector<Factor>& factors() const { return factors_; }
  int factor_offset(int i) const { return offsets_[i]; }

  // Simple as a Jordan algebra: one factor that has no proper ideal.
  bool simple() const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    if (a.factors_.size() != b.factors_.size()) return false;
    for (size_t i = 0; i < a.factors_.size(); ++i)
      if (a.factors_[i].kind != b.factors_[i].kind ||
          a.factors_[i].dim != b.factors_[i].dim)
        return false;
    return true;
  }
  friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }

 private:
  Algebra() = default;
  void finalize();

  std::vector<Factor> factors_;
  std::vector<int> offsets_;
  int n_ = 0;
  int r_ = 0;
};

// Packed symmetric coordinates: upper triangle row by row, off-diagonal
// entries scaled by sqrt(2).
inline int sym_dim(int k) { return k * (k + 1) / 2; }
int sym_index(int k, int i, int j);
Eigen::MatrixXd sym_unpack(const Eigen::VectorXd& c, int k);
Eigen::VectorXd sym_pack(const Eigen::MatrixXd& m);

Eigen::VectorXd identity(const Algebra& alg);
Eigen::VectorXd product(const Algebra& alg, const Eigen::VectorXd& x,
                        const Eigen::VectorXd& y);
double trace(const Algebra& alg, const Eigen::VectorXd& x);
double det(const Algebra& alg, const Eigen::VectorXd& x);

// Trace form (x|y) = tr(xy).  In packed coordinates it is the dot product,
// except on Lorentz blocks where tr doubles the scalar part.
double inner(const Algebra& alg, const Eigen::VectorXd& x, const Eigen::VectorXd& y);

// Multiplication operator L(x)y = xy; block-diagonal across factors.
Eigen::MatrixXd lmap(const Algebra& alg, const Eigen::VectorXd& x);

// Quadratic representation P(x) = 2 L(x)^2 - L(x^2).
Eigen::MatrixXd quad_rep(const Algebra& alg, const Eigen::VectorXd& x);

// Polarized form P(x,y) = L(x)L(y) + L(y)L(x) - L(xy), so P(x,x) = P(x).
Eigen::MatrixXd quad_rep_polarized(const Algebra& alg, const Eigen::VectorXd& x,
                                   const Eigen::VectorXd& y);

// Box operator x `box` y = L(xy) + [L(x), L(y)].
Eigen::MatrixXd box(const Algebra& alg, const Eigen::VectorXd& x,
                    const Eigen::VectorXd& y);

// Jordan inverse.  Rank-1: componentwise.  Lorentz: from the degree-2 minimal
// polynomial, x^{-1} = (2 x_1 e - x) / det(x).  Symmetric matrices: matrix
// inverse.  Throws on an exactly singular element; near-singular input is the
// caller's concern.
Eigen::VectorXd inverse(const Algebra& alg, const Eigen::VectorXd& x);

// Strict membership in the open cone: positive coordinates, forward light
// cone, positive definiteness, blockwise.
bool in_cone(const Algebra& alg, const Eigen::VectorXd& x);

// The unique square root in the cone of an element of the cone.
Eigen::VectorXd sqrt(const Algebra& alg, const Eigen::VectorXd& x);

// Spectral decomposition x = lambda1 c1 + lambda2 c2 on a single Lorentz
// factor: lambda_{1,2} = x_1 +- |u|, c_{1,2} = (1, +-u/|u|)/2, with the frame
// fixed along the first cross-section direction when u = 0.
struct SpectralRank2 {
  double lambda1, lambda2;  // lambda1 >= lambda2
  Eigen::VectorXd c1, c2;   // Jordan frame
};
SpectralRank2 spectral_rank2(const Algebra& alg, const Eigen::VectorXd& x);

// Polar factorization g = P(x) k of a cone-preserving map, where x is the
// cone square root of g e and k is orthogonal with k e = e.
struct PolarDecomposition {
  Eigen::VectorXd x;
  Eigen::MatrixXd k;
};
PolarDecomposition polar_decompose(const Algebra& alg, const Eigen::MatrixXd& g);

}  // namespace jordan
