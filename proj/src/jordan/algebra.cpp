#include "jordan/algebra.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace jordan {

int Factor::peirce_dim() const {
  switch (kind) {
    case Kind::Rank1Product:
      return 0;
    case Kind::Lorentz:
      return dim - 2;
    case Kind::SymMatrices:
      return 1;
    default:
      throw std::logic_error("peirce_dim: composite factor");
  }
}

void Algebra::finalize() {
  offsets_.clear();
  n_ = 0;
  r_ = 0;
  for (const Factor& f : factors_) {
    offsets_.push_back(n_);
    n_ += f.dim;
    r_ += f.rank;
  }
}

Algebra Algebra::rank1_product(int p) {
  if (p < 1) throw std::invalid_argument("rank1_product: p >= 1 required");
  Algebra a;
  a.factors_.push_back({Kind::Rank1Product, p, p, 0});
  a.finalize();
  return a;
}

Algebra Algebra::lorentz(int n) {
  if (n < 2) throw std::invalid_argument("lorentz: n >= 2 required");
  Algebra a;
  a.factors_.push_back({Kind::Lorentz, n, 2, 0});
  a.finalize();
  return a;
}

Algebra Algebra::sym_matrices(int k) {
  if (k < 1) throw std::invalid_argument("sym_matrices: k >= 1 required");
  Algebra a;
  a.factors_.push_back({Kind::SymMatrices, sym_dim(k), k, k});
  a.finalize();
  return a;
}

Algebra Algebra::direct_sum(const std::vector<Algebra>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum: empty list");
  Algebra a;
  for (const Algebra& p : parts)
    a.factors_.insert(a.factors_.end(), p.factors_.begin(), p.factors_.end());
  a.finalize();
  return a;
}

bool Algebra::simple() const {
  if (factors_.size() != 1) return false;
  const Factor& f = factors_[0];
  switch (f.kind) {
    case Kind::Rank1Product:
      return f.dim == 1;
    case Kind::Lorentz:
      return f.dim >= 3;  // R x R splits as two ideals
    case Kind::SymMatrices:
      return true;
    default:
      return false;
  }
}

int sym_index(int k, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * k - i * (i - 1) / 2 + (j - i);
}

Eigen::MatrixXd sym_unpack(const Eigen::VectorXd& c, int k) {
  Eigen::MatrixXd m(k, k);
  const double s = std::sqrt(2.0);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      double v = c(sym_index(k, i, j));
      if (i != j) v /= s;
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

Eigen::VectorXd sym_pack(const Eigen::MatrixXd& m) {
  const int k = static_cast<int>(m.rows());
  Eigen::VectorXd c(sym_dim(k));
  const double s = std::sqrt(2.0);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j)
      c(sym_index(k, i, j)) = (i == j) ? m(i, i) : s * m(i, j);
  return c;
}

Eigen::VectorXd identity(const Algebra& alg) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(alg.dim());
  for (size_t f = 0; f < alg.factors().size(); ++f) {
    const Factor& fac = alg.factors()[f];
    const int off = alg.factor_offset(static_cast<int>(f));
    switch (fac.kind) {
      case Kind::Rank1Product:
        e.segment(off, fac.dim).setOnes();
        break;
      case Kind::Lorentz:
        e(off) = 1.0;
        break;
      case Kind::SymMatrices:
        for (int i = 0; i < fac.sym_size; ++i)
          e(off + sym_index(fac.sym_size, i, i)) = 1.0;
        break;
      default:
        break;
    }
  }
  return e;
}

Eigen::VectorXd product(const Algebra& alg, const Eigen::VectorXd& x,
                        const Eigen::VectorXd& y) {
  if (x.size() != alg.dim() || y.size() != alg.dim())
    throw std::invalid_argument("jordan::product: coordinate length mismatch");
  Eigen::VectorXd z(alg.dim());
  for (size_t f = 0; f < alg.factors().size(); ++f) {
    const Factor& fac = alg.factors()[f];
    const int off = alg.factor_offset(static_cast<int>(f));
    auto xb = x.segment(off, fac.dim);
    auto yb = y.segment(off, fac.dim);
    switch (fac.kind) {
      case Kind::Rank1Product:
        z.segment(off, fac.dim) = xb.cwiseProduct(yb);
        break;
      case Kind::Lorentz: {
        const int w = fac.dim - 1;
        z(off) = xb(0) * yb(0) + xb.tail(w).dot(yb.tail(w));
        z.segment(off + 1, w) = xb(0) * yb.tail(w) + yb(0) * xb.tail(w);
        break;
      }
      case Kind::SymMatrices: {
        Eigen::MatrixXd xm = sym_unpack(xb, fac.sym_size);
        Eigen::MatrixXd ym = sym_unpack(yb, fac.sym_size);
        z.segment(off, fac.dim) = sym_pack(0.5 * (xm * ym + ym * xm));
        break;
      }
      default:
        break;
    }
  }
  return z;
}

double trace(const Algebra& alg, const Eigen::VectorXd& x) {
  double t = 0.0;
  for (size_t f = 0; f < alg.factors().size(); ++f) {
    const Factor& fac = alg.factors()[f];
    const int off = alg.factor_offset(static_cast<int>(f));
    switch (fac.kind) {
      case Kind::Rank1Product:
        t += x.segment(off, fac.dim).sum();
        break;
      case Kind::Lorentz:
        t += 2.0 * x(off);
        break;
      case Kind::SymMatrices:
        for (int i = 0; i < fac.sym_size; ++i)
          t += x(off + sym_index(fac.sym_size, i, i));
        break;
      default:
        break;
    }
  }
  return t;
}

double det(const Algebra& alg, const Eigen::VectorXd& x) {
  double d = 1.0;
  for (size_t f = 0; f < alg.factors().size(); ++f) {
    const Factor& fac = alg.factors()[f];
    const int off = alg.factor_offset(static_cast<int>(f));
    switch (fac.kind) {
      case Kind::Rank1Product:
        d *= x.segment(off, fac.dim).prod();
        break;
      case Kind::Lorentz:
        d *= x(off) * x(off) - x.segment(off + 1, fac.dim - 1).squaredNorm();
        break;
      case Kind::SymMatrices:
        d *= sym_unpack(x.segment(off, fac.dim), fac.sym_size).determinant();
        break;
      default:
        break;
    }
  }
  return d;
}

double inner(const Algebra& alg, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  double t = 0.0;
  for (size_t f = 0; f < alg.factors().size(); ++f) {
    const Factor& fac = alg.factors()[f];
    const int off = alg.factor_offset(static_cast<int>(f));
    double dot = x.segment(off, fac.dim).dot(y.segment(off, fac.dim));
    t += (fac.kind == Kind::Lorentz) ? 2.0 * dot : dot;
  }
  return t;
}

Eigen::MatrixXd lmap(const Algebra& alg, const Eigen::VectorXd& x) {
  const int n = alg.dim();
  Eigen::MatrixXd l(n, n);
  Eigen::VectorXd ej = Eigen::VectorXd::Zero(n);
  for (int j = 0; j < n; ++j) {
    ej(j) = 1.0;
    l.col(j) = product(alg, x, ej);
    ej(j) = 0.0;
  }
  return l;
}

Eigen::MatrixXd quad_rep(const Algebra& alg, const Eigen::VectorXd& x) {
  Eigen::MatrixXd l = lmap(alg, x);
  return 2.0 * l * l - lmap(alg, product(alg, x, x));
}

Eigen::MatrixXd quad_rep_polarized(const Algebra& alg, const Eigen::VectorXd& x,
                                   const Eigen::VectorXd& y) {
  Eigen::MatrixXd lx = lmap(alg, x);
  Eigen::MatrixXd ly = lmap(alg, y);
  return lx * ly + ly * lx - lmap(alg, product(alg, x, y));
}

Eigen::MatrixXd box(const Algebra& alg, const Eigen::VectorXd& x,
                    const Eigen::VectorXd& y) {
  Eigen::MatrixXd lx = lmap(alg, x);
  Eigen::MatrixXd ly = lmap(alg, y);
  return lmap(alg, product(alg, x, y)) + lx * ly - ly * lx;
}

Eigen::VectorXd inverse(const Algebra& alg, const Eigen::VectorXd& x) {
  Eigen::VectorXd z(alg.dim());
  for (size_t f = 0; f < alg.factors().size(); ++f) {
    const Factor& fac = alg.factors()[f];
    const int off = alg.factor_offset(static_cast<int>(f));
    switch (fac.kind) {
      case Kind::Rank1Product:
        for (int i = 0; i < fac.dim; ++i) {
          if (x(off + i) == 0.0) throw std::domain_error("jordan: singular element");
          z(off + i) = 1.0 / x(off + i);
        }
        break;
      case Kind::Lorentz: {
        const int w = fac.dim - 1;
        double dd = x(off) * x(off) - x.segment(off + 1, w).squaredNorm();
        if (dd == 0.0) throw std::domain_error("jordan: singular element");
        z(off) = x(off) / dd;
        z.segment(off + 1, w) = -x.segment(off + 1, w) / dd;
        break;
      }
      case Kind::SymMatrices: {
        Eigen::MatrixXd xm = sym_unpack(x.segment(off, fac.dim), fac.sym_size);
        if (xm.determinant() == 0.0) throw std::domain_error("jordan: singular element");
        z.segment(off, fac.dim) = sym_pack(xm.inverse());
        break;
      }
      default:
        break;
    }
  }
  return z;
}

bool in_cone(const Algebra& alg, const Eigen::VectorXd& x) {
  if (x.size() != alg.dim()) return false;
  for (size_t f = 0; f < alg.factors().size(); ++f) {
    const Factor& fac = alg.factors()[f];
    const int off = alg.factor_offset(static_cast<int>(f));
    switch (fac.kind) {
      case Kind::Rank1Product:
        if ((x.segment(off, fac.dim).array() <= 0.0).any()) return false;
        break;
      case Kind::Lorentz: {
        const int w = fac.dim - 1;
        double dd = x(off) * x(off) - x.segment(off + 1, w).squaredNorm();
        if (x(off) <= 0.0 || dd <= 0.0) return false;
        break;
      }
      case Kind::SymMatrices: {
        Eigen::MatrixXd m = sym_unpack(x.segment(off, fac.dim), fac.sym_size);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() <= 0.0) return false;
        break;
      }
      default:
        break;
    }
  }
  return true;
}

Eigen::VectorXd sqrt(const Algebra& alg, const Eigen::VectorXd& x) {
  if (!in_cone(alg, x)) throw std::domain_error("jordan::sqrt: element not in the open cone");
  Eigen::VectorXd z(alg.dim());
  for (size_t f = 0; f < alg.factors().size(); ++f) {
    const Factor& fac = alg.factors()[f];
    const int off = alg.factor_offset(static_cast<int>(f));
    switch (fac.kind) {
      case Kind::Rank1Product:
        z.segment(off, fac.dim) = x.segment(off, fac.dim).array().sqrt();
        break;
      case Kind::Lorentz: {
        // Solving (s, v)^2 = (x_1, u): s = ((x_1 + det(x)^{1/2}) / 2)^{1/2},
        // v = u / (2s).
        const int w = fac.dim - 1;
        double dd = x(off) * x(off) - x.segment(off + 1, w).squaredNorm();
        double s = std::sqrt(0.5 * (x(off) + std::sqrt(dd)));
        z(off) = s;
        z.segment(off + 1, w) = x.segment(off + 1, w) / (2.0 * s);
        break;
      }
      case Kind::SymMatrices: {
        Eigen::MatrixXd m = sym_unpack(x.segment(off, fac.dim), fac.sym_size);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
        Eigen::MatrixXd root = es.eigenvectors() *
                               es.eigenvalues().array().sqrt().matrix().asDiagonal() *
                               es.eigenvectors().transpose();
        z.segment(off, fac.dim) = sym_pack(root);
        break;
      }
      default:
        break;
    }
  }
  return z;
}

SpectralRank2 spectral_rank2(const Algebra& alg, const Eigen::VectorXd& x) {
  if (alg.factors().size() != 1 || alg.kind() != Kind::Lorentz)
    throw std::invalid_argument("spectral_rank2: single Lorentz factor required");
  const int n = alg.dim();
  const int w = n - 1;
  Eigen::VectorXd u = x.tail(w);
  double nu = u.norm();
  Eigen::VectorXd dir = Eigen::VectorXd::Zero(w);
  if (nu > 0.0)
    dir = u / nu;
  else
    dir(0) = 1.0;  // frame is non-unique at u = 0; fix one
  SpectralRank2 s;
  s.lambda1 = x(0) + nu;
  s.lambda2 = x(0) - nu;
  s.c1 = Eigen::VectorXd::Zero(n);
  s.c2 = Eigen::VectorXd::Zero(n);
  s.c1(0) = 0.5;
  s.c2(0) = 0.5;
  s.c1.tail(w) = 0.5 * dir;
  s.c2.tail(w) = -0.5 * dir;
  return s;
}

PolarDecomposition polar_decompose(const Algebra& alg, const Eigen::MatrixXd& g) {
  Eigen::VectorXd ge = g * identity(alg);
  if (!in_cone(alg, ge))
    throw std::domain_error("polar_decompose: g e is not in the open cone");
  PolarDecomposition pd;
  pd.x = sqrt(alg, ge);
  pd.k = quad_rep(alg, pd.x).partialPivLu().solve(g);
  return pd;
}

}  // namespace jordan
