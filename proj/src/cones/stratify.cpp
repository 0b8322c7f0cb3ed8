#include "cones/stratify.hpp"

#include "quadrature/rules.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace cones {

namespace {

constexpr double kStructureTol = 1e-12;

Eigen::VectorXd coordinate_unit(int n, int i) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  v(i) = 1.0;
  return v;
}

int product_copies(const ConeEmbedding& emb) {
  return emb.outer().dim() / emb.inner().dim();
}

bool simplex_chart(const ConeEmbedding& emb) {
  return emb.outer().kind() == jordan::Kind::Rank1Product;
}

void require_sizes(const ConeEmbedding& emb, const StratCoords& c) {
  if (c.t.size() != emb.inner().dim() || c.v.size() != emb.strat_dim()) {
    throw std::invalid_argument("strat chart: coordinate sizes do not match the embedding");
  }
}

}  // namespace

ConeEmbedding::ConeEmbedding(EmbeddingKind kind, jordan::Algebra inner,
                             jordan::Algebra outer)
    : kind_(kind), inner_(std::move(inner)), outer_(std::move(outer)) {}

ConeEmbedding ConeEmbedding::equal_rank_lorentz(int n, int p) {
  if (p < 1 || n - p < 2) {
    throw std::invalid_argument(
        "equal_rank_lorentz: need p >= 1 and n - p >= 2 to keep both ranks equal to two");
  }
  ConeEmbedding emb(EmbeddingKind::EqualRankLorentz, jordan::Algebra::lorentz(n - p),
                    jordan::Algebra::lorentz(n));
  emb.validate_subalgebra();
  return emb;
}

ConeEmbedding ConeEmbedding::diagonal_product(const jordan::Algebra& base, int p) {
  if (p < 1) throw std::invalid_argument("diagonal_product: need p >= 1");
  std::vector<jordan::Algebra> parts(static_cast<size_t>(p), base);
  ConeEmbedding emb(EmbeddingKind::DiagonalProduct, base,
                    jordan::Algebra::direct_sum(parts));
  emb.validate_subalgebra();
  return emb;
}

ConeEmbedding ConeEmbedding::scalar_line(const jordan::Algebra& outer) {
  if (outer.factors().size() != 1) {
    throw std::invalid_argument(
        "scalar_line: outer algebra must consist of a single factor");
  }
  ConeEmbedding emb(EmbeddingKind::ScalarLine, jordan::Algebra::rank1_product(1), outer);
  if (!simplex_chart(emb)) {
    // Orthonormal coordinate basis of the orthocomplement of the identity;
    // within one factor the trace form is a multiple of the coordinate dot
    // product, so the coordinate complement is the trace-form complement.
    Eigen::MatrixXd e = jordan::identity(outer);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(e);
    emb.polar_basis_ =
        Eigen::MatrixXd(qr.householderQ()).rightCols(outer.dim() - 1);
  }
  emb.validate_subalgebra();
  return emb;
}

ConeEmbedding ConeEmbedding::factor_replication(const jordan::Algebra& inner,
                                                const std::vector<int>& copies) {
  if (copies.size() != inner.factors().size()) {
    throw std::invalid_argument("factor_replication: one copy count per factor");
  }
  for (int c : copies) {
    if (c < 1) throw std::invalid_argument("factor_replication: copy counts must be >= 1");
  }
  for (size_t i = 1; i < copies.size(); ++i) {
    if (copies[i] != copies[0]) {
      throw std::invalid_argument(
          "factor_replication: the outer trace form restricts to a single multiple of "
          "the inner one only when every factor is repeated equally; uneven "
          "replication is rejected");
    }
  }
  return diagonal_product(inner, copies[0]);
}

int ConeEmbedding::strat_dim() const { return outer_.dim() - inner_.dim(); }

Eigen::VectorXd ConeEmbedding::embed(const Eigen::VectorXd& t) const {
  if (t.size() != inner_.dim()) {
    throw std::invalid_argument("embed: wrong inner dimension");
  }
  const int n2 = outer_.dim();
  switch (kind_) {
    case EmbeddingKind::EqualRankLorentz: {
      Eigen::VectorXd x = Eigen::VectorXd::Zero(n2);
      x.head(t.size()) = t;
      return x;
    }
    case EmbeddingKind::DiagonalProduct: {
      const int p = product_copies(*this);
      Eigen::VectorXd x(n2);
      for (int k = 0; k < p; ++k) x.segment(k * t.size(), t.size()) = t;
      return x;
    }
    case EmbeddingKind::ScalarLine:
      return t(0) * jordan::identity(outer_);
  }
  throw std::logic_error("embed: unreachable");
}

Eigen::VectorXd ConeEmbedding::lift(const Eigen::VectorXd& v) const {
  if (v.size() != strat_dim()) {
    throw std::invalid_argument("lift: wrong fiber dimension");
  }
  const int n2 = outer_.dim();
  switch (kind_) {
    case EmbeddingKind::EqualRankLorentz: {
      Eigen::VectorXd u = Eigen::VectorXd::Zero(n2);
      u.tail(v.size()) = -v;
      return u;
    }
    case EmbeddingKind::DiagonalProduct: {
      const int n1 = inner_.dim();
      const int p = product_copies(*this);
      Eigen::VectorXd u(n2);
      Eigen::VectorXd sum = Eigen::VectorXd::Zero(n1);
      for (int k = 0; k < p - 1; ++k) {
        u.segment(k * n1, n1) = v.segment(k * n1, n1);
        sum += v.segment(k * n1, n1);
      }
      u.tail(n1) = -sum;
      return u;
    }
    case EmbeddingKind::ScalarLine: {
      if (simplex_chart(*this)) {
        Eigen::VectorXd u(n2);
        u.head(n2 - 1) = v;
        u(n2 - 1) = -v.sum();
        return u;
      }
      return polar_basis_ * v;
    }
  }
  throw std::logic_error("lift: unreachable");
}

Eigen::VectorXd ConeEmbedding::unlift(const Eigen::VectorXd& u) const {
  if (u.size() != outer_.dim()) {
    throw std::invalid_argument("unlift: wrong outer dimension");
  }
  const int k = strat_dim();
  switch (kind_) {
    case EmbeddingKind::EqualRankLorentz:
      return -u.tail(k);
    case EmbeddingKind::DiagonalProduct:
      return u.head(k);
    case EmbeddingKind::ScalarLine:
      if (simplex_chart(*this)) return u.head(k);
      return polar_basis_.transpose() * u;
  }
  throw std::logic_error("unlift: unreachable");
}

void ConeEmbedding::validate_subalgebra() const {
  const int n1 = inner_.dim();
  const double mu = static_cast<double>(outer_.rank()) / inner_.rank();
  if ((embed(jordan::identity(inner_)) - jordan::identity(outer_)).norm() > kStructureTol) {
    throw std::logic_error("ConeEmbedding: embedding does not map identity to identity");
  }
  for (int i = 0; i < n1; ++i) {
    const Eigen::VectorXd bi = coordinate_unit(n1, i);
    const Eigen::VectorXd ei = embed(bi);
    for (int j = i; j < n1; ++j) {
      const Eigen::VectorXd bj = coordinate_unit(n1, j);
      const Eigen::VectorXd ej = embed(bj);
      const double prod_gap =
          (embed(jordan::product(inner_, bi, bj)) - jordan::product(outer_, ei, ej))
              .norm();
      const double form_gap = std::abs(jordan::inner(outer_, ei, ej) -
                                       mu * jordan::inner(inner_, bi, bj));
      if (prod_gap > kStructureTol || form_gap > kStructureTol) {
        throw std::logic_error(
            "ConeEmbedding: embedding is not a trace-compatible unital homomorphism");
      }
    }
  }
}

bool in_strat_space(const ConeEmbedding& emb, const Eigen::VectorXd& v) {
  if (v.size() != emb.strat_dim()) return false;
  return jordan::in_cone(emb.outer(),
                         jordan::identity(emb.outer()) + emb.lift(v));
}

Eigen::VectorXd strat_forward(const ConeEmbedding& emb, const StratCoords& c) {
  require_sizes(emb, c);
  if (!jordan::in_cone(emb.inner(), c.t)) {
    throw std::domain_error("strat_forward: base point outside the inner cone");
  }
  if (!in_strat_space(emb, c.v)) {
    throw std::domain_error("strat_forward: fiber point outside the stratification space");
  }
  const jordan::Algebra& v1 = emb.inner();
  const jordan::Algebra& v2 = emb.outer();
  switch (emb.kind()) {
    case EmbeddingKind::EqualRankLorentz: {
      Eigen::VectorXd x(v2.dim());
      x.head(c.t.size()) = c.t;
      x.tail(c.v.size()) = -std::sqrt(jordan::det(v1, c.t)) * c.v;
      return x;
    }
    case EmbeddingKind::DiagonalProduct: {
      const int n1 = v1.dim();
      const int p = product_copies(emb);
      const Eigen::MatrixXd quad = jordan::quad_rep(v1, jordan::sqrt(v1, c.t));
      const Eigen::VectorXd e1 = jordan::identity(v1);
      Eigen::VectorXd x(v2.dim());
      Eigen::VectorXd sum = Eigen::VectorXd::Zero(n1);
      for (int k = 0; k < p - 1; ++k) {
        const Eigen::VectorXd vk = c.v.segment(k * n1, n1);
        x.segment(k * n1, n1) = quad * (e1 + vk) / p;
        sum += vk;
      }
      x.tail(n1) = quad * (e1 - sum) / p;
      return x;
    }
    case EmbeddingKind::ScalarLine: {
      const double t = c.t(0);
      const int n2 = v2.dim();
      if (simplex_chart(emb)) {
        Eigen::VectorXd x(n2);
        for (int i = 0; i < n2 - 1; ++i) x(i) = t * (1.0 + c.v(i)) / n2;
        x(n2 - 1) = t * (1.0 - c.v.sum()) / n2;
        return x;
      }
      return (t / v2.rank()) * (jordan::identity(v2) + emb.lift(c.v));
    }
  }
  throw std::logic_error("strat_forward: unreachable");
}

StratCoords strat_inverse(const ConeEmbedding& emb, const Eigen::VectorXd& x) {
  if (x.size() != emb.outer().dim()) {
    throw std::invalid_argument("strat_inverse: wrong outer dimension");
  }
  if (!jordan::in_cone(emb.outer(), x)) {
    throw std::domain_error("strat_inverse: point outside the outer cone");
  }
  const jordan::Algebra& v1 = emb.inner();
  StratCoords c;
  switch (emb.kind()) {
    case EmbeddingKind::EqualRankLorentz: {
      const int n1 = v1.dim();
      c.t = x.head(n1);
      c.v = -x.tail(x.size() - n1) / std::sqrt(jordan::det(v1, c.t));
      return c;
    }
    case EmbeddingKind::DiagonalProduct: {
      const int n1 = v1.dim();
      const int p = product_copies(emb);
      Eigen::VectorXd t = Eigen::VectorXd::Zero(n1);
      for (int k = 0; k < p; ++k) t += x.segment(k * n1, n1);
      const Eigen::MatrixXd quad = jordan::quad_rep(v1, jordan::sqrt(v1, t));
      const auto solver = quad.partialPivLu();
      c.t = t;
      c.v.resize(n1 * (p - 1));
      for (int k = 0; k < p - 1; ++k) {
        c.v.segment(k * n1, n1) = solver.solve(p * x.segment(k * n1, n1) - t);
      }
      return c;
    }
    case EmbeddingKind::ScalarLine: {
      const int n2 = emb.outer().dim();
      if (simplex_chart(emb)) {
        const double t = x.sum();
        c.t = Eigen::VectorXd::Constant(1, t);
        c.v.resize(n2 - 1);
        for (int i = 0; i < n2 - 1; ++i) c.v(i) = n2 * x(i) / t - 1.0;
        return c;
      }
      const double t = jordan::trace(emb.outer(), x);
      c.t = Eigen::VectorXd::Constant(1, t);
      const Eigen::VectorXd u =
          (emb.outer().rank() / t) * x - jordan::identity(emb.outer());
      c.v = emb.unlift(u);
      return c;
    }
  }
  throw std::logic_error("strat_inverse: unreachable");
}

double strat_jacobian(const ConeEmbedding& emb, const StratCoords& c) {
  require_sizes(emb, c);
  if (!jordan::in_cone(emb.inner(), c.t) || !in_strat_space(emb, c.v)) {
    throw std::domain_error("strat_jacobian: point outside the chart domain");
  }
  const jordan::Algebra& v1 = emb.inner();
  switch (emb.kind()) {
    case EmbeddingKind::EqualRankLorentz: {
      const int p = emb.strat_dim();
      return std::pow(jordan::det(v1, c.t), 0.5 * p);
    }
    case EmbeddingKind::DiagonalProduct: {
      const int p = product_copies(emb);
      const double det_quad =
          jordan::quad_rep(v1, jordan::sqrt(v1, c.t)).determinant();
      return std::pow(det_quad, p - 1) /
             std::pow(static_cast<double>(p), static_cast<double>((p - 1) * v1.dim()));
    }
    case EmbeddingKind::ScalarLine: {
      const double t = c.t(0);
      const int n2 = emb.outer().dim();
      if (simplex_chart(emb)) {
        return std::pow(t / n2, n2 - 1);
      }
      const double r2 = emb.outer().rank();
      const double e_norm = jordan::identity(emb.outer()).norm();
      return e_norm * std::pow(t, n2 - 1) / std::pow(r2, n2);
    }
  }
  throw std::logic_error("strat_jacobian: unreachable");
}

StratIdentities strat_identities_check(const ConeEmbedding& emb, const StratCoords& c) {
  const jordan::Algebra& v2 = emb.outer();
  const Eigen::VectorXd image = strat_forward(emb, c);
  const Eigen::VectorXd e_plus_u = jordan::identity(v2) + emb.lift(c.v);
  StratIdentities sides{};
  sides.det_lhs = jordan::det(v2, image);
  sides.det_rhs = jordan::det(v2, emb.embed(c.t)) * jordan::det(v2, e_plus_u);
  sides.trace_lhs = jordan::trace(v2, image);
  sides.trace_rhs = jordan::trace(emb.inner(), c.t);
  return sides;
}

double volume_strat_space(const ConeEmbedding& emb, double lambda) {
  if (emb.kind() != EmbeddingKind::EqualRankLorentz) {
    throw std::invalid_argument("volume_strat_space: requires an equal-rank embedding");
  }
  const int n2 = emb.outer().dim();
  const int p = emb.strat_dim();
  const double alpha = lambda - 0.5 * (n2 - 1);
  if (!(alpha > -0.5)) {
    throw std::domain_error("volume_strat_space: lambda must exceed (n_2 - 2)/2");
  }
  // det_2(e + u(v)) = 1 - |v|^2 on the ball chart, so the rule weight
  // 2^{-p/2} (1 - |v|^2)^{alpha - 1/2} is exactly the integrand times the
  // plain-coordinate normalization; the trace form doubles the coordinate
  // dot product here, contributing 2^{p/2} of volume.
  const auto rule = quadrature::ball_rule(p, alpha, quadrature::kDefaultNodeCount);
  return std::pow(2.0, p) * quadrature::total_weight(rule);
}

Eigen::MatrixXd k_compensator(const ConeEmbedding& emb, const Eigen::MatrixXd& g,
                              const Eigen::VectorXd& t) {
  const jordan::Algebra& v1 = emb.inner();
  const int n1 = v1.dim();
  if (g.rows() != n1 || g.cols() != n1 || t.size() != n1) {
    throw std::invalid_argument("k_compensator: dimensions do not match the inner algebra");
  }
  if (!jordan::in_cone(v1, t)) {
    throw std::domain_error("k_compensator: base point outside the inner cone");
  }
  const Eigen::VectorXd gt = g * t;
  if (!jordan::in_cone(v1, gt)) {
    throw std::domain_error("k_compensator: map does not preserve the inner cone at t");
  }
  const Eigen::MatrixXd left =
      jordan::quad_rep(v1, jordan::inverse(v1, jordan::sqrt(v1, gt)));
  const Eigen::MatrixXd right = jordan::quad_rep(v1, jordan::sqrt(v1, t));
  return left * g * right;
}

}  // namespace cones
