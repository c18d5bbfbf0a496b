#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gld/grading.hpp"

namespace gld {

/// One monomial coeff * prod_j x_j^exps[j].
struct MonomialTerm {
  double coeff = 0.0;
  std::vector<int> exps;
};

/// Polynomial vector field on R^n, one monomial list per output coordinate.
class PolyVecField {
 public:
  PolyVecField() = default;
  PolyVecField(int ambient_dim, std::vector<std::vector<MonomialTerm>> comps);

  int ambient_dim() const { return ambient_dim_; }
  const std::vector<std::vector<MonomialTerm>>& comps() const { return comps_; }

  Eigen::VectorXd eval(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const;

  bool is_zero(double tol = 0.0) const;
  /// Degree <= 1 in every component; such fields flow in closed form.
  bool is_affine() const;
  /// Splits an affine field as A x + b.
  void affine_parts(Eigen::MatrixXd& a, Eigen::VectorXd& b) const;

  PolyVecField scaled(double s) const;
  friend PolyVecField operator+(const PolyVecField& f, const PolyVecField& g);
  /// Commutator [f, g] = (Dg) f - (Df) g computed on monomials.
  friend PolyVecField bracket(const PolyVecField& f, const PolyVecField& g);

 private:
  void normalize();

  int ambient_dim_ = 0;
  std::vector<std::vector<MonomialTerm>> comps_;
};

/// Nilpotent Lie algebra given by structure constants in a fixed basis,
/// with generator coordinates for the driving fields X_0..X_m and an
/// optional polynomial realization of each basis element.
///
/// Construction validates antisymmetry, the Jacobi identity (residual
/// below 1e-10) and nilpotency of the lower central series.
class LieAlgebraSpec {
 public:
  /// entries: (i, j, l, value) with [e_i, e_j] = sum_l value e_l, 0-based.
  static LieAlgebraSpec make(int dim, std::vector<std::string> labels,
                             const std::vector<std::tuple<int, int, int, double>>& entries,
                             std::vector<Eigen::VectorXd> generators,
                             std::vector<PolyVecField> fields = {});

  int dim() const { return dim_; }
  int m() const { return static_cast<int>(generators_.size()) - 1; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Eigen::VectorXd>& generators() const { return generators_; }

  Eigen::VectorXd bracket(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;

  /// Right-nested bracket word X^{(j1,...,jk)} = [g_{j1}, [g_{j2}, [...]]].
  Eigen::VectorXd bracket_word(const Word& word) const;

  /// Largest Jacobi residual over basis triples.
  double jacobi_residual() const;

  /// Step of the lower central series (first s with L^(s+1) = 0);
  /// nullopt when the series stalls above zero.
  std::optional<int> nilpotency_step() const;

  bool has_fields() const { return !fields_.empty(); }
  const std::vector<PolyVecField>& fields() const { return fields_; }
  /// Realized field of the algebra element with coordinates u.
  PolyVecField realize(const Eigen::VectorXd& u) const;
  int ambient_dim() const;

  std::string to_json() const;
  static LieAlgebraSpec from_json(const std::string& text);

 private:
  LieAlgebraSpec() = default;

  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Eigen::MatrixXd> ad_;  // ad_[i] * v = [e_i, v]
  std::vector<Eigen::VectorXd> generators_;
  std::vector<PolyVecField> fields_;
};

/// Shipped systems (also emitted as data/algebras/*.json).
LieAlgebraSpec kolmogorov_spec();
LieAlgebraSpec heisenberg_spec();
LieAlgebraSpec free_step3_spec();
/// Third-order Kolmogorov chain (w, int w, int int w); test fixture.
LieAlgebraSpec kolmogorov_jerk_spec();

}  // namespace gld
