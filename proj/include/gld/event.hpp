#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gld/grading.hpp"

namespace gld {

enum class Rel { Ge, Gt, Eq };

std::string rel_str(Rel r);
Rel rel_parse(const std::string& s);

/// One linear constraint on the tracked coordinates.
struct EventAtom {
  std::vector<double> coeffs;
  Rel rel = Rel::Ge;
  double threshold = 0.0;

  bool is_constant() const;
  bool holds(std::span<const double> x) const;
};

/// Endpoint event: a finite union of conjunctions of half-spaces /
/// hyperplanes over a set of tracked coordinates. A single conjunction is
/// the common case; the union form is what norm-type events (|coord| > 1)
/// lower to. An empty conjunction is the whole space, an empty union the
/// empty set.
///
/// Tracked coordinates are linear images of some ambient space (manifold
/// endpoint coordinates, word coordinates, or ideal block coordinates);
/// coord_map holds that linear map. gamma, when present, carries the
/// dilation exponent of each tracked coordinate per grade index, and every
/// atom must touch only coordinates of a single weight class in each grade
/// (checked at construction).
class EndpointEvent {
 public:
  EndpointEvent(std::size_t dim, std::vector<std::vector<EventAtom>> terms,
                std::vector<std::vector<double>> gamma_by_grade = {},
                Eigen::MatrixXd coord_map = {}, std::vector<std::string> coord_names = {});

  static EndpointEvent conjunction(std::size_t dim, std::vector<EventAtom> atoms,
                                   std::vector<std::vector<double>> gamma_by_grade = {});
  static EndpointEvent whole_space(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<std::vector<EventAtom>>& terms() const { return terms_; }
  const std::vector<std::vector<double>>& gamma_by_grade() const { return gamma_; }
  const Eigen::MatrixXd& coord_map() const { return coord_map_; }
  const std::vector<std::string>& coord_names() const { return coord_names_; }

  bool has_weights() const { return !gamma_.empty(); }
  bool trivially_true() const;
  bool trivially_false() const;

  /// Tracked coordinates of an ambient point.
  Eigen::VectorXd tracked(std::span<const double> ambient) const;
  bool contains(std::span<const double> ambient) const;

  /// Weight of an atom at a grade (uniform over its support by invariant).
  double atom_weight(const EventAtom& atom, std::size_t grade_idx) const;

 private:
  void validate() const;

  std::size_t dim_;
  std::vector<std::vector<EventAtom>> terms_;
  std::vector<std::vector<double>> gamma_;
  Eigen::MatrixXd coord_map_;
  std::vector<std::string> coord_names_;
};

/// Closed and open graded dilations of an endpoint event at a grade index.
/// Weight-0 atoms keep their geometry (relations relax/tighten); positive
/// weight half-spaces collapse onto their cone through the origin, and a
/// negative threshold makes the dilated family swallow everything.
/// Equalities on positively weighted coordinates with nonzero threshold are
/// rejected.
std::pair<EndpointEvent, EndpointEvent> event_dilations(const EndpointEvent& ev,
                                                        std::size_t grade_idx);

}  // namespace gld
