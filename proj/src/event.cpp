#include "gld/event.hpp"

#include <algorithm>
#include <cmath>

#include "gld/errors.hpp"

namespace gld {

std::string rel_str(Rel r) {
  switch (r) {
    case Rel::Ge:
      return ">=";
    case Rel::Gt:
      return ">";
    case Rel::Eq:
      return "=";
  }
  return "?";
}

Rel rel_parse(const std::string& s) {
  if (s == ">=") return Rel::Ge;
  if (s == ">") return Rel::Gt;
  if (s == "=" || s == "==") return Rel::Eq;
  throw SchemaError("event: unknown relation '" + s + "'");
}

bool EventAtom::is_constant() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](double c) { return c == 0.0; });
}

bool EventAtom::holds(std::span<const double> x) const {
  double v = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) v += coeffs[i] * x[i];
  switch (rel) {
    case Rel::Ge:
      return v >= threshold;
    case Rel::Gt:
      return v > threshold;
    case Rel::Eq:
      return v == threshold;
  }
  return false;
}

EndpointEvent::EndpointEvent(std::size_t dim, std::vector<std::vector<EventAtom>> terms,
                             std::vector<std::vector<double>> gamma_by_grade,
                             Eigen::MatrixXd coord_map, std::vector<std::string> coord_names)
    : dim_(dim),
      terms_(std::move(terms)),
      gamma_(std::move(gamma_by_grade)),
      coord_map_(std::move(coord_map)),
      coord_names_(std::move(coord_names)) {
  validate();
}

EndpointEvent EndpointEvent::conjunction(std::size_t dim, std::vector<EventAtom> atoms,
                                         std::vector<std::vector<double>> gamma_by_grade) {
  return EndpointEvent(dim, {std::move(atoms)}, std::move(gamma_by_grade));
}

EndpointEvent EndpointEvent::whole_space(std::size_t dim) {
  return EndpointEvent(dim, {std::vector<EventAtom>{}});
}

bool EndpointEvent::trivially_true() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const std::vector<EventAtom>& t) { return t.empty(); });
}

bool EndpointEvent::trivially_false() const { return terms_.empty(); }

void EndpointEvent::validate() const {
  for (const auto& term : terms_)
    for (const auto& atom : term) {
      if (atom.coeffs.size() != dim_)
        throw ValidationError("event: atom coefficient count != tracked dimension");
      for (const auto& row : gamma_) {
        if (row.size() != dim_) throw ValidationError("event: gamma row size != dimension");
        bool have = false;
        double w = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) {
          if (atom.coeffs[i] == 0.0) continue;
          if (!have) {
            w = row[i];
            have = true;
          } else if (row[i] != w) {
            throw ValidationError("event: atom mixes coordinates of different weight classes");
          }
        }
      }
    }
  if (coord_map_.size() != 0 && coord_map_.rows() != static_cast<Eigen::Index>(dim_))
    throw ValidationError("event: coord_map rows != dimension");
}

Eigen::VectorXd EndpointEvent::tracked(std::span<const double> ambient) const {
  if (coord_map_.size() == 0) {
    if (ambient.size() != dim_) throw ValidationError("event: ambient dimension mismatch");
    return Eigen::Map<const Eigen::VectorXd>(ambient.data(), static_cast<Eigen::Index>(dim_));
  }
  if (ambient.size() != static_cast<std::size_t>(coord_map_.cols()))
    throw ValidationError("event: ambient dimension mismatch");
  return coord_map_ *
         Eigen::Map<const Eigen::VectorXd>(ambient.data(), coord_map_.cols());
}

bool EndpointEvent::contains(std::span<const double> ambient) const {
  const Eigen::VectorXd x = tracked(ambient);
  const std::span<const double> xs(x.data(), static_cast<std::size_t>(x.size()));
  for (const auto& term : terms_) {
    bool all = true;
    for (const auto& atom : term)
      if (!atom.holds(xs)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

double EndpointEvent::atom_weight(const EventAtom& atom, std::size_t grade_idx) const {
  if (grade_idx >= gamma_.size()) throw ValidationError("event: no weights for grade index");
  for (std::size_t i = 0; i < dim_; ++i)
    if (atom.coeffs[i] != 0.0) return gamma_[grade_idx][i];
  return 0.0;  // constant atom, dilation never moves it
}

namespace {

EventAtom never_atom(std::size_t dim) {
  EventAtom a;
  a.coeffs.assign(dim, 0.0);
  a.rel = Rel::Ge;
  a.threshold = 1.0;
  return a;
}

}  // namespace

std::pair<EndpointEvent, EndpointEvent> event_dilations(const EndpointEvent& ev,
                                                        std::size_t grade_idx) {
  if (!ev.has_weights()) throw ValidationError("event_dilations: event carries no weights");

  std::vector<std::vector<EventAtom>> cl_terms;
  std::vector<std::vector<EventAtom>> int_terms;
  for (const auto& term : ev.terms()) {
    std::vector<EventAtom> cl_term;
    std::vector<EventAtom> int_term;
    for (const auto& atom : term) {
      if (atom.is_constant()) {
        cl_term.push_back(atom);
        int_term.push_back(atom);
        continue;
      }
      const double w = ev.atom_weight(atom, grade_idx);
      if (w == 0.0) {
        EventAtom cl = atom;
        if (cl.rel == Rel::Gt) cl.rel = Rel::Ge;
        cl_term.push_back(cl);
        if (atom.rel == Rel::Eq) {
          int_term.push_back(never_atom(ev.dim()));  // a hyperplane has empty interior
        } else {
          EventAtom in = atom;
          in.rel = Rel::Gt;
          int_term.push_back(in);
        }
        continue;
      }
      // positive weight: the dilated family eta^w {c >= b} limits onto the
      // cone {c >= 0} / {c > 0}; below threshold 0 every point is eventually
      // covered and the atom drops out entirely.
      if (atom.rel == Rel::Eq) {
        if (atom.threshold != 0.0)
          throw ValidationError(
              "event_dilations: equality with nonzero threshold on a dilated coordinate");
        cl_term.push_back(atom);
        int_term.push_back(never_atom(ev.dim()));
        continue;
      }
      if (atom.threshold < 0.0) continue;  // trivially true in both dilations
      EventAtom cl = atom;
      cl.rel = Rel::Ge;
      cl.threshold = 0.0;
      cl_term.push_back(cl);
      EventAtom in = atom;
      in.rel = Rel::Gt;
      in.threshold = 0.0;
      int_term.push_back(in);
    }
    cl_terms.push_back(std::move(cl_term));
    int_terms.push_back(std::move(int_term));
  }
  EndpointEvent cl(ev.dim(), std::move(cl_terms), ev.gamma_by_grade(), ev.coord_map(),
                   ev.coord_names());
  EndpointEvent in(ev.dim(), std::move(int_terms), ev.gamma_by_grade(), ev.coord_map(),
                   ev.coord_names());
  return {std::move(cl), std::move(in)};
}

}  // namespace gld
