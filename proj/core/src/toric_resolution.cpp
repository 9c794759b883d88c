#include "toricres/toric_resolution.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "toricres/error.hpp"
#include "toricres/slice_geometry.hpp"

namespace toricres {

namespace {

LatticeVector to_working(const LatticeVector& affine) {
  std::vector<Integer> e;
  e.reserve(affine.size() + 1);
  e.emplace_back(1);
  for (const auto& x : affine.entries()) e.push_back(x);
  return LatticeVector(std::move(e));
}

std::vector<LatticeVector> sorted_unique(std::vector<LatticeVector> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool full_dimensional(const ConeFamilyRecord& cone) {
  const auto gens = cone.generators();
  if (gens.empty()) return false;
  return slice::affine_dimension(to_affine(gens)) == cone.dimension();
}

std::string point_string(const GlobalPoint& p) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& [v, c] : p) {
    if (!first) os << ',';
    first = false;
    os << v << ':' << c;
  }
  os << ')';
  return os.str();
}

}  // namespace

std::vector<LatticeVector> ConeFamilyRecord::generators() const {
  std::vector<LatticeVector> out;
  for (const auto& e : e_rays) {
    for (const auto& g : f_dirs) out.push_back(e.point + e.multiplicity * g);
  }
  return sorted_unique(std::move(out));
}

std::vector<LatticeVector> ConeFamilyRecord::rays() const {
  const auto gens = generators();
  if (gens.empty()) return {};
  std::vector<LatticeVector> out;
  for (const auto& p : slice::extreme_points(to_affine(gens))) out.push_back(to_working(p));
  return sorted_unique(std::move(out));
}

ConeFamilyRecord initial_record(const Simplex& carrier, const Integer& r) {
  if (r < 1) throw Error(ErrorCode::InvalidInput, "ramification index must be positive");
  if (carrier.empty()) throw Error(ErrorCode::InvalidInput, "empty carrier");
  const std::size_t n = carrier.size() - 1;
  ConeFamilyRecord rec;
  rec.carrier = carrier;
  rec.e_rays.push_back({LatticeVector::unit(n + 1, 0), r});
  rec.f_dirs.push_back(LatticeVector::zero(n + 1));
  for (std::size_t j = 1; j <= n; ++j) rec.f_dirs.push_back(LatticeVector::unit(n + 1, j));
  return rec;
}

LatticeVector to_affine(const LatticeVector& working) {
  if (working.size() == 0) throw Error(ErrorCode::InvalidInput, "empty working vector");
  return LatticeVector(std::vector<Integer>(working.entries().begin() + 1, working.entries().end()));
}

std::vector<LatticeVector> to_affine(const std::vector<LatticeVector>& working) {
  std::vector<LatticeVector> out;
  out.reserve(working.size());
  for (const auto& w : working) out.push_back(to_affine(w));
  return out;
}

BlowupOutcome blowup_subdivide(const ConeFamilyRecord& cone, const LatticeVector& center) {
  const auto input_rays = cone.rays();
  if (std::find(input_rays.begin(), input_rays.end(), center) == input_rays.end()) {
    throw Error(ErrorCode::CenterNotPresent,
                "center " + center.to_string() + " is not a ray of the cone over " +
                    cone.carrier.to_string());
  }

  BlowupOutcome unchanged;
  unchanged.cones = {cone};

  bool any_positive = false;
  for (std::size_t i = 0; i < cone.e_rays.size(); ++i) {
    const auto& entry = cone.e_rays[i];
    for (std::size_t j = 0; j < cone.f_dirs.size(); ++j) {
      const auto& g = cone.f_dirs[j];
      if (entry.point + entry.multiplicity * g != center) continue;
      if (entry.multiplicity < 1) continue;
      any_positive = true;

      const EntryRay fresh{entry.point + g, entry.multiplicity - 1};

      ConeFamilyRecord first = cone;
      first.e_rays.push_back(fresh);
      first.f_dirs.erase(first.f_dirs.begin() + static_cast<std::ptrdiff_t>(j));

      ConeFamilyRecord second = cone;
      second.e_rays.erase(second.e_rays.begin() + static_cast<std::ptrdiff_t>(i));
      second.e_rays.push_back(fresh);

      std::vector<ConeFamilyRecord> outputs;
      for (auto* c : {&first, &second}) {
        if (full_dimensional(*c)) outputs.push_back(*c);
      }
      if (outputs.size() == 1 && outputs.front().rays() == input_rays) continue;
      if (outputs.size() != 2) {
        throw Error(ErrorCode::ConsistencyViolation,
                    "blow-up of " + center.to_string() + " over " + cone.carrier.to_string() +
                        " leaves " + std::to_string(outputs.size()) + " full-dimensional cones");
      }
      if (cone.dimension() <= 2) {
        std::vector<std::vector<LatticeVector>> parts;
        for (const auto& c : outputs) parts.push_back(to_affine(c.generators()));
        if (!slice::is_subdivision(to_affine(cone.generators()), parts)) {
          throw Error(ErrorCode::ConsistencyViolation,
                      "blow-up of " + center.to_string() + " over " + cone.carrier.to_string() +
                          " does not preserve the support");
        }
      }

      BlowupOutcome out;
      out.subdivided = true;
      std::set<LatticeVector> seen(input_rays.begin(), input_rays.end());
      for (const auto& c : outputs) {
        for (const auto& ray : c.rays()) {
          if (seen.insert(ray).second) out.new_rays.push_back(ray);
        }
      }
      out.cones = std::move(outputs);
      return out;
    }
  }
  if (!any_positive) {
    unchanged.note = "center " + center.to_string() +
                     " only occurs with multiplicity 0; blow-up treated as a no-op";
  }
  return unchanged;
}

std::vector<LatticeVector> sigma_dual_generators(std::size_t n, const Integer& r) {
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i <= n; ++i) out.push_back(LatticeVector::unit(n + 1, i));
  LatticeVector last = LatticeVector::zero(n + 1);
  last[0] = r;
  for (std::size_t j = 1; j <= n; ++j) last[j] = -1;
  out.push_back(last);
  return out;
}

Simplex support(const GlobalPoint& p) {
  std::vector<Label> vs;
  for (const auto& [v, c] : p) {
    if (c != 0) vs.push_back(v);
  }
  return Simplex(std::move(vs));
}

std::string exceptional_label(const GlobalPoint& p) {
  std::ostringstream os;
  os << "E:" << support(p).to_string() << ":(";
  bool first = true;
  for (const auto& [v, c] : p) {
    if (c == 0) continue;
    if (!first) os << ',';
    first = false;
    os << c;
  }
  os << ')';
  return os.str();
}

ChartCone::ChartCone(ConeFamilyRecord rec) : record(std::move(rec)), rays(record.rays()) {
  regular = is_regular(rays);
}

LocalFanState LocalFanState::initial(const DualComplex& base, const Integer& r) {
  if (r < 1) throw Error(ErrorCode::InvalidInput, "ramification index must be positive");
  LocalFanState s;
  s.base_ = base;
  s.r_ = r;
  for (const auto& f : base.facets()) s.charts_.push_back({f, {ChartCone(initial_record(f, r))}});
  for (const auto& v : base.vertices()) {
    const GlobalPoint p{{v, r}};
    s.components_[v] = p;
    s.by_point_[p] = v;
  }
  return s;
}

std::optional<Label> LocalFanState::label_at(const GlobalPoint& p) const {
  auto it = by_point_.find(p);
  if (it == by_point_.end()) return std::nullopt;
  return it->second;
}

const GlobalPoint& LocalFanState::point_of(const Label& label) const {
  auto it = components_.find(label);
  if (it == components_.end()) {
    throw Error(ErrorCode::UnknownComponent, "no component named '" + label + "'");
  }
  return it->second;
}

LatticeVector LocalFanState::working_vector(const Simplex& carrier, const GlobalPoint& p) const {
  if (!support(p).is_face_of(carrier)) {
    throw Error(ErrorCode::InvalidInput,
                "point " + point_string(p) + " is not supported on " + carrier.to_string());
  }
  std::vector<Integer> e;
  e.emplace_back(1);
  for (std::size_t i = 1; i < carrier.size(); ++i) {
    auto it = p.find(carrier.vertices()[i]);
    e.push_back(it == p.end() ? Integer(0) : it->second);
  }
  return LatticeVector(std::move(e));
}

GlobalPoint LocalFanState::global_point(const Simplex& carrier, const LatticeVector& working) const {
  if (working.size() != carrier.size() || working[0] != 1) {
    throw Error(ErrorCode::ConsistencyViolation,
                "ray " + working.to_string() + " does not lie on the slice over " +
                    carrier.to_string());
  }
  GlobalPoint p;
  Integer rest = r_;
  for (std::size_t i = 1; i < carrier.size(); ++i) {
    if (working[i] < 0) {
      throw Error(ErrorCode::ConsistencyViolation,
                  "ray " + working.to_string() + " leaves the carrier " + carrier.to_string());
    }
    if (working[i] != 0) p[carrier.vertices()[i]] = working[i];
    rest -= working[i];
  }
  if (rest < 0) {
    throw Error(ErrorCode::ConsistencyViolation,
                "ray " + working.to_string() + " leaves the carrier " + carrier.to_string());
  }
  if (rest != 0) p[carrier.vertices()[0]] = rest;
  return p;
}

const Label& LocalFanState::register_point(const GlobalPoint& p) {
  auto it = by_point_.find(p);
  if (it != by_point_.end()) return it->second;
  Label label = exceptional_label(p);
  if (components_.count(label)) {
    throw Error(ErrorCode::ConsistencyViolation, "label '" + label + "' is already taken");
  }
  components_[label] = p;
  return by_point_.emplace(p, label).first->second;
}

StepRecord LocalFanState::blow_up(const Label& center) {
  const GlobalPoint pt = point_of(center);
  const Simplex sup = support(pt);
  LocalFanState next = *this;
  StepRecord rec;
  rec.center = center;

  std::vector<std::vector<std::size_t>> fresh(next.charts_.size());
  for (std::size_t ci = 0; ci < next.charts_.size(); ++ci) {
    auto& chart = next.charts_[ci];
    if (!sup.is_face_of(chart.carrier)) continue;
    const LatticeVector w = working_vector(chart.carrier, pt);
    std::vector<ChartCone> cones;
    for (auto& cone : chart.cones) {
      if (std::find(cone.rays.begin(), cone.rays.end(), w) == cone.rays.end()) {
        cones.push_back(std::move(cone));
        continue;
      }
      if (chart.carrier.dimension() > 2) {
        if (cone.regular) {
          cones.push_back(std::move(cone));
          continue;
        }
        throw Error(ErrorCode::Unsupported,
                    "schedule execution over carriers of dimension > 2 is not supported (" +
                        chart.carrier.to_string() + ")");
      }
      BlowupOutcome out = blowup_subdivide(cone.record, w);
      if (!out.note.empty()) rec.notes.push_back(chart.carrier.to_string() + ": " + out.note);
      if (!out.subdivided) {
        cones.push_back(std::move(cone));
        continue;
      }
      ++rec.cones_subdivided;
      for (const auto& ray : out.new_rays) {
        const GlobalPoint gp = next.global_point(chart.carrier, ray);
        const bool is_new = next.by_point_.count(gp) == 0;
        const Label& label = next.register_point(gp);
        if (is_new) rec.new_components.push_back(label);
      }
      for (auto& c : out.cones) {
        fresh[ci].push_back(cones.size());
        cones.emplace_back(std::move(c));
      }
    }
    chart.cones = std::move(cones);
  }
  if (rec.cones_subdivided == 0) rec.notes.push_back("no cone was subdivided");

  next.validate_step(fresh, rec.new_components);
  next.history_.push_back(rec);
  *this = std::move(next);
  return rec;
}

bool LocalFanState::would_subdivide(const Label& center) const {
  const GlobalPoint& pt = point_of(center);
  const Simplex sup = support(pt);
  for (const auto& chart : charts_) {
    if (!sup.is_face_of(chart.carrier)) continue;
    const LatticeVector w = working_vector(chart.carrier, pt);
    for (const auto& cone : chart.cones) {
      if (cone.regular) continue;
      if (std::find(cone.rays.begin(), cone.rays.end(), w) == cone.rays.end()) continue;
      if (chart.carrier.dimension() > 2) {
        throw Error(ErrorCode::Unsupported,
                    "schedule execution over carriers of dimension > 2 is not supported (" +
                        chart.carrier.to_string() + ")");
      }
      if (blowup_subdivide(cone.record, w).subdivided) return true;
    }
  }
  return false;
}

TerminalReport LocalFanState::check_terminal() const {
  TerminalReport report;
  for (const auto& chart : charts_) {
    for (const auto& cone : chart.cones) {
      if (cone.regular) continue;
      OffendingCone bad;
      bad.carrier = chart.carrier;
      for (const auto& ray : cone.rays) bad.rays.push_back(global_point(chart.carrier, ray));
      bad.multiplicity =
          rank(cone.rays) == cone.rays.size() ? cone_multiplicity(cone.rays) : Integer(0);
      report.offending.push_back(std::move(bad));
    }
  }
  report.regular = report.offending.empty();
  return report;
}

void LocalFanState::check_fan(std::size_t ci, const std::vector<std::size_t>& cones,
                              const std::vector<const Label*>& labels) const {
  const Chart& chart = charts_[ci];
  for (const Label* label : labels) {
    const GlobalPoint& p = components_.at(*label);
    if (!support(p).is_face_of(chart.carrier)) continue;
    const LatticeVector w = working_vector(chart.carrier, p);
    const LatticeVector a = to_affine(w);
    for (std::size_t k : cones) {
      const ChartCone& cone = chart.cones[k];
      if (std::find(cone.rays.begin(), cone.rays.end(), w) != cone.rays.end()) continue;
      if (slice::contains(to_affine(cone.rays), a)) {
        throw Error(ErrorCode::ConsistencyViolation,
                    "component '" + *label + "' lies in a cone over " + chart.carrier.to_string() +
                        " without being one of its rays");
      }
    }
  }
}

void LocalFanState::check_shared_face(std::size_t i, std::size_t j) const {
  const Simplex face = charts_[i].carrier.intersected(charts_[j].carrier);
  if (face.size() < 2) return;
  if (charts_[i].carrier.dimension() > 2 || charts_[j].carrier.dimension() > 2) return;
  auto cells_on = [&](const Chart& chart) {
    std::set<std::vector<GlobalPoint>> cells;
    for (const auto& cone : chart.cones) {
      std::vector<GlobalPoint> on_face;
      for (const auto& ray : cone.rays) {
        GlobalPoint gp = global_point(chart.carrier, ray);
        if (support(gp).is_face_of(face)) on_face.push_back(std::move(gp));
      }
      if (on_face.size() < face.size()) continue;
      std::vector<LatticeVector> pts;
      for (const auto& gp : on_face) pts.push_back(to_affine(working_vector(face, gp)));
      if (slice::affine_dimension(pts) != face.dimension()) continue;
      std::sort(on_face.begin(), on_face.end());
      cells.insert(std::move(on_face));
    }
    return cells;
  };
  if (cells_on(charts_[i]) != cells_on(charts_[j])) {
    throw Error(ErrorCode::ConsistencyViolation,
                "charts over " + charts_[i].carrier.to_string() + " and " +
                    charts_[j].carrier.to_string() + " disagree on the face " + face.to_string());
  }
}

void LocalFanState::validate_consistency() const {
  std::vector<const Label*> labels;
  for (const auto& [label, p] : components_) labels.push_back(&label);
  for (std::size_t ci = 0; ci < charts_.size(); ++ci) {
    const Chart& chart = charts_[ci];
    if (chart.carrier.dimension() > 2) continue;
    const auto whole = to_affine(initial_record(chart.carrier, r_).generators());
    std::vector<std::vector<LatticeVector>> parts;
    std::vector<std::size_t> all;
    for (const auto& cone : chart.cones) {
      all.push_back(parts.size());
      parts.push_back(to_affine(cone.record.generators()));
    }
    if (!slice::is_subdivision(whole, parts)) {
      throw Error(ErrorCode::ConsistencyViolation,
                  "cones over " + chart.carrier.to_string() + " no longer subdivide the carrier");
    }
    check_fan(ci, all, labels);
  }
  for (std::size_t i = 0; i < charts_.size(); ++i) {
    for (std::size_t j = i + 1; j < charts_.size(); ++j) check_shared_face(i, j);
  }
}

void LocalFanState::validate_step(const std::vector<std::vector<std::size_t>>& fresh,
                                  const std::vector<Label>& added) const {
  // Subdivided cones were already checked against their pieces.
  std::vector<const Label*> all;
  for (const auto& [label, p] : components_) all.push_back(&label);
  std::vector<const Label*> added_ptrs;
  std::vector<Simplex> added_supports;
  for (const auto& label : added) {
    added_ptrs.push_back(&components_.find(label)->first);
    added_supports.push_back(support(components_.at(label)));
  }
  std::vector<std::size_t> every;
  for (std::size_t ci = 0; ci < charts_.size(); ++ci) {
    if (charts_[ci].carrier.dimension() > 2) continue;
    if (!fresh[ci].empty()) check_fan(ci, fresh[ci], all);
    if (!added_ptrs.empty()) {
      every.resize(charts_[ci].cones.size());
      for (std::size_t k = 0; k < every.size(); ++k) every[k] = k;
      check_fan(ci, every, added_ptrs);
    }
  }
  for (std::size_t i = 0; i < charts_.size(); ++i) {
    for (std::size_t j = i + 1; j < charts_.size(); ++j) {
      if (fresh[i].empty() && fresh[j].empty()) continue;
      const Simplex face = charts_[i].carrier.intersected(charts_[j].carrier);
      if (face.size() < 2) continue;
      const bool touched = std::any_of(added_supports.begin(), added_supports.end(),
                                       [&](const Simplex& s) { return s.is_face_of(face); });
      if (touched) check_shared_face(i, j);
    }
  }
}

LocalFanState run_schedule(LocalFanState state, const std::vector<Label>& schedule,
                           const StepObserver& observer) {
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    try {
      const StepRecord rec = state.blow_up(schedule[i]);
      if (observer) observer(state, rec);
    } catch (const Error& e) {
      throw Error(e.code(), "schedule step " + std::to_string(i + 1) + " ('" + schedule[i] +
                                "'): " + e.detail());
    }
  }
  return state;
}

std::vector<Label> default_schedule(const LocalFanState& state, LocalFanState* terminal) {
  LocalFanState work = state;
  std::vector<Label> schedule;
  // Each proper subdivision adds a lattice cell, and there are at most r^n
  // cells per carrier.
  std::size_t budget = 0;
  for (const auto& chart : state.charts()) {
    Integer cells = 1;
    for (int k = 0; k < chart.carrier.dimension(); ++k) cells *= state.r();
    budget += static_cast<std::size_t>(cells);
  }
  for (TerminalReport report = work.check_terminal(); !report.regular;
       report = work.check_terminal()) {
    if (schedule.size() > budget) {
      throw Error(ErrorCode::NoProgress, "greedy schedule exceeded the cell bound");
    }
    // Only rays of non-regular cones can subdivide anything.
    std::set<Label> candidates;
    for (const auto& cone : report.offending) {
      for (const auto& p : cone.rays) {
        if (auto label = work.label_at(p)) candidates.insert(*label);
      }
    }
    std::optional<Label> pick;
    for (const auto& label : candidates) {
      if (work.would_subdivide(label)) {
        pick = label;
        break;
      }
    }
    if (!pick) {
      throw Error(ErrorCode::NoProgress,
                  "no component subdivides any of the remaining non-regular cones");
    }
    work.blow_up(*pick);
    schedule.push_back(*pick);
  }
  if (terminal) *terminal = std::move(work);
  return schedule;
}

TerminalReport check_terminal(const LocalFanState& state) { return state.check_terminal(); }

}  // namespace toricres
