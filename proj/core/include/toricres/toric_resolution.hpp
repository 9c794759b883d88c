#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toricres/dual_complex.hpp"
#include "toricres/lattice.hpp"

namespace toricres {

// Slice points of a carrier with sorted vertices v_0..v_n are written as
// working vectors (1, c_1, ..., c_n), where (c_0, ..., c_n) are barycentric
// integer coordinates summing to r.

struct EntryRay {
  LatticeVector point;
  Integer multiplicity;
};

/// A cone of the local family: generators p_i + r_i * g for every entry
/// (p_i, r_i) and every direction g. The directions are the zero vector
/// and the unit vectors of the working frame, minus those already split off.
struct ConeFamilyRecord {
  std::vector<EntryRay> e_rays;
  std::vector<LatticeVector> f_dirs;
  Simplex carrier;

  std::vector<LatticeVector> generators() const;
  /// Extreme generators, i.e. the minimal ray generators of the cone.
  std::vector<LatticeVector> rays() const;
  int dimension() const { return carrier.dimension(); }
};

ConeFamilyRecord initial_record(const Simplex& carrier, const Integer& r);

LatticeVector to_affine(const LatticeVector& working);
std::vector<LatticeVector> to_affine(const std::vector<LatticeVector>& working);

struct BlowupOutcome {
  std::vector<ConeFamilyRecord> cones;
  bool subdivided = false;
  std::vector<LatticeVector> new_rays;
  std::string note;
};

/// Subdivision of one cone induced by blowing up the component whose ray is
/// `center` (a working vector). Degenerate subdivisions return the input.
BlowupOutcome blowup_subdivide(const ConeFamilyRecord& cone, const LatticeVector& center);

/// Generators e_1^*, f_1^*, ..., f_n^*, r e_1^* - f_1^* - ... - f_n^* of the dual cone.
std::vector<LatticeVector> sigma_dual_generators(std::size_t n, const Integer& r);

/// Nonzero barycentric coordinates keyed by base vertex.
using GlobalPoint = std::map<Label, Integer>;

Simplex support(const GlobalPoint& p);
std::string exceptional_label(const GlobalPoint& p);

/// A cone of a chart with its ray set and regularity cached.
struct ChartCone {
  ConeFamilyRecord record;
  std::vector<LatticeVector> rays;
  bool regular = false;

  explicit ChartCone(ConeFamilyRecord rec);
};

struct Chart {
  Simplex carrier;
  std::vector<ChartCone> cones;
};

struct OffendingCone {
  Simplex carrier;
  std::vector<GlobalPoint> rays;
  Integer multiplicity;  // 0 when the rays are linearly dependent
};

struct TerminalReport {
  bool regular = true;
  std::vector<OffendingCone> offending;
};

struct StepRecord {
  Label center;
  std::size_t cones_subdivided = 0;
  std::vector<Label> new_components;
  std::vector<std::string> notes;
};

class LocalFanState {
 public:
  static LocalFanState initial(const DualComplex& base, const Integer& r);

  const DualComplex& base() const { return base_; }
  const Integer& r() const { return r_; }
  const std::vector<Chart>& charts() const { return charts_; }
  const std::map<Label, GlobalPoint>& components() const { return components_; }
  const std::vector<StepRecord>& history() const { return history_; }

  std::optional<Label> label_at(const GlobalPoint& p) const;
  /// Throws UnknownComponent.
  const GlobalPoint& point_of(const Label& label) const;

  LatticeVector working_vector(const Simplex& carrier, const GlobalPoint& p) const;
  GlobalPoint global_point(const Simplex& carrier, const LatticeVector& working) const;

  /// Blows up `center` in every cone having it as a ray and re-validates
  /// the fans. Throws UnknownComponent, Unsupported or ConsistencyViolation.
  StepRecord blow_up(const Label& center);
  bool would_subdivide(const Label& center) const;

  TerminalReport check_terminal() const;
  /// Throws ConsistencyViolation when a chart stops being a fan subdividing its
  /// carrier or when two charts disagree on a shared face.
  void validate_consistency() const;

 private:
  DualComplex base_;
  Integer r_ = 1;
  std::vector<Chart> charts_;
  std::map<Label, GlobalPoint> components_;
  std::map<GlobalPoint, Label> by_point_;
  std::vector<StepRecord> history_;

  const Label& register_point(const GlobalPoint& p);
  /// Incremental check after a step: `fresh[c]` lists the new cones of chart c
  /// and `added` the new components.
  void validate_step(const std::vector<std::vector<std::size_t>>& fresh,
                     const std::vector<Label>& added) const;
  void check_fan(std::size_t chart, const std::vector<std::size_t>& cones,
                 const std::vector<const Label*>& labels) const;
  void check_shared_face(std::size_t i, std::size_t j) const;
};

using StepObserver = std::function<void(const LocalFanState&, const StepRecord&)>;

LocalFanState run_schedule(LocalFanState state, const std::vector<Label>& schedule,
                           const StepObserver& observer = {});

/// Greedy schedule: repeatedly the lexicographically smallest component whose
/// blow-up properly subdivides some cone. Throws NoProgress when stuck.
/// When `terminal` is given it receives the resolved state.
std::vector<Label> default_schedule(const LocalFanState& state, LocalFanState* terminal = nullptr);

TerminalReport check_terminal(const LocalFanState& state);

}  // namespace toricres
