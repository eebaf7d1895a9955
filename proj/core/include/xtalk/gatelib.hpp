#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "xtalk/rational.hpp"

namespace xtalk {

// Global electrical parameters. Voltages are fractions of the supply;
// capacitances are integers in tenths of the unit coupling capacitance.
struct SimParams {
  Rat switch_threshold{3, 10};  // inverter flips when the victim reaches this
  Rat min_separation{1, 50};    // required distance of any voltage from the threshold
  int victim_load = 1;          // parasitic + inverter input load, deci-units

  bool valid() const {
    return switch_threshold - min_separation > Rat(0) &&
           switch_threshold + min_separation < Rat(1) && victim_load >= 0 &&
           min_separation >= Rat(0);
  }
  bool operator==(const SimParams&) const = default;
};

enum class PortKind { Data, Control };

// One aggressor line. The weight is its coupling capacitance onto the victim.
struct AggressorPort {
  std::string name;
  PortKind kind = PortKind::Data;
  int weight = 10;
};

// Electrical configuration of a single-victim node under one control
// assignment. The node flips when the summed weights of logic-1 data
// inputs reach `margin`; switched branches let weights and the grounded
// auxiliary load differ per mode.
struct GateMode {
  int mode_id = 0;  // equals the control assignment (bit i = control port i)
  std::vector<int> data_weights;
  int aux_load = 0;
  int margin = 0;
};

// Internal structure of a multi-node cell. Node inputs name either composite
// data ports or internal nets; every node output and inverter output is an
// internal net. Composite outputs map output ports to internal nets.
struct CompositeNode {
  std::string id;
  std::vector<std::string> inputs;
  std::vector<int> weights;
  int aux_load = 0;
  int margin = 0;
  bool output_inverted = true;  // native inverter only; false adds a second stage
};

struct CompositeInverter {
  std::string id;
  std::string in;
  std::string out;
};

struct CompositeSpec {
  std::vector<CompositeNode> nodes;  // topologically ordered
  std::vector<CompositeInverter> inverters;
  std::vector<std::pair<std::string, std::string>> outputs;  // port -> internal net
};

struct GateTemplate {
  std::string name;
  std::vector<AggressorPort> data_ports;
  std::vector<AggressorPort> control_ports;
  std::vector<GateMode> modes;  // indexed by control assignment; empty for composites
  bool output_inverted = false;
  std::optional<int> declared_cost;
  std::optional<CompositeSpec> composite;

  bool is_composite() const { return composite.has_value(); }
  bool is_polymorphic() const { return !control_ports.empty(); }
  int num_data_ports() const { return static_cast<int>(data_ports.size()); }
  const GateMode& mode(int mode_id) const;  // throws SemanticError if unknown
  // Output port names in declaration order ("y" for single-output cells).
  std::vector<std::string> output_ports() const;
};

class TemplateSet {
 public:
  void add(GateTemplate t);
  const GateTemplate* find(const std::string& name) const;
  const GateTemplate& at(const std::string& name) const;  // throws if missing
  const std::vector<GateTemplate>& all() const { return templates_; }

 private:
  std::vector<GateTemplate> templates_;
};

// ---- behavioral and analytical models ----------------------------------

// Behavioral route: flip iff the summed weights of high data inputs reach
// the mode's margin. `inputs` bit i = data port i.
bool margin_eval_flip(const GateTemplate& t, int mode_id, std::uint32_t inputs);

// Node output after the inverter pairing implied by output_inverted.
bool margin_eval(const GateTemplate& t, int mode_id, std::uint32_t inputs);

// Analytical route: charge-conserving divider over the coupled branches.
Rat victim_voltage(const GateTemplate& t, int mode_id, std::uint32_t inputs,
                   const SimParams& params);

struct ConsistencyViolation {
  std::uint32_t inputs = 0;
  Rat voltage;
  bool flip_mismatch = false;      // margin and voltage routes disagree
  bool separation_violated = false;  // |V - threshold| < min_separation
};

struct ConsistencyReport {
  bool pass = true;
  Rat worst_slack;  // min over vectors of |V - threshold|
  std::vector<ConsistencyViolation> violations;
};

// Exhaustive agreement check of the two routes plus the separation rule.
// Composites are checked node by node.
ConsistencyReport check_consistency(const GateTemplate& t, int mode_id,
                                    const SimParams& params);

// Minimum separation of any victim voltage from the switching threshold.
// Throws SemanticError if the mode is inconsistent.
Rat noise_margin(const GateTemplate& t, int mode_id, const SimParams& params);

// ---- calibration ---------------------------------------------------------

struct CalibrationBounds {
  int max_weight = 80;
  int max_aux = 80;
  int weight_granularity = 10;
};

struct Infeasible {
  enum class Reason { NotThreshold, BoundsExhausted };
  Reason reason = Reason::NotThreshold;
  std::string detail;
};

using CalibrationResult = std::variant<GateMode, Infeasible>;

// Searches integer weights and auxiliary load realizing the given flip set
// (bit v of flip_set = desired flip on input vector v) so that the margin
// and voltage routes agree with the required separation. Minimizes total
// capacitance, ties broken by lexicographically smallest weight vector.
CalibrationResult calibrate(std::uint64_t flip_set, int num_inputs,
                            const SimParams& params,
                            const CalibrationBounds& bounds = {});

// ---- library -------------------------------------------------------------

// Compiled-in template set: static gates, composite XOR2/XNOR2/FA, and the
// seven run-time configurable pairs. Every mode passes check_consistency
// under default parameters (enforced by the test suite).
const TemplateSet& builtin_library();

// Truth table of each output port for the given mode, bit v = value on
// input vector v over the data ports. Composites are evaluated through
// their internal netlist.
std::vector<std::uint64_t> truth_tables(const GateTemplate& t, int mode_id);

// ---- injection-model argument --------------------------------------------

// Demonstrates that a control line modeled as one more charge-injecting
// aggressor over a shared divider cannot make a single cell both AND2 and
// OR2: the (Ct=1, A=B=0) and (Ct=0, A=B=1) cases inject identical weight,
// so they must flip identically at every threshold. Load modulation (the
// model used here) has no such collision.
struct InjectionCase {
  bool ct, a, b;
  int injected_weight;       // total transitioned coupling, shared divider
  bool and2_or2_required;    // output required by the AND2/OR2 contract
};

struct InjectionReport {
  std::vector<InjectionCase> cases;              // the 8 (Ct,A,B) cases
  int colliding_weight = 0;                      // equal injected total
  std::pair<std::size_t, std::size_t> collision; // indices of the conflicting pair
  int thresholds_scanned = 0;                    // vm = k/100, k = 1..99
  int thresholds_collided = 0;                   // collision present at vm
  bool load_modulation_realizes_both = false;    // margin-model AND2/OR2 tables
  std::string to_text() const;                   // deterministic rendering
};

InjectionReport prove_injection_infeasible();

}  // namespace xtalk
