#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xtalk/gatelib.hpp"

namespace xtalk {

// ---- technology-independent network ---------------------------------------

// One sum-of-products node. Rows are cover lines over the named inputs with
// characters {0,1,-}; on_set distinguishes covers listing the function's
// one-rows from covers listing its zero-rows.
struct SopNode {
  std::string output;
  std::vector<std::string> inputs;
  std::vector<std::string> rows;
  bool on_set = true;

  bool eval(std::uint32_t input_bits) const;
};

struct LogicNetwork {
  std::string name;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<SopNode> nodes;  // topologically ordered after parsing

  // Evaluates all outputs for one assignment of the primary inputs
  // (bit i = inputs[i]).
  std::vector<bool> eval(const std::vector<bool>& input_values) const;
  int num_inputs() const { return static_cast<int>(inputs.size()); }
};

// Supports .model/.inputs/.outputs/.names/.end, '#' comments and '\'
// continuations. Latches, hierarchy, and other dot-commands are rejected.
LogicNetwork parse_blif(const std::string& text);

// ---- mapped design ---------------------------------------------------------

enum class CtrlValue { Zero, One, Free };

struct GateInst {
  std::string id;
  std::string template_name;
  int phase = 0;
  // Port bindings in template order: data ports, control ports, outputs.
  std::vector<std::pair<std::string, std::string>> connections;

  const std::string& net_for(const std::string& port) const;
};

struct InvInst {
  std::string id;
  std::string in;
  std::string out;
};

struct BufInst {
  std::string id;
  std::string in;
  std::string out;
  int drive = 1;
};

struct CrosstalkNetlist {
  SimParams params;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<std::pair<std::string, CtrlValue>> controls;
  std::vector<GateInst> gates;
  std::vector<InvInst> inverters;
  std::vector<BufInst> buffers;

  std::vector<std::string> free_controls() const;
  bool structurally_equal(const CrosstalkNetlist& other) const;
};

CrosstalkNetlist parse_xtn(const std::string& text, const TemplateSet& lib);
std::string serialize_xtn(const CrosstalkNetlist& n);

// FNV-1a over the serialized form; identifies a design in trace metadata.
std::uint64_t netlist_hash(const CrosstalkNetlist& n);

// ---- diagnostics -----------------------------------------------------------

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity;
  std::string location;
  std::string message;
};

struct Diagnostics {
  std::vector<Diagnostic> items;

  bool ok() const;  // no errors (warnings allowed)
  bool empty() const { return items.empty(); }
  int error_count() const;
  void error(const std::string& loc, const std::string& msg);
  void warning(const std::string& loc, const std::string& msg);
  std::string to_text() const;
};

// Structural checks: single driver, acyclicity, port/template agreement,
// control binding rules, phase alternation between adjacent crosstalk nodes,
// fan-out limit (warning), and per-mode consistency of referenced templates
// (warnings, so deliberately mis-calibrated cells remain simulable).
Diagnostics validate(const CrosstalkNetlist& n, const TemplateSet& lib,
                     int fanout_limit = 4);

// ---- flattened view --------------------------------------------------------

// Composite gates expand to their internal single-victim nodes; inverter and
// buffer chains stay as zero-delay statics. All core algorithms (levels,
// phases, simulation) run on this view.
struct FlatNode {
  std::string path;               // instance id, or "<id>/<internal>"
  const GateTemplate* tmpl;       // owning template (for mode lookup)
  std::vector<GateMode> modes;    // resolved per control assignment
  std::vector<int> data_nets;
  std::vector<int> ctrl_nets;     // indices into nets; empty when static
  int out_net = -1;
  bool output_inverted = false;
  int phase = 0;
  int level = 0;
};

struct FlatStatic {
  std::string path;
  int in_net = -1;
  int out_net = -1;
  bool invert = false;
};

struct FlatDesign {
  std::vector<std::string> net_names;
  std::map<std::string, int> net_index;
  std::vector<FlatNode> nodes;
  std::vector<FlatStatic> statics;  // topologically ordered
  std::vector<int> input_nets;
  std::vector<int> output_nets;
  std::vector<std::pair<int, CtrlValue>> control_nets;
  int max_level = 0;

  int net(const std::string& name) const;
};

// Throws SemanticError on structural problems (use validate for diagnosis).
FlatDesign flatten(const CrosstalkNetlist& n, const TemplateSet& lib);

// ---- levels ----------------------------------------------------------------

struct LevelMap {
  std::map<std::string, int> instance_level;  // crosstalk gate instances
  std::map<std::string, int> node_level;      // flat nodes (composite internals)
  int max_level = 0;
};

// level = 1 + max level over crosstalk ancestors; statics are transparent.
// Throws SemanticError naming a witness cycle when the design is cyclic.
LevelMap levelize(const CrosstalkNetlist& n, const TemplateSet& lib);

}  // namespace xtalk
