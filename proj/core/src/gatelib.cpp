#include "xtalk/gatelib.hpp"

#include <algorithm>
#include <map>

#include "xtalk/errors.hpp"

namespace xtalk {

const GateMode& GateTemplate::mode(int mode_id) const {
  for (const auto& m : modes)
    if (m.mode_id == mode_id) return m;
  throw SemanticError("template '" + name + "': unknown mode " +
                      std::to_string(mode_id));
}

std::vector<std::string> GateTemplate::output_ports() const {
  if (composite) {
    std::vector<std::string> names;
    for (const auto& [port, net] : composite->outputs) names.push_back(port);
    return names;
  }
  return {"y"};
}

void TemplateSet::add(GateTemplate t) {
  if (find(t.name)) throw SemanticError("duplicate template '" + t.name + "'");
  templates_.push_back(std::move(t));
}

const GateTemplate* TemplateSet::find(const std::string& name) const {
  for (const auto& t : templates_)
    if (t.name == name) return &t;
  return nullptr;
}

const GateTemplate& TemplateSet::at(const std::string& name) const {
  const GateTemplate* t = find(name);
  if (!t) throw SemanticError("unknown template '" + name + "'");
  return *t;
}

namespace {

int transitioned_weight(const GateMode& m, std::uint32_t inputs) {
  int sum = 0;
  for (std::size_t i = 0; i < m.data_weights.size(); ++i)
    if (inputs >> i & 1) sum += m.data_weights[i];
  return sum;
}

// Divider over raw weights, usable for both template modes and composite
// internals.
Rat divider_voltage(const std::vector<int>& weights, int aux_load,
                    std::uint32_t inputs, const SimParams& params) {
  std::int64_t high = 0, total = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    total += weights[i];
    if (inputs >> i & 1) high += weights[i];
  }
  if (high == 0) return Rat(0);
  return Rat(high, total + aux_load + params.victim_load);
}

ConsistencyReport check_node(const std::vector<int>& weights, int aux_load,
                             int margin, const SimParams& params) {
  ConsistencyReport rep;
  rep.worst_slack = Rat(1);
  const std::uint32_t count = 1u << weights.size();
  for (std::uint32_t v = 0; v < count; ++v) {
    int sum = 0;
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (v >> i & 1) sum += weights[i];
    bool flip = sum >= margin;
    Rat volt = divider_voltage(weights, aux_load, v, params);
    bool volt_flip = volt >= params.switch_threshold;
    Rat sep = volt >= params.switch_threshold ? volt - params.switch_threshold
                                              : params.switch_threshold - volt;
    rep.worst_slack = std::min(rep.worst_slack, sep);
    ConsistencyViolation viol;
    viol.inputs = v;
    viol.voltage = volt;
    if (flip != volt_flip) viol.flip_mismatch = true;
    if (sep < params.min_separation) viol.separation_violated = true;
    if (viol.flip_mismatch || viol.separation_violated) {
      rep.pass = false;
      rep.violations.push_back(viol);
    }
  }
  return rep;
}

}  // namespace

bool margin_eval_flip(const GateTemplate& t, int mode_id, std::uint32_t inputs) {
  if (t.is_composite())
    throw SemanticError("template '" + t.name +
                        "' is composite; evaluate through its netlist");
  const GateMode& m = t.mode(mode_id);
  return transitioned_weight(m, inputs) >= m.margin;
}

bool margin_eval(const GateTemplate& t, int mode_id, std::uint32_t inputs) {
  bool flip = margin_eval_flip(t, mode_id, inputs);
  return t.output_inverted ? !flip : flip;
}

Rat victim_voltage(const GateTemplate& t, int mode_id, std::uint32_t inputs,
                   const SimParams& params) {
  if (t.is_composite())
    throw SemanticError("template '" + t.name +
                        "' is composite; it has no single victim");
  const GateMode& m = t.mode(mode_id);
  return divider_voltage(m.data_weights, m.aux_load, inputs, params);
}

ConsistencyReport check_consistency(const GateTemplate& t, int mode_id,
                                    const SimParams& params) {
  if (t.is_composite()) {
    // A composite is consistent when every internal node is.
    ConsistencyReport rep;
    rep.worst_slack = Rat(1);
    for (const auto& node : t.composite->nodes) {
      ConsistencyReport r =
          check_node(node.weights, node.aux_load, node.margin, params);
      rep.worst_slack = std::min(rep.worst_slack, r.worst_slack);
      if (!r.pass) {
        rep.pass = false;
        rep.violations.insert(rep.violations.end(), r.violations.begin(),
                              r.violations.end());
      }
    }
    return rep;
  }
  const GateMode& m = t.mode(mode_id);
  return check_node(m.data_weights, m.aux_load, m.margin, params);
}

Rat noise_margin(const GateTemplate& t, int mode_id, const SimParams& params) {
  ConsistencyReport rep = check_consistency(t, mode_id, params);
  if (!rep.pass)
    throw SemanticError("template '" + t.name + "' mode " +
                        std::to_string(mode_id) + " is inconsistent");
  return rep.worst_slack;
}

namespace {

// Combinational evaluation of a composite through its internal netlist.
std::uint32_t eval_composite(const GateTemplate& t, std::uint32_t inputs) {
  std::map<std::string, bool> nets;
  for (std::size_t i = 0; i < t.data_ports.size(); ++i)
    nets[t.data_ports[i].name] = (inputs >> i & 1) != 0;
  // Nodes are stored topologically; inverters may interleave, so sweep until
  // stable (tiny structures, two passes suffice).
  for (int pass = 0; pass < 4; ++pass) {
    for (const auto& node : t.composite->nodes) {
      int sum = 0;
      bool ready = true;
      for (std::size_t i = 0; i < node.inputs.size(); ++i) {
        auto it = nets.find(node.inputs[i]);
        if (it == nets.end()) {
          ready = false;
          break;
        }
        if (it->second) sum += node.weights[i];
      }
      if (!ready) continue;
      bool flip = sum >= node.margin;
      nets[node.id] = node.output_inverted ? !flip : flip;
    }
    for (const auto& inv : t.composite->inverters) {
      auto it = nets.find(inv.in);
      if (it != nets.end()) nets[inv.out] = !it->second;
    }
  }
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < t.composite->outputs.size(); ++i) {
    auto it = nets.find(t.composite->outputs[i].second);
    if (it == nets.end())
      throw SemanticError("composite '" + t.name + "': output net '" +
                          t.composite->outputs[i].second + "' never defined");
    if (it->second) out |= 1u << i;
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> truth_tables(const GateTemplate& t, int mode_id) {
  const int n = t.num_data_ports();
  if (n > 6) throw SemanticError("truth_tables: too many data ports");
  const std::uint32_t count = 1u << n;
  if (t.is_composite()) {
    std::vector<std::uint64_t> tabs(t.composite->outputs.size(), 0);
    for (std::uint32_t v = 0; v < count; ++v) {
      std::uint32_t out = eval_composite(t, v);
      for (std::size_t o = 0; o < tabs.size(); ++o)
        if (out >> o & 1) tabs[o] |= std::uint64_t(1) << v;
    }
    return tabs;
  }
  std::uint64_t tab = 0;
  for (std::uint32_t v = 0; v < count; ++v)
    if (margin_eval(t, mode_id, v)) tab |= std::uint64_t(1) << v;
  return {tab};
}

}  // namespace xtalk
