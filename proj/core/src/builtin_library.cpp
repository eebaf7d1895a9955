#include "xtalk/gatelib.hpp"

namespace xtalk {

namespace {

AggressorPort data(const std::string& name, int weight) {
  return {name, PortKind::Data, weight};
}

AggressorPort control(const std::string& name, int weight) {
  return {name, PortKind::Control, weight};
}

GateMode mode(int id, std::vector<int> weights, int aux, int margin) {
  return {id, std::move(weights), aux, margin};
}

GateTemplate single(std::string name, std::vector<AggressorPort> ports,
                    GateMode m, bool inverted,
                    std::optional<int> declared = std::nullopt) {
  GateTemplate t;
  t.name = std::move(name);
  t.data_ports = std::move(ports);
  t.modes = {std::move(m)};
  t.output_inverted = inverted;
  t.declared_cost = declared;
  return t;
}

// A run-time configurable cell: one control aggressor, two modes selected by
// its value. The control weight is the total coupling it switches.
GateTemplate pair_cell(std::string name, std::vector<AggressorPort> ports,
                       GateMode mode0, GateMode mode1, int ctrl_weight) {
  GateTemplate t;
  t.name = std::move(name);
  t.data_ports = std::move(ports);
  t.control_ports = {control("ct", ctrl_weight)};
  mode0.mode_id = 0;
  mode1.mode_id = 1;
  t.modes = {std::move(mode0), std::move(mode1)};
  t.output_inverted = false;
  return t;
}

TemplateSet make_builtin() {
  TemplateSet lib;

  // Static single-node gates. Weights, auxiliary loads, and margins are the
  // minimal-capacitance solutions found by calibrate() under default
  // parameters; the test suite re-derives them.
  lib.add(single("NAND2", {data("a", 10), data("b", 10)},
                 mode(0, {10, 10}, 20, 20), true));
  lib.add(single("NOR2", {data("a", 10), data("b", 10)},
                 mode(0, {10, 10}, 0, 10), true));
  lib.add(single("AND2", {data("a", 10), data("b", 10)},
                 mode(0, {10, 10}, 20, 20), false));
  lib.add(single("OR2", {data("a", 10), data("b", 10)},
                 mode(0, {10, 10}, 0, 10), false));
  lib.add(single("NAND3", {data("a", 10), data("b", 10), data("c", 10)},
                 mode(0, {10, 10, 10}, 50, 30), true));
  lib.add(single("NOR3", {data("a", 10), data("b", 10), data("c", 10)},
                 mode(0, {10, 10, 10}, 0, 10), true));
  lib.add(single("AND3", {data("a", 10), data("b", 10), data("c", 10)},
                 mode(0, {10, 10, 10}, 50, 30), false));
  lib.add(single("OR3", {data("a", 10), data("b", 10), data("c", 10)},
                 mode(0, {10, 10, 10}, 0, 10), false));
  lib.add(single("MAJ3", {data("a", 10), data("b", 10), data("c", 10)},
                 mode(0, {10, 10, 10}, 10, 20), false));
  lib.add(single("AO21", {data("a", 10), data("b", 10), data("c", 20)},
                 mode(0, {10, 10, 20}, 0, 20), false));
  lib.add(single("OA21", {data("a", 10), data("b", 10), data("c", 20)},
                 mode(0, {10, 10, 20}, 40, 30), false));
  // Single-input relay; consumes one clock phase, used to restore phase
  // alternation on unbalanced paths.
  lib.add(single("XBUF", {data("a", 10)}, mode(0, {10}, 0, 10), false));

  // XOR2: a NAND2 node feeding a second node that flips when exactly one
  // input is high. Single-node XOR is not a threshold function, so the
  // library encodes it as a two-node composite.
  {
    GateTemplate t;
    t.name = "XOR2";
    t.data_ports = {data("a", 10), data("b", 10)};
    CompositeSpec c;
    c.nodes.push_back({"nab", {"a", "b"}, {10, 10}, 20, 20, true});
    c.nodes.push_back({"x", {"a", "b", "nab"}, {10, 10, 20}, 40, 30, false});
    c.outputs = {{"y", "x"}};
    t.composite = std::move(c);
    lib.add(std::move(t));

    GateTemplate x = lib.at("XOR2");
    x.name = "XNOR2";
    x.composite->nodes[1].id = "xn";
    x.composite->nodes[1].output_inverted = true;
    x.composite->outputs = {{"y", "xn"}};
    lib.add(std::move(x));
  }

  // Full adder: majority node for the carry; its native inverted output
  // feeds the sum node, which flips on an odd number of high inputs.
  {
    GateTemplate t;
    t.name = "FA";
    t.data_ports = {data("a", 10), data("b", 10), data("cin", 10)};
    t.declared_cost = 13;
    CompositeSpec c;
    c.nodes.push_back({"nc", {"a", "b", "cin"}, {10, 10, 10}, 10, 20, true});
    c.nodes.push_back(
        {"ns", {"a", "b", "cin", "nc"}, {10, 10, 10, 20}, 30, 30, true});
    c.inverters.push_back({"is", "ns", "sum"});
    c.inverters.push_back({"ic", "nc", "cout"});
    c.outputs = {{"sum", "sum"}, {"cout", "cout"}};
    t.composite = std::move(c);
    lib.add(std::move(t));
  }

  // The seven configurable pairs. Mode 0 is the ct=0 function.
  lib.add(pair_cell("AND2-OR2", {data("a", 10), data("b", 10)},
                    mode(0, {10, 10}, 20, 20), mode(1, {10, 10}, 0, 10), 20));
  lib.add(pair_cell("AND3-OR3",
                    {data("a", 10), data("b", 10), data("c", 10)},
                    mode(0, {10, 10, 10}, 50, 30),
                    mode(1, {10, 10, 10}, 0, 10), 50));
  lib.add(pair_cell("AO21-OA21",
                    {data("a", 10), data("b", 10), data("c", 20)},
                    mode(0, {10, 10, 20}, 0, 20),
                    mode(1, {10, 10, 20}, 40, 30), 40));
  // "AND" side realized as a three-input AND sharing the AO21 weight vector:
  // with weights (10,10,20) only the full sum 40 flips the node.
  lib.add(pair_cell("AND-AO21",
                    {data("a", 10), data("b", 10), data("c", 20)},
                    mode(0, {10, 10, 20}, 70, 40),
                    mode(1, {10, 10, 20}, 0, 20), 70));
  lib.add(pair_cell("AND3-OA21",
                    {data("a", 10), data("b", 10), data("c", 20)},
                    mode(0, {10, 10, 20}, 70, 40),
                    mode(1, {10, 10, 20}, 40, 30), 30));
  lib.add(pair_cell("OR3-AO21",
                    {data("a", 10), data("b", 10), data("c", 10)},
                    mode(0, {10, 10, 10}, 0, 10),
                    mode(1, {10, 10, 20}, 0, 20), 10));
  lib.add(pair_cell("OR3-OA21",
                    {data("a", 10), data("b", 10), data("c", 10)},
                    mode(0, {10, 10, 10}, 0, 10),
                    mode(1, {10, 10, 20}, 40, 30), 50));

  return lib;
}

}  // namespace

const TemplateSet& builtin_library() {
  static const TemplateSet lib = make_builtin();
  return lib;
}

}  // namespace xtalk
