#include <sstream>

#include "xtalk/gatelib.hpp"

namespace xtalk {

// Charge-injection reading of the control line: Ct is one more aggressor on
// a shared divider with weights A=B=10, Ct=20. The AND2/OR2 contract then
// demands different flips from two cases that inject the same total weight,
// which no single threshold can deliver.
InjectionReport prove_injection_infeasible() {
  InjectionReport rep;
  const int wa = 10, wb = 10, wct = 20;

  for (int v = 0; v < 8; ++v) {
    InjectionCase c;
    c.ct = (v >> 2 & 1) != 0;
    c.a = (v >> 0 & 1) != 0;
    c.b = (v >> 1 & 1) != 0;
    c.injected_weight = (c.a ? wa : 0) + (c.b ? wb : 0) + (c.ct ? wct : 0);
    c.and2_or2_required = c.ct ? (c.a || c.b) : (c.a && c.b);
    rep.cases.push_back(c);
  }

  // The conflicting pair: (Ct=1, A=B=0) must not flip (OR2 of zeros) while
  // (Ct=0, A=B=1) must flip (AND2 of ones); both inject weight 20.
  for (std::size_t i = 0; i < rep.cases.size(); ++i)
    for (std::size_t j = i + 1; j < rep.cases.size(); ++j)
      if (rep.cases[i].injected_weight == rep.cases[j].injected_weight &&
          rep.cases[i].and2_or2_required != rep.cases[j].and2_or2_required) {
        rep.collision = {i, j};
        rep.colliding_weight = rep.cases[i].injected_weight;
      }

  for (int k = 1; k <= 99; ++k) {
    Rat vm(k, 100);
    const auto& ci = rep.cases[rep.collision.first];
    const auto& cj = rep.cases[rep.collision.second];
    Rat vi(ci.injected_weight, wa + wb + wct + 1);
    Rat vj(cj.injected_weight, wa + wb + wct + 1);
    bool flip_i = vi >= vm;
    bool flip_j = vj >= vm;
    ++rep.thresholds_scanned;
    // Identical voltages force identical flips, so the contract is violated
    // at every threshold.
    if (flip_i == flip_j &&
        ci.and2_or2_required != cj.and2_or2_required)
      ++rep.thresholds_collided;
  }

  // Load modulation instead switches the grounded load per mode; the margin
  // model of the builtin cell realizes both truth tables.
  const GateTemplate& cell = builtin_library().at("AND2-OR2");
  rep.load_modulation_realizes_both = true;
  for (const auto& c : rep.cases) {
    std::uint32_t in = (c.a ? 1u : 0u) | (c.b ? 2u : 0u);
    bool got = margin_eval(cell, c.ct ? 1 : 0, in);
    if (got != c.and2_or2_required) rep.load_modulation_realizes_both = false;
  }
  return rep;
}

std::string InjectionReport::to_text() const {
  std::ostringstream os;
  os << "charge-injection control model, weights A=10 B=10 Ct=20, shared "
        "divider\n";
  os << "ct a b | injected | required (AND2@ct=0 / OR2@ct=1)\n";
  for (const auto& c : cases)
    os << " " << c.ct << " " << c.a << " " << c.b << " |       " << (c.injected_weight < 10 ? " " : "")
       << c.injected_weight << " | " << c.and2_or2_required << "\n";
  os << "collision: cases " << collision.first << " and " << collision.second
     << " inject equal weight " << colliding_weight
     << " but require different outputs\n";
  os << "threshold scan: " << thresholds_collided << "/" << thresholds_scanned
     << " grid points show the collision\n";
  os << "load-modulation cell realizes both modes: "
     << (load_modulation_realizes_both ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace xtalk
