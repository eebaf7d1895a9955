#include <algorithm>
#include <array>
#include <limits>

#include "xtalk/errors.hpp"
#include "xtalk/gatelib.hpp"

namespace xtalk {

namespace {

// Exact feasibility of a positive-threshold realization, independent of the
// electrical bounds. Integer weights up to 12 are sufficient for minimal
// realizations of every threshold function of at most 6 inputs.
bool threshold_realizable(std::uint64_t flip_set, int n) {
  const int kMaxW = 12;
  const std::uint32_t count = 1u << n;
  std::array<int, 7> w{};
  auto scan = [&](auto&& self, int idx) -> bool {
    if (idx == n) {
      int min_flip = std::numeric_limits<int>::max();
      int max_nonflip = 0;
      for (std::uint32_t v = 0; v < count; ++v) {
        int sum = 0;
        for (int i = 0; i < n; ++i)
          if (v >> i & 1) sum += w[i];
        if (flip_set >> v & 1)
          min_flip = std::min(min_flip, sum);
        else
          max_nonflip = std::max(max_nonflip, sum);
      }
      return min_flip > max_nonflip;
    }
    for (int x = 0; x <= kMaxW; ++x) {
      w[idx] = x;
      if (self(self, idx + 1)) return true;
    }
    return false;
  };
  return scan(scan, 0);
}

}  // namespace

CalibrationResult calibrate(std::uint64_t flip_set, int num_inputs,
                            const SimParams& params,
                            const CalibrationBounds& bounds) {
  if (num_inputs < 1 || num_inputs > 6)
    throw SemanticError("calibrate: supported fan-in is 1..6");
  if (bounds.max_weight <= 0 || bounds.max_aux < 0 ||
      bounds.weight_granularity <= 0)
    throw SemanticError("calibrate: bounds must be positive");

  const int n = num_inputs;
  const std::uint32_t count = 1u << n;
  const std::uint64_t mask = count == 64 ? ~std::uint64_t(0)
                                         : (std::uint64_t(1) << count) - 1;
  flip_set &= mask;

  if (flip_set == 0)
    return Infeasible{Infeasible::Reason::NotThreshold,
                      "constant-false flip set: would require margin above the "
                      "total coupling weight"};
  if (flip_set & 1)
    return Infeasible{Infeasible::Reason::NotThreshold,
                      "all-zero input induces no charge and can never flip"};
  for (std::uint32_t v = 0; v < count; ++v)
    for (int i = 0; i < n; ++i) {
      std::uint32_t u = v | (1u << i);
      if (u != v && (flip_set >> v & 1) && !(flip_set >> u & 1))
        return Infeasible{Infeasible::Reason::NotThreshold,
                          "flip set is not monotone in input " +
                              std::to_string(i)};
    }

  const int g = bounds.weight_granularity;
  const int steps = bounds.max_weight / g;
  const int aux_steps = bounds.max_aux / g;
  if (steps < 1)
    return Infeasible{Infeasible::Reason::BoundsExhausted,
                      "granularity exceeds max_weight"};

  struct Best {
    int total = std::numeric_limits<int>::max();
    std::vector<int> weights;
    int aux = 0;
    int margin = 0;
  } best;

  std::vector<int> w(n, g);
  std::vector<int> sums(count);
  auto consider = [&]() {
    // Behavioral route first: margin is the least transitioned weight over
    // flipping vectors; every non-flipping vector must stay below it.
    for (std::uint32_t v = 0; v < count; ++v) {
      int s = 0;
      for (int i = 0; i < n; ++i)
        if (v >> i & 1) s += w[i];
      sums[v] = s;
    }
    int margin = std::numeric_limits<int>::max();
    for (std::uint32_t v = 0; v < count; ++v)
      if (flip_set >> v & 1) margin = std::min(margin, sums[v]);
    for (std::uint32_t v = 0; v < count; ++v)
      if (!(flip_set >> v & 1) && sums[v] >= margin) return;

    int wsum = 0;
    for (int x : w) wsum += x;
    for (int aux = 0; aux <= aux_steps * g; aux += g) {
      const int total = wsum + aux;
      if (total > best.total) break;
      if (total == best.total &&
          !std::lexicographical_compare(w.begin(), w.end(),
                                        best.weights.begin(),
                                        best.weights.end()))
        break;
      // Analytical route: both the flip decision and the separation rule
      // must hold on every vector.
      const std::int64_t den = wsum + aux + params.victim_load;
      bool ok = true;
      for (std::uint32_t v = 0; v < count && ok; ++v) {
        Rat volt(sums[v], den);
        bool flip = (flip_set >> v & 1) != 0;
        if ((volt >= params.switch_threshold) != flip) ok = false;
        Rat sep = flip ? volt - params.switch_threshold
                       : params.switch_threshold - volt;
        if (sep < params.min_separation) ok = false;
      }
      if (ok) {
        best = Best{total, w, aux, margin};
        break;  // larger aux only increases the total
      }
    }
  };

  auto enumerate = [&](auto&& self, int idx) -> void {
    if (idx == n) {
      consider();
      return;
    }
    for (int x = g; x <= steps * g; x += g) {
      w[idx] = x;
      self(self, idx + 1);
    }
  };
  enumerate(enumerate, 0);

  if (best.total == std::numeric_limits<int>::max()) {
    if (threshold_realizable(flip_set, n))
      return Infeasible{Infeasible::Reason::BoundsExhausted,
                        "threshold function, but no consistent realization "
                        "within the weight/aux bounds"};
    return Infeasible{Infeasible::Reason::NotThreshold,
                      "no positive weight vector separates the flip set"};
  }

  GateMode m;
  m.mode_id = 0;
  m.data_weights = best.weights;
  m.aux_load = best.aux;
  m.margin = best.margin;
  return m;
}

}  // namespace xtalk
