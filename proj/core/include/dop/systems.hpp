#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dop/diffop.hpp"

namespace dop {

enum class Derivation { ddx, theta };
enum class PowerKind { exterior, symmetric };

// First-order linear system D(Y) = M Y, D = d/dx or theta = x d/dx.
// basis[i] is a human-readable label of coordinate i.
struct LinSystem {
  std::vector<std::vector<RatFun>> M;
  Derivation deriv = Derivation::ddx;
  std::vector<std::string> basis;

  size_t dim() const { return M.size(); }
};

// Coordinate functional on a system: picks out sum of coords[i] * Y_i.
struct CoordFunctional {
  std::vector<BigQ> coords;
  std::string label;
};

// Companion system of L in coordinates (y, y', ..., y^(N-1)).
LinSystem companion(const DiffOp& L);

// theta-companion in coordinates (y, theta y, ..., theta^(N-1) y).
LinSystem theta_companion(const DiffOp& L);

// k-th exterior or symmetric power of a system (same derivation).
LinSystem tensor_power_system(const LinSystem& S, int k, PowerKind kind);

// Minimal scalar annihilator of one coordinate of the k-th power system.
// For exterior powers the functional is the (1,2) wedge coordinate
// (y wedge y' for the companion base), for symmetric powers the (1,..,1)
// coordinate (y^k). The result is exact: modular prescreening is confirmed
// by an exact polynomial identity before returning.
struct ScalarPowerResult {
  DiffOp P;          // poly-normalized
  int dropped;       // generic order minus actual order
  int generic_order; // binomial dimension of the power system
  std::string functional;
};
ScalarPowerResult scalar_power_operator(const DiffOp& L, int k, PowerKind kind,
                                        uint64_t retry_seed = 0);

// Dimensions of power spaces.
int power_dim(int n, int k, PowerKind kind);

}  // namespace dop
