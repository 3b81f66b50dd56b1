#pragma once

#include <string>
#include <vector>

#include "rmtopt/circuit.hpp"
#include "rmtopt/phasepoly.hpp"

namespace rmtopt {

/// Canonical {CNOT, PHASE} circuit for a phase representation.
///
/// Each nonzero a_y is applied on the lowest wire of y after folding the other
/// wires of y into it with CNOTs, which are then undone; a Gauss-Jordan CNOT
/// network for `rep.perm` follows. extract() of the result returns `rep` and its
/// T-count is the number of odd coefficients.
///
/// `wires` names the output wires; empty means x1 ... xn.
Segment synthesize(const PhaseRep& rep, std::vector<std::string> wires = {});

// CNOT-only circuit whose linear action is `perm`. Throws SingularMatrix.
Segment synthesize_permutation(const GF2Matrix& perm, std::vector<std::string> wires = {},
                               int k = 2);

}  // namespace rmtopt
