#pragma once

#include <iosfwd>
#include <string>

#include "triwell/protocol.hpp"
#include "triwell/qubitmap.hpp"

namespace triwell {

// All emitters print floats with 15 significant digits ("%.15g", no
// locale) and complex numbers as [re, im] pairs, so outputs are
// byte-stable for fixed inputs.
std::string format_double(double v);

void dump_outcome_json(std::ostream& out, const ProtocolOutcome& outcome);
void dump_scan_json(std::ostream& out, const ScanReport& report);
void dump_two_well_json(std::ostream& out, const TwoWellOutcome& outcome);

struct MeasuresOutput {
    int n = 0, d = 0;
    MeasureReport measures;
    bool frozen = false;
    QubitState qubit_state;     // valid when frozen
    IdentityReport identity;    // valid when frozen and n == 3
};
void dump_measures_json(std::ostream& out, const MeasuresOutput& mo);

// State files: {"n": N, "d": D, "slater": {"235": [re, im], ...}} with
// strictly increasing digit keys, or {"n", "d", "amplitudes": [[re, im] x
// d^N]}. Throws std::runtime_error on malformed input.
PureState load_state_json(std::istream& in);
void dump_state_json(std::ostream& out, const PureState& state);

}  // namespace triwell
