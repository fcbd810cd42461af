#pragma once

#include <string>
#include <vector>

#include "pbnn/net.hpp"
#include "pbnn/permutation.hpp"

namespace pbnn {

// SystemVerilog-2017 sources for one configured network: HL is the shared
// hidden layer (an 8-minterm Boolean function per neuron, the minterm enable
// mask baked into the CN parameter), OL the registered output layer with
// load/reset control and the permutation wiring, instantiating HL.
struct HdlArtifact {
  std::string hidden_source;  // HL.sv
  std::string output_source;  // OL.sv
  int n = 0;
  int cn = 0;
  Permutation perm;
};

// The CN parameter value the emitter bakes into HL: the neighborhood truth
// table of the weight triple, which is what makes the minterm structure
// compute the signum rule.
std::string emit_hidden_layer(int n, int cn);

std::string emit_output_layer(int n, const Permutation& p);

HdlArtifact emit_hdl(int n, int cn, const Permutation& p);

// Drops the "// Generated by ..." banner lines so golden comparisons see
// only the functional text.
std::string strip_banner(const std::string& source);

// Combinational semantics of the emitted design (minterm gating, OR
// reduction, permutation wiring) evaluated directly on a state, with the
// hardware encoding -1 <-> 0, +1 <-> 1. No HDL toolchain involved. Must
// agree with step() on every state.
BinaryState interpret_emitted(int n, int cn, const Permutation& p,
                              const BinaryState& x);

// Lightweight lexical pass over emitted source: every referenced identifier
// must be declared in the file or name a module in `external_modules`.
// Returns the offenders (empty means self-consistent).
std::vector<std::string> undeclared_identifiers(
    const std::string& source,
    const std::vector<std::string>& external_modules = {});

}  // namespace pbnn
