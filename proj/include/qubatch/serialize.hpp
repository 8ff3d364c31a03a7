#pragma once

#include <optional>
#include <string>

#include "qubatch/batch.hpp"
#include "qubatch/graph.hpp"
#include "qubatch/matching.hpp"
#include "qubatch/oracle.hpp"

namespace qubatch {

/// Lattice slice as {"p","k","dim","count","subspaces":[...]}.
std::string slice_to_json(const LatticeSlice& slice);

/// Code descriptor {"p","k","positions":[...],"alphabets":[...]}, extended
/// with "pairs" and the parameter report when a batch code is given.
std::string descriptor_to_json(const QuasiUniformCode& code);
std::string descriptor_to_json(const BatchCode& bc);

/// Rebuilds the subgroup system of a descriptor; build_code/build_batch_code
/// surface any nontrivial total intersection at that point.
SubgroupSystem system_from_descriptor(const std::string& json_text);
std::optional<RecoveryPlan> plan_from_descriptor(const std::string& json_text);

/// Graph as {"vertices":[...],"edges":[[i,j]],"matching":[[i,j]]}.
std::string graph_to_json(const IntersectionGraph& g,
                          const Matching* matching = nullptr);

/// DOT export; matched edges are styled bold.
std::string graph_to_dot(const IntersectionGraph& g,
                         const Matching* matching = nullptr);

std::string uniformity_to_json(const oracle::UniformityResult& result);

}  // namespace qubatch
