#pragma once

namespace qubatch {

/// Execution policy for the data-parallel kernels (slice enumeration, graph
/// adjacency, uniformity sweeps). Serial is the reference path kept for
/// testing; both must produce byte-identical results.
enum class Exec { serial, parallel };

}  // namespace qubatch
