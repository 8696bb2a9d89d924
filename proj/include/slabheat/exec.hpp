#pragma once

namespace slabheat {

/// Execution policy for the data-parallel kernels (grid sweeps, per-mode
/// coefficient computation). Both policies are required to produce
/// bit-identical results; the serial path is the reference implementation.
enum class Exec { serial, parallel };

}  // namespace slabheat
