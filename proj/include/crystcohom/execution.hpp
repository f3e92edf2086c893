#pragma once

namespace crystcohom {

/// Selects between the OpenMP kernels and their serial reference versions.
/// Both produce identical results; the serial path is kept for testing and
/// benchmarking.
enum class Execution { serial, parallel };

}  // namespace crystcohom
