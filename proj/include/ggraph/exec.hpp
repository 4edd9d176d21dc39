#pragma once
// Execution policy for the data-parallel kernels.  Parallel falls back
// to serial when the build has no OpenMP support; both paths produce
// identical results and the tests compare them.

namespace ggraph {

enum class Exec { Serial, Parallel };

}  // namespace ggraph
