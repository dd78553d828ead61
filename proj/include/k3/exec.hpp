#pragma once

namespace k3 {

// Serial runs are the reference; Parallel runs the OpenMP kernel and must
// produce identical results.
enum class Exec { Serial, Parallel };

}  // namespace k3
