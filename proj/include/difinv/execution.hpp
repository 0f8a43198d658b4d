#pragma once

namespace difinv {

/// Kernel execution policy. Serial is the reference path the parallel
/// kernels are tested against; Auto picks Parallel above a size threshold.
enum class Exec { Serial, Parallel, Auto };

/// Worker threads available to Parallel kernels (1 without OpenMP).
int worker_threads();

}  // namespace difinv
