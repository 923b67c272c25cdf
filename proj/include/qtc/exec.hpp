#pragma once

namespace qtc {

// Execution policy for the data-parallel kernels. `seq` is the serial
// reference path; `par` enables the OpenMP loops. Both produce identical
// bytes, which the tests assert.
enum class Exec { seq, par };

// Number of worker threads the par policy would use (1 without OpenMP).
int hardware_threads();

}  // namespace qtc
