#ifndef UNCLOGIC_EXEC_HPP
#define UNCLOGIC_EXEC_HPP

namespace unclogic {

// Verification kernels come in two interchangeable implementations: a serial
// reference and an OpenMP one. Results are identical by construction (parallel
// searches reduce to the lowest canonical index); tests compare the two.
enum class ExecMode { Serial, Parallel };

}  // namespace unclogic

#endif
