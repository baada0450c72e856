#ifndef POLARWAVE_EXPERIMENTS_HPP
#define POLARWAVE_EXPERIMENTS_HPP

#include "polarwave/config.hpp"
#include "polarwave/sweep.hpp"

namespace polarwave {

/// Dispatches the configured experiment and returns its sweep table.
SweepTable run_experiment(const RunConfig& cfg);

} // namespace polarwave

#endif
