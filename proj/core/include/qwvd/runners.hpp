#ifndef QWVD_RUNNERS_HPP
#define QWVD_RUNNERS_HPP

#include "qwvd/config.hpp"
#include "qwvd/grid.hpp"

namespace qwvd {

/// Command backends for the CLI; each consumes a JobConfig, performs all file
/// I/O, and returns a process exit code (0 success, 1 failed verification,
/// 2 usage/config error — usage errors surface as exceptions the CLI maps).

SampledSignal generate_signal(const JobConfig& cfg);

int run_generate(const JobConfig& cfg);
int run_transform(const JobConfig& cfg);
int run_wvd(const JobConfig& cfg);
int run_bench(const JobConfig& cfg);
int run_verify(const JobConfig& cfg);

/// Dispatch on cfg.command.
int run_job(const JobConfig& cfg);

}  // namespace qwvd

#endif
