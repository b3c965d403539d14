#pragma once

#include <iosfwd>

#include "odlro_lab/run_config.hpp"

namespace odlro_lab {

// Subcommand entry points; return the process exit status. Output goes to
// config.out, or stdout when it is empty.

int run_extract(const RunConfig& config);
int run_sweep(const RunConfig& config);
int run_scan(const RunConfig& config);
int run_validate(const RunConfig& config, std::ostream& report);

}  // namespace odlro_lab
