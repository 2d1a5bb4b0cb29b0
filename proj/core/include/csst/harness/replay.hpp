#pragma once

#include <iosfwd>
#include <vector>

#include "csst/harness/oplog.hpp"
#include "csst/partial_order.hpp"

namespace csst::harness {

/// Process exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitMismatch = 2 };

struct ReplayOptions {
  BackendId backend = BackendId::CsstDynamic;
  /// Shadow every operation into an oracle and stop at the first divergence.
  bool check_oracle = false;
  BackendOptions backend_options;
};

/// Executes ops in order, writing one line per query to out. Backend errors
/// are written verbatim to err (exit 1); oracle divergences produce a diff
/// report on err (exit 2).
int replay(const std::vector<OpRecord>& ops, const ReplayOptions& options, std::ostream& out,
           std::ostream& err);

}  // namespace csst::harness
