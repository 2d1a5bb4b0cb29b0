#include "csst/harness/replay.hpp"

#include <memory>
#include <ostream>

#include "csst/oracle.hpp"

namespace csst::harness {

int replay(const std::vector<OpRecord>& ops, const ReplayOptions& options, std::ostream& out,
           std::ostream& err) {
  if (ops.empty() || ops.front().kind != OpKind::Init) {
    err << "op-log must start with init\n";
    return kExitUsage;
  }
  const ChainGeometry geom(ops.front().lengths);
  std::unique_ptr<PartialOrder> po = make_backend(options.backend, geom, options.backend_options);
  std::unique_ptr<OracleGraph> oracle;
  if (options.check_oracle) oracle = std::make_unique<OracleGraph>(geom);

  for (std::size_t i = 1; i < ops.size(); ++i) {
    const OpRecord& op = ops[i];
    std::optional<Answer> got;
    try {
      got = apply(*po, op);
    } catch (const PoError& e) {
      err << e.what() << '\n';
      return kExitUsage;
    }
    if (oracle) {
      std::optional<Answer> want;
      try {
        want = apply(*oracle, op);
      } catch (const PoError& e) {
        // Insert-only backends accept repeated edges as no-ops.
        if (e.kind() != ErrorKind::DuplicateEdge) {
          err << "mismatch at record " << i + 1 << ": " << to_string(op) << '\n'
              << "  " << po->name() << ": accepted\n"
              << "  oracle: " << e.what() << '\n';
          return kExitMismatch;
        }
      }
      if (got && want && *got != *want) {
        err << "mismatch at record " << i + 1 << ": " << to_string(op) << '\n'
            << "  " << po->name() << ": " << format_answer(op, *got) << '\n'
            << "  oracle: " << format_answer(op, *want) << '\n';
        return kExitMismatch;
      }
    }
    if (got) out << format_answer(op, *got) << '\n';
  }
  return kExitOk;
}

}  // namespace csst::harness
