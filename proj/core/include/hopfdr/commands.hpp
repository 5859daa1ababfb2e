#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "hopfdr/calculus.hpp"
#include "hopfdr/report.hpp"

namespace hopfdr {

// a request that cannot be run as given (bad flags, unknown ideal, ...)
struct InputError : Error {
    using Error::Error;
};

struct CommandOptions {
    std::string source;                // "builtin:NAME" or a document path
    std::optional<std::string> field;  // overrides a builtin's default field
    // bicovariant calculus from a named ideal: "zero" (R = 0), "full" (R = ker ε) or a block of
    // the document; --universal selects the universal differential calculus instead
    std::optional<std::string> ideal;
    bool universal = false;
    std::size_t max_degree = 2;
    WedgeRelations wedge = WedgeRelations::symmetric;
    std::uint64_t seed = 20240607;
    std::size_t samples = 5;
};

Report cmd_validate(const CommandOptions& o);
Report cmd_cohomology(const CommandOptions& o);
Report cmd_vanest(const CommandOptions& o);
Report cmd_hopflie(const CommandOptions& o);
std::string cmd_export(const CommandOptions& o);
Report cmd_selftest(const CommandOptions& o);

enum class ReportFormat { json, text };

// Runs a command by name and writes its report. Returns 0 when every check passed, 1 when a
// check failed or an identity was violated, 2 for input errors.
int run_command(const std::string& name, const CommandOptions& o, ReportFormat format, std::ostream& out,
                std::ostream& err);

}  // namespace hopfdr
