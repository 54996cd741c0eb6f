#pragma once

#include <string>

#include "cohomology.hpp"
#include "specfile.hpp"

namespace folham {

// Reports are JSON documents with a fixed field order. Every report embeds
// the canonical spec it was computed from and its exit code:
//   0 all requested checks pass, 1 some check failed, 2 input error.
Json run_verify(const SpecFile& spec);
Json run_classify(const SpecFile& spec);
Json run_bracket(const SpecFile& spec, const std::string& f, const std::string& g, bool extended);
Json run_cohomology(const SpecFile& spec, Theory theory, int k, int max_degree);
Json error_report(const std::string& message);

// Derived from the report content alone (the stored "exit_code" is ignored).
int exit_code(const Json& report);

// Human-readable rendering of a report.
std::string render_text(const Json& report);

Json verdict_json(const Verdict& v);

}  // namespace folham
