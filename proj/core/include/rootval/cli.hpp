#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rootval {

// One CLI invocation. Payloads are the raw input strings; parsing happens
// inside run so that parse errors are reported uniformly.
struct Request {
  std::string command;  // invariants | branch | rootval | equising |
                        // intersect | gkm-check | disc-demo
  std::string format = "json";
  std::optional<long> precision;  // >= 4 when supplied

  std::string poly;                // invariants
  std::string branch;              // branch
  std::string matrix;              // rootval
  std::vector<std::string> a, b;   // equising / intersect / gkm-check
  long n = 3;                      // disc-demo
  std::string samples = "1,2,-1,1/2";  // disc-demo
};

// Writes the report to out and returns the process exit code: 0 success,
// 2 precondition or parse error, 3 insufficient precision, 4 internal
// invariant violation.
int run(const Request& r, std::ostream& out);

}  // namespace rootval
