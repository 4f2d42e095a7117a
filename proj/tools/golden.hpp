#pragma once
#include <functional>
#include <string>
#include <vector>

namespace skeinlab::golden {

// One pinned reference computation.  run() returns normally on success and
// throws (std::exception) with a human-readable message on any deviation.
struct Example {
  std::string id;    // stable kebab-case identifier, CLI-filterable
  std::string what;  // one-line description of the pinned value
  std::function<void()> run;
};

// The full table, in a fixed order.  Cheap to build; each entry computes
// only when run.
std::vector<Example> all_examples();

}  // namespace skeinlab::golden
