// Command dispatch over resolved documents.
#pragma once

#include "bed/document.hpp"
#include "bed/pers.hpp"

namespace bed {

// Bad input detected at dispatch time: unknown command, object or flag value.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunOptions {
    std::optional<int> max_len;          // truncation bound, 2 when absent
    std::optional<std::string> object;
    std::vector<std::string> feet;
    std::optional<std::string> against;  // fixture compared by `equiv`
    std::string echo;                    // report title
};

const std::vector<std::string>& commands();
// Module errors become premise-failure or chart-too-shallow checks; InputError propagates.
Report run(const std::string& command, const Resolved& doc, const RunOptions& opts);
inline int exit_status(const Report& r) { return r.failed() ? 1 : 0; }

} // namespace bed
