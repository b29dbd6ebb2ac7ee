#pragma once

#include <string>
#include <vector>

namespace sasaki {

enum class Status { pass, fail, info };

/// One verified statement: `anchor` names the formula being checked.
struct Check {
    std::string id;
    std::string anchor;
    Status status = Status::fail;
    std::string witness;
};

inline Check make_check(std::string id, std::string anchor, bool passed, std::string witness = {}) {
    return {std::move(id), std::move(anchor), passed ? Status::pass : Status::fail, std::move(witness)};
}

inline Check make_info(std::string id, std::string anchor, std::string witness) {
    return {std::move(id), std::move(anchor), Status::info, std::move(witness)};
}

inline bool all_pass(const std::vector<Check>& checks) {
    for (const auto& c : checks)
        if (c.status == Status::fail) return false;
    return true;
}

inline void append(std::vector<Check>& out, const std::vector<Check>& more) { out.insert(out.end(), more.begin(), more.end()); }

inline const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::info: return "info";
    }
    return "fail";
}

}  // namespace sasaki
