#pragma once

#include <string>
#include <vector>

namespace hopfdr {

enum class Status { pass, fail, skipped };

struct Check {
    std::string name;
    Status status = Status::pass;
    std::string detail;
};

using CheckList = std::vector<Check>;

inline const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "?";
}

inline bool all_passed(const CheckList& checks) {
    for (const auto& c : checks)
        if (c.status == Status::fail) return false;
    return true;
}

inline void append(CheckList& to, const CheckList& from) { to.insert(to.end(), from.begin(), from.end()); }

}  // namespace hopfdr
