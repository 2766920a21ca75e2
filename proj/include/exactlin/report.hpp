#pragma once

#include <map>
#include <optional>
#include <string>

namespace exactlin {

enum class Status { pass, fail, exploratory };

inline const char* status_name(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::exploratory: return "exploratory";
    }
    return "?";
}

// One verified (or falsified) statement.  `anchor` names the statement being
// checked; `witness` carries the offending entry, monomial or residual.
struct VerificationReport {
    std::string check;
    std::string anchor;
    std::optional<int> n, k, l, m;
    Status status = Status::pass;
    std::string lhs, rhs;
    std::optional<int> residual_rank;
    std::string witness;
    std::map<std::string, std::string> params;

    bool failed() const { return status == Status::fail; }
};

inline Status pass_if(bool ok) { return ok ? Status::pass : Status::fail; }

}  // namespace exactlin
