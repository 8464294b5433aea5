#include "memcost/errors.hpp"

#include <sstream>

namespace memcost {

std::string join_issues(const std::vector<ValidationIssue>& issues) {
    std::ostringstream os;
    os << issues.size() << " validation error" << (issues.size() == 1 ? "" : "s");
    for (const auto& issue : issues) {
        os << "\n  " << issue.field << ": " << issue.message;
    }
    return os.str();
}

ValidationError::ValidationError(std::vector<ValidationIssue> issues)
    : Error(join_issues(issues)), issues_(std::move(issues)) {}

}  // namespace memcost
