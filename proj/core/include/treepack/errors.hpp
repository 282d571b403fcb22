#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace treepack {

// Thrown when an exact search would exceed its configured resource budget.
// Exceeding a budget is an explicit failure, never a silent approximation.
class budget_error : public std::runtime_error {
public:
    budget_error(const std::string& budget_name, std::uint64_t limit)
        : std::runtime_error("budget exceeded: " + budget_name + " (limit " +
                             std::to_string(limit) + ")"),
          budget_name_(budget_name),
          limit_(limit) {}

    const std::string& budget_name() const { return budget_name_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::string budget_name_;
    std::uint64_t limit_;
};

}  // namespace treepack
