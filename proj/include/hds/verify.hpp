#pragma once

#include "hds/json_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hds {

struct VerifyResult {
    std::string item;
    bool pass = false;
    Json expected; // the golden entry
    Json actual;   // recomputed values (a superset of the golden keys)
};

const std::vector<std::string> &verify_items();

/// Built-in golden table: expected values keyed by item name.
Json default_golden();

/// Recomputes each item and compares every golden key against it.
/// Throws DomainError("unknown_item") for an unknown filter.
std::vector<VerifyResult> verify_paper(const Json &golden, const std::optional<std::string> &only = std::nullopt);

} // namespace hds
