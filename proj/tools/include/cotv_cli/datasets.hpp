#pragma once

// Bundled example documents.

#include <string>
#include <vector>

#include "cotv_cli/document.hpp"

namespace cotv::cli {

std::vector<std::string> dataset_names();
// The raw document of a bundled dataset; throws ParseError for unknown names.
Json dataset_json(const std::string& name);

}  // namespace cotv::cli
