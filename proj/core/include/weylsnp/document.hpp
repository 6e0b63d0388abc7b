#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "weylsnp/metric.hpp"

namespace weylsnp {

/// Parses a JSON algebra document (format described in docs/document_format.md).
/// Each bracket entry {i, j, k, value} sets c^k_{ij} = value and c^k_{ji} = -value.
/// Throws ParseError (with a line or field path) or ValidationError.
MetricLieAlgebra load_document(std::string_view text);
MetricLieAlgebra load_document_file(const std::filesystem::path& path);

/// Normalized form: brackets with i < j sorted by (i, j, k), the full Gram matrix, two-space
/// indentation and a trailing newline.
std::string save_document(const MetricLieAlgebra& model);

}  // namespace weylsnp
