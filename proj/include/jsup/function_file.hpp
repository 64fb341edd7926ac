#pragma once

// Sparse-function file format. A JSON object with keys
//   "format":       "jsup-function/1"
//   "n", "w":       graph parameters
//   "lambda_index": eigen index or null
//   "entries":      [[rank, "p/q"], ...] with ranks strictly increasing in the
//                   co-lex combinadic order, values canonical and nonzero.

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "jsup/johnson.hpp"

namespace jsup {

inline constexpr const char* kFunctionFormat = "jsup-function/1";

struct FunctionFile {
  SparseFunction function;
  std::optional<int> lambda_index;
};

nlohmann::json function_entries_json(const SparseFunction& f);
nlohmann::json to_json(const FunctionFile& file);
/// Strict: rejects unsorted ranks, out-of-range ranks, zero or non-canonical values.
FunctionFile function_file_from_json(const nlohmann::json& doc);

std::string serialize(const FunctionFile& file);
FunctionFile deserialize(const std::string& text);

void write_function_file(const std::filesystem::path& path, const FunctionFile& file);
FunctionFile read_function_file(const std::filesystem::path& path);

}  // namespace jsup
