#include "jsup/function_file.hpp"

#include <fstream>
#include <sstream>

#include "jsup/error.hpp"

namespace jsup {

using nlohmann::json;

json function_entries_json(const SparseFunction& f) {
  json entries = json::array();
  for (const auto& [x, v] : f) entries.push_back(json::array({rank_subset(x), to_string(v)}));
  return entries;
}

json to_json(const FunctionFile& file) {
  json doc = json::object();
  doc["format"] = kFunctionFormat;
  doc["n"] = file.function.params().n;
  doc["w"] = file.function.params().w;
  doc["lambda_index"] = file.lambda_index ? json(*file.lambda_index) : json(nullptr);
  doc["entries"] = function_entries_json(file.function);
  return doc;
}

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::parse_error, "function file: " + what);
}

}  // namespace

FunctionFile function_file_from_json(const json& doc) {
  if (!doc.is_object()) malformed("top level is not an object");
  if (!doc.contains("format") || doc["format"] != kFunctionFormat) malformed("missing or unknown \"format\"");
  for (const char* key : {"n", "w"}) {
    if (!doc.contains(key) || !doc[key].is_number_integer()) malformed(std::string("missing integer \"") + key + "\"");
  }
  const JohnsonParams params{doc["n"].get<int>(), doc["w"].get<int>()};
  try {
    params.validate();
  } catch (const Error& e) {
    malformed(e.what());
  }

  FunctionFile file{SparseFunction(params), std::nullopt};
  if (doc.contains("lambda_index") && !doc["lambda_index"].is_null()) {
    if (!doc["lambda_index"].is_number_integer()) malformed("\"lambda_index\" must be an integer or null");
    file.lambda_index = doc["lambda_index"].get<int>();
  }
  if (!doc.contains("entries") || !doc["entries"].is_array()) malformed("missing \"entries\" array");

  const std::uint64_t count = params.vertex_count();
  bool first = true;
  std::uint64_t previous = 0;
  for (const auto& entry : doc["entries"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_unsigned() || !entry[1].is_string()) {
      malformed("each entry must be [rank, \"p/q\"]");
    }
    const auto r = entry[0].get<std::uint64_t>();
    if (r >= count) malformed("rank " + std::to_string(r) + " outside the vertex range");
    if (!first && r <= previous) malformed("ranks are not strictly increasing");
    const BigRational v = parse_canonical_rational(entry[1].get<std::string>());
    if (v == 0) malformed("zero value stored at rank " + std::to_string(r));
    file.function.set(unrank_subset(r, params.n, params.w), v);
    previous = r;
    first = false;
  }
  return file;
}

std::string serialize(const FunctionFile& file) { return to_json(file).dump(2) + "\n"; }

FunctionFile deserialize(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  return function_file_from_json(doc);
}

void write_function_file(const std::filesystem::path& path, const FunctionFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io_error, "cannot open '" + path.string() + "' for writing");
  out << serialize(file);
  if (!out) throw Error(ErrorCode::io_error, "failed writing '" + path.string() + "'");
}

FunctionFile read_function_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return deserialize(buffer.str());
}

}  // namespace jsup
