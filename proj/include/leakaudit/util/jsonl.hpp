#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "leakaudit/error.hpp"
#include "leakaudit/util/fs.hpp"

namespace leakaudit::util {

using nlohmann::json;

/// Provenance header carried as the first line of every JSONL artifact.
struct ArtifactMeta {
  std::string stage;
  std::string config_hash;
  std::uint64_t seed = 0;

  json to_json() const {
    return json{{"meta", {{"stage", stage}, {"config_hash", config_hash}, {"seed", seed}}}};
  }
};

struct JsonlFile {
  std::optional<ArtifactMeta> meta;
  std::vector<json> records;
};

inline JsonlFile parse_jsonl(std::string_view text) {
  JsonlFile file;
  std::size_t line_no = 0;
  for (auto line : split_lines(text)) {
    ++line_no;
    if (trim(line).empty()) continue;
    json value;
    try {
      value = json::parse(line);
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::parse,
                  with_line(std::string("malformed JSONL: ") + e.what(), line_no));
    }
    if (!value.is_object()) {
      throw Error(ErrorKind::parse, with_line("JSONL record is not an object", line_no));
    }
    if (value.size() == 1 && value.contains("meta")) {
      const auto& m = value["meta"];
      file.meta = ArtifactMeta{m.value("stage", ""), m.value("config_hash", ""),
                               m.value("seed", std::uint64_t{0})};
      continue;
    }
    file.records.push_back(std::move(value));
  }
  return file;
}

inline JsonlFile read_jsonl(const std::filesystem::path& path) {
  return parse_jsonl(read_file(path));
}

inline std::string dump_jsonl(const std::optional<ArtifactMeta>& meta,
                              const std::vector<json>& records) {
  std::string out;
  if (meta) out += meta->to_json().dump() + '\n';
  for (const auto& r : records) out += r.dump() + '\n';
  return out;
}

inline void write_jsonl(const std::filesystem::path& path,
                        const std::optional<ArtifactMeta>& meta,
                        const std::vector<json>& records) {
  write_file_atomic(path, dump_jsonl(meta, records));
}

}  // namespace leakaudit::util
