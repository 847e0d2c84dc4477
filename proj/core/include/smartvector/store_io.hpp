#pragma once
// On-disk formats. The store is one JSON document
//   {"vectors": [...], "recent_changes": [...]}
// with every field serialized by name, timestamps as RFC 3339 strings and
// term vectors omitted (rebuilt on load). save(load(save(x))) is
// byte-identical.

#include <string>
#include <vector>

#include "smartvector/store.hpp"

namespace smartvector {

std::string store_to_json(const VectorStore& store);
VectorStore store_from_json(const std::string& json_text);

void save_store(const VectorStore& store, const std::string& path);
VectorStore load_store(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace smartvector
