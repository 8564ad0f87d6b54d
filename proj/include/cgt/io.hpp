#ifndef CGT_IO_HPP_
#define CGT_IO_HPP_

// JSON (de)serialization.
//
// Group file:  { "p": int, "kind": "permutation"|"matrix",
//                "degree"|"dim": int, "generators": { label: payload } }
//   permutation payload: 0-based image array; matrix payload: rows of
//   residues.  Labels are the linkage key to module files.
// Module file: { "p": int, "dim": int, "group": path-or-inline,
//                "action": { label: rows } }
//   action labels must match the group's generator labels exactly.
//
// Semidirect-pair groups have no file payload of their own; they export as
// their left-translation permutation realization (faithful, same order).

#include <string>

#include <json.hpp>

#include "cgt/group.hpp"
#include "cgt/modrep.hpp"

namespace cgt {

using ojson = nlohmann::ordered_json;

PGroupPtr load_group_json(const ojson& j, u32 cap = kDefaultOrderCap);
PGroupPtr load_group_file(const std::string& path, u32 cap = kDefaultOrderCap);
ojson save_group_json(const PGroupPtr& g);

// base_dir resolves a relative "group" path inside the document.
FpGModule load_module_json(const ojson& j, const std::string& base_dir, u32 cap = kDefaultOrderCap);
FpGModule load_module_file(const std::string& path, u32 cap = kDefaultOrderCap);
// Always embeds the group inline.
ojson save_module_json(const FpGModule& m);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace cgt

#endif  // CGT_IO_HPP_
