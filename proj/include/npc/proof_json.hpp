#pragma once

#include <string>

#include "npc/kernel.hpp"

namespace npc {

/// Malformed proof document: bad JSON, unknown rule names, extra or missing
/// fields, ill-typed values, or unparsable formulas/sequents.
class proof_format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kProofFormatVersion = 1;

/// Serializes to the proof file format: a single JSON document
///   { "format_version": 1, "n": <int>, "proof": <node> }
///   node = { "rule": str, "params": {...}, "conclusion": str, "premises": [node...] }
/// Conclusions and parameter formulas use the sequent/formula concrete syntax.
std::string proof_to_json(const ProofTree& t, bool pretty = true);

struct LoadedProof {
  int n = 2;
  ProofTree tree;
};

/// Strict loader: rejects unknown rule names and any extra field at the
/// root, node, or params level.
LoadedProof proof_from_json(const std::string& text);

}  // namespace npc
