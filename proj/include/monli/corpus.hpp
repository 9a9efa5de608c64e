#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "monli/derivation.hpp"
#include "monli/polarity.hpp"

namespace monli {

/// Reads one derivation per line:
///   {"id": ..., "tier": "gold"|"silver", "root": {...}}
/// Every tree is validated against the rule table; errors carry the line
/// number. Duplicate ids are rejected. An empty stream yields an empty list.
std::vector<Sentence> read_corpus(std::istream& in, const std::string& name = "corpus");

/// True when the leaf is a coordinator handled structurally: "and" tagged
/// AND or "or" tagged DIS.
bool is_coordinator(const Leaf& leaf);

/// Keeps sentences with more than five leaves that contain at least one
/// operator-lexicon hit or a coordinator. Original order is preserved.
std::vector<Sentence> select_sentences(std::span<const Sentence> corpus,
                                       const OperatorLexicon& lexicon);

}  // namespace monli
