#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "largeness/filter.hpp"
#include "largeness/jset.hpp"
#include "largeness/semigroup.hpp"
#include "largeness/sweep.hpp"
#include "largeness/verdict.hpp"

namespace largeness::io {

  using json = nlohmann::json;

  inline constexpr std::string_view format_version = "largeness-lab/1";

  // Whole file as text. Throws Error(Parse) naming the path when unreadable.
  std::string read_text(std::filesystem::path const& path);

  // Parses a document; syntax errors become Error(Parse) with "where:line:col".
  json parse_document(std::string const& text, std::string const& where);

  // {"format": "largeness-lab/1", "kind": "semigroup", "n": 2,
  //  "table": [[0, 0], [0, 1]], "name": "MIN2"}
  json            to_json(FiniteSemigroup const& S);
  FiniteSemigroup semigroup_from_json(json const& doc, std::string const& where);
  // A path, or "builtin:NAME" for the named examples.
  FiniteSemigroup load_semigroup(std::string const& source);

  // {"format": ..., "kind": "filter", "n": 4, "base": [[0, 2], [0, 1, 2]]}
  json       to_json(FilterBase const& F);
  FilterBase filter_from_json(FiniteSemigroup const& S, json const& doc, std::string const& where);
  FilterBase load_filter(FiniteSemigroup const& S, std::string const& path);

  // {"format": ..., "kind": "sequence-family",
  //  "members": [{"preperiod": [1], "period": [0, 2]}]}
  json           to_json(SequenceFamily const& family);
  SequenceFamily family_from_json(FiniteSemigroup const& S, json const& doc, std::string const& where);
  SequenceFamily load_family(FiniteSemigroup const& S, std::string const& path);

  // "0,2", "{0,2}", "" or "{}". Throws Error(Parse).
  SubsetMask parse_set_literal(std::string_view text, std::size_t n);

  json to_json(SubsetMask const& A);
  json to_json(Evidence const& e);
  json to_json(Verdict const& v);
  json to_json(JWitness const& w);
  json to_json(SweepReport const& r);

  // 64-bit FNV-1a, as 16 lowercase hex digits.
  std::string fnv1a_hex(std::string_view data);

}  // namespace largeness::io
