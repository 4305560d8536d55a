#include "largeness/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "largeness/error.hpp"

namespace largeness::io {

  namespace {
    [[noreturn]] void parse_fail(std::string const& where, std::string const& what) {
      throw Error(Errc::Parse, where + ": " + what);
    }

    // Re-raises a library error with the source prefixed, keeping its code.
    [[noreturn]] void rethrow_at(Error const& e, std::string const& where) {
      std::string       msg  = e.what();
      std::string const code = std::string(errc_name(e.code())) + ": ";
      if (msg.rfind(code, 0) == 0) {
        msg.erase(0, code.size());
      }
      throw Error(e.code(), where + ": " + msg, e.detail());
    }

    void check_header(json const& doc, std::string_view kind, std::string const& where) {
      if (!doc.is_object()) {
        parse_fail(where, "expected an object at the top level");
      }
      auto f = doc.find("format");
      if (f == doc.end() || !f->is_string() || f->get<std::string>() != format_version) {
        parse_fail(where, "field 'format' must be \"" + std::string(format_version) + "\"");
      }
      auto k = doc.find("kind");
      if (k == doc.end() || !k->is_string() || k->get<std::string>() != kind) {
        parse_fail(where, "field 'kind' must be \"" + std::string(kind) + "\"");
      }
    }

    std::size_t get_count(json const& v, std::string const& field, std::string const& where) {
      if (!v.is_number_unsigned()) {
        parse_fail(where, "'" + field + "' must be a nonnegative integer");
      }
      return v.get<std::size_t>();
    }

    json const& require(json const& doc, char const* field, std::string const& where) {
      auto it = doc.find(field);
      if (it == doc.end()) {
        parse_fail(where, std::string("missing field '") + field + "'");
      }
      return *it;
    }

    std::vector<Element> element_list(json const& v, std::size_t n, std::string const& field, std::string const& where) {
      if (!v.is_array()) {
        parse_fail(where, "'" + field + "' must be an array");
      }
      std::vector<Element> out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        std::string const at = field + "[" + std::to_string(i) + "]";
        std::size_t const x  = get_count(v[i], at, where);
        if (x >= n) {
          parse_fail(where, "'" + at + "' = " + std::to_string(x) + " is outside the carrier of size " + std::to_string(n));
        }
        out.push_back(x);
      }
      return out;
    }
  }  // namespace

  std::string read_text(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(Errc::Parse, path.string() + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  json parse_document(std::string const& text, std::string const& where) {
    try {
      return json::parse(text);
    } catch (json::parse_error const& e) {
      std::size_t line = 1;
      std::size_t col  = 1;
      std::size_t end  = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
      for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      std::string what = e.what();
      auto const  cut  = what.find("syntax error");
      if (cut != std::string::npos) {
        what = what.substr(cut);
      }
      throw Error(Errc::Parse, where + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
    }
  }

  json to_json(FiniteSemigroup const& S) {
    json doc;
    doc["format"] = format_version;
    doc["kind"]   = "semigroup";
    doc["n"]      = S.size();
    doc["table"]  = S.rows();
    if (!S.name().empty()) {
      doc["name"] = S.name();
    }
    return doc;
  }

  FiniteSemigroup semigroup_from_json(json const& doc, std::string const& where) {
    check_header(doc, "semigroup", where);
    std::size_t const n     = get_count(require(doc, "n", where), "n", where);
    json const&       table = require(doc, "table", where);
    if (!table.is_array()) {
      parse_fail(where, "'table' must be an array of rows");
    }
    Table rows;
    for (std::size_t r = 0; r < table.size(); ++r) {
      if (!table[r].is_array()) {
        parse_fail(where, "'table[" + std::to_string(r) + "]' must be an array");
      }
      std::vector<Element> row;
      for (std::size_t c = 0; c < table[r].size(); ++c) {
        row.push_back(get_count(table[r][c], "table[" + std::to_string(r) + "][" + std::to_string(c) + "]", where));
      }
      rows.push_back(std::move(row));
    }
    std::string name;
    if (auto it = doc.find("name"); it != doc.end()) {
      if (!it->is_string()) {
        parse_fail(where, "'name' must be a string");
      }
      name = it->get<std::string>();
    }
    try {
      return validate_table(n, rows, name);
    } catch (Error const& e) {
      rethrow_at(e, where);
    }
  }

  FiniteSemigroup load_semigroup(std::string const& source) {
    constexpr std::string_view prefix = "builtin:";
    if (source.rfind(prefix, 0) == 0) {
      std::string const name = source.substr(prefix.size());
      if (auto S = builtin::by_name(name)) {
        return *S;
      }
      throw Error(Errc::Parse, source + ": unknown builtin semigroup");
    }
    return semigroup_from_json(parse_document(read_text(source), source), source);
  }

  json to_json(FilterBase const& F) {
    json doc;
    doc["format"] = format_version;
    doc["kind"]   = "filter";
    doc["n"]      = F.carrier_size();
    json base     = json::array();
    for (auto const& B : F.base()) {
      base.push_back(to_json(B));
    }
    doc["base"] = base;
    return doc;
  }

  FilterBase filter_from_json(FiniteSemigroup const& S, json const& doc, std::string const& where) {
    check_header(doc, "filter", where);
    std::size_t const n = get_count(require(doc, "n", where), "n", where);
    if (n != S.size()) {
      throw Error(Errc::WidthMismatch,
                  where + ": filter carrier " + std::to_string(n) + " differs from semigroup order "
                      + std::to_string(S.size()),
                  {n, S.size()});
    }
    json const& base = require(doc, "base", where);
    if (!base.is_array()) {
      parse_fail(where, "'base' must be an array of sets");
    }
    std::vector<SubsetMask> sets;
    for (std::size_t i = 0; i < base.size(); ++i) {
      auto const elems = element_list(base[i], n, "base[" + std::to_string(i) + "]", where);
      sets.push_back(SubsetMask::from_elements(n, elems));
    }
    try {
      return make_filter(S, std::move(sets));
    } catch (Error const& e) {
      rethrow_at(e, where);
    }
  }

  FilterBase load_filter(FiniteSemigroup const& S, std::string const& path) {
    return filter_from_json(S, parse_document(read_text(path), path), path);
  }

  json to_json(SequenceFamily const& family) {
    json doc;
    doc["format"] = format_version;
    doc["kind"]   = "sequence-family";
    json members  = json::array();
    for (auto const& f : family) {
      members.push_back(json{{"preperiod", f.preperiod}, {"period", f.period}});
    }
    doc["members"] = members;
    return doc;
  }

  SequenceFamily family_from_json(FiniteSemigroup const& S, json const& doc, std::string const& where) {
    check_header(doc, "sequence-family", where);
    json const& members = require(doc, "members", where);
    if (!members.is_array()) {
      parse_fail(where, "'members' must be an array");
    }
    SequenceFamily out;
    for (std::size_t i = 0; i < members.size(); ++i) {
      std::string const at = "members[" + std::to_string(i) + "]";
      if (!members[i].is_object()) {
        parse_fail(where, "'" + at + "' must be an object");
      }
      EventuallyPeriodicSeq f;
      if (auto it = members[i].find("preperiod"); it != members[i].end()) {
        f.preperiod = element_list(*it, S.size(), at + ".preperiod", where);
      }
      f.period = element_list(require(members[i], "period", where), S.size(), at + ".period", where);
      out.push_back(std::move(f));
    }
    try {
      validate_family(S, out);
    } catch (Error const& e) {
      rethrow_at(e, where);
    }
    return out;
  }

  SequenceFamily load_family(FiniteSemigroup const& S, std::string const& path) {
    return family_from_json(S, parse_document(read_text(path), path), path);
  }

  SubsetMask parse_set_literal(std::string_view text, std::size_t n) {
    std::string_view body = text;
    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    };
    body = trim(body);
    if (!body.empty() && body.front() == '{') {
      if (body.back() != '}') {
        throw Error(Errc::Parse, "set literal '" + std::string(text) + "' is missing '}'");
      }
      body = trim(body.substr(1, body.size() - 2));
    }
    SubsetMask out(n);
    if (body.empty()) {
      return out;
    }
    std::size_t pos = 0;
    while (pos <= body.size()) {
      std::size_t const comma = std::min(body.find(',', pos), body.size());
      std::string_view  item  = trim(body.substr(pos, comma - pos));
      std::size_t       value = 0;
      auto [ptr, ec]          = std::from_chars(item.data(), item.data() + item.size(), value);
      if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
        throw Error(Errc::Parse, "set literal '" + std::string(text) + "': '" + std::string(item)
                                     + "' is not an element index");
      }
      if (value >= n) {
        throw Error(Errc::Parse, "set literal '" + std::string(text) + "': element " + std::to_string(value)
                                     + " is outside the carrier of size " + std::to_string(n),
                    {value, n});
      }
      out.insert(value);
      pos = comma + 1;
    }
    return out;
  }

  json to_json(SubsetMask const& A) {
    return json(A.elements());
  }

  json to_json(Evidence const& e) {
    json sets = json::array();
    for (auto const& s : e.sets) {
      sets.push_back(to_json(s));
    }
    return json{{"kind", e.kind}, {"sets", sets}, {"elements", e.elements}};
  }

  json to_json(Verdict const& v) {
    json out;
    out["holds"]          = v.holds;
    out["witness"]        = v.witness ? to_json(*v.witness) : json(nullptr);
    out["counterexample"] = v.counterexample ? to_json(*v.counterexample) : json(nullptr);
    out["caveats"]        = v.caveats;
    return out;
  }

  json to_json(JWitness const& w) {
    return json{{"m", w.m}, {"a", w.a}, {"t", w.t}};
  }

  json to_json(SweepReport const& r) {
    json out;
    out["id"]              = r.id;
    out["exploratory"]     = r.exploratory;
    out["order"]           = r.order;
    out["sample"]          = r.sample ? json(*r.sample) : json(nullptr);
    out["seed"]            = r.seed;
    out["instances"]       = r.instances;
    out["hypothesis_hits"] = r.hypothesis_hits;
    out["violations"]      = r.violations;
    out["vacuous"]         = r.vacuous;
    out["tallies"]         = r.tallies;
    out["partial"]         = r.partial;
    out["passed"]          = r.passed();
    if (r.first_counterexample) {
      out["first_counterexample"] = json{{"key", r.first_counterexample->key}, {"detail", r.first_counterexample->detail}};
    } else {
      out["first_counterexample"] = nullptr;
    }
    return out;
  }

  std::string fnv1a_hex(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

}  // namespace largeness::io
