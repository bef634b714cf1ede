#include "nlie/io.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace nlie {

namespace {

using json = nlohmann::ordered_json;

/// 1-based line/column of a byte offset, for syntax error reports.
std::pair<int, int> locate(const std::string& text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

bool is_all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

void reject_unknown_fields(const json& obj, const std::set<std::string>& known,
                           const std::string& where) {
  for (const auto& [key, value] : obj.items())
    if (!known.count(key))
      throw ParseError("unknown field '" + key + "' in " + where);
}

int require_int(const json& obj, const char* field) {
  if (!obj.contains(field))
    throw ParseError(std::string("missing field '") + field + "'");
  const json& v = obj.at(field);
  if (!v.is_number_integer())
    throw ParseError(std::string("field '") + field + "' must be an integer");
  return v.get<int>();
}

/// Resolves a value key to a 0-based coordinate: a declared basis name, or
/// a 1-based index written in digits when no names apply.
int resolve_coordinate(const std::string& key,
                       const std::vector<std::string>& names, int dim,
                       const std::string& where) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == key) return static_cast<int>(i);
  if (is_all_digits(key)) {
    int index = 0;
    try {
      index = std::stoi(key);
    } catch (const std::exception&) {
      index = 0;  // out of int range; caught by the bound check below
    }
    if (index >= 1 && index <= dim) return index - 1;
  }
  throw ParseError("unknown basis label '" + key + "' in " + where);
}

std::string bracket_context(std::size_t i) {
  return "brackets[" + std::to_string(i) + "]";
}

}  // namespace

std::vector<std::string> default_basis_names(int dim) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(dim));
  for (int i = 1; i <= dim; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

AlgebraFile parse_algebra_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, column] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("invalid document syntax at line " +
                         std::to_string(line) + ", column " +
                         std::to_string(column),
                     line, column);
  }
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  reject_unknown_fields(doc, {"arity", "dim", "basis_names", "brackets"},
                        "document");

  const int arity = require_int(doc, "arity");
  const int dim = require_int(doc, "dim");
  if (arity < 2) throw ParseError("arity must be at least 2");
  if (dim < 0) throw ParseError("dim must be non-negative");

  std::vector<std::string> names;
  if (doc.contains("basis_names")) {
    const json& jn = doc.at("basis_names");
    if (!jn.is_array())
      throw ParseError("basis_names must be a list of strings");
    for (const json& item : jn) {
      if (!item.is_string())
        throw ParseError("basis_names must be a list of strings");
      names.push_back(item.get<std::string>());
    }
    if (static_cast<int>(names.size()) != dim)
      throw ParseError("basis_names lists " + std::to_string(names.size()) +
                       " names for dimension " + std::to_string(dim));
    std::set<std::string> seen;
    for (const std::string& n : names) {
      if (n.empty() || is_all_digits(n))
        throw ParseError("basis name '" + n +
                         "' is empty or collides with index notation");
      if (!seen.insert(n).second)
        throw ParseError("duplicate basis name '" + n + "'");
    }
  }

  AlgebraFile file{NLieAlgebra(arity, dim), std::move(names)};

  if (doc.contains("brackets")) {
    const json& jb = doc.at("brackets");
    if (!jb.is_array()) throw ParseError("brackets must be a list");
    std::set<std::vector<int>> seen_args;
    for (std::size_t i = 0; i < jb.size(); ++i) {
      const std::string where = bracket_context(i);
      const json& entry = jb.at(i);
      if (!entry.is_object())
        throw ParseError(where + " must be an object");
      reject_unknown_fields(entry, {"args", "value"}, where);
      if (!entry.contains("args") || !entry.at("args").is_array())
        throw ParseError(where + " needs an integer list 'args'");
      std::vector<int> args;
      for (const json& a : entry.at("args")) {
        if (!a.is_number_integer())
          throw ParseError(where + " needs an integer list 'args'");
        int v = a.get<int>();
        if (v < 1 || v > dim)
          throw ParseError(where + ": index " + std::to_string(v) +
                           " outside 1.." + std::to_string(dim));
        args.push_back(v - 1);
      }
      if (static_cast<int>(args.size()) != arity)
        throw ParseError(where + ": expected " + std::to_string(arity) +
                         " arguments, found " + std::to_string(args.size()));
      for (std::size_t k = 1; k < args.size(); ++k)
        if (args[k - 1] >= args[k])
          throw ParseError(where + ": arguments must be strictly increasing");
      if (!seen_args.insert(args).second)
        throw ParseError(where + ": duplicate argument tuple");
      if (!entry.contains("value") || !entry.at("value").is_object())
        throw ParseError(where + " needs an object 'value'");
      Element value(static_cast<std::size_t>(dim));
      for (const auto& [key, rat] : entry.at("value").items()) {
        const int coord =
            resolve_coordinate(key, file.basis_names, dim, where);
        if (!rat.is_string())
          throw ParseError(where + ": value of '" + key +
                           "' must be a rational string");
        try {
          value[static_cast<std::size_t>(coord)] =
              Rational::parse(rat.get<std::string>());
        } catch (const std::invalid_argument& e) {
          throw ParseError(where + ": " + e.what());
        }
      }
      file.algebra.set_bracket(args, std::move(value));
    }
  }
  return file;
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra_text(buffer.str());
}

std::string render_algebra_text(const AlgebraFile& file) {
  const NLieAlgebra& a = file.algebra;
  json doc;
  doc["arity"] = a.arity();
  doc["dim"] = a.dim();
  if (!file.basis_names.empty()) doc["basis_names"] = file.basis_names;
  json brackets = json::array();
  for (const auto& [key, value] : a.sc()) {
    json entry;
    json args = json::array();
    for (int i : key.indices()) args.push_back(i + 1);
    entry["args"] = std::move(args);
    json coords = json::object();
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (value[i].is_zero()) continue;
      const std::string label = file.basis_names.empty()
                                    ? std::to_string(i + 1)
                                    : file.basis_names[i];
      coords[label] = value[i].str();
    }
    entry["value"] = std::move(coords);
    brackets.push_back(std::move(entry));
  }
  doc["brackets"] = std::move(brackets);
  return doc.dump(2) + "\n";
}

void save_algebra_file(const std::string& path, const AlgebraFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << render_algebra_text(file);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace nlie
