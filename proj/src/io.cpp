#include "rif/io.hpp"

#include "rif/error.hpp"

#include <json.hpp>

#include <fstream>
#include <istream>
#include <ostream>

namespace rif {

using nlohmann::json;

KSetFamily read_family(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != kFamilyFormat)
    throw Error(ErrorCode::ParseError, std::string("expected a \"") + kFamilyFormat + "\" document");
  if (!doc.contains("n") || !doc["n"].is_number_integer() || !doc.contains("k") ||
      !doc["k"].is_number_integer() || !doc.contains("sets") || !doc["sets"].is_array())
    throw Error(ErrorCode::ParseError, "need integer n, integer k and an array of sets");
  const int n = doc["n"].get<int>();
  const int k = doc["k"].get<int>();
  std::vector<std::vector<int>> sets;
  for (const auto& row : doc["sets"]) {
    if (!row.is_array()) throw Error(ErrorCode::ParseError, "each set must be an array of integers");
    std::vector<int> elems;
    for (const auto& e : row) {
      if (!e.is_number_integer())
        throw Error(ErrorCode::ParseError, "set elements must be integers");
      elems.push_back(e.get<int>());
      if (elems.size() > 1 && elems[elems.size() - 2] >= elems.back())
        throw Error(ErrorCode::ParseError, "set elements must be strictly increasing");
    }
    sets.push_back(std::move(elems));
  }
  try {
    return make_family(n, k, sets); // canonicalizes
  } catch (const Error& e) {
    throw Error(ErrorCode::InvariantViolation, std::string("bad file contents: ") + e.what());
  }
}

KSetFamily read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_family(in);
}

void write_family(std::ostream& out, const KSetFamily& fam) {
  json doc;
  doc["format"] = kFamilyFormat;
  doc["n"] = fam.n;
  doc["k"] = fam.k;
  json sets = json::array();
  for (const auto& s : fam.sets) sets.push_back(s.elements());
  doc["sets"] = std::move(sets);
  out << doc.dump() << "\n";
}

void write_family_file(const std::string& path, const KSetFamily& fam) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot open " + path + " for writing");
  write_family(out, fam);
}

} // namespace rif
