#include "latround/dist_file.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace latround {

namespace {

using nlohmann::json;

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::int64_t integer_field(const json& node, const char* key, const std::string& where) {
  if (!node.contains(key)) throw SpecParseError(where + ": missing field '" + key + "'");
  const json& value = node.at(key);
  if (!value.is_number_integer()) throw SpecParseError(where + "." + key + ": expected an integer");
  return value.get<std::int64_t>();
}

}  // namespace

LatticeDistribution parse_distribution_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecParseError("line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) + ": " + e.what());
  }
  if (!doc.is_object()) throw SpecParseError("document: expected a JSON object");

  const std::int64_t q = integer_field(doc, "q", "document");
  if (!doc.contains("pmf") || !doc.at("pmf").is_array()) {
    throw SpecParseError("document.pmf: expected an array");
  }

  std::vector<std::pair<std::int64_t, Rational>> entries;
  std::size_t index = 0;
  for (const json& entry : doc.at("pmf")) {
    const std::string where = "pmf[" + std::to_string(index++) + "]";
    if (!entry.is_object()) throw SpecParseError(where + ": expected an object");
    const std::int64_t k = integer_field(entry, "k", where);
    if (!entry.contains("p") || !entry.at("p").is_string()) {
      throw SpecParseError(where + ".p: expected a rational string \"a/b\"");
    }
    try {
      entries.emplace_back(k, parse_rational(entry.at("p").get<std::string>()));
    } catch (const RationalParseError& e) {
      throw SpecParseError(where + ".p: " + e.what());
    }
  }
  return make_distribution(q, entries);
}

LatticeDistribution load_distribution_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecParseError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_distribution_spec(buffer.str());
}

std::string to_distribution_spec(const LatticeDistribution& d) {
  json pmf = json::array();
  for (const auto& [k, p] : d.pmf()) pmf.push_back({{"k", k}, {"p", to_string(p)}});
  json doc = {{"q", d.q()}, {"pmf", std::move(pmf)}};
  return doc.dump();
}

}  // namespace latround
