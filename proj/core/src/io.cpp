#include "hecke/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace hecke {

using nlohmann::json;

Rat parse_rat(const std::string& s) {
  check(!s.empty(), Errc::ParseError, "empty rational");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    check(den != 0, Errc::ParseError, "zero denominator in " + s);
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    fail(Errc::ParseError, "bad rational literal '" + s + "'");
  }
}

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1)
    os << '/' << boost::multiprecision::denominator(r);
  return os.str();
}

namespace {

std::vector<Rat> rat_row(const json& j, const std::string& what) {
  check(j.is_array(), Errc::ConfigInvalid, what + " must be an array");
  std::vector<Rat> out;
  for (const auto& v : j) {
    if (v.is_number_integer())
      out.push_back(Rat(v.get<long long>()));
    else if (v.is_string())
      out.push_back(parse_rat(v.get<std::string>()));
    else
      fail(Errc::ConfigInvalid, what + " entries must be integers or 'p/q'");
  }
  return out;
}

std::vector<long long> int_row(const json& j, const std::string& what) {
  check(j.is_array(), Errc::ConfigInvalid, what + " must be an array");
  std::vector<long long> out;
  for (const auto& v : j) {
    check(v.is_number_integer(), Errc::ConfigInvalid,
          what + " entries must be integers");
    out.push_back(v.get<long long>());
  }
  return out;
}

}  // namespace

RootDatum load_datum_string(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(Errc::ParseError, std::string("datum config: ") + e.what());
  }
  check(j.is_object(), Errc::ConfigInvalid, "datum config must be an object");
  for (const char* key : {"matrix", "rank", "coroots", "roots", "ht"})
    check(j.contains(key), Errc::ConfigInvalid,
          std::string("datum config misses '") + key + "'");

  std::vector<std::vector<long long>> entries;
  check(j["matrix"].is_array(), Errc::ConfigInvalid, "matrix must be an array");
  for (const auto& row : j["matrix"]) entries.push_back(int_row(row, "matrix row"));
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    check(j["labels"].is_array(), Errc::ConfigInvalid, "labels must be an array");
    for (const auto& l : j["labels"]) {
      check(l.is_string(), Errc::ConfigInvalid, "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  KacMoodyMatrix m = validate_matrix(std::move(entries), std::move(labels));

  check(j["rank"].is_number_integer(), Errc::ConfigInvalid,
        "rank must be an integer");
  int rank = j["rank"].get<int>();

  std::vector<Coweight> coroots;
  check(j["coroots"].is_array(), Errc::ConfigInvalid, "coroots must be an array");
  for (const auto& row : j["coroots"]) coroots.push_back(int_row(row, "coroot"));
  std::vector<std::vector<long long>> roots;
  check(j["roots"].is_array(), Errc::ConfigInvalid, "roots must be an array");
  for (const auto& row : j["roots"]) roots.push_back(int_row(row, "root"));

  std::vector<Rat> ht = rat_row(j["ht"], "ht");
  std::optional<std::vector<Rat>> delta;
  if (j.contains("delta")) delta = rat_row(j["delta"], "delta");

  std::string name = j.value("name", std::string("datum"));
  return RootDatum(std::move(m), rank, std::move(coroots), std::move(roots),
                   std::move(ht), std::move(delta), std::move(name));
}

RootDatum load_datum_file(const std::string& path) {
  std::ifstream in(path);
  check(in.good(), Errc::ConfigInvalid, "cannot open datum file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return load_datum_string(os.str());
}

}  // namespace hecke
