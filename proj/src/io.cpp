#include "divalg/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "divalg/errors.hpp"

namespace divalg {

using nlohmann::json;

namespace {

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& doc, const char* key) {
  if (!doc.is_object()) throw ParseError("top level must be a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

// nlohmann's type_error covers every wrong-shape conversion below.
template <class T>
T convert(const json& value, const char* key) {
  try {
    return value.get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field \"") + key + "\" has the wrong type: " +
                     e.what());
  }
}

}  // namespace

FusionRingData parse_ring_json(std::string_view text) {
  const auto doc = parse_document(text);
  FusionRingData data;
  data.labels = convert<std::vector<std::string>>(field(doc, "labels"), "labels");
  data.unit = ObjectVector(
      convert<std::vector<Multiplicity>>(field(doc, "unit"), "unit"));
  data.dual = convert<std::vector<std::size_t>>(field(doc, "dual"), "dual");
  data.fusion =
      convert<std::vector<std::vector<std::vector<Multiplicity>>>>(
          field(doc, "fusion"), "fusion");
  return data;
}

json ring_to_json(const FusionRing& ring) {
  const auto data = ring.data();
  json out;
  out["labels"] = data.labels;
  const auto unit = data.unit.components();
  out["unit"] = std::vector<Multiplicity>(unit.begin(), unit.end());
  out["dual"] = data.dual;
  out["fusion"] = data.fusion;
  return out;
}

NimRepData parse_nimrep_json(std::string_view text) {
  const auto doc = parse_document(text);
  NimRepData nr;
  nr.module_labels = convert<std::vector<std::string>>(
      field(doc, "module_labels"), "module_labels");
  nr.actions =
      convert<std::vector<IntMatrix>>(field(doc, "actions"), "actions");
  return nr;
}

json nimrep_to_json(const NimRepData& nr) {
  json out;
  out["module_labels"] = nr.module_labels;
  out["actions"] = nr.actions;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("SHA-256 failed");
  }
  std::ostringstream hex;
  hex << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < length; ++i) hex << std::setw(2) << int{digest[i]};
  return hex.str();
}

}  // namespace divalg
