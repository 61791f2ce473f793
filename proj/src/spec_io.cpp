#include "spec_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nfrob {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw Error(ErrorCode::ParseError, "malformed JSON");
  return j;
}

Ring ring_of(const json& scalars) {
  if (scalars.is_string()) {
    std::string s = scalars.get<std::string>();
    if (s == "Q") return Ring::rationals();
    if (s == "Z") return Ring::integers();
    throw Error(ErrorCode::ParseError, "unknown scalar ring '" + s + "'");
  }
  if (scalars.is_object() && scalars.contains("Fp") &&
      scalars["Fp"].is_number_integer())
    return Ring::prime_field(scalars["Fp"].get<std::int64_t>());
  throw Error(ErrorCode::ParseError,
              "scalars must be \"Q\", \"Z\" or {\"Fp\": p}");
}

std::string scalar_string(const json& j) {
  if (!j.is_string())
    throw Error(ErrorCode::ParseError, "scalar entries must be strings");
  return j.get<std::string>();
}

Algebra algebra_from_table(const json& spec, const Ring& ring) {
  if (!spec.contains("dim") || !spec["dim"].is_number_integer())
    throw Error(ErrorCode::ParseError, "structure_constants needs integer dim");
  std::int64_t dim = spec["dim"].get<std::int64_t>();
  if (dim < 1 || dim > 4096)
    throw Error(ErrorCode::ParseError, "dim out of range");
  std::size_t n = static_cast<std::size_t>(dim);
  if (!spec.contains("table") || !spec["table"].is_array() ||
      spec["table"].size() != n)
    throw Error(ErrorCode::ParseError, "table must be an n x n x n array");
  std::vector<Scalar> table;
  table.reserve(n * n * n);
  for (const json& plane : spec["table"]) {
    if (!plane.is_array() || plane.size() != n)
      throw Error(ErrorCode::ParseError, "table must be an n x n x n array");
    for (const json& row : plane) {
      if (!row.is_array() || row.size() != n)
        throw Error(ErrorCode::ParseError, "table must be an n x n x n array");
      for (const json& entry : row)
        table.push_back(Scalar::parse(ring, scalar_string(entry)));
    }
  }
  if (!spec.contains("unit") || !spec["unit"].is_array() ||
      spec["unit"].size() != n)
    throw Error(ErrorCode::ParseError, "unit must be a length-n array");
  Vec unit;
  for (const json& entry : spec["unit"])
    unit.push_back(Scalar::parse(ring, scalar_string(entry)));
  std::vector<std::string> labels;
  if (spec.contains("labels")) {
    if (!spec["labels"].is_array() || spec["labels"].size() != n)
      throw Error(ErrorCode::ParseError, "labels must be a length-n array");
    for (const json& entry : spec["labels"])
      labels.push_back(scalar_string(entry));
  }
  return Algebra(ring, n, std::move(table), std::move(unit), std::move(labels));
}

Algebra algebra_from_quiver(const json& spec, const Ring& ring) {
  Quiver q;
  if (!spec.contains("vertices") || !spec["vertices"].is_array())
    throw Error(ErrorCode::ParseError, "quiver needs a vertices array");
  for (const json& v : spec["vertices"]) q.vertices.push_back(scalar_string(v));
  if (!spec.contains("arrows") || !spec["arrows"].is_array())
    throw Error(ErrorCode::ParseError, "quiver needs an arrows array");
  for (const json& a : spec["arrows"]) {
    if (!a.is_object() || !a.contains("name") || !a.contains("src") ||
        !a.contains("tgt"))
      throw Error(ErrorCode::ParseError,
                  "arrows must be {name, src, tgt} objects");
    q.arrows.push_back({scalar_string(a["name"]), scalar_string(a["src"]),
                        scalar_string(a["tgt"])});
  }
  if (spec.contains("relations")) {
    if (!spec["relations"].is_array())
      throw Error(ErrorCode::ParseError, "relations must be an array");
    for (const json& rel : spec["relations"]) {
      if (!rel.is_array())
        throw Error(ErrorCode::ParseError,
                    "each relation is an array of arrow names");
      std::vector<std::string> word;
      for (const json& name : rel) word.push_back(scalar_string(name));
      q.relations.push_back(std::move(word));
    }
  }
  std::size_t bound = kDefaultPathBound;
  if (spec.contains("bound") && spec["bound"].is_number_integer())
    bound = spec["bound"].get<std::size_t>();
  return path_algebra(q, ring, bound);
}

}  // namespace

Ring parse_ring(const std::string& json_text) {
  json j = parse_json(json_text);
  if (!j.contains("scalars"))
    throw Error(ErrorCode::ParseError, "missing scalars field");
  return ring_of(j["scalars"]);
}

Algebra parse_spec(const std::string& json_text, bool check_table) {
  json j = parse_json(json_text);
  if (!j.is_object() || !j.contains("scalars") || !j.contains("algebra"))
    throw Error(ErrorCode::ParseError,
                "spec needs top-level scalars and algebra fields");
  Ring ring = ring_of(j["scalars"]);
  const json& spec = j["algebra"];
  if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string())
    throw Error(ErrorCode::ParseError, "algebra needs a kind field");
  std::string kind = spec["kind"].get<std::string>();
  Algebra a = kind == "structure_constants" ? algebra_from_table(spec, ring)
              : kind == "quiver"
                  ? algebra_from_quiver(spec, ring)
                  : throw Error(ErrorCode::ParseError,
                                "kind must be structure_constants or quiver");
  if (!check_table) return a;
  ValidationReport report = validate(a);
  if (!report.ok()) {
    std::ostringstream msg;
    msg << "algebra table is invalid:";
    std::size_t shown = 0;
    for (const auto& f : report.associativity_failures) {
      if (shown++ == 8) {
        msg << " ...";
        break;
      }
      msg << " assoc(" << f[0] << "," << f[1] << "," << f[2] << ";" << f[3]
          << ")";
    }
    for (std::size_t i : report.left_unit_failures) msg << " left_unit(" << i << ")";
    for (std::size_t i : report.right_unit_failures) msg << " right_unit(" << i << ")";
    throw Error(ErrorCode::ValidationError, msg.str());
  }
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::ParseError, "cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Algebra parse_spec_file(const std::string& path) {
  return parse_spec(read_file(path));
}

std::string render_vec(const Vec& v) {
  json j = json::array();
  for (const Scalar& s : v) j.push_back(s.str());
  return j.dump();
}

std::string render_matrix(const Matrix& m) {
  json j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
    j.push_back(std::move(row));
  }
  return j.dump();
}

Vec parse_vec(const Ring& ring, const std::string& json_text) {
  json j = parse_json(json_text);
  if (!j.is_array())
    throw Error(ErrorCode::ParseError, "expected a JSON array of scalars");
  Vec v;
  for (const json& entry : j) v.push_back(Scalar::parse(ring, scalar_string(entry)));
  return v;
}

Tensor2 parse_tensor2(const Ring& ring, const std::string& json_text) {
  json j = parse_json(json_text);
  if (!j.is_array() || j.empty())
    throw Error(ErrorCode::ParseError, "expected a square array of scalars");
  std::size_t n = j.size();
  Tensor2 t(ring, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n)
      throw Error(ErrorCode::ParseError, "expected a square array of scalars");
    for (std::size_t k = 0; k < n; ++k)
      t.at(i, k) = Scalar::parse(ring, scalar_string(j[i][k]));
  }
  return t;
}

Vec parse_coeff_list(const Ring& ring, const std::string& text, std::size_t n) {
  Vec v;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    // trim blanks
    std::size_t b = item.find_first_not_of(" \t");
    std::size_t e = item.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw Error(ErrorCode::ParseError, "empty coefficient in list");
    v.push_back(Scalar::parse(ring, item.substr(b, e - b + 1)));
  }
  if (v.size() != n)
    throw Error(ErrorCode::ParseError,
                "expected " + std::to_string(n) + " coefficients, got " +
                    std::to_string(v.size()));
  return v;
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace nfrob
