#include "lefkit/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lefkit {

Complex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("facets"))
    throw std::invalid_argument("complex json: expected {\"n\": ..., \"facets\": [...]}");
  const int n = j.at("n").get<int>();
  std::vector<Face> facets;
  for (const auto& jf : j.at("facets")) {
    Face f;
    for (const auto& v : jf) f.push_back(v.get<int>());
    std::sort(f.begin(), f.end());
    for (Vertex v : f)
      if (v < 1 || v > n)
        throw std::invalid_argument("complex json: vertex label out of [1,n]");
    facets.push_back(std::move(f));
  }
  // strict antichain validation before normalization
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t j2 = 0; j2 < facets.size(); ++j2)
      if (i != j2 && face_subset(facets[i], facets[j2]) && facets[i] != facets[j2])
        throw std::invalid_argument("complex json: facets do not form an antichain (" +
                                    face_to_string(facets[i]) + " inside " +
                                    face_to_string(facets[j2]) + ")");
  return Complex::from_facets(n, std::move(facets));
}

nlohmann::json complex_to_json(const Complex& k) {
  nlohmann::json j;
  j["n"] = k.vertex_count();
  j["facets"] = nlohmann::json::array();
  for (const Face& f : k.facets()) j["facets"].push_back(f);
  return j;
}

Complex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return complex_from_json(j);
}

void save_complex(const Complex& k, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << complex_to_json(k).dump(2) << "\n";
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace lefkit
