#pragma once

#include <string>

#include "json.hpp"
#include "lefkit/complex.hpp"

namespace lefkit {

// Facet-list format: {"n": <int>, "facets": [[1,2,3], ...]}, 1-based labels.
// The loader is strict: labels must lie in [1,n] and the listed facets must
// form an antichain.
Complex complex_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(const Complex& k);

Complex load_complex(const std::string& path);
void save_complex(const Complex& k, const std::string& path);

// FNV-1a digest of a file's bytes, hex encoded; used in run manifests.
std::string file_digest(const std::string& path);

}  // namespace lefkit
