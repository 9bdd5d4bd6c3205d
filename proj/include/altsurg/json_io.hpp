#ifndef ALTSURG_JSON_IO_HPP
#define ALTSURG_JSON_IO_HPP

#include "altsurg/classify.hpp"

#include <json.hpp>

#include <string>

namespace altsurg {

inline constexpr int kSchemaVersion = 1;
extern const char* const kToolVersion;

nlohmann::json lattice_to_json(const ChangemakerLattice& L);
nlohmann::json embedding_to_json(const PlanarEmbedding& e);
nlohmann::json exhaustion_to_json(const ExhaustionRecord& r);

// SuperbaseCertificate: status/vectors/planar/embedding/exhaustion plus the
// lattice, tool version and a content hash (hash excludes wall-clock time so
// reruns of the same search hash identically).
nlohmann::json certificate_to_json(const ChangemakerLattice& L, const SlopeCertificate& cert);

nlohmann::json classification_to_json(const Classification& c, const ClassifyOptions& opt);

nlohmann::json diagram_to_json(const AlternatingDiagramData& d);

// {"alexander": [a0, ..., ag]} with integer entries.
AlexanderPolynomial polynomial_from_json(const nlohmann::json& j);

// Rebuilds enough of a certificate to re-emit branching data.
struct LoadedCertificate {
    ChangemakerLattice lattice;
    std::optional<ObtuseSuperbase> superbase;
    bool planar = false;
    std::optional<PlanarEmbedding> embedding;
    std::string status;
};
LoadedCertificate certificate_from_json(const nlohmann::json& j);

} // namespace altsurg

#endif
