#include "altsurg/json_io.hpp"

#include "altsurg/errors.hpp"
#include "altsurg/intmath.hpp"

#include <iomanip>
#include <sstream>

namespace altsurg {

using nlohmann::json;

const char* const kToolVersion = "altsurg 0.1.0";

json lattice_to_json(const ChangemakerLattice& L)
{
    json j;
    j["flavor"] = L.flavor == LatticeFlavor::Integer ? "integer" : "half_integer";
    j["sigma"] = L.sigma.sigma;
    j["ambient_rank"] = L.ambient_rank;
    j["rank"] = L.rank;
    j["defining_vectors"] = L.defining_vectors;
    j["slope"] = {{"numerator", L.slope_numerator}, {"denominator", L.slope_denominator}};
    j["discriminant"] = L.discriminant;
    return j;
}

json embedding_to_json(const PlanarEmbedding& e)
{
    json j;
    j["edges"] = json::array();
    for (auto [u, v] : e.edges) j["edges"].push_back({u, v});
    json rot = json::object();
    for (size_t v = 0; v < e.rotation.size(); ++v) rot[std::to_string(v)] = e.rotation[v];
    j["rotation"] = rot;
    j["faces"] = e.face_count;
    return j;
}

json exhaustion_to_json(const ExhaustionRecord& r)
{
    json j;
    j["bounds"] = r.bounds;
    j["bound_origin"] = r.bound_origin;
    j["vbound_count"] = r.vbound_count;
    j["virred_count"] = r.virred_count;
    j["subsets_examined"] = r.subsets_examined;
    j["wall_ms"] = r.wall_ms;
    j["version"] = r.version;
    return j;
}

json certificate_to_json(const ChangemakerLattice& L, const SlopeCertificate& cert)
{
    json j;
    j["schema_version"] = kSchemaVersion;
    j["tool"] = kToolVersion;
    j["lattice"] = lattice_to_json(L);
    j["slope"] = cert.slope;
    j["mode"] = cert.result.mode == SearchMode::Full ? "full" : "quick";
    switch (cert.result.status) {
        case SearchStatus::Found: j["status"] = "found"; break;
        case SearchStatus::NoneExists: j["status"] = "none"; break;
        case SearchStatus::Inconclusive: j["status"] = "inconclusive"; break;
    }
    if (cert.result.superbase) {
        json vecs = json::array();
        for (const auto& v : cert.result.superbase->vectors) vecs.push_back(v);
        j["vectors"] = vecs;
        j["planar"] = cert.planar;
        j["embedding"] = cert.embedding ? embedding_to_json(*cert.embedding) : json(nullptr);
    } else {
        j["vectors"] = json(nullptr);
        j["planar"] = json(nullptr);
        j["embedding"] = json(nullptr);
    }
    j["exhaustion"] = cert.result.exhaustion ? exhaustion_to_json(*cert.result.exhaustion) : json(nullptr);

    // Content hash over everything except timing.
    json hashable = j;
    if (hashable["exhaustion"].is_object()) hashable["exhaustion"].erase("wall_ms");
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(hashable.dump());
    j["content_hash"] = os.str();
    return j;
}

json classification_to_json(const Classification& c, const ClassifyOptions& opt)
{
    json j;
    j["schema_version"] = kSchemaVersion;
    j["tool"] = kToolVersion;
    j["outcome"] = outcome_name(c.outcome);
    j["unknot_form"] = c.unknot_form;
    j["rho"] = c.rho && !c.rho->empty() ? json(c.rho->rho) : json(nullptr);
    j["N"] = c.N ? json(*c.N) : json(nullptr);
    j["genus"] = c.genus ? json(*c.genus) : json(nullptr);
    j["genus_slope_bound"] = c.genus_bound ? json(*c.genus_bound) : json(nullptr);
    if (c.N) {
        int64_t sign = opt.mirror ? -1 : 1;
        j["slope_window"] = {sign * (*c.N - 1), sign * (*c.N + 1)};
    } else {
        j["slope_window"] = json(nullptr);
    }
    if (c.single_slope) j["single_slope"] = opt.mirror ? -*c.single_slope : *c.single_slope;
    j["overflow"] = c.overflow;
    j["caveats"] = c.caveats;
    if (opt.mirror) j["caveats"].push_back("slopes are reported for the mirror (negated)");
    json certs = json::array();
    for (const auto& cert : c.certificates) {
        ChangemakerLattice L = cert.slope_denominator == 2
                                   ? build_half_integer_lattice(*c.rho, (cert.slope_numerator + 1) / 2)
                                   : build_integer_lattice(*c.rho, cert.slope_numerator);
        certs.push_back(certificate_to_json(L, cert));
    }
    j["certificates"] = certs;
    return j;
}

json diagram_to_json(const AlternatingDiagramData& d)
{
    json j;
    j["schema_version"] = kSchemaVersion;
    json edges = json::array();
    for (auto [u, v] : d.edges) edges.push_back({u, v});
    json rot = json::object();
    for (size_t v = 0; v < d.rotation.size(); ++v) rot[std::to_string(v)] = d.rotation[v];
    j["white_graph"] = {{"vertices", d.vertices}, {"edges", edges}, {"rotation", rot}};
    json pd = json::array();
    for (const auto& x : d.pd_crossings) pd.push_back({x[0], x[1], x[2], x[3]});
    j["pd_crossings"] = pd;
    j["determinant"] = d.determinant;
    // One crossing per white-graph edge; the first and third arcs of each
    // crossing form the under-strand under the uniform incidence convention.
    j["crossing_convention"] = "ccw from tail-side corner before the edge; entries 1 and 3 pass under";
    return j;
}

AlexanderPolynomial polynomial_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("alexander") || !j["alexander"].is_array())
        fail(ErrorCode::EmptyInput, "expected {\"alexander\": [a0, ..., ag]}");
    std::vector<int64_t> raw;
    for (const auto& v : j["alexander"]) {
        if (!v.is_number_integer())
            fail(ErrorCode::NormalizationError, "coefficients must be integers");
        raw.push_back(v.get<int64_t>());
    }
    return parse_polynomial(raw);
}

LoadedCertificate certificate_from_json(const json& j)
{
    LoadedCertificate out;
    const json& lj = j.at("lattice");
    StableCoefficients rho;
    std::vector<int64_t> sigma = lj.at("sigma").get<std::vector<int64_t>>();
    for (auto it = sigma.rbegin(); it != sigma.rend(); ++it)
        if (*it >= 2) rho.rho.push_back(*it);
    std::string flavor = lj.at("flavor").get<std::string>();
    int64_t num = lj.at("slope").at("numerator").get<int64_t>();
    if (flavor == "integer") {
        out.lattice = build_integer_lattice(rho, num);
    } else {
        out.lattice = build_half_integer_lattice(rho, (num + 1) / 2);
    }
    out.status = j.at("status").get<std::string>();
    if (j.contains("vectors") && j["vectors"].is_array()) {
        std::vector<Vec> vecs;
        for (const auto& v : j["vectors"]) vecs.push_back(v.get<Vec>());
        out.superbase = validate_superbase(out.lattice, vecs);
        out.planar = j.value("planar", false);
        if (j.contains("embedding") && j["embedding"].is_object()) {
            PlanarEmbedding e;
            for (const auto& ed : j["embedding"]["edges"]) e.edges.emplace_back(ed[0].get<int>(), ed[1].get<int>());
            const auto& rot = j["embedding"]["rotation"];
            e.rotation.resize(rot.size());
            for (auto it = rot.begin(); it != rot.end(); ++it)
                e.rotation[std::stoul(it.key())] = it.value().get<std::vector<int>>();
            e.face_count = j["embedding"].value("faces", 0);
            out.embedding = std::move(e);
        }
    }
    return out;
}

} // namespace altsurg
