#include "altsurg/classify.hpp"
#include "altsurg/corpus.hpp"
#include "altsurg/errors.hpp"
#include "altsurg/json_io.hpp"
#include "altsurg/kernels.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace altsurg;

// Exit codes, stable across releases:
//   0 success / found        4 inconclusive or budget exhausted
//   1 usage or input error   5 slope below the existence threshold
//   2 no stable coefficients 6 embedding requested for a non-planar result
//   3 exhaustive none-exists
enum ExitCode {
    kOk = 0,
    kUsage = 1,
    kNoStable = 2,
    kNoneExists = 3,
    kInconclusive = 4,
    kSlopeTooSmall = 5,
    kNotPlanar = 6,
};

std::vector<int64_t> parse_int_list(const std::string& s)
{
    std::vector<int64_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoll(tok));
    }
    if (out.empty()) fail(ErrorCode::EmptyInput, "empty integer list");
    return out;
}

struct Slope {
    int64_t n = 0; // integer slope value, or the n of slope n - 1/2
    bool half = false;
};

Slope parse_slope(const std::string& s)
{
    Slope out;
    auto bad = [&]() { fail(ErrorCode::InvalidSlope, "slope must be an integer, x.5, or odd p/2 (other denominators are out of scope)"); };
    if (auto pos = s.find('/'); pos != std::string::npos) {
        int64_t p = std::stoll(s.substr(0, pos));
        int64_t q = std::stoll(s.substr(pos + 1));
        if (q == 1) {
            out.n = p;
            return out;
        }
        if (q != 2 || p % 2 == 0) bad();
        out.half = true;
        out.n = (p + 1) / 2;
        return out;
    }
    if (auto pos = s.find('.'); pos != std::string::npos) {
        if (s.substr(pos + 1) != "5") bad();
        out.half = true;
        out.n = std::stoll(s.substr(0, pos)) + 1;
        return out;
    }
    out.n = std::stoll(s);
    return out;
}

StableCoefficients rho_from_list(std::vector<int64_t> v)
{
    std::sort(v.rbegin(), v.rend());
    for (int64_t x : v)
        if (x < 2) fail(ErrorCode::PreconditionViolation, "stable coefficients must all be at least 2");
    return StableCoefficients{std::move(v)};
}

void write_output(const std::string& path, const std::string& payload)
{
    if (path.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::ofstream os(path);
    os << payload << "\n";
}

int cmd_stable(const std::string& alex, const std::string& rho_list, bool json_out, const std::string& out_path)
{
    std::ostringstream os;
    nlohmann::json j;
    if (!rho_list.empty()) {
        StableCoefficients rho = rho_from_list(parse_int_list(rho_list));
        int64_t N = n_invariant(rho);
        j = {{"rho", rho.rho}, {"g", rho.genus()}, {"N", N}};
        os << "rho=[";
        for (size_t i = 0; i < rho.rho.size(); ++i) os << (i ? "," : "") << rho.rho[i];
        os << "] g=" << rho.genus() << " N=" << N;
        write_output(out_path, json_out ? j.dump(2) : os.str());
        return kOk;
    }
    AlexanderPolynomial p = parse_polynomial(parse_int_list(alex));
    if (p.genus_degree() == 0) {
        write_output(out_path, json_out ? nlohmann::json{{"unknot_form", true}}.dump(2)
                                        : std::string("unknot form: nothing to compute"));
        return kOk;
    }
    TorsionProfile t = torsion_coefficients(p);
    if (!is_lspace_form(t)) {
        write_output(out_path, json_out ? nlohmann::json{{"error", "no stable coefficients"}}.dump(2)
                                        : std::string("no stable coefficients (profile is not of L-space form)"));
        return kNoStable;
    }
    TorsionCounts counts = torsion_counts(t);
    auto rho = stable_coefficients(counts, counts.g, counts.t0());
    if (!rho) {
        write_output(out_path, json_out ? nlohmann::json{{"error", "no stable coefficients"}}.dump(2)
                                        : std::string("no stable coefficients"));
        return kNoStable;
    }
    int64_t N = n_invariant(*rho);
    j = {{"rho", rho->rho}, {"g", rho->genus()}, {"N", N}};
    os << "rho=[";
    for (size_t i = 0; i < rho->rho.size(); ++i) os << (i ? "," : "") << rho->rho[i];
    os << "] g=" << rho->genus() << " N=" << N;
    write_output(out_path, json_out ? j.dump(2) : os.str());
    return kOk;
}

int cmd_osb(const std::string& rho_list, const std::string& slope_str, SearchMode mode, const SearchCaps& caps,
            const std::string& out_path)
{
    StableCoefficients rho = rho_from_list(parse_int_list(rho_list));
    Slope slope = parse_slope(slope_str);

    SlopeCertificate cert;
    ChangemakerLattice L;
    if (slope.half) {
        L = build_half_integer_lattice(rho, slope.n);
        // The inner lattice can supply the coordinate cap when it has a
        // superbase with small column sums.
        ChangemakerLattice inner = build_integer_lattice(rho, slope.n - 1);
        SearchResult inner_res = search_integer(inner, mode, caps);
        const ObtuseSuperbase* witness =
            inner_res.status == SearchStatus::Found ? &*inner_res.superbase : nullptr;
        cert.result = search_half_integer(L, mode, caps, witness);
        cert.slope = std::to_string(L.slope_numerator) + "/2";
    } else {
        L = build_integer_lattice(rho, slope.n);
        cert.result = search_integer(L, mode, caps);
        cert.slope = std::to_string(slope.n);
    }
    cert.slope_numerator = L.slope_numerator;
    cert.slope_denominator = L.slope_denominator;
    if (cert.result.status == SearchStatus::Found) {
        auto emb = planarity(cert.result.superbase->graph);
        cert.planar = emb.has_value();
        cert.embedding = emb;
    }
    write_output(out_path, certificate_to_json(L, cert).dump(2));
    switch (cert.result.status) {
        case SearchStatus::Found: return kOk;
        case SearchStatus::NoneExists: return kNoneExists;
        case SearchStatus::Inconclusive: return kInconclusive;
    }
    return kUsage;
}

nlohmann::json classify_record(const std::string& id, const std::string& kind, const std::string& payload,
                               const ClassifyOptions& opt)
{
    Classification c;
    if (kind == "alex") {
        c = classify(parse_polynomial(parse_int_list(payload)), opt);
    } else if (kind == "rho") {
        c = classify_rho(rho_from_list(parse_int_list(payload)), opt);
    } else {
        fail(ErrorCode::EmptyInput, "record kind must be alex or rho");
    }
    nlohmann::json j = classification_to_json(c, opt);
    if (!id.empty()) j["id"] = id;
    return j;
}

int cmd_classify(const std::string& alex, const std::string& rho_list, const std::string& batch,
                 const ClassifyOptions& opt, bool json_out, const std::string& out_path, bool resume)
{
    if (!batch.empty()) {
        std::ifstream is(batch);
        if (!is) fail(ErrorCode::EmptyInput, "cannot open batch file");
        if (out_path.empty()) fail(ErrorCode::EmptyInput, "batch mode requires --out");

        size_t done = 0;
        if (resume) {
            std::ifstream existing(out_path);
            std::string line;
            while (std::getline(existing, line))
                if (!line.empty()) ++done;
        }
        std::ofstream os(out_path, resume ? std::ios::app : std::ios::trunc);
        std::string line;
        size_t index = 0;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            if (index++ < done) continue;
            std::stringstream ss(line);
            std::string id, kind, payload;
            std::getline(ss, id, ';');
            std::getline(ss, kind, ';');
            std::getline(ss, payload, ';');
            os << classify_record(id, kind, payload, opt).dump() << "\n";
            os.flush(); // checkpoint per record
        }
        return kOk;
    }

    Classification c;
    if (!alex.empty()) c = classify(parse_polynomial(parse_int_list(alex)), opt);
    else c = classify_rho(rho_from_list(parse_int_list(rho_list)), opt);
    if (json_out) write_output(out_path, classification_to_json(c, opt).dump(2));
    else write_output(out_path, report(c, opt));
    if (c.overflow) return kInconclusive;
    return kOk;
}

int cmd_emit(const std::string& cert_path, const std::string& out_path)
{
    std::ifstream is(cert_path);
    if (!is) fail(ErrorCode::EmptyInput, "cannot open certificate file");
    nlohmann::json j;
    is >> j;
    LoadedCertificate cert = certificate_from_json(j);
    if (!cert.superbase || !cert.planar || !cert.embedding)
        fail(ErrorCode::NotPlanar, "certificate has no planar embedding to emit");
    AlternatingDiagramData d = emit_branching_set(*cert.embedding, *cert.superbase);
    write_output(out_path, diagram_to_json(d).dump(2));
    return kOk;
}

int cmd_selftest(int criterion)
{
    bool ok = corpus::run_acceptance(criterion, [](const corpus::CriterionResult& r) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name << " ("
                  << r.wall_ms << " ms)";
        if (!r.detail.empty()) std::cout << " -- " << r.detail;
        std::cout << "\n";
        std::cout.flush();
    });
    return ok ? kOk : kUsage;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"alternating surgery slope analysis via changemaker lattices"};
    app.require_subcommand(1);

    std::string mode_str = "full";
    SearchCaps caps;
    int threads = 1;
    std::string out_path;
    bool json_out = false;
    app.add_option("--mode", mode_str, "search mode: quick or full")->check(CLI::IsMember({"quick", "full"}));
    app.add_option("--threads", threads, "worker threads for classification searches");
    app.add_option("--cap-vectors", caps.max_vectors, "candidate vector budget");
    app.add_option("--cap-nodes", caps.max_nodes, "search node budget");
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_flag("--json", json_out, "machine-readable output");

    std::string alex, rho_list, slope, batch, cert_path;
    bool mirror = false;
    int criterion = 0;

    CLI::App* stable = app.add_subcommand("stable", "stable coefficients, genus and N from a polynomial or tuple");
    stable->add_option("--alexander", alex, "half coefficient list a0,a1,...,ag");
    stable->add_option("--rho", rho_list, "stable coefficients");

    CLI::App* osb = app.add_subcommand("osb", "obtuse superbase search for one lattice");
    osb->add_option("--rho", rho_list, "stable coefficients")->required();
    osb->add_option("--slope", slope, "integer, x.5 or p/2 slope")->required();

    CLI::App* classify_cmd = app.add_subcommand("classify", "full slope-structure classification");
    classify_cmd->add_option("--alexander", alex, "half coefficient list a0,a1,...,ag");
    classify_cmd->add_option("--rho", rho_list, "stable coefficients");
    classify_cmd->add_option("--batch", batch, "batch file: id;alex|rho;comma-list per line");
    classify_cmd->add_flag("--resume", "append after the last completed batch record");
    classify_cmd->add_flag("--mirror", mirror, "report slopes for the mirror (negated)");

    CLI::App* emit = app.add_subcommand("emit", "alternating branching-set data from a certificate");
    emit->add_option("--cert", cert_path, "certificate JSON file")->required();

    CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance corpus");
    selftest->add_option("--criterion", criterion, "run a single criterion (1-8)");

    CLI11_PARSE(app, argc, argv);

    ClassifyOptions opt;
    opt.mode = mode_str == "quick" ? SearchMode::Quick : SearchMode::Full;
    opt.caps = caps;
    opt.threads = threads;
    opt.mirror = mirror;

    try {
        if (app.got_subcommand(stable)) {
            if (alex.empty() && rho_list.empty()) {
                std::cerr << "stable needs --alexander or --rho\n";
                return kUsage;
            }
            return cmd_stable(alex, rho_list, json_out, out_path);
        }
        if (app.got_subcommand(osb)) return cmd_osb(rho_list, slope, opt.mode, caps, out_path);
        if (app.got_subcommand(classify_cmd)) {
            if (alex.empty() && rho_list.empty() && batch.empty()) {
                std::cerr << "classify needs --alexander, --rho or --batch\n";
                return kUsage;
            }
            return cmd_classify(alex, rho_list, batch, opt, json_out, out_path,
                                classify_cmd->count("--resume") > 0);
        }
        if (app.got_subcommand(emit)) return cmd_emit(cert_path, out_path);
        if (app.got_subcommand(selftest)) return cmd_selftest(criterion);
    } catch (const Error& e) {
        std::cerr << error_code_name(e.code()) << ": " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::SlopeTooSmall: return kSlopeTooSmall;
            case ErrorCode::SearchSpaceOverflow: return kInconclusive;
            case ErrorCode::NotPlanar: return kNotPlanar;
            default: return kUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
